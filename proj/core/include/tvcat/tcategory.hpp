#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tvcat/report.hpp"
#include "tvcat/theory.hpp"
#include "tvcat/vmatrix.hpp"

namespace tvcat {

/// A T-category (X, a) with a: TX -|-> X. Construct through check_category
/// unless the structure is known to satisfy the axioms.
class TCategory {
 public:
  TCategory(TheoryRef theory, FinSet carrier, VMatrix structure);

  const Theory& theory() const noexcept { return *theory_; }
  const TheoryRef& theory_ref() const noexcept { return theory_; }
  const Quantale& quantale() const noexcept { return theory_->quantale(); }
  const QuantaleRef& quantale_ref() const noexcept { return theory_->quantale_ref(); }

  const FinSet& carrier() const noexcept { return carrier_; }
  std::size_t size() const noexcept { return carrier_.size(); }
  std::size_t t_size() const noexcept { return structure_.rows(); }
  /// TX with labels derived from the carrier.
  FinSet t_carrier() const;
  const VMatrix& structure() const noexcept { return structure_; }
  const Value& operator()(std::size_t tx, std::size_t x) const noexcept { return structure_(tx, x); }

  /// a(e_X(x), y), the underlying V-category.
  const Value& point(std::size_t x, std::size_t y) const noexcept {
    return structure_(theory_->unit(size(), x), y);
  }
  /// Column a(-, x).
  std::vector<Value> column(std::size_t x) const { return structure_.column(x); }

  friend bool operator==(const TCategory& a, const TCategory& b);

 private:
  TheoryRef theory_;
  FinSet carrier_;
  VMatrix structure_;
};

using CategoryRef = std::shared_ptr<const TCategory>;

/// A map f between the carriers of two T-categories.
struct TFunctor {
  CategoryRef dom;
  CategoryRef cod;
  Map map;

  std::size_t operator()(std::size_t x) const { return map[x]; }
};

/// A T-relation between T-categories, matrix TX x Y.
struct Distributor {
  CategoryRef dom;
  CategoryRef cod;
  VMatrix matrix;
};

/// First violation of k <= a(e_X x, x) or T_xi a(X,x) (x) a(x,y) <= a(m_X X, y).
std::optional<Violation> category_violation(const Theory& th, const VMatrix& a, std::size_t n);
Checked<CategoryRef> check_category(TheoryRef th, FinSet carrier, VMatrix structure);

/// First x-indexed witness of a(x, y) > b(Tf x, f y).
std::optional<Violation> functor_violation(const TCategory& x, const TCategory& y, const Map& f);
Checked<TFunctor> check_functor(Map f, CategoryRef dom, CategoryRef cod);

TFunctor identity_functor(CategoryRef x);
/// g . f
TFunctor compose(const TFunctor& g, const TFunctor& f);

CategoryRef discrete(TheoryRef th, FinSet s);
/// G = (1, e_1°).
CategoryRef generator_G(TheoryRef th);
/// |S| = (TS, m_S).
CategoryRef free_em(TheoryRef th, FinSet s);
/// (V, hom_xi) with hom_xi(v, u) = hom(xi(v), u); finite V only.
CategoryRef v_as_category(TheoryRef th);
/// E = (1, constant k).
CategoryRef neutral_E(TheoryRef th);

/// f_*(x,y) = b(Tf x, y) : X -o-> Y.
Distributor star(const TFunctor& f);
/// f^*(y,x) = b(y, f x) : Y -o-> X.
Distributor costar(const TFunctor& f);

bool fully_faithful(const TFunctor& f);
bool dense(const TFunctor& f);

/// f <= g iff f^* <= g^*, i.e. every column b(-, f x) is below b(-, g x).
bool functor_leq(const TFunctor& f, const TFunctor& g);
bool functor_equiv(const TFunctor& f, const TFunctor& g);
/// Equivalent points: equal columns a(-,p) = a(-,q).
bool points_equiv(const TCategory& x, std::size_t p, std::size_t q);
/// No two distinct points share a column.
bool separated(const TCategory& x);
/// f -| g iff f_* = g^*.
bool adjoint_pair(const TFunctor& f, const TFunctor& g);

/// c(w, (x,y)) = a(T pi1 w, x) (x) b(T pi2 w, y) on X x Y, index x*|Y|+y.
CategoryRef tensor_product(const TCategory& x, const TCategory& y);
/// Same carrier as tensor_product with the meet in place of the tensor: the
/// product in Cat(T).
CategoryRef cartesian_product(const TCategory& x, const TCategory& y);
TFunctor projection(CategoryRef product, CategoryRef x, CategoryRef y, int which);

/// The full subcategory on the listed points (initial structure along the
/// inclusion), with the inclusion functor.
struct Subcategory {
  CategoryRef category;
  TFunctor inclusion;
};
Subcategory full_subcategory(CategoryRef x, const std::vector<std::size_t>& points);

/// Canonical labels for V-valued functions on a labelled set.
std::string function_label(const Quantale& q, const std::vector<std::string>& base, std::span<const Value> phi);

/// The exponential structure <p, psi> restricted to the given functions
/// TX -> V (all of V^{TX} for exponential_VX). Needs a theory with BC so that
/// restricting the enumeration of T(TX x E) to the chosen points agrees with
/// the full one.
CategoryRef exponential_on(const TCategory& x, const std::vector<std::vector<Value>>& functions);
/// V^{|X|} over every function TX -> V; throws cap_exceeded above `cap` points.
CategoryRef exponential_VX(const TCategory& x, std::size_t cap = 4096);
/// Every function TX -> V in lexicographic order of value indices.
std::vector<std::vector<Value>> all_functions(const Quantale& q, std::size_t n, std::size_t cap);
/// Position of phi in the all_functions order.
std::size_t function_index(const Quantale& q, std::span<const Value> phi);

/// S(X, a) = (X, a . e_X) over the identity theory of the same quantale.
CategoryRef forget_to_v(const TCategory& x);
/// A(X, r) = (X, e_X° . T_xi r) for a V-category (X, r).
CategoryRef lift_A(TheoryRef th, const TCategory& vcat);
/// M(X, a) = (TX, T_xi a . m_X°) as a V-category.
CategoryRef functor_M(const TCategory& x);
/// X^op = A(M(X)^op), carrier TX.
CategoryRef dual_op(const TCategory& x);

struct Quotient {
  CategoryRef category;
  TFunctor q;
};
/// Coequalizer of p1, p2 : R => X when the pairs (p1 r, p2 r) form an
/// equivalence relation; the structure is the least T-category structure
/// above q.a.(Tq)°.
Quotient coequalizer_final(const TFunctor& p1, const TFunctor& p2);

/// (X, alpha) for an Eilenberg-Moore algebra alpha : TX -> X.
CategoryRef em_to_cat(TheoryRef th, FinSet x, const Map& alpha);

/// Every T-category structure on n points (labels 0..n-1); throws cap_exceeded
/// when the candidate matrices exceed `cap`.
std::vector<CategoryRef> enumerate_categories(TheoryRef th, std::size_t n, std::size_t cap = 1 << 20);
/// One representative per isomorphism class, all sizes 0..max_size.
std::vector<CategoryRef> category_universe(TheoryRef th, std::size_t max_size, std::size_t cap = 1 << 20);
/// Structure transported along a permutation of the points.
VMatrix permute_structure(const Theory& th, const VMatrix& a, const Map& sigma);
bool structure_isomorphic(const TCategory& x, const TCategory& y);

/// All T-functors X -> Y in lexicographic order of their maps.
std::vector<TFunctor> enumerate_functors(CategoryRef x, CategoryRef y, std::size_t cap = 1 << 16);

/// Kleisli convolution beta o alpha = beta . T_xi alpha . m_X° of T-relations alpha : TX x Y and
/// beta : TY x Z, with |X| = x_size.
VMatrix kleisli(const Theory& th, const VMatrix& beta, const VMatrix& alpha, std::size_t x_size);
/// T_xi alpha . m_X° : TX -|-> TY.
VMatrix kleisli_lift(const Theory& th, const VMatrix& alpha, std::size_t x_size);
/// e_X° as a matrix TX x X.
VMatrix unit_structure(const Theory& th, std::size_t n);

std::string to_string(const TCategory& x);
std::string to_string(const TFunctor& f);

}  // namespace tvcat
