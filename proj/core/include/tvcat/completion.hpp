#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tvcat/distributor.hpp"
#include "tvcat/phiclass.hpp"
#include "tvcat/report.hpp"
#include "tvcat/tcategory.hpp"

namespace tvcat {

struct CompletionCaps {
  /// Largest |V|^{|TX|} enumerated for a presheaf category.
  std::size_t function_cap = 4096;
  /// Largest |B| in the injectivity search.
  std::size_t injective_size = 4;
  /// Largest |PhiX| accepted when PhiPhiX is built.
  std::size_t kz_size = 6;
  /// Largest number of maps enumerated between two carriers.
  std::size_t map_cap = 1 << 16;
  /// Largest |V^X| handled by the covariant presheaf classes.
  std::size_t covariant_cap = 256;
};

/// PhiX: the presheaves psi : X -o-> G lying in phi, as a full subcategory of
/// the exponential, in lexicographic order of their value tables.
struct PresheafCategory {
  CategoryRef base;
  CategoryRef generator;                     // G, codomain of every weight
  PhiClass phi{PhiKind::all};
  std::vector<std::vector<Value>> elements;  // weights TX -> V
  CategoryRef category;

  std::size_t size() const noexcept { return elements.size(); }
  std::optional<std::size_t> index_of(std::span<const Value> weight) const;
  Distributor weight(std::size_t i) const;
};

PresheafCategory presheaf_cat(CategoryRef x, const PhiClass& phi, const CompletionCaps& caps = {});

/// x -> a(-, x) into PhiX; throws precondition if some column is not in phi.
TFunctor yoneda_map(const PresheafCategory& p);

struct Embedding {
  PresheafCategory presheaves;
  TFunctor y;
};
Embedding yoneda(CategoryRef x, const CompletionCaps& caps = {});
Embedding yoneda_phi(CategoryRef x, const PhiClass& phi, const CompletionCaps& caps = {});

/// Phi f : PhiX -> PhiY, psi -> psi o f^*.
TFunctor phi_functor(const TFunctor& f, const PresheafCategory& px, const PresheafCategory& py);
/// f^-1 : PhiY -> PhiX, psi -> psi o f_*; requires f to be phi-dense.
TFunctor inverse_image(const TFunctor& f, const PresheafCategory& px, const PresheafCategory& py);

/// A T-functor Z -> X with g_* = h_* ⟜ phi, the smallest map among the
/// equivalent choices; nullopt when the colimit does not exist.
std::optional<TFunctor> colimit(const Distributor& phi, const TFunctor& h);

struct SupResult {
  std::optional<TFunctor> left_inverse;  // some S with S . y ≅ 1_X
  std::optional<TFunctor> left_adjoint;  // S -| y, i.e. S_* = y^*
  std::optional<std::size_t> certificate;  // a presheaf without colimit, of largest support
};
SupResult sup_phi(const PresheafCategory& p, const TFunctor& y, const CompletionCaps& caps = {});

/// The density-tested inclusions A ⊆ B (|B| up to the cap, B up to
/// isomorphism, every subset A) used by the injectivity flag.
struct InjectivityTests {
  TheoryRef theory;
  PhiClass phi{PhiKind::all};
  std::size_t max_size = 0;
  std::vector<Subcategory> inclusions;
};
InjectivityTests injectivity_tests(TheoryRef th, const PhiClass& phi, std::size_t max_b);
/// Description of an extension problem f : A -> X along A ⊆ B without a
/// solution, or nullopt when every problem is solvable.
std::optional<std::string> injectivity_counterexample(CategoryRef x, const InjectivityTests& tests,
                                                      const CompletionCaps& caps = {});

struct CocompleteVerdict {
  bool injective = false;
  bool left_inverse = false;
  bool left_adjoint = false;
  bool cocomplete = false;
  std::optional<TFunctor> sup;
  std::optional<std::size_t> certificate;  // index into presheaves.elements
  std::optional<std::string> injectivity_witness;
  PresheafCategory presheaves;

  bool agree() const noexcept {
    return injective == left_inverse && left_inverse == left_adjoint && left_adjoint == cocomplete;
  }
};
/// The four conditions, each decided by its own procedure. Pass `tests` to
/// reuse a prepared injectivity universe.
CocompleteVerdict cocomplete_check(CategoryRef x, const PhiClass& phi, const CompletionCaps& caps = {},
                                   const InjectivityTests* tests = nullptr);

/// f preserves every existing phi-weighted colimit (weights on X with
/// one-point codomain); when both sides are cocomplete this is the square
/// f . Sup_X ≅ Sup_Y . Phi f.
bool cocontinuous_check(const TFunctor& f, const PhiClass& phi, const CompletionCaps& caps = {});

/// Both adjunctions of Phi y_X -| y_X^-1 -| y_PhiX and y_X^-1 = Sup_PhiX.
AuditReport kz_audit(CategoryRef x, const PhiClass& phi, const CompletionCaps& caps = {});

/// Split-fork identities for PhiR => PhiX -> PhiQ where q coequalizes
/// p1, p2 : R => X.
AuditReport split_fork_audit(const TFunctor& p1, const TFunctor& p2, const PhiClass& phi,
                             const CompletionCaps& caps = {});

/// (-) . y_X from cocontinuous PhiX -> Y to all functors X -> Y is a
/// bijection up to equivalence and reflects and preserves the order.
AuditReport kan_check(CategoryRef x, CategoryRef y, const PhiClass& phi, const CompletionCaps& caps = {});

/// V^X: the covariant presheaves G -o-> X (T-functors X -> V when T1 = 1)
/// with the lifting structure [alpha, beta].
struct CovariantPresheafCategory {
  CategoryRef base;
  CategoryRef generator;
  std::vector<std::vector<Value>> elements;  // alpha(x), one row T1 = 1
  CategoryRef category;                      // a V-category on the elements

  std::optional<std::size_t> index_of(std::span<const Value> alpha) const;
  Distributor presheaf(std::size_t i) const;
};
CovariantPresheafCategory covariant_presheaf_cat(CategoryRef x, const CompletionCaps& caps = {});
/// phi o (-) : V^X -> V^Y on a single covariant presheaf.
std::vector<Value> apply(const Distributor& phi, std::span<const Value> alpha);

}  // namespace tvcat
