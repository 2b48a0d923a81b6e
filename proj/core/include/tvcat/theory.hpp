#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tvcat/quantale.hpp"
#include "tvcat/report.hpp"
#include "tvcat/vmatrix.hpp"

namespace tvcat {

/// A Set-monad (T, e, m) restricted to finite sets. Sets are identified with
/// {0..n-1}; each method receives the size n of the set X it is applied to.
class Monad {
 public:
  virtual ~Monad() = default;

  virtual std::string_view name() const noexcept = 0;
  /// |TX| for |X| = n.
  virtual std::size_t size(std::size_t n) const = 0;
  /// e_X(x), an index into TX.
  virtual std::size_t unit(std::size_t n, std::size_t x) const = 0;
  /// m_X on an index into TTX, giving an index into TX.
  virtual std::size_t mult(std::size_t n, std::size_t w) const = 0;
  /// Tf : TX -> TY for f : X -> Y with |Y| = cod_size.
  virtual Map arrow(const Map& f, std::size_t cod_size) const = 0;
  /// Display labels of TX given labels of X.
  virtual std::vector<std::string> labels(const std::vector<std::string>& base) const = 0;
};

/// ξ·Tφ : TS -> V for φ : S -> V.
using Algebra = std::function<std::vector<Value>(const Quantale&, const Monad&, std::span<const Value> phi)>;

/// A topological theory (T, V, ξ) on finite sets. The structure map ξ is
/// represented through its action ξ_S(φ) = ξ·Tφ on V-valued functions, which
/// is all the matrix calculus ever needs and stays finite for infinite V.
class Theory {
 public:
  Theory(std::string name, QuantaleRef q, std::shared_ptr<const Monad> monad, Algebra xi, bool certified);

  const std::string& name() const noexcept { return name_; }
  const Quantale& quantale() const noexcept { return *q_; }
  const QuantaleRef& quantale_ref() const noexcept { return q_; }
  const Monad& monad() const noexcept { return *monad_; }

  std::size_t t_size(std::size_t n) const { return monad_->size(n); }
  std::size_t unit(std::size_t n, std::size_t x) const { return monad_->unit(n, x); }
  std::size_t mult(std::size_t n, std::size_t w) const { return monad_->mult(n, w); }
  Map arrow(const Map& f, std::size_t cod_size) const { return monad_->arrow(f, cod_size); }
  Map unit_map(std::size_t n) const;
  Map mult_map(std::size_t n) const;

  std::vector<Value> xi(std::span<const Value> phi) const { return xi_(*q_, *monad_, phi); }

  bool t1_is_singleton() const { return monad_->size(1) == 1; }
  bool presheaf_enumerable() const noexcept { return q_->is_finite(); }

  /// Built-in trusted theories and theories that passed audit_theory.
  bool certified() const noexcept { return certified_; }
  /// Throws capability unless certified.
  void require_certified(std::string_view operation) const;
  std::shared_ptr<const Theory> with_certification(bool certified) const;

  /// Same monad, same quantale.
  bool same_as(const Theory& other) const noexcept;

 private:
  std::string name_;
  QuantaleRef q_;
  std::shared_ptr<const Monad> monad_;
  Algebra xi_;
  bool certified_;
};

using TheoryRef = std::shared_ptr<const Theory>;

std::shared_ptr<const Monad> identity_monad();
/// Principal ultrafilters: TX is in bijection with X, indexed in reverse
/// (e_X(x) = n-1-x), so no formula can confuse X with TX unnoticed.
std::shared_ptr<const Monad> principal_ultrafilter_monad();
/// TX = X + {★}; m merges the two ★ layers.
std::shared_ptr<const Monad> exception_monad();

/// identity, ultrafilter_principal (bool2 or lawvere) or exception_candidate.
/// The first two are certified; exception_candidate is returned uncertified.
/// The word theory is rejected.
TheoryRef builtin_theory(std::string_view name, QuantaleRef q);

/// T_ξ r : TX -|-> TY, the join of ξ·Tr over the fibres of <Tπ1, Tπ2>.
VMatrix t_xi_extend(const Theory& th, const VMatrix& r);

struct TheoryAuditOptions {
  /// Largest matrix side used for the matrix-level laws.
  std::size_t matrix_side = 2;
  /// Per-shape limit on exhaustively enumerated matrices; random samples beyond.
  std::size_t matrix_limit = 4096;
  std::size_t samples = 64;
  std::uint64_t seed = 7;
};

/// Monad laws, algebra laws, the monoid diagrams for ξ, monotonicity and
/// naturality of ξ_X, BC on pullback squares and m-naturality squares, and the
/// consequences for T_ξ (involution, op-lax e, natural m, monotone, graphs),
/// over all sets of size <= size_cap.
AuditReport audit_theory(const Theory& th, std::size_t size_cap, const TheoryAuditOptions& options = {});

/// Runs audit_theory and, when every law passes, returns a certified copy.
struct Certification {
  TheoryRef theory;  // null when the audit failed
  AuditReport report;
};
Certification certify_theory(const Theory& th, std::size_t size_cap);

}  // namespace tvcat
