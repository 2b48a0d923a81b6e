#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tvcat/distributor.hpp"
#include "tvcat/report.hpp"
#include "tvcat/tcategory.hpp"

namespace tvcat {

enum class PhiKind {
  all,
  representable,
  almost_representable,
  right_adjoint,
  inhabited,
  closed,
  preserves_top,
  preserves_cotensors,
  preserves_finite_infima,
  preserves_arbitrary_infima,
  preserves_codirected_infima,
};

/// A class of T-distributors given by a membership predicate.
class PhiClass {
 public:
  explicit PhiClass(PhiKind kind) : kind_(kind) {}

  PhiKind kind() const noexcept { return kind_; }
  std::string name() const;
  /// The preserves(...) family works on covariant presheaves: finite V, T1 = 1.
  bool needs_covariant_presheaves() const noexcept;
  /// Throws capability when the theory cannot host this class.
  void require_capabilities(const Theory& th) const;

  friend bool operator==(const PhiClass&, const PhiClass&) = default;

 private:
  PhiKind kind_;
};

/// all, representable, almost_representable, right_adjoint, inhabited, closed,
/// preserves(top|cotensors|finite_infima|arbitrary_infima|codirected_infima).
PhiClass builtin_class(std::string_view name);
std::vector<std::string> builtin_class_names();

bool member(const PhiClass& phi, const Distributor& d);
/// f_* in phi.
bool phi_dense(const PhiClass& phi, const TFunctor& f);

/// For representable membership: a T-functor g : Y -> X with d = g^*.
std::optional<TFunctor> representing_functor(const Distributor& d);

struct PhiUniverse {
  TheoryRef theory;
  /// Largest carrier of the enumerated categories.
  std::size_t max_size = 2;
  /// Cap on candidate matrices per distributor shape.
  std::size_t matrix_cap = 1 << 12;
};

/// (Ax 1)-(Ax 4) over every category of the universe (up to isomorphism),
/// every functor and every distributor between them.
AuditReport audit_axioms(const PhiClass& phi, const PhiUniverse& universe);

/// Factorisation of an almost-representable-dense f : X -> Y through the full
/// subcategory Y0 = { y | f_*(x, y) > bottom for some x }.
struct ArFactorization {
  Subcategory y0;     // Y0 with its inclusion into Y
  TFunctor first;     // X -> Y0
  std::optional<TFunctor> right_adjoint;  // Y0 -> X when first is a left adjoint
};
ArFactorization ar_factorize(const TFunctor& f);

}  // namespace tvcat
