#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tvcat/report.hpp"
#include "tvcat/value.hpp"

namespace tvcat {

/// A commutative quantale (V, tensor, k). Finite quantales are table driven;
/// the Lawvere quantale P+ = ([0,inf]^op, +, 0) uses exact rationals. For P+
/// the lattice order is the reversed numeric order, so joins are numeric
/// minima, the bottom is inf and the top is 0.
class Quantale {
 public:
  enum class Kind { finite, lawvere };

  /// Builds a finite quantale from explicit tables. `leq[u][v]` is u <= v.
  /// Rejects non-partial-orders and non-lattices; tensor laws are not
  /// enforced here (audit_quantale reports them), so faulty tables can be
  /// constructed on purpose. The internal hom is computed as
  /// hom(u,v) = join{ w | u (x) w <= v }.
  static Quantale finite_table(std::string name, std::vector<std::string> labels,
                               const std::vector<std::vector<bool>>& leq,
                               const std::vector<std::vector<std::size_t>>& tensor,
                               std::size_t unit);

  static Quantale lawvere();

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::finite; }
  const std::string& name() const noexcept { return name_; }

  /// Carrier size; finite quantales only.
  std::size_t size() const;
  /// All carrier elements in index order; finite quantales only.
  std::vector<Value> elements() const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  bool contains(const Value& v) const noexcept;

  bool leq(const Value& u, const Value& v) const;
  Value join(const Value& u, const Value& v) const;
  Value meet(const Value& u, const Value& v) const;
  Value join(std::span<const Value> elems) const;
  Value meet(std::span<const Value> elems) const;
  Value tensor(const Value& u, const Value& v) const;
  /// Largest w with u (x) w <= v.
  Value hom(const Value& u, const Value& v) const;

  Value bottom() const noexcept { return bottom_; }
  Value top() const noexcept { return top_; }
  Value unit() const noexcept { return unit_; }

  std::string format(const Value& v) const;
  /// Parses a label (finite) or "inf" / integer / decimal / "p/q" (lawvere).
  Value parse(std::string_view text) const;

  friend bool operator==(const Quantale& a, const Quantale& b);

 private:
  Quantale() = default;

  void check(const Value& v) const;
  std::size_t at(const Value& u, const Value& v) const noexcept { return u.index() * n_ + v.index(); }

  Kind kind_ = Kind::finite;
  std::string name_;
  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
  std::vector<std::uint16_t> tensor_;
  std::vector<std::uint16_t> join_;
  std::vector<std::uint16_t> meet_;
  std::vector<std::uint16_t> hom_;
  Value bottom_;
  Value top_;
  Value unit_;
};

using QuantaleRef = std::shared_ptr<const Quantale>;

/// bool2, chain(n) for n >= 2 (tensor = meet, unit = top), or lawvere.
QuantaleRef builtin_quantale(std::string_view name);

struct QuantaleAuditOptions {
  /// Exhaustive subset check for join distributivity up to this carrier size;
  /// random subsets beyond it.
  std::size_t exhaustive_subsets_up_to = 6;
  std::size_t random_subsets = 200;
  std::uint64_t seed = 1;
  /// Sample used for the Lawvere quantale (0 and inf are always added).
  std::vector<Value> lawvere_sample;
};

/// Law checklist: partial order, lattice completeness, associativity,
/// commutativity, unit, join distributivity, hom adjunction.
AuditReport audit_quantale(const Quantale& q, const QuantaleAuditOptions& options = {});

/// The default Lawvere sample: a grid of small rationals plus 0 and inf.
std::vector<Value> default_lawvere_sample();

}  // namespace tvcat
