#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>

namespace tvcat {

/// An element of some quantale: either an index into a finite carrier or an
/// exact extended nonnegative rational (the Lawvere quantale). Rationals are
/// kept in lowest terms and infinity has a single representation, so `==` is
/// element identity. The built-in `<=>` is a canonical total order used for
/// sorting only; the lattice order lives in Quantale::leq.
class Value {
 public:
  constexpr Value() = default;

  static constexpr Value index(std::size_t i) noexcept {
    Value v;
    v.kind_ = Kind::index;
    v.num_ = static_cast<std::int64_t>(i);
    v.den_ = 1;
    return v;
  }

  /// Throws Error(ErrorKind::mismatch) for negative values or a zero denominator.
  static Value rational(std::int64_t num, std::int64_t den = 1);

  static constexpr Value infinity() noexcept {
    Value v;
    v.kind_ = Kind::rational;
    v.num_ = 1;
    v.den_ = 0;
    return v;
  }

  constexpr bool is_index() const noexcept { return kind_ == Kind::index; }
  constexpr bool is_rational() const noexcept { return kind_ == Kind::rational; }
  constexpr bool is_infinite() const noexcept { return kind_ == Kind::rational && den_ == 0; }

  constexpr std::size_t index() const noexcept { return static_cast<std::size_t>(num_); }
  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }

  friend constexpr bool operator==(const Value&, const Value&) = default;
  friend std::strong_ordering operator<=>(const Value& a, const Value& b) noexcept;

  // Exact arithmetic on the rational representation. Infinity absorbs in
  // addition; truncated subtraction follows inf-x=inf (x finite), x-inf=0.
  friend Value add(const Value& a, const Value& b);
  friend Value monus(const Value& a, const Value& b);
  /// Numeric comparison of rationals (infinity largest).
  friend bool numeric_less(const Value& a, const Value& b) noexcept;

 private:
  enum class Kind : std::uint8_t { index, rational };

  Kind kind_ = Kind::index;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// "inf", "n" or "n/d" for rationals, "#i" for raw indices.
std::string to_string(const Value& v);

}  // namespace tvcat
