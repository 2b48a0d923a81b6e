#include "tvcat/value.hpp"

#include <numeric>

#include "tvcat/error.hpp"

namespace tvcat {

namespace {

std::int64_t narrow(__int128 x) {
  if (x > INT64_MAX || x < INT64_MIN) fail(ErrorKind::cap_exceeded, "rational arithmetic overflow");
  return static_cast<std::int64_t>(x);
}

Value reduced(__int128 num, __int128 den) {
  __int128 x = num, y = den;
  while (y != 0) {
    __int128 t = x % y;
    x = y;
    y = t;
  }
  __int128 g = x == 0 ? 1 : x;
  return Value::rational(narrow(num / g), narrow(den / g));
}

}  // namespace

Value Value::rational(std::int64_t num, std::int64_t den) {
  if (den == 0) fail(ErrorKind::mismatch, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num < 0) fail(ErrorKind::mismatch, "Lawvere values are nonnegative");
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  Value v;
  v.kind_ = Kind::rational;
  v.num_ = num / g;
  v.den_ = den / g;
  if (v.num_ == 0) v.den_ = 1;
  return v;
}

bool numeric_less(const Value& a, const Value& b) noexcept {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

std::strong_ordering operator<=>(const Value& a, const Value& b) noexcept {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (a.kind_ == Value::Kind::index) return a.num_ <=> b.num_;
  if (a == b) return std::strong_ordering::equal;
  return numeric_less(a, b) ? std::strong_ordering::less : std::strong_ordering::greater;
}

Value add(const Value& a, const Value& b) {
  if (a.is_infinite() || b.is_infinite()) return Value::infinity();
  __int128 num = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
  __int128 den = static_cast<__int128>(a.den_) * b.den_;
  return reduced(num, den);
}

Value monus(const Value& a, const Value& b) {
  if (b.is_infinite()) return Value::rational(0);
  if (a.is_infinite()) return Value::infinity();
  if (!numeric_less(b, a)) return Value::rational(0);
  __int128 num = static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_;
  __int128 den = static_cast<__int128>(a.den_) * b.den_;
  return reduced(num, den);
}

std::string to_string(const Value& v) {
  if (v.is_index()) return "#" + std::to_string(v.index());
  if (v.is_infinite()) return "inf";
  if (v.den() == 1) return std::to_string(v.num());
  return std::to_string(v.num()) + "/" + std::to_string(v.den());
}

}  // namespace tvcat
