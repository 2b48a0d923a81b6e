#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "tvcat/error.hpp"
#include "tvcat/vmatrix.hpp"

namespace tvcat {

namespace detail {

// Visitors may return void (always continue) or bool (false stops the walk).
template <class F, class... Args>
bool keep_going(F& fn, Args&&... args) {
  if constexpr (std::is_void_v<std::invoke_result_t<F&, Args...>>) {
    fn(std::forward<Args>(args)...);
    return true;
  } else {
    return static_cast<bool>(fn(std::forward<Args>(args)...));
  }
}

}  // namespace detail

/// base^exp, throwing cap_exceeded when the result is above `cap`.
inline std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap, const std::string& what) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) fail(ErrorKind::cap_exceeded, what + " exceeds cap " + std::to_string(cap));
    r *= base;
  }
  if (r > cap) fail(ErrorKind::cap_exceeded, what + " exceeds cap " + std::to_string(cap));
  return r;
}

/// Visits every tuple t with t[i] drawn from choices[i], in lexicographic
/// order of positions (last position varies fastest). Returns false when the
/// visitor stopped the walk.
template <class F>
bool for_each_tuple(std::span<const std::vector<std::size_t>> choices, F&& fn) {
  const std::size_t n = choices.size();
  for (const auto& c : choices)
    if (c.empty()) return true;
  std::vector<std::size_t> pos(n, 0);
  Map tuple(n);
  for (std::size_t i = 0; i < n; ++i) tuple[i] = choices[i][0];
  while (true) {
    if (!detail::keep_going(fn, static_cast<const Map&>(tuple))) return false;
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++pos[i] < choices[i].size()) {
        tuple[i] = choices[i][pos[i]];
        break;
      }
      pos[i] = 0;
      tuple[i] = choices[i][0];
      if (i == 0) return true;
    }
    if (n == 0) return true;
  }
}

/// Every function {0..dom-1} -> {0..cod-1}.
template <class F>
bool for_each_map(std::size_t dom, std::size_t cod, F&& fn) {
  std::vector<std::size_t> all(cod);
  for (std::size_t i = 0; i < cod; ++i) all[i] = i;
  std::vector<std::vector<std::size_t>> choices(dom, all);
  return for_each_tuple(std::span<const std::vector<std::size_t>>(choices), fn);
}

/// Every subset of {0..n-1} as a sorted index list, in increasing bitmask order.
template <class F>
bool for_each_subset(std::size_t n, F&& fn) {
  if (n >= 8 * sizeof(std::size_t) - 1) fail(ErrorKind::cap_exceeded, "subset enumeration too large");
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) s.push_back(i);
    if (!detail::keep_going(fn, static_cast<const std::vector<std::size_t>&>(s))) return false;
  }
  return true;
}

/// Every rows x cols matrix over a finite quantale.
template <class F>
bool for_each_matrix(const QuantaleRef& q, std::size_t rows, std::size_t cols, std::size_t cap, F&& fn) {
  checked_power(q->size(), rows * cols, cap, "matrix enumeration over " + q->name());
  return for_each_map(rows * cols, q->size(), [&](const Map& t) {
    std::vector<Value> entries(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) entries[i] = Value::index(t[i]);
    VMatrix m(q, rows, cols, std::move(entries));
    return detail::keep_going(fn, static_cast<const VMatrix&>(m));
  });
}

/// All permutations of {0..n-1} in lexicographic order.
std::vector<Map> permutations(std::size_t n);

}  // namespace tvcat
