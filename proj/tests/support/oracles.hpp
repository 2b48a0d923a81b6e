#pragma once

// Independent reference computations. Nothing here calls into the library's
// matrix calculus; the inputs are plain tables.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "tvcat/tcategory.hpp"

namespace oracle {

using BoolMatrix = std::vector<std::vector<bool>>;

/// Order matrix le[x][y] of a bool2 identity-theory category.
BoolMatrix order_of(const tvcat::TCategory& x);

bool is_preorder(const BoolMatrix& le);

/// Number of preorders on n labelled points, by scanning all n x n relations.
std::size_t count_preorders(std::size_t n);

/// Every subset of the preorder has a least upper bound.
bool has_all_joins(const BoolMatrix& le);

/// Down-closed subsets as indicator vectors, in the order of their bitmask.
std::vector<std::vector<bool>> down_sets(const BoolMatrix& le, bool nonempty_only = false);

/// f preserves the supremum of every subset (both sides complete lattices).
bool preserves_all_joins(const BoolMatrix& x, const BoolMatrix& y, const std::vector<std::size_t>& f);

// Extended nonnegative rationals scaled to a common denominator, with
// kInf for infinity. Used for the Lawvere quantale.
inline constexpr std::int64_t kScale = 12;
inline constexpr std::int64_t kInf = INT64_MAX;

std::int64_t scaled(const tvcat::Value& v);
tvcat::Value unscaled(std::int64_t s);

/// The numerically smallest w on the grid {i/12 : 0 <= i <= limit} U {inf}
/// with u + w >= v.
std::int64_t grid_hom(std::int64_t u, std::int64_t v, std::int64_t limit);

/// (s . r)(x, z) = min_y r(x, y) + s(y, z) on scaled entries.
using IntMatrix = std::vector<std::vector<std::int64_t>>;
IntMatrix min_plus(const IntMatrix& r, const IntMatrix& s);
/// Largest (numerically smallest) s with s . r <= t, i.e. s(y,z) = max_x t(x,z) - r(x,y), truncated.
IntMatrix min_plus_extension(const IntMatrix& t, const IntMatrix& r);
/// Floyd-Warshall closure of a distance table.
IntMatrix shortest_paths(IntMatrix d);

IntMatrix to_int(const tvcat::VMatrix& m);

/// Random scaled weight: multiples of 1/kScale up to `max` units, inf with
/// probability 1/8.
std::int64_t random_weight(std::mt19937_64& rng, std::int64_t max_units);

}  // namespace oracle
