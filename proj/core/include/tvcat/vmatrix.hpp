#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tvcat/quantale.hpp"

namespace tvcat {

/// A finite set with a fixed canonical indexing of its elements.
struct FinSet {
  std::string name;
  std::vector<std::string> elements;

  std::size_t size() const noexcept { return elements.size(); }
  std::optional<std::size_t> index_of(std::string_view label) const;

  /// {0, 1, ..., n-1} labelled by their decimal indices.
  static FinSet range(std::size_t n, std::string name = {});
  /// Throws on duplicate labels.
  static FinSet of(std::string name, std::vector<std::string> elements);

  friend bool operator==(const FinSet&, const FinSet&) = default;
};

/// A function between finite sets, as the list of image indices.
using Map = std::vector<std::size_t>;

/// A V-relation r: X -|-> Y stored densely, row index x in X, column y in Y.
/// Only the carrier sizes are recorded; the sets themselves belong to the
/// objects (categories, distributors) the matrix is part of.
class VMatrix {
 public:
  VMatrix(QuantaleRef q, std::size_t rows, std::size_t cols);
  VMatrix(QuantaleRef q, std::size_t rows, std::size_t cols, std::vector<Value> entries);

  static VMatrix constant(QuantaleRef q, std::size_t rows, std::size_t cols, const Value& v);
  /// Graph of f: X -> Y (k where f(x) = y, bottom elsewhere).
  static VMatrix graph(QuantaleRef q, const Map& f, std::size_t cod_size);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Quantale& quantale() const noexcept { return *q_; }
  const QuantaleRef& quantale_ref() const noexcept { return q_; }

  const Value& operator()(std::size_t r, std::size_t c) const noexcept { return entries_[r * cols_ + c]; }
  Value& operator()(std::size_t r, std::size_t c) noexcept { return entries_[r * cols_ + c]; }
  /// Bounds-checked access.
  const Value& at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Value& v);

  std::span<const Value> entries() const noexcept { return entries_; }
  std::vector<Value> column(std::size_t c) const;
  std::vector<Value> row(std::size_t r) const;

  friend bool operator==(const VMatrix& a, const VMatrix& b);

 private:
  QuantaleRef q_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Value> entries_;
};

/// k on the diagonal, bottom elsewhere.
VMatrix identity_rel(std::size_t n, QuantaleRef q);
VMatrix identity_rel(const FinSet& x, QuantaleRef q);

/// s . r for r: X -|-> Y and s: Y -|-> Z: (s.r)(x,z) = join_y r(x,y) (x) s(y,z).
VMatrix compose(const VMatrix& s, const VMatrix& r);
/// r°(y,x) = r(x,y).
VMatrix involute(const VMatrix& r);

bool leq_matrix(const VMatrix& r, const VMatrix& s);
VMatrix join_matrix(const VMatrix& r, const VMatrix& s);
VMatrix meet_matrix(const VMatrix& r, const VMatrix& s);

/// t ⟜ r for r: X -|-> Y, t: X -|-> Z; the largest s: Y -|-> Z with s.r <= t.
/// (t ⟜ r)(y,z) = meet_x hom(r(x,y), t(x,z)).
VMatrix right_extension(const VMatrix& t, const VMatrix& r);
/// r ⊸ t for r: X -|-> Y, t: Z -|-> Y; the largest s: Z -|-> X with r.s <= t.
/// (r ⊸ t)(z,x) = meet_y hom(r(x,y), t(z,y)).
VMatrix right_lifting(const VMatrix& r, const VMatrix& t);

/// Row-major rendering with quantale labels, for diagnostics.
std::string to_string(const VMatrix& m);

}  // namespace tvcat
