#include "tvcat/vmatrix.hpp"

#include "tvcat/error.hpp"

namespace tvcat {

namespace {

void same_quantale(const VMatrix& a, const VMatrix& b, const char* op) {
  if (a.quantale_ref() != b.quantale_ref() && !(a.quantale() == b.quantale()))
    fail(ErrorKind::mismatch, std::string(op) + ": matrices over different quantales (" + a.quantale().name() +
                                  ", " + b.quantale().name() + ")");
}

std::string dims(const VMatrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

std::optional<std::size_t> FinSet::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == label) return i;
  return std::nullopt;
}

FinSet FinSet::range(std::size_t n, std::string name) {
  FinSet s{std::move(name), {}};
  for (std::size_t i = 0; i < n; ++i) s.elements.push_back(std::to_string(i));
  return s;
}

FinSet FinSet::of(std::string name, std::vector<std::string> elements) {
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j)
      if (elements[i] == elements[j]) fail(ErrorKind::validation, "set " + name + ": duplicate element " + elements[i]);
  return FinSet{std::move(name), std::move(elements)};
}

VMatrix::VMatrix(QuantaleRef q, std::size_t rows, std::size_t cols)
    : q_(std::move(q)), rows_(rows), cols_(cols), entries_(rows * cols, q_->bottom()) {}

VMatrix::VMatrix(QuantaleRef q, std::size_t rows, std::size_t cols, std::vector<Value> entries)
    : q_(std::move(q)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    fail(ErrorKind::mismatch, "matrix entry count " + std::to_string(entries_.size()) + " does not match " +
                                  std::to_string(rows_) + "x" + std::to_string(cols_));
  for (const Value& v : entries_)
    if (!q_->contains(v)) fail(ErrorKind::mismatch, "matrix entry " + to_string(v) + " not in " + q_->name());
}

VMatrix VMatrix::constant(QuantaleRef q, std::size_t rows, std::size_t cols, const Value& v) {
  return VMatrix(q, rows, cols, std::vector<Value>(rows * cols, v));
}

VMatrix VMatrix::graph(QuantaleRef q, const Map& f, std::size_t cod_size) {
  VMatrix m(q, f.size(), cod_size);
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x] >= cod_size) fail(ErrorKind::mismatch, "map image out of range");
    m(x, f[x]) = q->unit();
  }
  return m;
}

const Value& VMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) fail(ErrorKind::mismatch, "matrix index out of range");
  return (*this)(r, c);
}

void VMatrix::set(std::size_t r, std::size_t c, const Value& v) {
  if (r >= rows_ || c >= cols_) fail(ErrorKind::mismatch, "matrix index out of range");
  if (!q_->contains(v)) fail(ErrorKind::mismatch, "value not in " + q_->name());
  (*this)(r, c) = v;
}

std::vector<Value> VMatrix::column(std::size_t c) const {
  std::vector<Value> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

std::vector<Value> VMatrix::row(std::size_t r) const {
  return std::vector<Value>(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                            entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

bool operator==(const VMatrix& a, const VMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_ &&
         (a.q_ == b.q_ || *a.q_ == *b.q_);
}

VMatrix identity_rel(std::size_t n, QuantaleRef q) {
  VMatrix m(q, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = q->unit();
  return m;
}

VMatrix identity_rel(const FinSet& x, QuantaleRef q) { return identity_rel(x.size(), std::move(q)); }

VMatrix compose(const VMatrix& s, const VMatrix& r) {
  same_quantale(s, r, "compose");
  if (r.cols() != s.rows())
    fail(ErrorKind::mismatch, "compose: " + dims(s) + " after " + dims(r) + " does not typecheck");
  const Quantale& q = r.quantale();
  VMatrix out(r.quantale_ref(), r.rows(), s.cols());
  for (std::size_t x = 0; x < r.rows(); ++x)
    for (std::size_t z = 0; z < s.cols(); ++z) {
      Value acc = q.bottom();
      for (std::size_t y = 0; y < r.cols(); ++y) acc = q.join(acc, q.tensor(r(x, y), s(y, z)));
      out(x, z) = acc;
    }
  return out;
}

VMatrix involute(const VMatrix& r) {
  VMatrix out(r.quantale_ref(), r.cols(), r.rows());
  for (std::size_t x = 0; x < r.rows(); ++x)
    for (std::size_t y = 0; y < r.cols(); ++y) out(y, x) = r(x, y);
  return out;
}

bool leq_matrix(const VMatrix& r, const VMatrix& s) {
  same_quantale(r, s, "leq_matrix");
  if (r.rows() != s.rows() || r.cols() != s.cols())
    fail(ErrorKind::mismatch, "leq_matrix: shapes " + dims(r) + " and " + dims(s));
  const Quantale& q = r.quantale();
  for (std::size_t i = 0; i < r.entries().size(); ++i)
    if (!q.leq(r.entries()[i], s.entries()[i])) return false;
  return true;
}

VMatrix join_matrix(const VMatrix& r, const VMatrix& s) {
  same_quantale(r, s, "join_matrix");
  if (r.rows() != s.rows() || r.cols() != s.cols())
    fail(ErrorKind::mismatch, "join_matrix: shapes " + dims(r) + " and " + dims(s));
  VMatrix out(r.quantale_ref(), r.rows(), r.cols());
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) out(i, j) = r.quantale().join(r(i, j), s(i, j));
  return out;
}

VMatrix meet_matrix(const VMatrix& r, const VMatrix& s) {
  same_quantale(r, s, "meet_matrix");
  if (r.rows() != s.rows() || r.cols() != s.cols())
    fail(ErrorKind::mismatch, "meet_matrix: shapes " + dims(r) + " and " + dims(s));
  VMatrix out(r.quantale_ref(), r.rows(), r.cols());
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) out(i, j) = r.quantale().meet(r(i, j), s(i, j));
  return out;
}

VMatrix right_extension(const VMatrix& t, const VMatrix& r) {
  same_quantale(t, r, "right_extension");
  if (t.rows() != r.rows())
    fail(ErrorKind::mismatch, "right_extension: " + dims(t) + " and " + dims(r) + " have different sources");
  const Quantale& q = r.quantale();
  VMatrix out(r.quantale_ref(), r.cols(), t.cols());
  for (std::size_t y = 0; y < r.cols(); ++y)
    for (std::size_t z = 0; z < t.cols(); ++z) {
      Value acc = q.top();
      for (std::size_t x = 0; x < r.rows(); ++x) acc = q.meet(acc, q.hom(r(x, y), t(x, z)));
      out(y, z) = acc;
    }
  return out;
}

VMatrix right_lifting(const VMatrix& r, const VMatrix& t) {
  same_quantale(r, t, "right_lifting");
  if (t.cols() != r.cols())
    fail(ErrorKind::mismatch, "right_lifting: " + dims(r) + " and " + dims(t) + " have different targets");
  const Quantale& q = r.quantale();
  VMatrix out(r.quantale_ref(), t.rows(), r.rows());
  for (std::size_t z = 0; z < t.rows(); ++z)
    for (std::size_t x = 0; x < r.rows(); ++x) {
      Value acc = q.top();
      for (std::size_t y = 0; y < r.cols(); ++y) acc = q.meet(acc, q.hom(r(x, y), t(z, y)));
      out(z, x) = acc;
    }
  return out;
}

std::string to_string(const VMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i == 0 ? "[" : ", [";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j == 0 ? "" : ",") + m.quantale().format(m(i, j));
    s += "]";
  }
  return s + "]";
}

}  // namespace tvcat
