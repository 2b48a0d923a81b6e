#pragma once

// Small named instances shared by the test binaries.

#include <string>
#include <vector>

#include "tvcat/completion.hpp"
#include "tvcat/tcategory.hpp"

namespace fx {

inline tvcat::TheoryRef theory(const std::string& q = "bool2", const std::string& t = "identity") {
  return tvcat::builtin_theory(t, tvcat::builtin_quantale(q));
}

/// A preorder over bool2 (or any finite quantale, as a crisp relation) from
/// le[x][y] = x <= y, identity theory.
inline tvcat::CategoryRef preorder(const tvcat::TheoryRef& th, std::vector<std::string> labels,
                                   const std::vector<std::vector<int>>& le, std::string name = "X") {
  const auto& q = th->quantale_ref();
  tvcat::VMatrix a(q, labels.size(), labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < labels.size(); ++j) a(i, j) = le[i][j] ? q->top() : q->bottom();
  return tvcat::check_category(th, tvcat::FinSet::of(std::move(name), std::move(labels)), std::move(a)).value();
}

inline tvcat::CategoryRef one(const tvcat::TheoryRef& th) { return preorder(th, {"*"}, {{1}}, "one"); }
inline tvcat::CategoryRef chain2(const tvcat::TheoryRef& th) {
  return preorder(th, {"0", "1"}, {{1, 1}, {0, 1}}, "chain2");
}
inline tvcat::CategoryRef antichain2(const tvcat::TheoryRef& th) {
  return preorder(th, {"a", "b"}, {{1, 0}, {0, 1}}, "antichain2");
}
inline tvcat::CategoryRef indiscrete2(const tvcat::TheoryRef& th) {
  return preorder(th, {"p", "q"}, {{1, 1}, {1, 1}}, "indiscrete2");
}
inline tvcat::CategoryRef chain3(const tvcat::TheoryRef& th) {
  return preorder(th, {"0", "1", "2"}, {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}}, "chain3");
}
inline tvcat::CategoryRef diamond(const tvcat::TheoryRef& th) {
  return preorder(th, {"bot", "a", "b", "top"},
                  {{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}}, "diamond");
}
/// Two incomparable points below a top.
inline tvcat::CategoryRef vee_top(const tvcat::TheoryRef& th) {
  return preorder(th, {"a", "b", "t"}, {{1, 0, 1}, {0, 1, 1}, {0, 0, 1}}, "antichain2+top");
}

inline tvcat::TFunctor functor(const tvcat::CategoryRef& x, const tvcat::CategoryRef& y, tvcat::Map f) {
  return tvcat::check_functor(std::move(f), x, y).value();
}

/// Weight TX -> V as a distributor X -o-> G from 0/1 flags over bool2.
inline tvcat::Distributor bool_presheaf(const tvcat::CategoryRef& x, const std::vector<int>& bits) {
  const auto& q = x->quantale_ref();
  tvcat::VMatrix m(q, x->t_size(), 1);
  for (std::size_t i = 0; i < bits.size(); ++i) m(i, 0) = bits[i] ? q->top() : q->bottom();
  return tvcat::check_distributor(std::move(m), x, tvcat::generator_G(x->theory_ref())).value();
}

}  // namespace fx
