#include "tvcat/phiclass.hpp"

#include <algorithm>

#include "tvcat/completion.hpp"
#include "tvcat/enumerate.hpp"
#include "tvcat/error.hpp"

namespace tvcat {

namespace {

struct NamedKind {
  const char* name;
  PhiKind kind;
};

constexpr NamedKind kKinds[] = {
    {"all", PhiKind::all},
    {"representable", PhiKind::representable},
    {"almost_representable", PhiKind::almost_representable},
    {"right_adjoint", PhiKind::right_adjoint},
    {"inhabited", PhiKind::inhabited},
    {"closed", PhiKind::closed},
    {"preserves(top)", PhiKind::preserves_top},
    {"preserves(cotensors)", PhiKind::preserves_cotensors},
    {"preserves(finite_infima)", PhiKind::preserves_finite_infima},
    {"preserves(arbitrary_infima)", PhiKind::preserves_arbitrary_infima},
    {"preserves(codirected_infima)", PhiKind::preserves_codirected_infima},
};

// Columns of a that equal the given column.
std::vector<std::size_t> matching_points(const TCategory& x, const VMatrix& m, std::size_t col) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < x.size(); ++p) {
    bool same = true;
    for (std::size_t u = 0; u < x.t_size() && same; ++u) same = x(u, p) == m(u, col);
    if (same) out.push_back(p);
  }
  return out;
}

bool column_is_bottom(const VMatrix& m, std::size_t col) {
  const Value bot = m.quantale().bottom();
  for (std::size_t u = 0; u < m.rows(); ++u)
    if (m(u, col) != bot) return false;
  return true;
}

std::vector<Value> pointwise_meet(const Quantale& q, const std::vector<std::vector<Value>>& fs,
                                  const std::vector<std::size_t>& pick, std::size_t n) {
  std::vector<Value> out(n, q.top());
  for (std::size_t i : pick)
    for (std::size_t x = 0; x < n; ++x) out[x] = q.meet(out[x], fs[i][x]);
  return out;
}

bool preserves(PhiKind kind, const Distributor& d) {
  const Quantale& q = d.dom->quantale();
  const CompletionCaps caps;
  const CovariantPresheafCategory vx = covariant_presheaf_cat(d.dom, caps);
  const std::size_t nx = d.dom->size(), ny = d.cod->size();
  const auto& els = vx.elements;
  auto img = [&](std::span<const Value> a) { return apply(d, a); };

  switch (kind) {
    case PhiKind::preserves_top: {
      const std::vector<Value> top(nx, q.top());
      return img(top) == std::vector<Value>(ny, q.top());
    }
    case PhiKind::preserves_cotensors: {
      for (const Value& u : q.elements())
        for (const auto& a : els) {
          std::vector<Value> ua(nx);
          for (std::size_t x = 0; x < nx; ++x) ua[x] = q.hom(u, a[x]);
          std::vector<Value> rhs = img(a);
          for (auto& v : rhs) v = q.hom(u, v);
          if (img(ua) != rhs) return false;
        }
      return true;
    }
    case PhiKind::preserves_finite_infima:
    case PhiKind::preserves_arbitrary_infima:
    case PhiKind::preserves_codirected_infima: {
      std::vector<std::vector<Value>> images;
      for (const auto& a : els) images.push_back(img(a));
      auto check = [&](const std::vector<std::size_t>& s) {
        return img(pointwise_meet(q, els, s, nx)) == pointwise_meet(q, images, s, ny);
      };
      auto below = [&](std::size_t i, std::size_t j) {
        for (std::size_t x = 0; x < nx; ++x)
          if (!q.leq(els[i][x], els[j][x])) return false;
        return true;
      };
      const bool codirected = kind == PhiKind::preserves_codirected_infima;
      // On a finite carrier a codirected family has a least member, its
      // infimum, so monotonicity settles it; the literal check is kept small.
      if (els.size() <= 16) {
        return for_each_subset(els.size(), [&](const std::vector<std::size_t>& s) {
          if (codirected) {
            if (s.empty()) return true;
            const bool least = std::any_of(s.begin(), s.end(), [&](std::size_t i) {
              return std::all_of(s.begin(), s.end(), [&](std::size_t j) { return below(i, j); });
            });
            if (!least) return true;
          }
          return check(s);
        });
      }
      if (codirected) return true;
      // binary meets and the empty meet generate every finite meet
      if (!check({})) return false;
      for (std::size_t i = 0; i < els.size(); ++i)
        for (std::size_t j = i + 1; j < els.size(); ++j)
          if (!check({i, j})) return false;
      return true;
    }
    default:
      return true;
  }
}

}  // namespace

std::string PhiClass::name() const {
  for (const auto& k : kKinds)
    if (k.kind == kind_) return k.name;
  return "?";
}

bool PhiClass::needs_covariant_presheaves() const noexcept {
  switch (kind_) {
    case PhiKind::preserves_top:
    case PhiKind::preserves_cotensors:
    case PhiKind::preserves_finite_infima:
    case PhiKind::preserves_arbitrary_infima:
    case PhiKind::preserves_codirected_infima:
      return true;
    default:
      return false;
  }
}

void PhiClass::require_capabilities(const Theory& th) const {
  if (!needs_covariant_presheaves()) return;
  if (!th.quantale().is_finite())
    fail(ErrorKind::capability, name() + " needs a finite quantale, not " + th.quantale().name());
  if (!th.t1_is_singleton()) fail(ErrorKind::capability, name() + " needs T1 = 1, which fails for " + th.name());
}

PhiClass builtin_class(std::string_view name) {
  for (const auto& k : kKinds)
    if (name == k.name) return PhiClass(k.kind);
  fail(ErrorKind::unknown_name, "unknown class '" + std::string(name) + "'");
}

std::vector<std::string> builtin_class_names() {
  std::vector<std::string> out;
  for (const auto& k : kKinds) out.emplace_back(k.name);
  return out;
}

std::optional<TFunctor> representing_functor(const Distributor& d) {
  const TCategory& x = *d.dom;
  std::vector<std::vector<std::size_t>> choices;
  for (std::size_t y = 0; y < d.cod->size(); ++y) {
    choices.push_back(matching_points(x, d.matrix, y));
    if (choices.back().empty()) return std::nullopt;
  }
  std::optional<TFunctor> found;
  for_each_tuple(std::span<const std::vector<std::size_t>>(choices), [&](const Map& g) {
    if (functor_violation(*d.cod, x, g)) return true;
    found = TFunctor{d.cod, d.dom, g};
    return false;
  });
  return found;
}

bool member(const PhiClass& phi, const Distributor& d) {
  const TCategory& x = *d.dom;
  const Quantale& q = x.quantale();
  const VMatrix& m = d.matrix;
  switch (phi.kind()) {
    case PhiKind::all:
      return true;
    case PhiKind::representable:
      return representing_functor(d).has_value();
    case PhiKind::almost_representable:
      for (std::size_t y = 0; y < m.cols(); ++y)
        if (!column_is_bottom(m, y) && matching_points(x, m, y).empty()) return false;
      return true;
    case PhiKind::right_adjoint:
      return left_adjoint_candidate(d).is_right_adjoint;
    case PhiKind::inhabited:
      for (std::size_t y = 0; y < m.cols(); ++y) {
        Value s = q.bottom();
        for (std::size_t u = 0; u < m.rows(); ++u) s = q.join(s, m(u, y));
        if (!q.leq(q.unit(), s)) return false;
      }
      return true;
    case PhiKind::closed: {
      const Theory& th = x.theory();
      for (std::size_t u = 0; u < m.rows(); ++u)
        for (std::size_t y = 0; y < m.cols(); ++y) {
          Value s = q.bottom();
          for (std::size_t p = 0; p < x.size(); ++p) s = q.join(s, q.tensor(x(u, p), m(th.unit(x.size(), p), y)));
          if (!q.leq(m(u, y), s)) return false;
        }
      return true;
    }
    default:
      phi.require_capabilities(x.theory());
      return preserves(phi.kind(), d);
  }
}

bool phi_dense(const PhiClass& phi, const TFunctor& f) { return member(phi, star(f)); }

AuditReport audit_axioms(const PhiClass& phi, const PhiUniverse& u) {
  if (!u.theory) fail(ErrorKind::precondition, "audit_axioms: universe has no theory");
  phi.require_capabilities(*u.theory);
  AuditReport report;
  const auto cats = category_universe(u.theory, u.max_size);
  const CategoryRef g = generator_G(u.theory);
  report.subject = "class " + phi.name() + " over " + u.theory->quantale().name() + " + " + u.theory->name() + ", " +
                   std::to_string(cats.size()) + " categories with at most " + std::to_string(u.max_size) + " points";
  const std::size_t n = cats.size();

  // functors up to equivalence: f ≅ g have equal f_* and f^*
  std::vector<std::vector<std::vector<TFunctor>>> funs(n, std::vector<std::vector<TFunctor>>(n));
  std::vector<std::vector<std::vector<TFunctor>>> all_funs(n, std::vector<std::vector<TFunctor>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      all_funs[i][j] = enumerate_functors(cats[i], cats[j]);
      for (const auto& f : all_funs[i][j]) {
        const bool dup = std::any_of(funs[i][j].begin(), funs[i][j].end(),
                                     [&](const TFunctor& h) { return functor_equiv(f, h); });
        if (!dup) funs[i][j].push_back(f);
      }
    }
  std::vector<std::vector<std::vector<Distributor>>> dists(n, std::vector<std::vector<Distributor>>(n));
  std::vector<std::vector<std::vector<char>>> in(n, std::vector<std::vector<char>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      dists[i][j] = enumerate_distributors(cats[i], cats[j], u.matrix_cap);
      for (const auto& d : dists[i][j]) in[i][j].push_back(member(phi, d) ? 1 : 0);
    }

  auto f_str = [&](const TFunctor& f) { return to_string(f) + " : " + to_string(*f.dom) + " -> " + to_string(*f.cod); };

  std::string w;
  for (std::size_t i = 0; i < n && w.empty(); ++i)
    for (std::size_t j = 0; j < n && w.empty(); ++j)
      for (const auto& f : funs[i][j])
        if (!member(phi, costar(f))) {
          w = "f = " + f_str(f) + ", f^* = " + to_string(costar(f).matrix);
          break;
        }
  report.record("Ax1", w);

  // Ax2: f : A -> X
  std::string w1, w2, w3;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < n; ++x)
      for (const auto& f : funs[a][x]) {
        const Distributor fs = costar(f);  // X -o-> A
        const Distributor fl = star(f);    // A -o-> X
        const bool f_lower_in = member(phi, fl);
        for (std::size_t z = 0; z < n; ++z) {
          // phi : Z -o-> X gives f^* o phi : Z -o-> A
          if (w1.empty())
            for (std::size_t k = 0; k < dists[z][x].size(); ++k) {
              if (!in[z][x][k]) continue;
              const Distributor c = kleisli_compose(fs, dists[z][x][k]);
              if (!member(phi, c)) {
                w1 = "f = " + f_str(f) + ", phi = " + to_string(dists[z][x][k]) + ", f^* o phi = " + to_string(c);
                break;
              }
            }
          // phi : A -o-> Z gives phi o f^* : X -o-> Z
          if (w2.empty())
            for (std::size_t k = 0; k < dists[a][z].size(); ++k) {
              if (!in[a][z][k]) continue;
              const Distributor c = kleisli_compose(dists[a][z][k], fs);
              if (!member(phi, c)) {
                w2 = "f = " + f_str(f) + ", phi = " + to_string(dists[a][z][k]) + ", phi o f^* = " + to_string(c);
                break;
              }
            }
          // f_* in phi, phi : X -o-> Z gives phi o f_* : A -o-> Z
          if (w3.empty() && f_lower_in)
            for (std::size_t k = 0; k < dists[x][z].size(); ++k) {
              if (!in[x][z][k]) continue;
              const Distributor c = kleisli_compose(dists[x][z][k], fl);
              if (!member(phi, c)) {
                w3 = "f = " + f_str(f) + ", phi = " + to_string(dists[x][z][k]) + ", phi o f_* = " + to_string(c);
                break;
              }
            }
        }
      }
  report.record("Ax2 f^* o phi", w1);
  report.record("Ax2 phi o f^*", w2);
  report.record("Ax2 phi o f_*", w3);

  w.clear();
  for (std::size_t i = 0; i < n && w.empty(); ++i)
    for (std::size_t j = 0; j < n && w.empty(); ++j)
      for (std::size_t k = 0; k < dists[i][j].size(); ++k) {
        if (in[i][j][k]) continue;
        const Distributor& d = dists[i][j][k];
        bool columns_in = true;
        for (std::size_t y = 0; y < d.cod->size() && columns_in; ++y) {
          VMatrix col(d.matrix.quantale_ref(), d.matrix.rows(), 1, d.matrix.column(y));
          columns_in = member(phi, Distributor{d.dom, g, std::move(col)});
        }
        if (columns_in) {
          w = "phi = " + to_string(d) + " on " + to_string(*d.dom) + " -> " + to_string(*d.cod) +
              ": every y^* o phi is in the class but phi is not";
          break;
        }
      }
  report.record("Ax3", w);

  w.clear();
  for (std::size_t i = 0; i < n && w.empty(); ++i)
    for (std::size_t j = 0; j < n && w.empty(); ++j)
      for (const auto& f : all_funs[i][j]) {
        std::vector<char> hit(cats[j]->size(), 0);
        for (std::size_t v : f.map) hit[v] = 1;
        if (std::find(hit.begin(), hit.end(), 0) != hit.end()) continue;
        if (!member(phi, star(f))) {
          w = "f = " + f_str(f) + " is surjective, f_* = " + to_string(star(f).matrix) + " is not in the class";
          break;
        }
      }
  report.record("Ax4", w);
  return report;
}

ArFactorization ar_factorize(const TFunctor& f) {
  const Distributor fl = star(f);
  if (!member(PhiClass(PhiKind::almost_representable), fl))
    fail(ErrorKind::precondition, "ar_factorize: f is not almost_representable-dense");
  std::vector<std::size_t> support;
  for (std::size_t y = 0; y < f.cod->size(); ++y)
    if (!column_is_bottom(fl.matrix, y)) support.push_back(y);
  Subcategory y0 = full_subcategory(f.cod, support);
  Map first(f.map.size());
  for (std::size_t x = 0; x < first.size(); ++x) {
    const auto it = std::find(support.begin(), support.end(), f.map[x]);
    if (it == support.end()) fail(ErrorKind::precondition, "ar_factorize: f(x) outside the support (k = bottom?)");
    first[x] = static_cast<std::size_t>(it - support.begin());
  }
  ArFactorization out{y0, TFunctor{f.dom, y0.category, std::move(first)}, std::nullopt};
  const Distributor fs = star(out.first);
  if (auto g = representing_functor(fs)) {
    if (adjoint_pair(out.first, *g)) out.right_adjoint = g;
  }
  return out;
}

}  // namespace tvcat
