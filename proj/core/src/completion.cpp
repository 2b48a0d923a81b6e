#include "tvcat/completion.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "tvcat/enumerate.hpp"
#include "tvcat/error.hpp"

namespace tvcat {

namespace {

constexpr std::size_t kNodeLimit = std::size_t{1} << 26;
constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Backtracking search for a T-functor B -> X with g(p) drawn from domains[p].
// The underlying-order condition b(e p, p') <= x(e g p, g p') is applied as
// forward checking; leaves get the full functor test and `accept`.
class FunctorSearch {
 public:
  FunctorSearch(const TCategory& b, const TCategory& x, std::function<bool(const Map&)> accept = {})
      : b_(b), x_(x), q_(b.quantale()), accept_(std::move(accept)) {}

  std::optional<Map> run(std::vector<std::vector<std::size_t>> domains) {
    g_.assign(b_.size(), kNone);
    nodes_ = 0;
    for (auto& d : domains)
      if (d.empty()) return std::nullopt;
    if (solve(domains, 0)) return g_;
    return std::nullopt;
  }

 private:
  bool compatible(std::size_t p, std::size_t v, std::size_t p2, std::size_t v2) const {
    return q_.leq(b_.point(p, p2), x_.point(v, v2)) && q_.leq(b_.point(p2, p), x_.point(v2, v));
  }

  bool solve(std::vector<std::vector<std::size_t>>& domains, std::size_t depth) {
    if (++nodes_ > kNodeLimit) fail(ErrorKind::cap_exceeded, "functor search exceeded its node limit");
    const std::size_t n = b_.size();
    if (depth == n) return !functor_violation(b_, x_, g_) && (!accept_ || accept_(g_));
    std::size_t p = kNone;
    for (std::size_t i = 0; i < n; ++i)
      if (g_[i] == kNone && (p == kNone || domains[i].size() < domains[p].size())) p = i;
    const std::vector<std::size_t> options = domains[p];
    for (std::size_t v : options) {
      if (!compatible(p, v, p, v)) continue;
      g_[p] = v;
      std::vector<std::vector<std::size_t>> next = domains;
      bool alive = true;
      for (std::size_t i = 0; i < n && alive; ++i) {
        if (g_[i] != kNone) continue;
        auto& d = next[i];
        d.erase(std::remove_if(d.begin(), d.end(), [&](std::size_t w) { return !compatible(p, v, i, w); }), d.end());
        alive = !d.empty();
      }
      if (alive && solve(next, depth + 1)) return true;
      g_[p] = kNone;
    }
    return false;
  }

  const TCategory& b_;
  const TCategory& x_;
  const Quantale& q_;
  std::function<bool(const Map&)> accept_;
  Map g_;
  std::size_t nodes_ = 0;
};

std::vector<std::size_t> all_points(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

std::vector<std::size_t> equivalent_points(const TCategory& x, std::size_t p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (points_equiv(x, p, i)) out.push_back(i);
  return out;
}

// Replaces each image by the smallest equivalent point when that keeps a functor.
Map canonical_map(const TCategory& b, const TCategory& x, Map g) {
  for (std::size_t p = 0; p < g.size(); ++p) {
    const std::size_t least = equivalent_points(x, g[p]).front();
    if (least == g[p]) continue;
    Map h = g;
    h[p] = least;
    if (!functor_violation(b, x, h)) g = std::move(h);
  }
  return g;
}

VMatrix as_column(const QuantaleRef& q, std::span<const Value> v) {
  return VMatrix(q, v.size(), 1, std::vector<Value>(v.begin(), v.end()));
}

std::vector<std::vector<Value>> presheaf_weights(const TCategory& x, const CategoryRef& g, const PhiClass& phi,
                                                 std::size_t cap, CategoryRef self) {
  std::vector<std::vector<Value>> out;
  for (auto& w : all_functions(x.quantale(), x.t_size(), cap)) {
    VMatrix m = as_column(x.quantale_ref(), w);
    if (distributor_violation(m, x, *g)) continue;
    if (!member(phi, Distributor{self, g, std::move(m)})) continue;
    out.push_back(std::move(w));
  }
  return out;
}

std::string map_table(const TFunctor& f) { return to_string(f); }

// Left inverse search: S(y x) ≅ x, all other presheaves free.
std::optional<TFunctor> find_left_inverse(const PresheafCategory& p, const TFunctor& y) {
  const TCategory& x = *p.base;
  const TCategory& c = *p.category;
  std::vector<std::vector<std::size_t>> domains(c.size(), all_points(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto eq = equivalent_points(x, i);
    auto& d = domains[y.map[i]];
    std::vector<std::size_t> keep;
    std::set_intersection(d.begin(), d.end(), eq.begin(), eq.end(), std::back_inserter(keep));
    d = std::move(keep);
  }
  FunctorSearch s(c, x);
  if (auto g = s.run(std::move(domains))) return TFunctor{p.category, p.base, canonical_map(c, x, *g)};
  return std::nullopt;
}

// S -| y: S_* = y^*, so S(psi) must satisfy a(e S psi, x) = c(e psi, y x).
std::optional<TFunctor> find_left_adjoint(const PresheafCategory& p, const TFunctor& y) {
  const TCategory& x = *p.base;
  const TCategory& c = *p.category;
  std::vector<std::vector<std::size_t>> domains(c.size());
  for (std::size_t psi = 0; psi < c.size(); ++psi)
    for (std::size_t x0 = 0; x0 < x.size(); ++x0) {
      bool ok = true;
      for (std::size_t t = 0; t < x.size() && ok; ++t) ok = x.point(x0, t) == c.point(psi, y.map[t]);
      if (ok) domains[psi].push_back(x0);
    }
  const VMatrix ys = costar(y).matrix;
  FunctorSearch s(c, x, [&](const Map& g) { return star(TFunctor{p.category, p.base, g}).matrix == ys; });
  if (auto g = s.run(std::move(domains))) {
    Map h = canonical_map(c, x, *g);
    if (star(TFunctor{p.category, p.base, h}).matrix != ys) h = *g;
    return TFunctor{p.category, p.base, std::move(h)};
  }
  return std::nullopt;
}

// Among the presheaves without colimit, the one with the largest support.
std::optional<std::size_t> colimit_certificate(const PresheafCategory& p) {
  const TFunctor id = identity_functor(p.base);
  const Value bottom = p.base->quantale().bottom();
  std::optional<std::size_t> best;
  std::size_t best_support = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto support = static_cast<std::size_t>(
        std::count_if(p.elements[i].begin(), p.elements[i].end(), [&](const Value& v) { return v != bottom; }));
    if (best && support <= best_support) continue;
    if (!colimit(p.weight(i), id)) {
      best = i;
      best_support = support;
    }
  }
  return best;
}

bool functor_leq_maps(const TCategory& cod, const Map& f, const Map& g) {
  const Quantale& q = cod.quantale();
  for (std::size_t p = 0; p < f.size(); ++p)
    for (std::size_t u = 0; u < cod.t_size(); ++u)
      if (!q.leq(cod(u, f[p]), cod(u, g[p]))) return false;
  return true;
}

bool maps_equiv(const TCategory& cod, const Map& f, const Map& g) {
  for (std::size_t p = 0; p < f.size(); ++p)
    if (!points_equiv(cod, f[p], g[p])) return false;
  return true;
}

std::string point_list(const TCategory& c, const Map& m, const TCategory& d) {
  std::string s = "{";
  for (std::size_t i = 0; i < m.size(); ++i)
    s += (i ? ", " : "") + c.carrier().elements[i] + "->" + d.carrier().elements[m[i]];
  return s + "}";
}

}  // namespace

std::optional<std::size_t> PresheafCategory::index_of(std::span<const Value> weight) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (std::equal(elements[i].begin(), elements[i].end(), weight.begin(), weight.end())) return i;
  return std::nullopt;
}

Distributor PresheafCategory::weight(std::size_t i) const {
  return Distributor{base, generator, as_column(base->quantale_ref(), elements[i])};
}

PresheafCategory presheaf_cat(CategoryRef x, const PhiClass& phi, const CompletionCaps& caps) {
  phi.require_capabilities(x->theory());
  if (!x->theory().presheaf_enumerable())
    fail(ErrorKind::capability, "presheaf enumeration needs a finite quantale, not " + x->quantale().name());
  PresheafCategory p;
  p.base = x;
  p.generator = generator_G(x->theory_ref());
  p.phi = phi;
  p.elements = presheaf_weights(*x, p.generator, phi, caps.function_cap, x);
  CategoryRef e = exponential_on(*x, p.elements);
  FinSet c = e->carrier();
  c.name = phi.name() + "(" + x->carrier().name + ")";
  p.category = std::make_shared<const TCategory>(x->theory_ref(), std::move(c), e->structure());
  return p;
}

TFunctor yoneda_map(const PresheafCategory& p) {
  Map m(p.base->size());
  for (std::size_t x = 0; x < m.size(); ++x) {
    const auto col = p.base->column(x);
    auto i = p.index_of(col);
    if (!i)
      fail(ErrorKind::precondition, "yoneda: the column of " + p.base->carrier().elements[x] + " is not in class " +
                                        p.phi.name());
    m[x] = *i;
  }
  return TFunctor{p.base, p.category, std::move(m)};
}

Embedding yoneda(CategoryRef x, const CompletionCaps& caps) { return yoneda_phi(std::move(x), PhiClass(PhiKind::all), caps); }

Embedding yoneda_phi(CategoryRef x, const PhiClass& phi, const CompletionCaps& caps) {
  Embedding e{presheaf_cat(std::move(x), phi, caps), {}};
  e.y = yoneda_map(e.presheaves);
  return e;
}

TFunctor phi_functor(const TFunctor& f, const PresheafCategory& px, const PresheafCategory& py) {
  if (f.dom->size() != px.base->size() || f.cod->size() != py.base->size())
    fail(ErrorKind::mismatch, "phi_functor: presheaf categories do not match the functor");
  const Distributor fs = costar(f);
  Map m(px.size());
  for (std::size_t i = 0; i < px.size(); ++i) {
    const Distributor img = kleisli_compose(px.weight(i), fs);
    auto j = py.index_of(img.matrix.entries());
    if (!j) fail(ErrorKind::validation, "phi_functor: psi o f^* left the class " + px.phi.name() + " (Ax2)");
    m[i] = *j;
  }
  return TFunctor{px.category, py.category, std::move(m)};
}

TFunctor inverse_image(const TFunctor& f, const PresheafCategory& px, const PresheafCategory& py) {
  if (f.dom->size() != px.base->size() || f.cod->size() != py.base->size())
    fail(ErrorKind::mismatch, "inverse_image: presheaf categories do not match the functor");
  if (!phi_dense(px.phi, f)) fail(ErrorKind::precondition, "inverse_image: f is not " + px.phi.name() + "-dense");
  const Distributor fl = star(f);
  Map m(py.size());
  for (std::size_t i = 0; i < py.size(); ++i) {
    const Distributor img = kleisli_compose(py.weight(i), fl);
    auto j = px.index_of(img.matrix.entries());
    if (!j) fail(ErrorKind::validation, "inverse_image: psi o f_* left the class " + px.phi.name());
    m[i] = *j;
  }
  return TFunctor{py.category, px.category, std::move(m)};
}

std::optional<TFunctor> colimit(const Distributor& phi, const TFunctor& h) {
  if (phi.dom->size() != h.dom->size()) fail(ErrorKind::mismatch, "colimit: weight and diagram have different domains");
  const TCategory& z = *phi.cod;
  const TCategory& x = *h.cod;
  const Distributor delta = extension(star(h), phi);  // Z -o-> X
  const VMatrix& d = delta.matrix;
  const Theory& th = z.theory();
  std::vector<std::vector<std::size_t>> domains(z.size());
  for (std::size_t p = 0; p < z.size(); ++p) {
    const std::size_t ez = th.unit(z.size(), p);
    for (std::size_t x0 = 0; x0 < x.size(); ++x0) {
      bool ok = true;
      for (std::size_t t = 0; t < x.size() && ok; ++t) ok = x.point(x0, t) == d(ez, t);
      if (ok) domains[p].push_back(x0);
    }
  }
  FunctorSearch s(z, x, [&](const Map& g) { return star(TFunctor{phi.cod, h.cod, g}).matrix == d; });
  if (auto g = s.run(std::move(domains))) {
    Map c = canonical_map(z, x, *g);
    if (star(TFunctor{phi.cod, h.cod, c}).matrix != d) c = *g;
    return TFunctor{phi.cod, h.cod, std::move(c)};
  }
  return std::nullopt;
}

SupResult sup_phi(const PresheafCategory& p, const TFunctor& y, const CompletionCaps&) {
  SupResult r;
  r.left_inverse = find_left_inverse(p, y);
  r.left_adjoint = find_left_adjoint(p, y);
  if (!r.left_adjoint) r.certificate = colimit_certificate(p);
  return r;
}

InjectivityTests injectivity_tests(TheoryRef th, const PhiClass& phi, std::size_t max_b) {
  InjectivityTests t{th, phi, max_b, {}};
  for (const auto& b : category_universe(th, max_b)) {
    const std::size_t n = b->size();
    for_each_subset(n, [&](const std::vector<std::size_t>& a) {
      if (a.size() == n) return;
      Subcategory sub = full_subcategory(b, a);
      if (phi_dense(phi, sub.inclusion)) t.inclusions.push_back(std::move(sub));
    });
  }
  return t;
}

std::optional<std::string> injectivity_counterexample(CategoryRef x, const InjectivityTests& tests,
                                                      const CompletionCaps& caps) {
  const TCategory& xc = *x;
  Map cls(xc.size());
  for (std::size_t i = 0; i < xc.size(); ++i) cls[i] = equivalent_points(xc, i).front();
  for (const auto& inc : tests.inclusions) {
    const TCategory& a = *inc.category;
    const TCategory& b = *inc.inclusion.cod;
    std::set<Map> seen;
    for (const auto& f : enumerate_functors(inc.category, x, caps.map_cap)) {
      Map key(f.map.size());
      for (std::size_t i = 0; i < key.size(); ++i) key[i] = cls[f.map[i]];
      if (!seen.insert(key).second) continue;
      std::vector<std::vector<std::size_t>> domains(b.size(), all_points(xc.size()));
      for (std::size_t i = 0; i < a.size(); ++i) domains[inc.inclusion.map[i]] = equivalent_points(xc, f.map[i]);
      FunctorSearch s(b, xc);
      if (!s.run(std::move(domains)))
        return "f = " + point_list(a, f.map, xc) + " on A = " + to_string(a) + " has no extension along A ⊆ B = " +
               to_string(b);
    }
  }
  return std::nullopt;
}

CocompleteVerdict cocomplete_check(CategoryRef x, const PhiClass& phi, const CompletionCaps& caps,
                                   const InjectivityTests* tests) {
  CocompleteVerdict v;
  v.presheaves = presheaf_cat(x, phi, caps);
  const TFunctor y = yoneda_map(v.presheaves);
  v.left_inverse = find_left_inverse(v.presheaves, y).has_value();
  auto adj = find_left_adjoint(v.presheaves, y);
  v.left_adjoint = adj.has_value();
  v.sup = adj;
  v.certificate = colimit_certificate(v.presheaves);
  v.cocomplete = !v.certificate.has_value();
  InjectivityTests local;
  if (tests == nullptr) {
    local = injectivity_tests(x->theory_ref(), phi, caps.injective_size);
    tests = &local;
  }
  v.injectivity_witness = injectivity_counterexample(x, *tests, caps);
  v.injective = !v.injectivity_witness.has_value();
  return v;
}

bool cocontinuous_check(const TFunctor& f, const PhiClass& phi, const CompletionCaps& caps) {
  const PresheafCategory px = presheaf_cat(f.dom, phi, caps);
  const PresheafCategory py = presheaf_cat(f.cod, phi, caps);
  const TFunctor yx = yoneda_map(px), yy = yoneda_map(py);
  const auto sx = find_left_adjoint(px, yx);
  const auto sy = find_left_adjoint(py, yy);
  if (sx && sy) {
    const TFunctor pf = phi_functor(f, px, py);
    return functor_equiv(compose(f, *sx), compose(*sy, pf));
  }
  const TFunctor id = identity_functor(f.dom);
  for (std::size_t i = 0; i < px.size(); ++i) {
    const Distributor w = px.weight(i);
    auto g = colimit(w, id);
    if (!g) continue;
    auto h = colimit(w, f);
    if (!h || !functor_equiv(compose(f, *g), *h)) return false;
  }
  return true;
}

AuditReport kz_audit(CategoryRef x, const PhiClass& phi, const CompletionCaps& caps) {
  AuditReport r;
  r.subject = "KZ chain for " + phi.name() + " on " + to_string(*x);
  const PresheafCategory p1 = presheaf_cat(x, phi, caps);
  if (p1.size() > caps.kz_size)
    fail(ErrorKind::cap_exceeded, "kz_audit: |PhiX| = " + std::to_string(p1.size()) + " exceeds cap " +
                                      std::to_string(caps.kz_size));
  const TFunctor y1 = yoneda_map(p1);
  const PresheafCategory p2 = presheaf_cat(p1.category, phi, caps);
  const TFunctor y2 = yoneda_map(p2);
  const bool dense_y = phi_dense(phi, y1);
  r.record("y_X phi-dense", dense_y ? "" : "(y_X)_* = " + to_string(star(y1).matrix));
  if (!dense_y) return r;
  const TFunctor py = phi_functor(y1, p1, p2);
  const TFunctor yinv = inverse_image(y1, p1, p2);
  const TFunctor id1 = identity_functor(p1.category), id2 = identity_functor(p2.category);

  r.record("Phi y -| y^-1 unit", functor_leq(id1, compose(yinv, py)) ? "" : "1 </= y^-1 . Phi y = " + map_table(compose(yinv, py)));
  r.record("Phi y -| y^-1 counit", functor_leq(compose(py, yinv), id2) ? "" : "Phi y . y^-1 = " + map_table(compose(py, yinv)));
  r.record("Phi y -| y^-1 distributors", adjoint_pair(py, yinv) ? "" : "(Phi y)_* != (y^-1)^*");
  r.record("y^-1 -| y_PhiX unit", functor_leq(id2, compose(y2, yinv)) ? "" : "y_PhiX . y^-1 = " + map_table(compose(y2, yinv)));
  r.record("y^-1 -| y_PhiX counit", functor_leq(compose(yinv, y2), id1) ? "" : "y^-1 . y_PhiX = " + map_table(compose(yinv, y2)));
  r.record("y^-1 -| y_PhiX distributors", adjoint_pair(yinv, y2) ? "" : "(y^-1)_* != (y_PhiX)^*");
  r.record("y^-1 . y_PhiX = 1", compose(yinv, y2).map == id1.map ? "" : "y^-1 . y_PhiX = " + map_table(compose(yinv, y2)));
  const auto sup = find_left_adjoint(p2, y2);
  std::string w;
  if (!sup)
    w = "PhiX has no Sup";
  else if (sup->map != yinv.map)
    w = "Sup = " + map_table(*sup) + ", y^-1 = " + map_table(yinv);
  r.record("Sup_PhiX = y^-1", w);
  return r;
}

AuditReport split_fork_audit(const TFunctor& p1, const TFunctor& p2, const PhiClass& phi, const CompletionCaps& caps) {
  AuditReport r;
  r.subject = "split fork for " + phi.name() + " on R = " + to_string(*p1.dom) + " => X = " + to_string(*p1.cod);
  const Quotient qt = coequalizer_final(p1, p2);
  std::string w;
  for (const TFunctor* f : {&p1, &p2, &qt.q})
    if (w.empty() && !phi_dense(phi, *f))
      w = "surjective " + to_string(*f) + " has f_* = " + to_string(star(*f).matrix) + " outside " + phi.name();
  r.record("Ax4 on pi1, pi2, q", w);
  if (!w.empty()) return r;

  const PresheafCategory pr = presheaf_cat(p1.dom, phi, caps);
  const PresheafCategory px = presheaf_cat(p1.cod, phi, caps);
  const PresheafCategory pq = presheaf_cat(qt.category, phi, caps);
  const TFunctor f1 = phi_functor(p1, pr, px), f2 = phi_functor(p2, pr, px), fq = phi_functor(qt.q, px, pq);
  const TFunctor i1 = inverse_image(p1, pr, px), iq = inverse_image(qt.q, px, pq);
  auto eq = [&](const TFunctor& a, const TFunctor& b, const char* what) {
    return a.map == b.map ? std::string() : std::string(what) + ": " + map_table(a) + " vs " + map_table(b);
  };
  r.record("Phi q . Phi pi1 = Phi q . Phi pi2", eq(compose(fq, f1), compose(fq, f2), "fork"));
  r.record("Phi q . q^-1 = 1", eq(compose(fq, iq), identity_functor(pq.category), "Phi q . q^-1"));
  r.record("Phi pi1 . pi1^-1 = 1", eq(compose(f1, i1), identity_functor(px.category), "Phi pi1 . pi1^-1"));
  r.record("q^-1 . Phi q = Phi pi2 . pi1^-1", eq(compose(iq, fq), compose(f2, i1), "q^-1 . Phi q"));
  return r;
}

AuditReport kan_check(CategoryRef x, CategoryRef y, const PhiClass& phi, const CompletionCaps& caps) {
  AuditReport r;
  r.subject = "Kan equivalence for " + phi.name() + ", X = " + to_string(*x) + ", Y = " + to_string(*y);
  const PresheafCategory px = presheaf_cat(x, phi, caps);
  const TFunctor yx = yoneda_map(px);
  const PresheafCategory pp = presheaf_cat(px.category, phi, caps);
  const PresheafCategory py = presheaf_cat(y, phi, caps);
  const TFunctor yp = yoneda_map(pp), yy = yoneda_map(py);
  const auto sp = find_left_adjoint(pp, yp);
  const auto sy = find_left_adjoint(py, yy);
  r.record("Y cocomplete", sy ? "" : "Y has no Sup");
  if (!sy || !sp) {
    if (!sp) r.fail("PhiX cocomplete", "PhiX has no Sup");
    return r;
  }
  std::vector<TFunctor> cocont;
  for (const auto& f : enumerate_functors(px.category, y, caps.map_cap)) {
    const TFunctor pf = phi_functor(f, pp, py);
    if (functor_equiv(compose(f, *sp), compose(*sy, pf))) cocont.push_back(f);
  }
  const auto all = enumerate_functors(x, y, caps.map_cap);
  std::vector<Map> restricted;
  for (const auto& f : cocont) restricted.push_back(compose(f, yx).map);

  std::string w;
  for (const auto& g : all) {
    const bool hit = std::any_of(restricted.begin(), restricted.end(), [&](const Map& m) { return maps_equiv(*y, m, g.map); });
    if (!hit) {
      w = "no cocontinuous extension of " + to_string(g);
      break;
    }
  }
  r.record("surjective up to equivalence", w);
  w.clear();
  std::string wo;
  for (std::size_t i = 0; i < cocont.size(); ++i)
    for (std::size_t j = 0; j < cocont.size(); ++j) {
      const bool le = functor_leq(cocont[i], cocont[j]);
      const bool le_r = functor_leq_maps(*y, restricted[i], restricted[j]);
      if (le != le_r && wo.empty())
        wo = to_string(cocont[i]) + " vs " + to_string(cocont[j]) + ": order " + (le ? "holds" : "fails") +
             " before restriction, " + (le_r ? "holds" : "fails") + " after";
      if (maps_equiv(*y, restricted[i], restricted[j]) && !functor_equiv(cocont[i], cocont[j]) && w.empty())
        w = to_string(cocont[i]) + " and " + to_string(cocont[j]) + " restrict to equivalent functors";
    }
  r.record("injective up to equivalence", w);
  r.record("order preserved and reflected", wo);
  r.entries.back().note = std::to_string(cocont.size()) + " cocontinuous functors, " + std::to_string(all.size()) +
                          " functors X -> Y";
  return r;
}

std::optional<std::size_t> CovariantPresheafCategory::index_of(std::span<const Value> alpha) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (std::equal(elements[i].begin(), elements[i].end(), alpha.begin(), alpha.end())) return i;
  return std::nullopt;
}

Distributor CovariantPresheafCategory::presheaf(std::size_t i) const {
  return Distributor{generator, base, VMatrix(base->quantale_ref(), 1, base->size(), elements[i])};
}

CovariantPresheafCategory covariant_presheaf_cat(CategoryRef x, const CompletionCaps& caps) {
  const Theory& th = x->theory();
  if (!th.t1_is_singleton()) fail(ErrorKind::capability, "covariant presheaves need T1 = 1, which fails for " + th.name());
  if (!th.quantale().is_finite()) fail(ErrorKind::capability, "covariant presheaves need a finite quantale");
  CovariantPresheafCategory c;
  c.base = x;
  c.generator = generator_G(x->theory_ref());
  for (auto& a : all_functions(th.quantale(), x->size(), caps.covariant_cap)) {
    VMatrix m(x->quantale_ref(), 1, x->size(), a);
    if (!distributor_violation(m, *c.generator, *x)) c.elements.push_back(std::move(a));
  }
  const std::size_t n = c.elements.size();
  VMatrix s(x->quantale_ref(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const VMatrix a(x->quantale_ref(), 1, x->size(), c.elements[i]);
      const VMatrix b(x->quantale_ref(), 1, x->size(), c.elements[j]);
      s(i, j) = right_lifting(a, b)(0, 0);
    }
  std::vector<std::string> labels;
  for (const auto& a : c.elements) labels.push_back(function_label(th.quantale(), x->carrier().elements, a));
  FinSet carrier;
  carrier.name = "V^" + x->carrier().name;
  carrier.elements = std::move(labels);
  c.category = std::make_shared<const TCategory>(builtin_theory("identity", x->quantale_ref()), std::move(carrier), std::move(s));
  return c;
}

std::vector<Value> apply(const Distributor& phi, std::span<const Value> alpha) {
  const TCategory& x = *phi.dom;
  if (alpha.size() != x.size()) fail(ErrorKind::mismatch, "apply: presheaf has the wrong size");
  const VMatrix a(x.quantale_ref(), 1, x.size(), std::vector<Value>(alpha.begin(), alpha.end()));
  return kleisli(x.theory(), phi.matrix, a, 1).row(0);
}

}  // namespace tvcat
