#include "tvcat/tcategory.hpp"

#include <algorithm>

#include "tvcat/enumerate.hpp"
#include "tvcat/error.hpp"

namespace tvcat {

namespace {

const std::string& label_or(const std::vector<std::string>* labels, std::size_t i, std::string& buf) {
  if (labels != nullptr && i < labels->size()) return (*labels)[i];
  buf = "#" + std::to_string(i);
  return buf;
}

void require_same_theory(const Theory& a, const Theory& b, const char* op) {
  if (!a.same_as(b)) fail(ErrorKind::mismatch, std::string(op) + ": theories " + a.name() + " and " + b.name() + " differ");
}

std::optional<Violation> category_violation_labelled(const Theory& th, const VMatrix& a, std::size_t n,
                                                     const std::vector<std::string>* labels) {
  const std::size_t tn = th.t_size(n);
  if (a.rows() != tn || a.cols() != n)
    fail(ErrorKind::mismatch, "structure must be " + std::to_string(tn) + "x" + std::to_string(n) + ", got " +
                                  std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  const Quantale& q = th.quantale();
  std::string b1, b2, b3;
  for (std::size_t x = 0; x < n; ++x)
    if (!q.leq(q.unit(), a(th.unit(n, x), x)))
      return Violation{"reflexivity", "x=" + label_or(labels, x, b1) + ": a(e x, x) = " + q.format(a(th.unit(n, x), x))};
  const VMatrix ta = t_xi_extend(th, a);
  std::vector<std::string> tl, ttl;
  if (labels != nullptr) {
    tl = th.monad().labels(*labels);
    ttl = th.monad().labels(tl);
  }
  for (std::size_t W = 0; W < ta.rows(); ++W) {
    const std::size_t mw = th.mult(n, W);
    for (std::size_t u = 0; u < tn; ++u) {
      const Value& lhs = ta(W, u);
      if (lhs == q.bottom()) continue;
      for (std::size_t x = 0; x < n; ++x) {
        const Value v = q.tensor(lhs, a(u, x));
        if (!q.leq(v, a(mw, x)))
          return Violation{"transitivity", "X=" + label_or(labels ? &ttl : nullptr, W, b1) + ", x=" +
                                               label_or(labels ? &tl : nullptr, u, b2) + ", y=" +
                                               label_or(labels, x, b3) + ": " + q.format(lhs) + " (x) " +
                                               q.format(a(u, x)) + " > " + q.format(a(mw, x))};
      }
    }
  }
  return std::nullopt;
}

FinSet labelled_t(const Theory& th, const FinSet& x) {
  FinSet t;
  t.name = "T" + x.name;
  t.elements = th.monad().labels(x.elements);
  return t;
}

FinSet unnamed(std::vector<std::string> labels, std::string name = {}) {
  FinSet s;
  s.name = std::move(name);
  s.elements = std::move(labels);
  return s;
}

CategoryRef make(TheoryRef th, FinSet carrier, VMatrix a) {
  return std::make_shared<const TCategory>(std::move(th), std::move(carrier), std::move(a));
}

CategoryRef product_with(const TCategory& x, const TCategory& y, bool use_tensor) {
  require_same_theory(x.theory(), y.theory(), use_tensor ? "tensor_product" : "cartesian_product");
  const Theory& th = x.theory();
  const Quantale& q = th.quantale();
  const std::size_t nx = x.size(), ny = y.size(), n = nx * ny;
  Map p1(n), p2(n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) {
      p1[i * ny + j] = i;
      p2[i * ny + j] = j;
      labels[i * ny + j] = "(" + x.carrier().elements[i] + "," + y.carrier().elements[j] + ")";
    }
  const Map tp1 = th.arrow(p1, nx), tp2 = th.arrow(p2, ny);
  VMatrix c(th.quantale_ref(), th.t_size(n), n);
  for (std::size_t w = 0; w < c.rows(); ++w)
    for (std::size_t p = 0; p < n; ++p) {
      const Value& u = x(tp1[w], p1[p]);
      const Value& v = y(tp2[w], p2[p]);
      c(w, p) = use_tensor ? q.tensor(u, v) : q.meet(u, v);
    }
  return make(x.theory_ref(), unnamed(std::move(labels), x.carrier().name + (use_tensor ? "(x)" : "x") + y.carrier().name),
              std::move(c));
}

}  // namespace

TCategory::TCategory(TheoryRef theory, FinSet carrier, VMatrix structure)
    : theory_(std::move(theory)), carrier_(std::move(carrier)), structure_(std::move(structure)) {
  if (structure_.rows() != theory_->t_size(carrier_.size()) || structure_.cols() != carrier_.size())
    fail(ErrorKind::mismatch, "structure shape does not match TX x X");
}

FinSet TCategory::t_carrier() const { return labelled_t(*theory_, carrier_); }

bool operator==(const TCategory& a, const TCategory& b) {
  return a.theory().same_as(b.theory()) && a.carrier_.elements == b.carrier_.elements && a.structure_ == b.structure_;
}

VMatrix unit_structure(const Theory& th, std::size_t n) {
  VMatrix e(th.quantale_ref(), th.t_size(n), n);
  for (std::size_t x = 0; x < n; ++x) e(th.unit(n, x), x) = th.quantale().unit();
  return e;
}

VMatrix kleisli_lift(const Theory& th, const VMatrix& alpha, std::size_t x_size) {
  if (alpha.rows() != th.t_size(x_size)) fail(ErrorKind::mismatch, "kleisli: relation rows are not TX");
  const VMatrix ta = t_xi_extend(th, alpha);
  const Quantale& q = th.quantale();
  VMatrix out(alpha.quantale_ref(), alpha.rows(), ta.cols());
  for (std::size_t W = 0; W < ta.rows(); ++W) {
    const std::size_t u = th.mult(x_size, W);
    for (std::size_t v = 0; v < ta.cols(); ++v) out(u, v) = q.join(out(u, v), ta(W, v));
  }
  return out;
}

VMatrix kleisli(const Theory& th, const VMatrix& beta, const VMatrix& alpha, std::size_t x_size) {
  const VMatrix lift = kleisli_lift(th, alpha, x_size);
  if (beta.rows() != lift.cols()) fail(ErrorKind::mismatch, "kleisli: middle sets differ");
  return compose(beta, lift);
}

std::optional<Violation> category_violation(const Theory& th, const VMatrix& a, std::size_t n) {
  return category_violation_labelled(th, a, n, nullptr);
}

Checked<CategoryRef> check_category(TheoryRef th, FinSet carrier, VMatrix structure) {
  if (auto v = category_violation_labelled(*th, structure, carrier.size(), &carrier.elements)) return *v;
  return make(std::move(th), std::move(carrier), std::move(structure));
}

std::optional<Violation> functor_violation(const TCategory& x, const TCategory& y, const Map& f) {
  require_same_theory(x.theory(), y.theory(), "check_functor");
  if (f.size() != x.size()) fail(ErrorKind::mismatch, "functor map has the wrong domain size");
  for (std::size_t v : f)
    if (v >= y.size()) fail(ErrorKind::mismatch, "functor map leaves the codomain");
  const Theory& th = x.theory();
  const Quantale& q = th.quantale();
  const Map tf = th.arrow(f, y.size());
  const auto tl = x.t_carrier();
  for (std::size_t u = 0; u < x.t_size(); ++u)
    for (std::size_t p = 0; p < x.size(); ++p)
      if (!q.leq(x(u, p), y(tf[u], f[p])))
        return Violation{"functor", "x=" + tl.elements[u] + ", y=" + x.carrier().elements[p] + ": " +
                                        q.format(x(u, p)) + " > " + q.format(y(tf[u], f[p]))};
  return std::nullopt;
}

Checked<TFunctor> check_functor(Map f, CategoryRef dom, CategoryRef cod) {
  if (auto v = functor_violation(*dom, *cod, f)) return *v;
  return TFunctor{std::move(dom), std::move(cod), std::move(f)};
}

TFunctor identity_functor(CategoryRef x) {
  Map m(x->size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = i;
  return TFunctor{x, x, std::move(m)};
}

TFunctor compose(const TFunctor& g, const TFunctor& f) {
  if (f.cod->size() != g.dom->size()) fail(ErrorKind::mismatch, "functor composition: middle categories differ");
  Map m(f.map.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = g.map[f.map[i]];
  return TFunctor{f.dom, g.cod, std::move(m)};
}

CategoryRef discrete(TheoryRef th, FinSet s) {
  VMatrix e = unit_structure(*th, s.size());
  return make(std::move(th), std::move(s), std::move(e));
}

CategoryRef generator_G(TheoryRef th) { return discrete(std::move(th), FinSet::of("G", {"*"})); }

CategoryRef free_em(TheoryRef th, FinSet s) {
  const std::size_t n = s.size();
  FinSet ts = labelled_t(*th, s);
  VMatrix a = VMatrix::graph(th->quantale_ref(), th->mult_map(n), th->t_size(n));
  ts.name = "|" + s.name + "|";
  return make(std::move(th), std::move(ts), std::move(a));
}

CategoryRef v_as_category(TheoryRef th) {
  const Quantale& q = th->quantale();
  if (!q.is_finite()) fail(ErrorKind::capability, "v_as_category needs a finite quantale");
  const std::vector<Value> elems = q.elements();
  const std::vector<Value> xi = th->xi(elems);
  VMatrix a(th->quantale_ref(), xi.size(), elems.size());
  for (std::size_t t = 0; t < xi.size(); ++t)
    for (std::size_t v = 0; v < elems.size(); ++v) a(t, v) = q.hom(xi[t], elems[v]);
  return make(th, unnamed(q.labels(), "V"), std::move(a));
}

CategoryRef neutral_E(TheoryRef th) {
  VMatrix a = VMatrix::constant(th->quantale_ref(), th->t_size(1), 1, th->quantale().unit());
  return make(std::move(th), FinSet::of("E", {"*"}), std::move(a));
}

Distributor star(const TFunctor& f) {
  const TCategory& x = *f.dom;
  const TCategory& y = *f.cod;
  const Map tf = x.theory().arrow(f.map, y.size());
  VMatrix m(x.quantale_ref(), x.t_size(), y.size());
  for (std::size_t u = 0; u < x.t_size(); ++u)
    for (std::size_t q = 0; q < y.size(); ++q) m(u, q) = y(tf[u], q);
  return Distributor{f.dom, f.cod, std::move(m)};
}

Distributor costar(const TFunctor& f) {
  const TCategory& x = *f.dom;
  const TCategory& y = *f.cod;
  VMatrix m(x.quantale_ref(), y.t_size(), x.size());
  for (std::size_t u = 0; u < y.t_size(); ++u)
    for (std::size_t p = 0; p < x.size(); ++p) m(u, p) = y(u, f.map[p]);
  return Distributor{f.cod, f.dom, std::move(m)};
}

bool fully_faithful(const TFunctor& f) {
  const Theory& th = f.dom->theory();
  return kleisli(th, costar(f).matrix, star(f).matrix, f.dom->size()) == f.dom->structure();
}

bool dense(const TFunctor& f) {
  const Theory& th = f.dom->theory();
  return kleisli(th, star(f).matrix, costar(f).matrix, f.cod->size()) == f.cod->structure();
}

bool functor_leq(const TFunctor& f, const TFunctor& g) {
  if (f.map.size() != g.map.size() || f.cod->size() != g.cod->size())
    fail(ErrorKind::mismatch, "functor_leq: functors are not parallel");
  const TCategory& y = *f.cod;
  const Quantale& q = y.quantale();
  for (std::size_t p = 0; p < f.map.size(); ++p)
    for (std::size_t u = 0; u < y.t_size(); ++u)
      if (!q.leq(y(u, f.map[p]), y(u, g.map[p]))) return false;
  return true;
}

bool functor_equiv(const TFunctor& f, const TFunctor& g) {
  if (f.map.size() != g.map.size() || f.cod->size() != g.cod->size())
    fail(ErrorKind::mismatch, "functor_equiv: functors are not parallel");
  for (std::size_t p = 0; p < f.map.size(); ++p)
    if (!points_equiv(*f.cod, f.map[p], g.map[p])) return false;
  return true;
}

bool points_equiv(const TCategory& x, std::size_t p, std::size_t q) {
  if (p == q) return true;
  for (std::size_t u = 0; u < x.t_size(); ++u)
    if (x(u, p) != x(u, q)) return false;
  return true;
}

bool separated(const TCategory& x) {
  for (std::size_t p = 0; p < x.size(); ++p)
    for (std::size_t q = p + 1; q < x.size(); ++q)
      if (points_equiv(x, p, q)) return false;
  return true;
}

bool adjoint_pair(const TFunctor& f, const TFunctor& g) {
  if (f.cod->size() != g.dom->size() || g.cod->size() != f.dom->size())
    fail(ErrorKind::mismatch, "adjoint_pair: functors are not opposite");
  return star(f).matrix == costar(g).matrix;
}

CategoryRef tensor_product(const TCategory& x, const TCategory& y) { return product_with(x, y, true); }

CategoryRef cartesian_product(const TCategory& x, const TCategory& y) { return product_with(x, y, false); }

TFunctor projection(CategoryRef product, CategoryRef x, CategoryRef y, int which) {
  const std::size_t ny = y->size();
  if (product->size() != x->size() * ny) fail(ErrorKind::mismatch, "projection: carrier is not X x Y");
  Map m(product->size());
  for (std::size_t p = 0; p < m.size(); ++p) m[p] = which == 1 ? p / ny : p % ny;
  return TFunctor{std::move(product), which == 1 ? std::move(x) : std::move(y), std::move(m)};
}

Subcategory full_subcategory(CategoryRef x, const std::vector<std::size_t>& points) {
  const Theory& th = x->theory();
  const std::size_t n = points.size();
  std::vector<std::string> labels;
  for (std::size_t p : points) {
    if (p >= x->size()) fail(ErrorKind::mismatch, "full_subcategory: point out of range");
    labels.push_back(x->carrier().elements[p]);
  }
  const Map ti = th.arrow(points, x->size());
  VMatrix c(x->quantale_ref(), th.t_size(n), n);
  for (std::size_t u = 0; u < c.rows(); ++u)
    for (std::size_t s = 0; s < n; ++s) c(u, s) = (*x)(ti[u], points[s]);
  auto sub = make(x->theory_ref(), unnamed(std::move(labels), x->carrier().name), std::move(c));
  return Subcategory{sub, TFunctor{sub, std::move(x), points}};
}

std::string function_label(const Quantale& q, const std::vector<std::string>& base, std::span<const Value> phi) {
  std::string s = "{";
  bool first = true;
  const bool two = q.is_finite() && q.size() == 2;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (two) {
      if (phi[i] != q.top()) continue;
      s += (first ? "" : ",") + base[i];
    } else {
      s += (first ? "" : ",") + base[i] + ":" + q.format(phi[i]);
    }
    first = false;
  }
  return s + "}";
}

std::vector<std::vector<Value>> all_functions(const Quantale& q, std::size_t n, std::size_t cap) {
  if (!q.is_finite()) fail(ErrorKind::capability, "function spaces need a finite quantale");
  checked_power(q.size(), n, cap, "function space V^" + std::to_string(n));
  std::vector<std::vector<Value>> out;
  for_each_map(n, q.size(), [&](const Map& t) {
    std::vector<Value> phi(n);
    for (std::size_t i = 0; i < n; ++i) phi[i] = Value::index(t[i]);
    out.push_back(std::move(phi));
  });
  return out;
}

std::size_t function_index(const Quantale& q, std::span<const Value> phi) {
  std::size_t r = 0;
  for (const Value& v : phi) r = r * q.size() + v.index();
  return r;
}

CategoryRef exponential_on(const TCategory& x, const std::vector<std::vector<Value>>& functions) {
  const Theory& th = x.theory();
  const Quantale& q = th.quantale();
  const std::size_t tn = x.t_size(), nf = functions.size(), ns = tn * nf;
  std::vector<Value> ev(ns);
  Map p1(ns), p2(ns);
  for (std::size_t u = 0; u < tn; ++u)
    for (std::size_t j = 0; j < nf; ++j) {
      if (functions[j].size() != tn) fail(ErrorKind::mismatch, "exponential: function is not defined on TX");
      ev[u * nf + j] = functions[j][u];
      p1[u * nf + j] = u;
      p2[u * nf + j] = j;
    }
  const std::vector<Value> xev = th.xi(ev);
  const Map tp1 = th.arrow(p1, tn), tp2 = th.arrow(p2, nf);
  VMatrix s = VMatrix::constant(x.quantale_ref(), th.t_size(nf), nf, q.top());
  for (std::size_t w = 0; w < xev.size(); ++w) {
    const std::size_t at = th.mult(x.size(), tp1[w]);
    const std::size_t p = tp2[w];
    for (std::size_t j = 0; j < nf; ++j) s(p, j) = q.meet(s(p, j), q.hom(xev[w], functions[j][at]));
  }
  const std::vector<std::string> tl = th.monad().labels(x.carrier().elements);
  std::vector<std::string> labels;
  for (const auto& phi : functions) labels.push_back(function_label(q, tl, phi));
  return make(x.theory_ref(), unnamed(std::move(labels), "V^|" + x.carrier().name + "|"), std::move(s));
}

CategoryRef exponential_VX(const TCategory& x, std::size_t cap) {
  return exponential_on(x, all_functions(x.quantale(), x.t_size(), cap));
}

CategoryRef forget_to_v(const TCategory& x) {
  TheoryRef id = builtin_theory("identity", x.quantale_ref());
  VMatrix r(x.quantale_ref(), x.size(), x.size());
  for (std::size_t p = 0; p < x.size(); ++p)
    for (std::size_t q = 0; q < x.size(); ++q) r(p, q) = x.point(p, q);
  return make(std::move(id), x.carrier(), std::move(r));
}

CategoryRef lift_A(TheoryRef th, const TCategory& vcat) {
  const std::size_t n = vcat.size();
  if (vcat.t_size() != n) fail(ErrorKind::mismatch, "lift_A expects a V-category");
  if (!(vcat.quantale() == th->quantale())) fail(ErrorKind::mismatch, "lift_A: quantales differ");
  const VMatrix tr = t_xi_extend(*th, vcat.structure());
  VMatrix a(th->quantale_ref(), th->t_size(n), n);
  for (std::size_t u = 0; u < a.rows(); ++u)
    for (std::size_t x = 0; x < n; ++x) a(u, x) = tr(u, th->unit(n, x));
  return make(std::move(th), vcat.carrier(), std::move(a));
}

CategoryRef functor_M(const TCategory& x) {
  TheoryRef id = builtin_theory("identity", x.quantale_ref());
  VMatrix r = kleisli_lift(x.theory(), x.structure(), x.size());
  return make(std::move(id), x.t_carrier(), std::move(r));
}

CategoryRef dual_op(const TCategory& x) {
  CategoryRef m = functor_M(x);
  const TCategory mop(m->theory_ref(), m->carrier(), involute(m->structure()));
  CategoryRef d = lift_A(x.theory_ref(), mop);
  FinSet c = d->carrier();
  c.name = x.carrier().name + "^op";
  return make(x.theory_ref(), std::move(c), d->structure());
}

Quotient coequalizer_final(const TFunctor& p1, const TFunctor& p2) {
  if (p1.dom.get() != p2.dom.get() && !(*p1.dom == *p2.dom))
    fail(ErrorKind::mismatch, "coequalizer: functors have different domains");
  const TCategory& x = *p1.cod;
  const Theory& th = x.theory();
  const Quantale& q = th.quantale();
  const std::size_t n = x.size();
  std::vector<char> rel(n * n, 0);
  for (std::size_t r = 0; r < p1.map.size(); ++r) rel[p1.map[r] * n + p2.map[r]] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (!rel[i * n + i]) fail(ErrorKind::precondition, "coequalizer: relation is not reflexive at " + x.carrier().elements[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (rel[i * n + j] && !rel[j * n + i]) fail(ErrorKind::precondition, "coequalizer: relation is not symmetric");
      for (std::size_t k = 0; k < n; ++k)
        if (rel[i * n + j] && rel[j * n + k] && !rel[i * n + k])
          fail(ErrorKind::precondition, "coequalizer: relation is not transitive");
    }
  }
  Map cls(n, n);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < n; ++i) {
    if (cls[i] != n) continue;
    classes.emplace_back();
    for (std::size_t j = i; j < n; ++j)
      if (rel[i * n + j]) {
        cls[j] = classes.size() - 1;
        classes.back().push_back(j);
      }
  }
  std::vector<std::string> labels;
  for (const auto& c : classes) {
    if (c.size() == 1) {
      labels.push_back(x.carrier().elements[c[0]]);
      continue;
    }
    std::string s = "{";
    for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + x.carrier().elements[c[k]];
    labels.push_back(s + "}");
  }
  const std::size_t nq = classes.size();
  const Map tq = th.arrow(cls, nq);
  VMatrix c(x.quantale_ref(), th.t_size(nq), nq);
  for (std::size_t u = 0; u < x.t_size(); ++u)
    for (std::size_t p = 0; p < n; ++p) c(tq[u], cls[p]) = q.join(c(tq[u], cls[p]), x(u, p));
  const VMatrix e = unit_structure(th, nq);
  for (int iter = 0;; ++iter) {
    if (iter > 10000) fail(ErrorKind::precondition, "coequalizer: structure iteration did not stabilise");
    VMatrix next = join_matrix(join_matrix(c, kleisli(th, c, c, nq)), e);
    if (next == c) break;
    c = std::move(next);
  }
  auto qc = make(x.theory_ref(), unnamed(std::move(labels), x.carrier().name + "/~"), std::move(c));
  return Quotient{qc, TFunctor{p1.cod, qc, cls}};
}

CategoryRef em_to_cat(TheoryRef th, FinSet x, const Map& alpha) {
  const std::size_t n = x.size();
  if (alpha.size() != th->t_size(n)) fail(ErrorKind::mismatch, "algebra map must be defined on TX");
  for (std::size_t v : alpha)
    if (v >= n) fail(ErrorKind::mismatch, "algebra map leaves X");
  for (std::size_t p = 0; p < n; ++p)
    if (alpha[th->unit(n, p)] != p)
      fail(ErrorKind::validation, "algebra unit law fails at " + x.elements[p]);
  const Map ta = th->arrow(alpha, n);
  for (std::size_t W = 0; W < ta.size(); ++W)
    if (alpha[ta[W]] != alpha[th->mult(n, W)])
      fail(ErrorKind::validation, "algebra associativity fails at TTX index " + std::to_string(W));
  VMatrix a = VMatrix::graph(th->quantale_ref(), alpha, n);
  return make(std::move(th), std::move(x), std::move(a));
}

std::vector<CategoryRef> enumerate_categories(TheoryRef th, std::size_t n, std::size_t cap) {
  const Quantale& q = th->quantale();
  if (!q.is_finite()) fail(ErrorKind::capability, "category enumeration needs a finite quantale");
  const std::size_t tn = th->t_size(n);
  std::vector<std::size_t> all, above_k;
  for (std::size_t v = 0; v < q.size(); ++v) {
    all.push_back(v);
    if (q.leq(q.unit(), Value::index(v))) above_k.push_back(v);
  }
  std::vector<std::vector<std::size_t>> choices(tn * n, all);
  std::size_t total = 1;
  for (std::size_t x = 0; x < n; ++x) choices[th->unit(n, x) * n + x] = above_k;
  for (const auto& c : choices) {
    if (total > cap / std::max<std::size_t>(c.size(), 1))
      fail(ErrorKind::cap_exceeded, "category enumeration on " + std::to_string(n) + " points exceeds cap " +
                                        std::to_string(cap));
    total *= c.size();
  }
  std::vector<CategoryRef> out;
  const FinSet carrier = FinSet::range(n);
  for_each_tuple(std::span<const std::vector<std::size_t>>(choices), [&](const Map& t) {
    std::vector<Value> e(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) e[i] = Value::index(t[i]);
    VMatrix a(th->quantale_ref(), tn, n, std::move(e));
    if (!category_violation(*th, a, n)) out.push_back(make(th, carrier, std::move(a)));
  });
  return out;
}

VMatrix permute_structure(const Theory& th, const VMatrix& a, const Map& sigma) {
  const std::size_t n = sigma.size();
  const Map ts = th.arrow(sigma, n);
  VMatrix b(a.quantale_ref(), a.rows(), a.cols());
  for (std::size_t u = 0; u < a.rows(); ++u)
    for (std::size_t x = 0; x < n; ++x) b(ts[u], sigma[x]) = a(u, x);
  return b;
}

bool structure_isomorphic(const TCategory& x, const TCategory& y) {
  if (x.size() != y.size() || !x.theory().same_as(y.theory())) return false;
  for (const Map& s : permutations(x.size()))
    if (permute_structure(x.theory(), x.structure(), s) == y.structure()) return true;
  return false;
}

std::vector<CategoryRef> category_universe(TheoryRef th, std::size_t max_size, std::size_t cap) {
  std::vector<CategoryRef> out;
  for (std::size_t n = 0; n <= max_size; ++n) {
    const auto perms = permutations(n);
    for (const auto& c : enumerate_categories(th, n, cap)) {
      const auto own = c->structure().entries();
      bool minimal = true;
      for (const Map& s : perms) {
        const VMatrix p = permute_structure(*th, c->structure(), s);
        const auto pe = p.entries();
        if (std::lexicographical_compare(pe.begin(), pe.end(), own.begin(), own.end())) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.push_back(c);
    }
  }
  return out;
}

std::vector<TFunctor> enumerate_functors(CategoryRef x, CategoryRef y, std::size_t cap) {
  require_same_theory(x->theory(), y->theory(), "enumerate_functors");
  checked_power(y->size(), x->size(), cap, "functor enumeration");
  const Quantale& q = x->quantale();
  const std::size_t nx = x->size(), ny = y->size();
  std::vector<TFunctor> out;
  Map f(nx);
  // pairwise necessary condition a(e p, p') <= b(e f p, f p') prunes the walk
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == nx) {
      if (!functor_violation(*x, *y, f)) out.push_back(TFunctor{x, y, f});
      return;
    }
    for (std::size_t v = 0; v < ny; ++v) {
      f[i] = v;
      bool ok = true;
      for (std::size_t j = 0; j <= i && ok; ++j)
        ok = q.leq(x->point(i, j), y->point(v, f[j])) && q.leq(x->point(j, i), y->point(f[j], v));
      if (ok) self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::string to_string(const TCategory& x) {
  std::string s = x.carrier().name.empty() ? "category" : x.carrier().name;
  s += " [";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + x.carrier().elements[i];
  return s + "] " + to_string(x.structure());
}

std::string to_string(const TFunctor& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.map.size(); ++i)
    s += (i ? ", " : "") + f.dom->carrier().elements[i] + "->" + f.cod->carrier().elements[f.map[i]];
  return s + "}";
}

}  // namespace tvcat
