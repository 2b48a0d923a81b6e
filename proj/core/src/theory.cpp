#include "tvcat/theory.hpp"

#include <random>

#include "tvcat/enumerate.hpp"
#include "tvcat/error.hpp"

namespace tvcat {

namespace {

class IdentityMonad final : public Monad {
 public:
  std::string_view name() const noexcept override { return "identity"; }
  std::size_t size(std::size_t n) const override { return n; }
  std::size_t unit(std::size_t, std::size_t x) const override { return x; }
  std::size_t mult(std::size_t, std::size_t w) const override { return w; }
  Map arrow(const Map& f, std::size_t) const override { return f; }
  std::vector<std::string> labels(const std::vector<std::string>& base) const override { return base; }
};

class PrincipalUltrafilterMonad final : public Monad {
 public:
  std::string_view name() const noexcept override { return "ultrafilter_principal"; }
  std::size_t size(std::size_t n) const override { return n; }
  std::size_t unit(std::size_t n, std::size_t x) const override { return n - 1 - x; }
  // index w of TTX is the principal ultrafilter on the point n-1-w of TX
  std::size_t mult(std::size_t n, std::size_t w) const override { return n - 1 - w; }
  Map arrow(const Map& f, std::size_t cod_size) const override {
    const std::size_t n = f.size();
    Map g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = cod_size - 1 - f[n - 1 - i];
    return g;
  }
  std::vector<std::string> labels(const std::vector<std::string>& base) const override {
    std::vector<std::string> out;
    for (std::size_t i = base.size(); i > 0; --i) out.push_back("\xE2\x86\x91" + base[i - 1]);
    return out;
  }
};

class ExceptionMonad final : public Monad {
 public:
  std::string_view name() const noexcept override { return "exception_candidate"; }
  std::size_t size(std::size_t n) const override { return n + 1; }
  std::size_t unit(std::size_t, std::size_t x) const override { return x; }
  // TTX = (X+1)+1: indices 0..n are inl of TX, n+1 is the outer ★
  std::size_t mult(std::size_t n, std::size_t w) const override { return w <= n ? w : n; }
  Map arrow(const Map& f, std::size_t cod_size) const override {
    Map g(f.begin(), f.end());
    g.push_back(cod_size);
    return g;
  }
  std::vector<std::string> labels(const std::vector<std::string>& base) const override {
    std::vector<std::string> out = base;
    out.push_back("\xE2\x98\x85");
    return out;
  }
};

std::vector<Value> evaluate_xi(const Quantale&, const Monad& monad, std::span<const Value> phi) {
  // TS ≅ S; ξ acts on a principal ultrafilter (or on x itself) by evaluation
  const std::size_t n = phi.size();
  std::vector<Value> out(monad.size(n));
  for (std::size_t s = 0; s < n; ++s) out[monad.unit(n, s)] = phi[s];
  return out;
}

std::vector<Value> exception_xi(const Quantale& q, const Monad&, std::span<const Value> phi) {
  std::vector<Value> out(phi.begin(), phi.end());
  out.push_back(q.unit());
  return out;
}

std::string map_str(const Map& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + "]";
}

std::string values_str(const Quantale& q, std::span<const Value> v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + q.format(v[i]);
  return s + "]";
}

Map compose_maps(const Map& g, const Map& f) {
  Map h(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) h[i] = g[f[i]];
  return h;
}

Map identity_map(std::size_t n) {
  Map m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return m;
}

// V-valued functions on a set of size n used by the algebra laws.
std::vector<std::vector<Value>> value_functions(const Quantale& q, std::size_t n, std::size_t samples,
                                                std::mt19937_64& rng, bool& sampled) {
  std::vector<std::vector<Value>> out;
  std::vector<Value> pool = q.is_finite() ? q.elements() : default_lawvere_sample();
  std::size_t total = 1;
  bool small = true;
  for (std::size_t i = 0; i < n && small; ++i) {
    total *= pool.size();
    if (total > 729) small = false;
  }
  if (small) {
    for_each_map(n, pool.size(), [&](const Map& t) {
      std::vector<Value> phi;
      for (std::size_t i : t) phi.push_back(pool[i]);
      out.push_back(std::move(phi));
    });
    return out;
  }
  sampled = true;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (std::size_t r = 0; r < samples; ++r) {
    std::vector<Value> phi;
    for (std::size_t i = 0; i < n; ++i) phi.push_back(pool[pick(rng)]);
    out.push_back(std::move(phi));
  }
  return out;
}

std::vector<VMatrix> matrices(const QuantaleRef& q, std::size_t rows, std::size_t cols,
                              const TheoryAuditOptions& opt, std::mt19937_64& rng, bool& sampled) {
  std::vector<VMatrix> out;
  std::vector<Value> pool = q->is_finite() ? q->elements() : default_lawvere_sample();
  std::size_t total = 1;
  bool small = true;
  for (std::size_t i = 0; i < rows * cols && small; ++i) {
    total *= pool.size();
    if (total > opt.matrix_limit) small = false;
  }
  if (small) {
    for_each_map(rows * cols, pool.size(), [&](const Map& t) {
      std::vector<Value> e;
      for (std::size_t i : t) e.push_back(pool[i]);
      out.emplace_back(q, rows, cols, std::move(e));
    });
    return out;
  }
  sampled = true;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (std::size_t r = 0; r < opt.samples; ++r) {
    std::vector<Value> e;
    for (std::size_t i = 0; i < rows * cols; ++i) e.push_back(pool[pick(rng)]);
    out.emplace_back(q, rows, cols, std::move(e));
  }
  return out;
}

}  // namespace

std::shared_ptr<const Monad> identity_monad() {
  static const auto m = std::make_shared<const IdentityMonad>();
  return m;
}

std::shared_ptr<const Monad> principal_ultrafilter_monad() {
  static const auto m = std::make_shared<const PrincipalUltrafilterMonad>();
  return m;
}

std::shared_ptr<const Monad> exception_monad() {
  static const auto m = std::make_shared<const ExceptionMonad>();
  return m;
}

Theory::Theory(std::string name, QuantaleRef q, std::shared_ptr<const Monad> monad, Algebra xi, bool certified)
    : name_(std::move(name)), q_(std::move(q)), monad_(std::move(monad)), xi_(std::move(xi)), certified_(certified) {}

Map Theory::unit_map(std::size_t n) const {
  Map e(n);
  for (std::size_t x = 0; x < n; ++x) e[x] = unit(n, x);
  return e;
}

Map Theory::mult_map(std::size_t n) const {
  Map m(t_size(t_size(n)));
  for (std::size_t w = 0; w < m.size(); ++w) m[w] = mult(n, w);
  return m;
}

void Theory::require_certified(std::string_view operation) const {
  if (!certified_)
    fail(ErrorKind::capability, std::string(operation) + ": theory " + name_ +
                                    " is not certified; run audit_theory and certify it first");
}

std::shared_ptr<const Theory> Theory::with_certification(bool certified) const {
  return std::make_shared<const Theory>(name_, q_, monad_, xi_, certified);
}

bool Theory::same_as(const Theory& other) const noexcept {
  if (this == &other) return true;
  return monad_->name() == other.monad_->name() && name_ == other.name_ &&
         (q_ == other.q_ || *q_ == *other.q_);
}

TheoryRef builtin_theory(std::string_view name, QuantaleRef q) {
  if (name == "identity")
    return std::make_shared<const Theory>("identity", q, identity_monad(), evaluate_xi, true);
  if (name == "ultrafilter_principal") {
    if (q->name() != "bool2" && q->name() != "lawvere")
      fail(ErrorKind::capability, "ultrafilter_principal is defined for bool2 and lawvere, not " + q->name());
    return std::make_shared<const Theory>("ultrafilter_principal", q, principal_ultrafilter_monad(), evaluate_xi,
                                          true);
  }
  if (name == "exception_candidate")
    return std::make_shared<const Theory>("exception_candidate", q, exception_monad(), exception_xi, false);
  if (name == "word")
    fail(ErrorKind::capability,
         "the word theory is not supported: LX is infinite on every nonempty finite set and truncating word "
         "length breaks the monad laws");
  fail(ErrorKind::unknown_name, "unknown theory '" + std::string(name) + "'");
}

VMatrix t_xi_extend(const Theory& th, const VMatrix& r) {
  if (r.quantale_ref() != th.quantale_ref() && !(r.quantale() == th.quantale()))
    fail(ErrorKind::mismatch, "t_xi_extend: matrix over " + r.quantale().name() + ", theory over " +
                                  th.quantale().name());
  const std::size_t nx = r.rows(), ny = r.cols(), n = nx * ny;
  Map p1(n), p2(n);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y) {
      p1[x * ny + y] = x;
      p2[x * ny + y] = y;
    }
  const Map tp1 = th.arrow(p1, nx), tp2 = th.arrow(p2, ny);
  const std::vector<Value> values = th.xi(r.entries());
  const Quantale& q = th.quantale();
  VMatrix out(r.quantale_ref(), th.t_size(nx), th.t_size(ny));
  for (std::size_t w = 0; w < values.size(); ++w) out(tp1[w], tp2[w]) = q.join(out(tp1[w], tp2[w]), values[w]);
  return out;
}

AuditReport audit_theory(const Theory& th, std::size_t size_cap, const TheoryAuditOptions& opt) {
  if (size_cap < 1) fail(ErrorKind::precondition, "audit_theory: size_cap must be >= 1");
  const Quantale& q = th.quantale();
  AuditReport report;
  report.subject = "theory " + th.name() + " over " + q.name() + ", sets of size <= " + std::to_string(size_cap);
  std::mt19937_64 rng(opt.seed);
  std::string w;
  auto first = [&](const std::string& s) {
    if (w.empty()) w = s;
  };

  // functor laws
  w.clear();
  for (std::size_t n = 0; n <= size_cap; ++n)
    if (th.arrow(identity_map(n), n) != identity_map(th.t_size(n))) first("T(1) != 1 on |X|=" + std::to_string(n));
  report.record("functor identity", w);

  w.clear();
  for (std::size_t a = 0; a <= size_cap && w.empty(); ++a)
    for (std::size_t b = 0; b <= size_cap && w.empty(); ++b)
      for (std::size_t c = 0; c <= size_cap && w.empty(); ++c)
        for_each_map(a, b, [&](const Map& f) {
          const Map tf = th.arrow(f, b);
          return for_each_map(b, c, [&](const Map& g) {
            if (th.arrow(compose_maps(g, f), c) != compose_maps(th.arrow(g, c), tf)) {
              first("f=" + map_str(f) + ", g=" + map_str(g));
              return false;
            }
            return true;
          });
        });
  report.record("functor composition", w);

  // unit and multiplication are natural
  w.clear();
  for (std::size_t a = 0; a <= size_cap && w.empty(); ++a)
    for (std::size_t b = 0; b <= size_cap && w.empty(); ++b)
      for_each_map(a, b, [&](const Map& f) {
        const Map tf = th.arrow(f, b);
        for (std::size_t x = 0; x < a; ++x)
          if (tf[th.unit(a, x)] != th.unit(b, f[x])) {
            first("f=" + map_str(f) + ", x=" + std::to_string(x));
            return false;
          }
        return true;
      });
  report.record("unit naturality", w);

  w.clear();
  for (std::size_t a = 0; a <= size_cap && w.empty(); ++a)
    for (std::size_t b = 0; b <= size_cap && w.empty(); ++b)
      for_each_map(a, b, [&](const Map& f) {
        const Map tf = th.arrow(f, b);
        const Map ttf = th.arrow(tf, th.t_size(b));
        for (std::size_t W = 0; W < ttf.size(); ++W)
          if (tf[th.mult(a, W)] != th.mult(b, ttf[W])) {
            first("f=" + map_str(f) + ", TTX index " + std::to_string(W));
            return false;
          }
        return true;
      });
  report.record("mult naturality", w);

  // monad laws
  {
    std::string lu, ru, as;
    for (std::size_t n = 0; n <= size_cap; ++n) {
      const std::size_t tn = th.t_size(n);
      const Map te = th.arrow(th.unit_map(n), tn);
      for (std::size_t x = 0; x < tn; ++x) {
        if (th.mult(n, th.unit(tn, x)) != x && lu.empty()) lu = "|X|=" + std::to_string(n) + ", TX index " + std::to_string(x);
        if (th.mult(n, te[x]) != x && ru.empty()) ru = "|X|=" + std::to_string(n) + ", TX index " + std::to_string(x);
      }
      const std::size_t ttn = th.t_size(tn);
      const Map tm = th.arrow(th.mult_map(n), tn);
      for (std::size_t W = 0; W < th.t_size(ttn); ++W)
        if (th.mult(n, th.mult(tn, W)) != th.mult(n, tm[W]) && as.empty())
          as = "|X|=" + std::to_string(n) + ", TTTX index " + std::to_string(W);
    }
    report.record("monad left unit", lu);
    report.record("monad right unit", ru);
    report.record("monad associativity", as);
  }

  // algebra laws for ξ, through ξ_S(φ) = ξ·Tφ
  bool sampled = false;
  {
    std::string unit_w, assoc_w, mono_w, tensor_w;
    for (std::size_t n = 0; n <= size_cap; ++n) {
      const auto phis = value_functions(q, n, opt.samples, rng, sampled);
      for (const auto& phi : phis) {
        const std::vector<Value> xphi = th.xi(phi);
        for (std::size_t s = 0; s < n; ++s)
          if (xphi[th.unit(n, s)] != phi[s] && unit_w.empty()) unit_w = "phi=" + values_str(q, phi) + ", s=" + std::to_string(s);
        const std::vector<Value> xxphi = th.xi(xphi);
        for (std::size_t W = 0; W < xxphi.size(); ++W)
          if (xphi[th.mult(n, W)] != xxphi[W] && assoc_w.empty())
            assoc_w = "phi=" + values_str(q, phi) + ", TTS index " + std::to_string(W);
      }
      // monotonicity and tensor compatibility on pairs
      std::uniform_int_distribution<std::size_t> pick(0, phis.empty() ? 0 : phis.size() - 1);
      const std::size_t pairs = std::min<std::size_t>(phis.size() * phis.size(), 4096);
      for (std::size_t r = 0; r < pairs && !phis.empty(); ++r) {
        const auto& phi = phis.size() * phis.size() <= 4096 ? phis[r / phis.size()] : phis[pick(rng)];
        const auto& psi = phis.size() * phis.size() <= 4096 ? phis[r % phis.size()] : phis[pick(rng)];
        const auto xphi = th.xi(phi), xpsi = th.xi(psi);
        bool le = true;
        std::vector<Value> prod(n);
        for (std::size_t s = 0; s < n; ++s) {
          le = le && q.leq(phi[s], psi[s]);
          prod[s] = q.tensor(phi[s], psi[s]);
        }
        if (le)
          for (std::size_t u = 0; u < xphi.size(); ++u)
            if (!q.leq(xphi[u], xpsi[u]) && mono_w.empty())
              mono_w = "phi=" + values_str(q, phi) + " <= psi=" + values_str(q, psi);
        const auto xprod = th.xi(prod);
        for (std::size_t u = 0; u < xprod.size(); ++u)
          if (xprod[u] != q.tensor(xphi[u], xpsi[u]) && tensor_w.empty())
            tensor_w = "phi=" + values_str(q, phi) + ", psi=" + values_str(q, psi) + ", TS index " + std::to_string(u);
      }
    }
    // literal form of the tensor diagram on T(V x V) for small finite V
    if (q.is_finite() && q.size() * q.size() <= 16) {
      const std::size_t v = q.size();
      std::vector<Value> p1(v * v), p2(v * v), prod(v * v);
      for (std::size_t a = 0; a < v; ++a)
        for (std::size_t b = 0; b < v; ++b) {
          p1[a * v + b] = Value::index(a);
          p2[a * v + b] = Value::index(b);
          prod[a * v + b] = q.tensor(Value::index(a), Value::index(b));
        }
      const auto x1 = th.xi(p1), x2 = th.xi(p2), xp = th.xi(prod);
      for (std::size_t u = 0; u < xp.size(); ++u)
        if (xp[u] != q.tensor(x1[u], x2[u]) && tensor_w.empty()) tensor_w = "T(VxV) index " + std::to_string(u);
    }
    report.record("algebra unit", unit_w);
    report.record("algebra associativity", assoc_w);
    report.record("xi monotone", mono_w);
    report.record("tensor diagram", tensor_w);
  }

  w.clear();
  {
    const std::vector<Value> k1 = {q.unit()};
    const auto xk = th.xi(k1);
    for (std::size_t u = 0; u < xk.size(); ++u)
      if (xk[u] != q.unit()) first("T1 index " + std::to_string(u) + " maps to " + q.format(xk[u]));
  }
  report.record("unit diagram", w);

  // ξ_X is natural P -> PT
  w.clear();
  for (std::size_t a = 0; a <= size_cap && w.empty(); ++a)
    for (std::size_t b = 0; b <= size_cap && w.empty(); ++b) {
      const auto phis = value_functions(q, a, opt.samples, rng, sampled);
      for_each_map(a, b, [&](const Map& f) {
        const Map tf = th.arrow(f, b);
        for (const auto& phi : phis) {
          std::vector<Value> pushed(b, q.bottom());
          for (std::size_t x = 0; x < a; ++x) pushed[f[x]] = q.join(pushed[f[x]], phi[x]);
          const auto lhs = th.xi(pushed);
          const auto xphi = th.xi(phi);
          std::vector<Value> rhs(th.t_size(b), q.bottom());
          for (std::size_t u = 0; u < xphi.size(); ++u) rhs[tf[u]] = q.join(rhs[tf[u]], xphi[u]);
          if (lhs != rhs) {
            first("f=" + map_str(f) + ", phi=" + values_str(q, phi));
            return false;
          }
        }
        return true;
      });
    }
  report.record("xi naturality", w);

  // BC: T sends pullbacks to weak pullbacks
  w.clear();
  for (std::size_t a = 0; a <= size_cap && w.empty(); ++a)
    for (std::size_t b = 0; b <= size_cap && w.empty(); ++b)
      for (std::size_t c = 0; c <= size_cap && w.empty(); ++c)
        for_each_map(a, c, [&](const Map& f) {
          const Map tf = th.arrow(f, c);
          return for_each_map(b, c, [&](const Map& g) {
            const Map tg = th.arrow(g, c);
            Map p1, p2;
            for (std::size_t x = 0; x < a; ++x)
              for (std::size_t y = 0; y < b; ++y)
                if (f[x] == g[y]) {
                  p1.push_back(x);
                  p2.push_back(y);
                }
            const Map tp1 = th.arrow(p1, a), tp2 = th.arrow(p2, b);
            std::vector<char> hit(th.t_size(a) * th.t_size(b), 0);
            for (std::size_t u = 0; u < tp1.size(); ++u) hit[tp1[u] * th.t_size(b) + tp2[u]] = 1;
            for (std::size_t u = 0; u < tf.size(); ++u)
              for (std::size_t v = 0; v < tg.size(); ++v)
                if (tf[u] == tg[v] && !hit[u * th.t_size(b) + v]) {
                  first("f=" + map_str(f) + ", g=" + map_str(g) + ": pair (" + std::to_string(u) + "," +
                        std::to_string(v) + ") has no lift");
                  return false;
                }
            return true;
          });
        });
  report.record("BC pullbacks", w);

  w.clear();
  for (std::size_t a = 0; a <= size_cap && w.empty(); ++a)
    for (std::size_t b = 0; b <= size_cap && w.empty(); ++b)
      for_each_map(a, b, [&](const Map& f) {
        const Map tf = th.arrow(f, b);
        const Map ttf = th.arrow(tf, th.t_size(b));
        const std::size_t ta = th.t_size(a), ttb = th.t_size(th.t_size(b));
        std::vector<char> hit(ta * ttb, 0);
        for (std::size_t W = 0; W < ttf.size(); ++W) hit[th.mult(a, W) * ttb + ttf[W]] = 1;
        for (std::size_t u = 0; u < ta; ++u)
          for (std::size_t V = 0; V < ttb; ++V)
            if (tf[u] == th.mult(b, V) && !hit[u * ttb + V]) {
              first("f=" + map_str(f) + ": (TX " + std::to_string(u) + ", TTY " + std::to_string(V) + ") has no lift");
              return false;
            }
        return true;
      });
  report.record("BC mult squares", w);

  // consequences for T_ξ on enumerated matrices
  {
    std::string inv_w, lax_w, mono_w, nat_w, graph_w;
    const std::size_t side = std::min(opt.matrix_side, size_cap);
    for (std::size_t a = 0; a <= side; ++a)
      for (std::size_t b = 0; b <= side; ++b) {
        const auto ms = matrices(th.quantale_ref(), a, b, opt, rng, sampled);
        const VMatrix ex = VMatrix::graph(th.quantale_ref(), th.unit_map(a), th.t_size(a));
        const VMatrix ey = VMatrix::graph(th.quantale_ref(), th.unit_map(b), th.t_size(b));
        const VMatrix mx = VMatrix::graph(th.quantale_ref(), th.mult_map(a), th.t_size(a));
        const VMatrix my = VMatrix::graph(th.quantale_ref(), th.mult_map(b), th.t_size(b));
        std::vector<VMatrix> ext;
        ext.reserve(ms.size());
        for (const auto& r : ms) {
          const VMatrix tr = t_xi_extend(th, r);
          if (t_xi_extend(th, involute(r)) != involute(tr) && inv_w.empty()) inv_w = "r=" + to_string(r);
          if (!leq_matrix(compose(ey, r), compose(tr, ex)) && lax_w.empty()) lax_w = "r=" + to_string(r);
          if (compose(tr, mx) != compose(my, t_xi_extend(th, tr)) && nat_w.empty()) nat_w = "r=" + to_string(r);
          ext.push_back(tr);
        }
        const std::size_t pairs = std::min<std::size_t>(ms.size() * ms.size(), opt.matrix_limit);
        std::uniform_int_distribution<std::size_t> pick(0, ms.empty() ? 0 : ms.size() - 1);
        for (std::size_t r = 0; r < pairs && !ms.empty() && mono_w.empty(); ++r) {
          const bool all = ms.size() * ms.size() <= opt.matrix_limit;
          const std::size_t i = all ? r / ms.size() : pick(rng), j = all ? r % ms.size() : pick(rng);
          if (leq_matrix(ms[i], ms[j]) && !leq_matrix(ext[i], ext[j]))
            mono_w = "r=" + to_string(ms[i]) + " <= r'=" + to_string(ms[j]);
        }
      }
    for (std::size_t a = 0; a <= size_cap && graph_w.empty(); ++a)
      for (std::size_t b = 0; b <= size_cap && graph_w.empty(); ++b)
        for_each_map(a, b, [&](const Map& f) {
          const VMatrix gf = VMatrix::graph(th.quantale_ref(), f, b);
          if (t_xi_extend(th, gf) != VMatrix::graph(th.quantale_ref(), th.arrow(f, b), th.t_size(b))) {
            graph_w = "f=" + map_str(f);
            return false;
          }
          return true;
        });
    for (std::size_t a = 0; a <= std::min<std::size_t>(size_cap, 2) && graph_w.empty(); ++a)
      for (std::size_t b = 0; b <= std::min<std::size_t>(size_cap, 2) && graph_w.empty(); ++b)
        for (std::size_t c = 0; c <= std::min<std::size_t>(size_cap, 2) && graph_w.empty(); ++c)
          for_each_map(a, b, [&](const Map& f) {
            return for_each_map(b, c, [&](const Map& g) {
              const VMatrix gf = VMatrix::graph(th.quantale_ref(), f, b);
              const VMatrix gg = VMatrix::graph(th.quantale_ref(), g, c);
              if (t_xi_extend(th, compose(gg, gf)) != compose(t_xi_extend(th, gg), t_xi_extend(th, gf))) {
                graph_w = "composite of f=" + map_str(f) + ", g=" + map_str(g);
                return false;
              }
              return true;
            });
          });
    report.record("T_xi involution", inv_w);
    report.record("e op-lax", lax_w);
    report.record("m natural for T_xi", nat_w);
    report.record("T_xi monotone", mono_w);
    report.record("T_xi on graphs", graph_w);
  }
  report.sampled = sampled;
  return report;
}

Certification certify_theory(const Theory& th, std::size_t size_cap) {
  Certification c;
  c.report = audit_theory(th, size_cap);
  if (c.report.passed()) c.theory = th.with_certification(true);
  return c;
}

}  // namespace tvcat
