#include "laws.hpp"

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "tvcat/enumerate.hpp"

namespace laws {

using namespace tvcat;

namespace {

std::vector<VMatrix> matrices(const QuantaleRef& q, std::size_t r, std::size_t c) {
  std::vector<VMatrix> out;
  for_each_matrix(q, r, c, 1 << 16, [&](const VMatrix& m) { out.push_back(m); });
  return out;
}

bool same(const Distributor& a, const Distributor& b) { return a.matrix == b.matrix; }

std::string show(const Distributor& d) { return to_string(d.matrix); }

}  // namespace

std::string describe(const TCategory& x) { return to_string(x); }

Result galois(const std::string& quantale, std::size_t max_dim) {
  Result res;
  auto q = builtin_quantale(quantale);
  for (const Value& u : q->elements())
    for (const Value& v : q->elements())
      for (const Value& w : q->elements()) {
        ++res.checked;
        if (q->leq(q->tensor(u, w), v) != q->leq(w, q->hom(u, v)))
          res.fail("hom adjunction at u=" + q->format(u) + " v=" + q->format(v) + " w=" + q->format(w));
      }
  for (std::size_t nx = 1; nx <= max_dim; ++nx)
    for (std::size_t ny = 1; ny <= max_dim; ++ny)
      for (std::size_t nz = 1; nz <= max_dim; ++nz) {
        const auto rs = matrices(q, nx, ny), ss = matrices(q, ny, nz), ts = matrices(q, nx, nz);
        for (const auto& r : rs)
          for (const auto& t : ts) {
            const VMatrix ext = right_extension(t, r);
            for (const auto& s : ss) {
              ++res.checked;
              if (leq_matrix(compose(s, r), t) != leq_matrix(s, ext))
                res.fail("extension: r=" + to_string(r) + " s=" + to_string(s) + " t=" + to_string(t));
            }
          }
        // r : Y -|-> Z, s : X -|-> Y, t : X -|-> Z
        const auto rl = matrices(q, ny, nz), sl = matrices(q, nx, ny);
        for (const auto& r : rl)
          for (const auto& t : ts) {
            const VMatrix lift = right_lifting(r, t);
            for (const auto& s : sl) {
              ++res.checked;
              if (leq_matrix(compose(r, s), t) != leq_matrix(s, lift))
                res.fail("lifting: r=" + to_string(r) + " s=" + to_string(s) + " t=" + to_string(t));
            }
          }
      }
  return res;
}

Result lawvere_grid(std::size_t triples, std::uint64_t seed) {
  Result res;
  auto q = builtin_quantale("lawvere");
  std::mt19937_64 rng(seed);
  const std::int64_t limit = 24 * oracle::kScale;
  auto plus = [](std::int64_t a, std::int64_t b) { return (a == oracle::kInf || b == oracle::kInf) ? oracle::kInf : a + b; };
  for (std::size_t i = 0; i < triples; ++i) {
    const std::int64_t u = oracle::random_weight(rng, 10), v = oracle::random_weight(rng, 10),
                       w = oracle::random_weight(rng, 10);
    const Value U = oracle::unscaled(u), V = oracle::unscaled(v), W = oracle::unscaled(w);
    ++res.checked;
    const std::int64_t h = oracle::grid_hom(u, v, limit);
    std::ostringstream at;
    at << "u=" << to_string(U) << " v=" << to_string(V) << " w=" << to_string(W);
    if (oracle::scaled(q->hom(U, V)) != h) res.fail("hom differs from grid scan at " + at.str());
    // u + w >= v numerically is u (x) w <= v; w <= hom(u,v) is w >= h numerically
    const bool lhs = plus(u, w) >= v, rhs = w >= h;
    if (lhs != rhs) res.fail("grid adjunction at " + at.str());
    if (q->leq(q->tensor(U, W), V) != lhs) res.fail("tensor order at " + at.str());
    if (q->leq(W, q->hom(U, V)) != rhs) res.fail("hom order at " + at.str());
    VMatrix r(q, 1, 1, {U}), t(q, 1, 1, {V});
    if (oracle::scaled(right_extension(t, r)(0, 0)) != h) res.fail("extension at " + at.str());
    if (oracle::scaled(right_lifting(r, t)(0, 0)) != h) res.fail("lifting at " + at.str());
  }
  return res;
}

Result lawvere_min_plus(std::size_t nodes, std::uint64_t seed) {
  Result res;
  auto q = builtin_quantale("lawvere");
  auto th = builtin_theory("identity", q);
  std::mt19937_64 rng(seed);
  auto random_table = [&](std::size_t r, std::size_t c) {
    oracle::IntMatrix m(r, std::vector<std::int64_t>(c));
    for (auto& row : m)
      for (auto& x : row) x = oracle::random_weight(rng, 8);
    return m;
  };
  auto to_m = [&](const oracle::IntMatrix& m) {
    std::vector<Value> e;
    for (const auto& row : m)
      for (auto x : row) e.push_back(oracle::unscaled(x));
    return VMatrix(q, m.size(), m.empty() ? 0 : m[0].size(), e);
  };
  oracle::IntMatrix d = random_table(nodes, nodes);
  for (std::size_t i = 0; i < nodes; ++i) d[i][i] = 0;
  const oracle::IntMatrix dist = oracle::shortest_paths(d);
  const VMatrix md = to_m(d), mdist = to_m(dist);
  const std::string tag = "seed " + std::to_string(seed) + ": ";

  // closure by repeated squaring reaches the shortest-path table
  VMatrix c = md;
  for (std::size_t i = 0; i < nodes; ++i) c = join_matrix(c, compose(c, c));
  ++res.checked;
  if (oracle::to_int(c) != dist) res.fail(tag + "path closure differs from Floyd-Warshall");
  auto x = check_category(th, FinSet::range(nodes), mdist);
  ++res.checked;
  if (!x.ok()) {
    res.fail(tag + "shortest-path metric rejected: " + x.violation().describe());
    return res;
  }
  ++res.checked;
  if (oracle::to_int(compose(mdist, mdist)) != dist) res.fail(tag + "d . d != d");
  ++res.checked;
  if (right_extension(mdist, mdist) != mdist) res.fail(tag + "d ⟜ d != d");

  const oracle::IntMatrix r = random_table(nodes, nodes), s = random_table(nodes, nodes);
  const VMatrix mr = to_m(r), ms = to_m(s);
  ++res.checked;
  if (oracle::to_int(compose(ms, mr)) != oracle::min_plus(r, s)) res.fail(tag + "compose differs from min-plus");
  const oracle::IntMatrix t = random_table(nodes, nodes);
  ++res.checked;
  if (oracle::to_int(right_extension(to_m(t), mr)) != oracle::min_plus_extension(t, r))
    res.fail(tag + "extension differs from min-plus residual");

  // distributors on the metric: d-closed weights compose as min-plus products
  const Distributor a = unit_distributor(x.value());
  const oracle::IntMatrix phi = oracle::min_plus(oracle::min_plus(dist, r), dist);
  auto pd = check_distributor(to_m(phi), x.value(), x.value());
  ++res.checked;
  if (!pd.ok()) {
    res.fail(tag + "d.r.d is not a distributor: " + pd.violation().describe());
    return res;
  }
  ++res.checked;
  if (oracle::to_int(kleisli_compose(pd.value(), a).matrix) != phi) res.fail(tag + "kleisli unit");
  ++res.checked;
  if (oracle::to_int(kleisli_compose(pd.value(), pd.value()).matrix) != oracle::min_plus(phi, phi))
    res.fail(tag + "kleisli compose differs from min-plus");
  ++res.checked;
  if (oracle::to_int(extension(pd.value(), a).matrix) != oracle::min_plus_extension(phi, dist))
    res.fail(tag + "distributor extension differs from min-plus residual");
  return res;
}

std::vector<CategoryRef> all_categories(const TheoryRef& th, std::size_t max_size) {
  std::vector<CategoryRef> out;
  for (std::size_t n = 0; n <= max_size; ++n)
    for (auto& c : enumerate_categories(th, n)) out.push_back(std::move(c));
  return out;
}

Result yoneda_lemma(const TheoryRef& th, std::size_t max_size) {
  Result res;
  for (const auto& x : all_categories(th, max_size)) {
    Embedding e = yoneda(x);
    const PresheafCategory& p = e.presheaves;
    const Map ty = th->arrow(e.y.map, p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t u = 0; u < x->t_size(); ++u) {
        ++res.checked;
        if (p.elements[i][u] != (*p.category)(ty[u], i))
          res.fail("evaluation identity on " + describe(*x) + " at presheaf " + std::to_string(i));
      }
    ++res.checked;
    if (!check_functor(e.y.map, x, p.category).ok()) res.fail("y is not a functor on " + describe(*x));
    if (!fully_faithful(e.y)) res.fail("y not fully faithful on " + describe(*x));
  }
  return res;
}

Result yoneda_theorem(const TheoryRef& th, std::size_t max_size) {
  Result res;
  const auto cats = category_universe(th, max_size);
  for (const auto& x : cats) {
    CategoryRef ex = exponential_VX(*x);
    for (const auto& y : cats)
      for (const auto& z : cats) {
        const auto phis = enumerate_distributors(x, y);
        const auto psis = enumerate_distributors(x, z);
        for (const auto& psi : psis) {
          const TFunctor mpsi = mate(psi);
          const Map tm = th->arrow(mpsi.map, ex->size());
          for (const auto& phi : phis) {
            const TFunctor mphi = mate(phi);
            const Distributor ext = extension(phi, psi);
            for (std::size_t w = 0; w < z->t_size(); ++w)
              for (std::size_t q = 0; q < y->size(); ++q) {
                ++res.checked;
                if ((*ex)(tm[w], mphi.map[q]) != ext.matrix(w, q))
                  res.fail("phi=" + show(phi) + " psi=" + show(psi) + " on " + describe(*x));
              }
          }
        }
      }
  }
  return res;
}

Result calculus_rules(const TheoryRef& th, std::size_t max_size) {
  Result res;
  const auto u = category_universe(th, max_size);
  const std::size_t n = u.size();
  std::vector<std::vector<std::vector<Distributor>>> d(n, std::vector<std::vector<Distributor>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i][j] = enumerate_distributors(u[i], u[j]);
  // adj[i][j]: pairs gamma : i -o-> j, delta : j -o-> i with gamma -| delta
  struct Pair {
    const Distributor* gamma;
    const Distributor* delta;
  };
  std::vector<std::vector<std::vector<Pair>>> adj(n, std::vector<std::vector<Pair>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Distributor ai = unit_distributor(u[i]), aj = unit_distributor(u[j]);
      for (const auto& g : d[i][j])
        for (const auto& h : d[j][i])
          if (distributor_leq(ai, kleisli_compose(h, g)) && distributor_leq(kleisli_compose(g, h), aj))
            adj[i][j].push_back({&g, &h});
    }
  // right adjointness through the canonical candidate agrees with the search
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& a : d[i][j]) {
        bool found = false;
        for (const auto& p : adj[j][i]) found = found || same(*p.delta, a);
        ++res.checked;
        if (left_adjoint_candidate(a).is_right_adjoint != found) res.fail("right adjoint decision at " + show(a));
      }
  // (1) alpha right adjoint: alpha o (phi ⟜ psi) = (alpha o phi) ⟜ psi
  for (std::size_t A = 0; A < n; ++A)
    for (std::size_t B = 0; B < n; ++B)
      for (std::size_t C = 0; C < n; ++C)
        for (std::size_t D = 0; D < n; ++D)
          for (const auto& alpha : d[B][D]) {
            if (!left_adjoint_candidate(alpha).is_right_adjoint) continue;
            for (const auto& phi : d[A][B])
              for (const auto& psi : d[A][C]) {
                ++res.checked;
                if (!same(kleisli_compose(alpha, extension(phi, psi)), extension(kleisli_compose(alpha, phi), psi)))
                  res.fail("clause 1: alpha=" + show(alpha) + " phi=" + show(phi) + " psi=" + show(psi));
              }
          }
  // (2) gamma -| delta: (alpha ⟜ beta) o gamma = alpha ⟜ (delta o beta)
  for (std::size_t A = 0; A < n; ++A)
    for (std::size_t B = 0; B < n; ++B)
      for (std::size_t C = 0; C < n; ++C)
        for (std::size_t P = 0; P < n; ++P)
          for (const auto& pr : adj[P][B])
            for (const auto& alpha : d[A][C])
              for (const auto& beta : d[A][B]) {
                ++res.checked;
                if (!same(kleisli_compose(extension(alpha, beta), *pr.gamma),
                          extension(alpha, kleisli_compose(*pr.delta, beta))))
                  res.fail("clause 2: alpha=" + show(alpha) + " beta=" + show(beta) + " gamma=" + show(*pr.gamma));
              }
  // (3) gamma -| delta: (alpha o gamma) ⟜ beta = alpha ⟜ (beta o delta)
  for (std::size_t P = 0; P < n; ++P)
    for (std::size_t Q = 0; Q < n; ++Q)
      for (std::size_t B = 0; B < n; ++B)
        for (std::size_t C = 0; C < n; ++C)
          for (const auto& pr : adj[P][Q])
            for (const auto& alpha : d[Q][C])
              for (const auto& beta : d[P][B]) {
                ++res.checked;
                if (!same(extension(kleisli_compose(alpha, *pr.gamma), beta),
                          extension(alpha, kleisli_compose(beta, *pr.delta))))
                  res.fail("clause 3: alpha=" + show(alpha) + " beta=" + show(beta) + " gamma=" + show(*pr.gamma));
              }
  return res;
}

Result composition_cancellation(const TheoryRef& th, const PhiClass& phi, std::size_t max_size) {
  Result res;
  const auto u = category_universe(th, max_size);
  for (const auto& x : u)
    for (const auto& y : u)
      for (const auto& z : u) {
        const auto fs = enumerate_functors(x, y), gs = enumerate_functors(y, z), hs = enumerate_functors(x, z);
        std::vector<bool> hd(hs.size());
        for (std::size_t i = 0; i < hs.size(); ++i) hd[i] = phi_dense(phi, hs[i]);
        for (const auto& f : fs) {
          const bool fd = phi_dense(phi, f), fdense = dense(f);
          for (const auto& g : gs) {
            const bool gd = phi_dense(phi, g), gff = fully_faithful(g);
            const TFunctor gf = compose(g, f);
            for (std::size_t i = 0; i < hs.size(); ++i) {
              if (!functor_equiv(hs[i], gf)) continue;
              ++res.checked;
              const std::string at = " f=" + to_string(f) + " g=" + to_string(g) + " h=" + to_string(hs[i]);
              if (gd && fd && !hd[i]) res.fail(phi.name() + " clause 1:" + at);
              if (hd[i] && gff && !fd) res.fail(phi.name() + " clause 2:" + at);
              if (hd[i] && fdense && !gd) res.fail(phi.name() + " clause 3:" + at);
            }
          }
        }
      }
  return res;
}

std::vector<Survey> cocomplete_survey(const TheoryRef& th, const PhiClass& phi, std::size_t max_size,
                                      std::size_t max_b) {
  const InjectivityTests tests = injectivity_tests(th, phi, max_b);
  CompletionCaps caps;
  caps.injective_size = max_b;
  std::vector<Survey> out;
  for (const auto& x : all_categories(th, max_size)) out.push_back({x, cocomplete_check(x, phi, caps, &tests)});
  return out;
}

}  // namespace laws
