#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "laws.hpp"
#include "oracles.hpp"
#include "tvcat/enumerate.hpp"

using namespace tvcat;

namespace {

PhiClass C(const char* name) { return builtin_class(name); }

std::vector<Value> bits(const Quantale& q, std::vector<int> b) {
  std::vector<Value> v;
  for (int x : b) v.push_back(x ? q.top() : q.bottom());
  return v;
}

TEST(Completion, PresheavesOfTheChain) {
  auto th = fx::theory();
  const Quantale& q = th->quantale();
  auto c = fx::chain2(th);
  PresheafCategory p = presheaf_cat(c, C("all"));
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p.elements[0], bits(q, {0, 0}));
  EXPECT_EQ(p.elements[1], bits(q, {1, 0}));
  EXPECT_EQ(p.elements[2], bits(q, {1, 1}));
  // containment order
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ((*p.category)(i, j) == q.top(), i <= j);
  EXPECT_TRUE(separated(*p.category));
  Embedding e = yoneda(c);
  EXPECT_EQ(e.y.map, (Map{1, 2}));
}

TEST(Completion, PresheavesAreDownSets) {
  auto th = fx::theory();
  for (const auto& x : laws::all_categories(th, 3)) {
    const auto le = oracle::order_of(*x);
    for (bool nonempty : {false, true}) {
      PresheafCategory p = presheaf_cat(x, C(nonempty ? "inhabited" : "all"));
      const auto ds = oracle::down_sets(le, nonempty);
      ASSERT_EQ(p.size(), ds.size());
      // both lists are in the order of the value tables read as binary numbers
      std::vector<std::vector<Value>> want;
      for (const auto& d : ds) {
        std::vector<int> b(d.begin(), d.end());
        want.push_back(bits(th->quantale(), b));
      }
      std::sort(want.begin(), want.end());
      auto got = p.elements;
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, want);
    }
  }
  PresheafCategory pa = presheaf_cat(fx::antichain2(th), C("inhabited"));
  ASSERT_EQ(pa.size(), 3u);
  EXPECT_TRUE(pa.index_of(bits(th->quantale(), {1, 0})));
  EXPECT_TRUE(pa.index_of(bits(th->quantale(), {0, 1})));
  EXPECT_TRUE(pa.index_of(bits(th->quantale(), {1, 1})));
  EXPECT_FALSE(pa.index_of(bits(th->quantale(), {0, 0})));
}

TEST(Completion, RepresentablePresheavesArePoints) {
  auto th = fx::theory();
  for (const auto& x : category_universe(th, 3)) {
    if (!separated(*x)) continue;
    PresheafCategory p = presheaf_cat(x, C("representable"));
    EXPECT_EQ(p.size(), x->size());
    Embedding e = yoneda_phi(x, C("representable"));
    EXPECT_TRUE(structure_isomorphic(*p.category, *x));
    EXPECT_TRUE(fully_faithful(e.y));
  }
}

TEST(Completion, PresheafCaps) {
  auto th = fx::theory();
  CompletionCaps caps;
  caps.function_cap = 8;
  EXPECT_THROW(presheaf_cat(fx::diamond(th), C("all"), caps), Error);
  EXPECT_THROW(presheaf_cat(fx::one(fx::theory("lawvere")), C("all")), Error);
}

TEST(Completion, YonedaLemma) {
  for (const char* qn : {"bool2", "chain(3)"}) {
    const laws::Result r = laws::yoneda_lemma(fx::theory(qn), 2);
    EXPECT_TRUE(r.ok()) << r.failure.value_or("nothing checked");
  }
  const laws::Result r = laws::yoneda_lemma(fx::theory("bool2", "ultrafilter_principal"), 2);
  EXPECT_TRUE(r.ok()) << r.failure.value_or("nothing checked");
}

TEST(Completion, YonedaPhiIsDenseAndMatesFactor) {
  auto th = fx::theory();
  const auto u = category_universe(th, 2);
  for (const char* c : {"all", "representable", "inhabited", "right_adjoint", "closed"}) {
    const PhiClass phi = C(c);
    for (const auto& x : u) {
      Embedding e = yoneda_phi(x, phi);
      EXPECT_TRUE(phi_dense(phi, e.y)) << c;
      for (const auto& y : u)
        for (const auto& d : enumerate_distributors(x, y)) {
          bool factors = true;
          for (std::size_t q = 0; q < y->size(); ++q) factors = factors && e.presheaves.index_of(d.matrix.column(q));
          EXPECT_EQ(member(phi, d), factors) << c << " " << to_string(d);
        }
    }
  }
}

TEST(Completion, PhiFunctorAndInverseImage) {
  auto th = fx::theory();
  const auto u = category_universe(th, 2);
  for (const char* c : {"all", "inhabited", "representable"}) {
    const PhiClass phi = C(c);
    for (const auto& x : u) {
      const PresheafCategory px = presheaf_cat(x, phi);
      const TFunctor yx = yoneda_map(px);
      const TFunctor idf = phi_functor(identity_functor(x), px, px);
      EXPECT_EQ(idf.map, identity_functor(px.category).map);
      EXPECT_EQ(inverse_image(identity_functor(x), px, px).map, idf.map);
      for (const auto& y : u) {
        const PresheafCategory py = presheaf_cat(y, phi);
        const TFunctor yy = yoneda_map(py);
        const auto backs = enumerate_functors(py.category, px.category);
        for (const auto& f : enumerate_functors(x, y)) {
          const TFunctor pf = phi_functor(f, px, py);
          ASSERT_TRUE(check_functor(pf.map, pf.dom, pf.cod).ok());
          // naturality of y
          EXPECT_EQ(compose(pf, yx).map, compose(yy, f).map);
          // Phi f as a colimit
          const Distributor rhs = extension(kleisli_compose(star(yy), star(f)), star(yx));
          EXPECT_EQ(star(pf).matrix, rhs.matrix) << c;
          // f phi-dense <=> Phi f left adjoint <=> Phi f phi-dense
          const bool dense_f = phi_dense(phi, f);
          bool left = false;
          for (const auto& g : backs) left = left || adjoint_pair(pf, g);
          EXPECT_EQ(dense_f, left) << c << " " << to_string(f);
          EXPECT_EQ(dense_f, phi_dense(phi, pf)) << c << " " << to_string(f);
          if (dense_f) {
            const TFunctor inv = inverse_image(f, px, py);
            EXPECT_TRUE(adjoint_pair(pf, inv));
          } else {
            EXPECT_THROW(inverse_image(f, px, py), Error);
          }
        }
      }
    }
  }
}

TEST(Completion, SupremaExamples) {
  auto th = fx::theory();
  auto c = fx::chain2(th);
  PresheafCategory p = presheaf_cat(c, C("all"));
  SupResult s = sup_phi(p, yoneda_map(p));
  ASSERT_TRUE(s.left_adjoint);
  EXPECT_EQ(s.left_adjoint->map, (Map{0, 0, 1}));
  EXPECT_FALSE(s.certificate);

  auto a = fx::antichain2(th);
  PresheafCategory pa = presheaf_cat(a, C("all"));
  SupResult sa = sup_phi(pa, yoneda_map(pa));
  EXPECT_FALSE(sa.left_adjoint);
  EXPECT_FALSE(sa.left_inverse);
  ASSERT_TRUE(sa.certificate);
  EXPECT_EQ(pa.elements[*sa.certificate], bits(th->quantale(), {1, 1}));

  auto v = fx::vee_top(th);
  PresheafCategory pv = presheaf_cat(v, C("inhabited"));
  SupResult sv = sup_phi(pv, yoneda_map(pv));
  EXPECT_TRUE(sv.left_adjoint);
  EXPECT_FALSE(cocomplete_check(v, C("all")).cocomplete);
  EXPECT_TRUE(cocomplete_check(v, C("inhabited")).cocomplete);
}

TEST(Completion, ColimitExamples) {
  auto th = fx::theory();
  const auto u = category_universe(th, 2);
  for (const auto& y : u)
    for (const auto& x : u)
      for (const auto& h : enumerate_functors(y, x)) {
        auto g = colimit(unit_distributor(y), h);
        ASSERT_TRUE(g);
        EXPECT_TRUE(functor_equiv(*g, h));
        for (std::size_t p = 0; p < y->size(); ++p) {
          auto pt = fx::functor(fx::one(th), y, {p});
          auto gp = colimit(costar(pt), h);
          ASSERT_TRUE(gp);
          EXPECT_TRUE(points_equiv(*x, (*gp)(0), h(p)));
        }
      }
  auto c = fx::chain2(th);
  // Z = 1, weight {0,1}, h = 1: the supremum 1
  auto g = colimit(fx::bool_presheaf(c, {1, 1}), identity_functor(c));
  ASSERT_TRUE(g);
  EXPECT_EQ(g->map, (Map{1}));
  EXPECT_FALSE(colimit(fx::bool_presheaf(fx::antichain2(th), {1, 1}), identity_functor(fx::antichain2(th))));
}

TEST(Completion, ColimitsArePointwise) {
  auto th = fx::theory();
  auto gen = generator_G(th);
  const auto u = category_universe(th, 2);
  std::size_t seen = 0;
  for (const auto& y : u)
    for (const auto& z : u) {
      if (z->size() != 2) continue;
      for (const auto& x : u)
        for (const auto& h : enumerate_functors(y, x))
          for (const auto& phi : enumerate_distributors(y, z)) {
            auto whole = colimit(phi, h);
            std::vector<std::optional<TFunctor>> cols;
            bool all = true;
            for (std::size_t q = 0; q < 2; ++q) {
              VMatrix m(th->quantale_ref(), y->t_size(), 1, phi.matrix.column(q));
              cols.push_back(colimit(check_distributor(m, y, gen).value(), h));
              all = all && cols.back().has_value();
            }
            ++seen;
            ASSERT_EQ(whole.has_value(), all) << to_string(phi);
            if (whole)
              for (std::size_t q = 0; q < 2; ++q) EXPECT_TRUE(points_equiv(*x, (*whole)(q), (*cols[q])(0)));
          }
    }
  EXPECT_GT(seen, 100u);
}

TEST(Completion, CocompleteAgainstOracles) {
  auto th = fx::theory();
  for (const char* c : {"all", "representable", "right_adjoint", "inhabited"}) {
    for (const auto& s : laws::cocomplete_survey(th, C(c), 3, 3)) {
      const auto& v = s.verdict;
      EXPECT_TRUE(v.agree()) << c << " " << laws::describe(*s.category);
      if (std::string(c) == "all") EXPECT_EQ(v.cocomplete, oracle::has_all_joins(oracle::order_of(*s.category)));
      if (std::string(c) == "representable" || std::string(c) == "right_adjoint") EXPECT_TRUE(v.cocomplete) << c;
    }
  }
}

TEST(Completion, CocompleteWitnesses) {
  auto th = fx::theory();
  CocompleteVerdict v = cocomplete_check(fx::antichain2(th), C("all"));
  EXPECT_TRUE(v.agree());
  EXPECT_FALSE(v.cocomplete);
  ASSERT_TRUE(v.certificate);
  EXPECT_EQ(v.presheaves.elements[*v.certificate], bits(th->quantale(), {1, 1}));
  ASSERT_TRUE(v.injectivity_witness);
  EXPECT_NE(v.injectivity_witness->find("has no extension"), std::string::npos);
  CocompleteVerdict d = cocomplete_check(fx::diamond(th), C("all"));
  EXPECT_TRUE(d.cocomplete && d.agree());
  ASSERT_TRUE(d.sup);
  // the sup of {a, b} is top
  auto idx = d.presheaves.index_of(bits(th->quantale(), {1, 1, 1, 0}));
  ASSERT_TRUE(idx);
  EXPECT_EQ((*d.sup)(*idx), 3u);
}

TEST(Completion, OtherTheoriesAgree) {
  auto uf = fx::theory("bool2", "ultrafilter_principal");
  for (const char* c : {"all", "inhabited"})
    for (const auto& s : laws::cocomplete_survey(uf, C(c), 2, 3)) EXPECT_TRUE(s.verdict.agree()) << c;
  auto ex = certify_theory(*fx::theory("bool2", "exception_candidate"), 2).theory;
  ASSERT_TRUE(ex);
  for (const auto& s : laws::cocomplete_survey(ex, C("all"), 2, 3)) EXPECT_TRUE(s.verdict.agree());
  EXPECT_THROW(presheaf_cat(discrete(ex, FinSet::range(1)), C("preserves(top)")), Error);
}

TEST(Completion, CocontinuityMatchesJoinPreservation) {
  auto th = fx::theory();
  std::vector<CategoryRef> lattices;
  for (const auto& x : category_universe(th, 4))
    if (x->size() > 0 && separated(*x) && oracle::has_all_joins(oracle::order_of(*x))) lattices.push_back(x);
  ASSERT_EQ(lattices.size(), 5u);  // 1, chains of length 2, 3, 4 and the diamond
  for (const auto& x : lattices)
    for (const auto& y : lattices) {
      const auto lx = oracle::order_of(*x), ly = oracle::order_of(*y);
      const auto back = enumerate_functors(y, x);
      for (const auto& f : enumerate_functors(x, y)) {
        const bool cc = cocontinuous_check(f, C("all"));
        ASSERT_EQ(cc, oracle::preserves_all_joins(lx, ly, f.map)) << to_string(f);
        if (!cc) continue;
        bool left = false;
        for (const auto& g : back) left = left || adjoint_pair(f, g);
        EXPECT_EQ(phi_dense(C("all"), f), left);
      }
    }
  EXPECT_TRUE(cocontinuous_check(identity_functor(fx::antichain2(th)), C("all")));
}

TEST(Completion, PhiXClosedInPX) {
  auto th = fx::theory();
  for (const char* c : {"inhabited", "representable", "right_adjoint"})
    for (const auto& x : category_universe(th, 2)) {
      const PresheafCategory px = presheaf_cat(x, C(c));
      const PresheafCategory all = presheaf_cat(x, C("all"));
      Map inc(px.size());
      for (std::size_t i = 0; i < px.size(); ++i) inc[i] = *all.index_of(px.elements[i]);
      const TFunctor f = fx::functor(px.category, all.category, inc);
      EXPECT_TRUE(fully_faithful(f));
      EXPECT_TRUE(cocontinuous_check(f, C(c))) << c << " " << laws::describe(*x);
      // PhiX is phi-cocomplete with Sup = (y_X)^-1
      EXPECT_TRUE(cocomplete_check(px.category, C(c)).cocomplete) << c;
    }
}

TEST(Completion, KockZoeberlein) {
  auto th = fx::theory();
  for (const char* c : {"all", "inhabited", "representable"})
    for (const auto& x : {fx::one(th), fx::chain2(th), fx::antichain2(th)}) {
      AuditReport r = kz_audit(x, C(c));
      EXPECT_TRUE(r.passed()) << c << " " << laws::describe(*x);
      EXPECT_EQ(r.status_of("y^-1 . y_PhiX = 1"), Status::pass);
      EXPECT_EQ(r.status_of("Sup_PhiX = y^-1"), Status::pass);
    }
  PresheafCategory p = presheaf_cat(fx::one(th), C("all"));
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(presheaf_cat(p.category, C("all")).size(), 3u);
  CompletionCaps caps;
  caps.kz_size = 3;
  EXPECT_THROW(kz_audit(fx::diamond(th), C("all"), caps), Error);
}

TEST(Completion, SplitForks) {
  auto th = fx::theory();
  auto x = fx::indiscrete2(th);
  auto id = identity_functor(x);
  EXPECT_TRUE(split_fork_audit(id, id, C("inhabited")).passed());
  auto rr = cartesian_product(*x, *x);
  auto p1 = projection(rr, x, x, 1), p2 = projection(rr, x, x, 2);
  AuditReport col = split_fork_audit(p1, p2, C("inhabited"));
  EXPECT_TRUE(col.passed());
  EXPECT_EQ(col.status_of("Phi q . q^-1 = 1"), Status::pass);
  EXPECT_EQ(col.status_of("q^-1 . Phi q = Phi pi2 . pi1^-1"), Status::pass);

  auto a = fx::antichain2(th);
  auto ra = cartesian_product(*a, *a);
  AuditReport refused = split_fork_audit(projection(ra, a, a, 1), projection(ra, a, a, 2), C("representable"));
  EXPECT_FALSE(refused.passed());
  ASSERT_EQ(refused.status_of("Ax4 on pi1, pi2, q"), Status::fail);
  EXPECT_FALSE(refused.find("Ax4 on pi1, pi2, q")->witness.empty());
  EXPECT_EQ(refused.entries.size(), 1u);
}

TEST(Completion, KanEquivalence) {
  auto th = fx::theory();
  AuditReport r = kan_check(fx::one(th), fx::chain2(th), C("all"));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.status_of("order preserved and reflected"), Status::pass);
  EXPECT_TRUE(kan_check(fx::chain2(th), fx::chain2(th), C("all")).passed());
  AuditReport bad = kan_check(fx::one(th), fx::antichain2(th), C("all"));
  EXPECT_EQ(bad.status_of("Y cocomplete"), Status::fail);
}

TEST(Completion, CovariantPresheaves) {
  for (const char* qn : {"bool2", "chain(3)"}) {
    auto th = fx::theory(qn);
    const Quantale& q = th->quantale();
    for (const auto& x : category_universe(th, 2)) {
      CovariantPresheafCategory v = covariant_presheaf_cat(x);
      // elements are the maps with a(x, y) (x) f(x) <= f(y)
      std::size_t monotone = 0;
      for_each_map(x->size(), q.size(), [&](const Map& f) {
        bool ok = true;
        for (std::size_t a = 0; a < x->size(); ++a)
          for (std::size_t b = 0; b < x->size(); ++b)
            if (!q.leq(q.tensor(x->point(a, b), Value::index(f[a])), Value::index(f[b]))) ok = false;
        monotone += ok;
      });
      EXPECT_EQ(v.elements.size(), monotone);
      for (std::size_t i = 0; i < v.elements.size(); ++i)
        for (std::size_t j = 0; j < v.elements.size(); ++j) {
          Value m = q.top();
          for (std::size_t p = 0; p < x->size(); ++p) m = q.meet(m, q.hom(v.elements[i][p], v.elements[j][p]));
          EXPECT_EQ((*v.category)(i, j), m);
        }
      for (const auto& e : v.elements) EXPECT_EQ(tvcat::apply(unit_distributor(x), e), e);
      if (std::string(qn) != "bool2") continue;
      // right adjoint distributors act by infima-preserving maps
      for (const auto& y : category_universe(th, 2)) {
        CovariantPresheafCategory w = covariant_presheaf_cat(y);
        for (const auto& phi : enumerate_distributors(x, y)) {
          if (!left_adjoint_candidate(phi).is_right_adjoint) continue;
          EXPECT_TRUE(member(C("preserves(arbitrary_infima)"), phi));
          for (const auto& a : v.elements)
            for (const auto& b : v.elements) {
              std::vector<Value> m(a.size());
              for (std::size_t p = 0; p < a.size(); ++p) m[p] = q.meet(a[p], b[p]);
              const auto fa = tvcat::apply(phi, a), fb = tvcat::apply(phi, b), fm = tvcat::apply(phi, m);
              for (std::size_t p = 0; p < fm.size(); ++p) EXPECT_EQ(fm[p], q.meet(fa[p], fb[p]));
            }
          EXPECT_TRUE(w.index_of(tvcat::apply(phi, v.elements.front())));
        }
      }
    }
  }
  auto ex = certify_theory(*fx::theory("bool2", "exception_candidate"), 2).theory;
  EXPECT_THROW(covariant_presheaf_cat(discrete(ex, FinSet::range(1))), Error);
}

}  // namespace
