#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tvcat/enumerate.hpp"
#include "tvcat/vmatrix.hpp"

using namespace tvcat;

namespace {

QuantaleRef B() { return builtin_quantale("bool2"); }
QuantaleRef P() { return builtin_quantale("lawvere"); }

VMatrix bools(std::size_t r, std::size_t c, std::vector<int> bits) {
  std::vector<Value> e;
  for (int b : bits) e.push_back(Value::index(b));
  return VMatrix(B(), r, c, e);
}

VMatrix lawv(std::size_t r, std::size_t c, std::vector<std::int64_t> vals) {
  std::vector<Value> e;
  for (auto v : vals) e.push_back(v < 0 ? Value::infinity() : Value::rational(v));
  return VMatrix(P(), r, c, e);
}

std::vector<VMatrix> all_matrices(const QuantaleRef& q, std::size_t r, std::size_t c) {
  std::vector<VMatrix> out;
  for_each_matrix(q, r, c, 1 << 12, [&](const VMatrix& m) { out.push_back(m); });
  return out;
}

TEST(VMatrix, Identities) {
  EXPECT_EQ(identity_rel(1, B()), bools(1, 1, {1}));
  EXPECT_EQ(identity_rel(2, P()), lawv(2, 2, {0, -1, -1, 0}));
  EXPECT_EQ(involute(identity_rel(3, B())), identity_rel(3, B()));
}

TEST(VMatrix, ShapeErrors) {
  EXPECT_THROW(compose(bools(1, 2, {1, 1}), bools(1, 2, {1, 0})), Error);
  EXPECT_THROW(compose(lawv(1, 1, {1}), bools(1, 1, {1})), Error);
  EXPECT_THROW(leq_matrix(bools(1, 2, {1, 1}), bools(2, 1, {1, 1})), Error);
  EXPECT_THROW(bools(1, 1, {1}).at(1, 0), Error);
}

TEST(VMatrix, BooleanComposition) {
  // r relates x0->y1 and x1->y0, s relates y0->z0 and y1->z1
  VMatrix r = bools(2, 2, {0, 1, 1, 0});
  VMatrix s = bools(2, 2, {1, 0, 0, 1});
  EXPECT_EQ(compose(s, r), r);
  EXPECT_EQ(compose(r, r), identity_rel(2, B()));
  EXPECT_EQ(compose(s, VMatrix::constant(B(), 2, 2, B()->bottom())), VMatrix::constant(B(), 2, 2, B()->bottom()));
}

TEST(VMatrix, MinPlusComposition) {
  VMatrix r = lawv(1, 2, {1, 3});
  VMatrix s = lawv(2, 1, {2, 0});
  EXPECT_EQ(compose(s, r), lawv(1, 1, {3}));
  EXPECT_EQ(oracle::min_plus(oracle::to_int(r), oracle::to_int(s)), oracle::to_int(lawv(1, 1, {3})));
}

TEST(VMatrix, InvolutionLaws) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    std::vector<int> a(9), b(9);
    for (auto& x : a) x = rng() & 1;
    for (auto& x : b) x = rng() & 1;
    VMatrix r = bools(3, 3, a), s = bools(3, 3, b);
    EXPECT_EQ(involute(compose(s, r)), compose(involute(r), involute(s)));
    EXPECT_EQ(involute(involute(r)), r);
  }
  VMatrix row = bools(1, 2, {1, 0});
  EXPECT_EQ(involute(row), bools(2, 1, {1, 0}));
}

TEST(VMatrix, PointwiseLattice) {
  VMatrix r = bools(2, 2, {1, 0, 0, 1}), s = bools(2, 2, {0, 1, 0, 1});
  EXPECT_EQ(join_matrix(r, s), bools(2, 2, {1, 1, 0, 1}));
  EXPECT_EQ(meet_matrix(r, s), bools(2, 2, {0, 0, 0, 1}));
  EXPECT_TRUE(leq_matrix(r, join_matrix(r, s)));
  EXPECT_TRUE(leq_matrix(r, r));
  EXPECT_FALSE(leq_matrix(r, s));
}

TEST(VMatrix, RightExtensionExample) {
  VMatrix r = bools(2, 1, {1, 0});
  VMatrix t = bools(2, 2, {1, 0, 1, 1});
  // candidates s : 1 x 2, keep the largest with s.r <= t
  std::optional<VMatrix> best;
  for (const VMatrix& s : all_matrices(B(), 1, 2))
    if (leq_matrix(compose(s, r), t) && (!best || leq_matrix(*best, s))) best = s;
  ASSERT_TRUE(best);
  EXPECT_EQ(*best, bools(1, 2, {1, 0}));
  EXPECT_EQ(right_extension(t, r), *best);
}

TEST(VMatrix, LawvereResiduals) {
  EXPECT_EQ(right_extension(lawv(1, 1, {5}), lawv(1, 1, {3})), lawv(1, 1, {2}));
  EXPECT_EQ(right_lifting(lawv(1, 1, {1}), lawv(1, 1, {4})), lawv(1, 1, {3}));
  EXPECT_EQ(right_lifting(bools(1, 1, {1}), bools(1, 1, {0})), bools(1, 1, {0}));
}

TEST(VMatrix, AdjunctionUnits) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 40; ++i) {
    std::vector<int> a(6), b(6);
    for (auto& x : a) x = rng() & 1;
    for (auto& x : b) x = rng() & 1;
    VMatrix r = bools(2, 3, a), s = bools(3, 2, b);
    EXPECT_TRUE(leq_matrix(s, right_extension(compose(s, r), r)));
    EXPECT_TRUE(leq_matrix(s, right_lifting(r, compose(r, s))));
  }
}

class GaloisLaws : public ::testing::TestWithParam<const char*> {};

TEST_P(GaloisLaws, ExhaustiveSmallShapes) {
  auto q = builtin_quantale(GetParam());
  for (std::size_t nx = 1; nx <= 2; ++nx)
    for (std::size_t ny = 1; ny <= 2; ++ny)
      for (std::size_t nz = 1; nz <= 2; ++nz) {
        const auto rs = all_matrices(q, nx, ny);
        const auto ss = all_matrices(q, ny, nz);
        const auto ts = all_matrices(q, nx, nz);
        for (const auto& r : rs)
          for (const auto& t : ts) {
            const VMatrix ext = right_extension(t, r);
            for (const auto& s : ss) ASSERT_EQ(leq_matrix(compose(s, r), t), leq_matrix(s, ext));
          }
        // lifting: r : Y -|-> Z, s : X -|-> Y, t : X -|-> Z
        const auto rl = all_matrices(q, ny, nz);
        const auto sl = all_matrices(q, nx, ny);
        for (const auto& r : rl)
          for (const auto& t : ts) {
            const VMatrix lift = right_lifting(r, t);
            for (const auto& s : sl) ASSERT_EQ(leq_matrix(compose(r, s), t), leq_matrix(s, lift));
          }
      }
}

TEST_P(GaloisLaws, AssociativeAndUnital) {
  auto q = builtin_quantale(GetParam());
  const auto m = all_matrices(q, 2, 2);
  const VMatrix id = identity_rel(2, q);
  std::mt19937_64 rng(11);
  for (const auto& r : m) {
    EXPECT_EQ(compose(id, r), r);
    EXPECT_EQ(compose(r, id), r);
    for (int i = 0; i < 8; ++i) {
      const auto& s = m[rng() % m.size()];
      const auto& t = m[rng() % m.size()];
      EXPECT_EQ(compose(t, compose(s, r)), compose(compose(t, s), r));
      EXPECT_EQ(compose(join_matrix(s, t), r), join_matrix(compose(s, r), compose(t, r)));
      EXPECT_EQ(compose(r, join_matrix(s, t)), join_matrix(compose(r, s), compose(r, t)));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Finite, GaloisLaws, ::testing::Values("bool2", "chain(3)"));

TEST(VMatrix, LawvereAgainstMinPlusOracle) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 30; ++round) {
    oracle::IntMatrix r(3, std::vector<std::int64_t>(3)), s(3, std::vector<std::int64_t>(2));
    for (auto& row : r)
      for (auto& x : row) x = oracle::random_weight(rng, 6);
    for (auto& row : s)
      for (auto& x : row) x = oracle::random_weight(rng, 6);
    auto to_m = [](const oracle::IntMatrix& m) {
      std::vector<Value> e;
      for (const auto& row : m)
        for (auto x : row) e.push_back(oracle::unscaled(x));
      return VMatrix(P(), m.size(), m[0].size(), e);
    };
    const VMatrix mr = to_m(r), ms = to_m(s);
    EXPECT_EQ(oracle::to_int(compose(ms, mr)), oracle::min_plus(r, s));
    // t : 3 x 2 taken as the composite, extension along r
    const auto t = oracle::min_plus(r, s);
    EXPECT_EQ(oracle::to_int(right_extension(to_m(t), mr)), oracle::min_plus_extension(t, r));
  }
}

}  // namespace
