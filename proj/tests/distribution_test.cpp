#include <random>

#include <gtest/gtest.h>

#include "idist/distribution.hpp"
#include "idist/error.hpp"
#include "oracle.hpp"

namespace idist {
namespace {

using Counts = std::map<std::uint64_t, std::uint64_t>;

FieldCtx f27() { return FieldCtx::create(3, 3, std::vector<std::uint32_t>{1, 2, 0, 1}); }

std::vector<std::uint64_t> encs(const Poly& f) {
  std::vector<std::uint64_t> out;
  for (auto c : f.coeffs()) out.push_back(c.enc());
  return out;
}

Poly random_poly(const FieldCtx& ctx, std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<std::uint64_t> pick(0, ctx.q() - 1);
  std::vector<Element> c;
  const int n = deg(rng);
  for (int i = 0; i <= n; ++i) c.emplace_back(pick(rng));
  return Poly{c};
}

TEST(Distribution, Container) {
  Distribution d(9);
  d.add(1, 3);
  d.add(0, 0);
  d.add(1, 2);
  EXPECT_EQ(d.at(1), 5u);
  EXPECT_EQ(d.at(7), 0u);
  EXPECT_EQ(d.counts().size(), 1u);
  Distribution e(9, {{0, 1}, {2, 2}});
  d += e;
  EXPECT_EQ(d.total(), 8u);
  EXPECT_EQ(d.weighted_total(), 9u);
  EXPECT_THROW(d += Distribution(27), Error);
}

TEST(Multiplicity, Examples) {
  auto f3 = FieldCtx::create(3, 1);
  auto sq = multiplicity_distribution(f3, monomial_poly(f3, 2), Element{0});
  EXPECT_EQ(sq.counts(), (Counts{{0, 1}, {1, 1}, {2, 1}}));

  auto ctx = f27();
  auto lin = multiplicity_distribution(ctx, monomial_poly(ctx, 1), ctx.one());
  EXPECT_EQ(lin.counts(), (Counts{{0, 26}, {27, 1}}));
  auto perm = multiplicity_distribution(ctx, monomial_poly(ctx, 11), ctx.zero());
  EXPECT_EQ(perm.counts(), (Counts{{1, 27}}));
}

TEST(Intersection, Examples) {
  auto f3 = FieldCtx::create(3, 1);
  EXPECT_EQ(intersection_distribution(f3, monomial_poly(f3, 2)).counts(),
            (Counts{{0, 3}, {1, 3}, {2, 3}}));
  auto ctx = f27();
  auto v11 = intersection_distribution(ctx, monomial_poly(ctx, 11));
  EXPECT_EQ(v11.counts(), (Counts{{0, 234}, {1, 378}, {3, 117}}));
  EXPECT_TRUE(matches_target(v11));
  for (int m : {1, 2, 3}) {
    auto c = FieldCtx::create(3, m);
    const auto q = c.q();
    EXPECT_EQ(intersection_distribution(c, monomial_poly(c, 1)).counts(),
              (Counts{{0, q - 1}, {1, q * (q - 1)}, {q, 1}}));
  }
  EXPECT_FALSE(matches_target(intersection_distribution(ctx, monomial_poly(ctx, 1))));
}

TEST(Intersection, MatchesDefinitionOracle) {
  auto ctx = f27();
  oracle::Field ref(3, 3, {1, 2, 0, 1});
  std::mt19937_64 rng(2);
  for (int i = 0; i < 4; ++i) {
    auto f = random_poly(ctx, rng, 6);
    EXPECT_EQ(intersection_distribution(ctx, f).counts(), oracle::intersection(ref, encs(f)));
  }
  auto f9 = FieldCtx::create(3, 2);
  oracle::Field ref9(3, 2, {1, 0, 1});
  for (std::uint64_t d = 1; d < 9; ++d) {
    EXPECT_EQ(intersection_distribution(f9, monomial_poly(f9, d)).counts(),
              oracle::intersection(ref9, encs(monomial_poly(f9, d))));
  }
}

TEST(Intersection, TargetTable) {
  for (std::uint64_t q : {3ull, 27ull, 243ull, 2187ull, 19683ull}) {
    auto e = target_distribution(q);
    EXPECT_EQ(e.total(), q * q);
    EXPECT_EQ(e.weighted_total(), q * q);
    EXPECT_EQ(e.at(2), 0u);
  }
  EXPECT_EQ(target_distribution(243).counts(), (Counts{{0, 19602}, {1, 29646}, {3, 9801}}));
}

TEST(Intersection, Caps) {
  auto big = FieldCtx::create(3, 10);
  EXPECT_THROW(intersection_distribution(big, monomial_poly(big, 2)), CapError);
  EXPECT_THROW(multiplicity_distribution(big, monomial_poly(big, 2), Element{0}), CapError);
  EXPECT_THROW(same_multiplicity_distribution(big, monomial_poly(big, 2), monomial_poly(big, 2)),
               CapError);
}

TEST(Intersection, RowAndColumnSums) {
  auto ctx = f27();
  std::mt19937_64 rng(50);
  for (int i = 0; i < 50; ++i) {
    auto f = random_poly(ctx, rng, 6);
    auto profile = multiplicity_profile(ctx, f);
    ASSERT_EQ(profile.size(), ctx.q());
    Distribution sum(ctx.q());
    for (std::uint64_t b = 0; b < ctx.q(); ++b) {
      const auto& M = profile[b];
      ASSERT_EQ(M.total(), ctx.q());
      ASSERT_EQ(M.weighted_total(), ctx.q());
      ASSERT_EQ(M, multiplicity_distribution(ctx, f, Element{b}));
      if (f.degree() >= 2) {
        for (auto [k, n] : M.counts()) ASSERT_LE(static_cast<long>(k), f.degree());
      }
      sum += M;
    }
    auto v = intersection_distribution(ctx, f);
    ASSERT_EQ(v, sum);
    ASSERT_EQ(v.total(), ctx.q() * ctx.q());
    ASSERT_EQ(v.weighted_total(), ctx.q() * ctx.q());
  }
}

TEST(Intersection, ParallelDeterminism) {
  auto ctx = FieldCtx::create(3, 5);
  std::mt19937_64 rng(9);
  auto f = random_poly(ctx, rng, 6);
  auto one = intersection_distribution(ctx, f, 1);
  for (unsigned w : {2u, 3u, 7u}) EXPECT_EQ(intersection_distribution(ctx, f, w), one);
  auto p1 = multiplicity_profile(ctx, f, 1);
  EXPECT_EQ(multiplicity_profile(ctx, f, 4), p1);
}

TEST(SameMultiplicity, Examples) {
  auto ctx = f27();
  EXPECT_TRUE(same_multiplicity_distribution(ctx, monomial_poly(ctx, 11), monomial_poly(ctx, 19)));
  auto f = Poly::from_ints(ctx, {1, 2, 0, 1, 1});
  EXPECT_TRUE(same_multiplicity_distribution(ctx, f, f));
  auto f3 = FieldCtx::create(3, 1);
  EXPECT_FALSE(same_multiplicity_distribution(f3, monomial_poly(f3, 2), monomial_poly(f3, 1)));
}

TEST(Intersection, MediumFields) {
  auto ctx = FieldCtx::create(3, 5);
  for (std::uint64_t d : {29ull, 217ull, 163ull, 49ull}) {
    EXPECT_EQ(intersection_distribution(ctx, monomial_poly(ctx, d)), target_distribution(243)) << d;
  }
}

}  // namespace
}  // namespace idist
