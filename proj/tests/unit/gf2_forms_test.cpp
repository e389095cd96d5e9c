#include <gtest/gtest.h>

#include <random>

#include "monstrous/gf2/forms.hpp"
#include "monstrous/gf2/mts.hpp"
#include "monstrous/gf2/subspace.hpp"

namespace monstrous::gf2 {
namespace {

// Oracle: nonzero singular vectors by plain enumeration, no Gray code.
std::uint64_t brute_singular(const QuadraticForm& q) {
  std::uint64_t c = 0;
  for (std::uint64_t v = 1; v < (std::uint64_t{1} << q.dim()); ++v) c += q(v) == 0;
  return c;
}

QuadraticForm random_form(std::mt19937_64& rng, int n) {
  std::vector<std::uint64_t> up(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) up[static_cast<std::size_t>(i)] = rng() & low_mask(n) & ~low_mask(i);
  return QuadraticForm(n, up);
}

TEST(Polarize, HyperbolicPlane) {
  const BilinearForm b = polarize(QuadraticForm::hyperbolic(1));
  EXPECT_EQ(b(0b01, 0b10), 1);
  EXPECT_EQ(b(0b01, 0b01), 0);
  EXPECT_EQ(b(0b10, 0b10), 0);
  EXPECT_TRUE(b.is_alternating());
}

TEST(Polarize, ZeroFormGivesZeroBilinear) {
  const QuadraticForm zero(6, std::vector<std::uint64_t>(6, 0));
  const BilinearForm b = polarize(zero);
  for (std::uint64_t r : b.rows()) EXPECT_EQ(r, 0u);
}

TEST(Polarize, IdentityExhaustiveUpTo12) {
  std::mt19937_64 rng(7);
  for (int n : {1, 3, 6, 12}) {
    const QuadraticForm q = random_form(rng, n);
    const BilinearForm b = polarize(q);
    for (std::uint64_t u = 0; u < (std::uint64_t{1} << n); ++u)
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); v += (n == 12 ? 37 : 1))
        ASSERT_EQ(b(u, v), q(u ^ v) ^ q(u) ^ q(v)) << n;
  }
}

TEST(Polarize, IdentitySampledAtDim30) {
  std::mt19937_64 rng(11);
  const QuadraticForm q = random_form(rng, 30);
  const BilinearForm b = polarize(q);
  for (int i = 0; i < 100000; ++i) {
    const std::uint64_t u = rng() & low_mask(30), v = rng() & low_mask(30);
    ASSERT_EQ(b(u, v), q(u ^ v) ^ q(u) ^ q(v));
  }
}

TEST(Classify, StandardModels) {
  EXPECT_EQ(classify(QuadraticForm::hyperbolic(5)), (FormClass{0, SignType::kPlus, 5}));
  EXPECT_EQ(classify(QuadraticForm::anisotropic_plane()), (FormClass{0, SignType::kMinus, 0}));
  EXPECT_EQ(classify(QuadraticForm::hyperbolic(3).direct_sum(QuadraticForm::anisotropic_plane())),
            (FormClass{0, SignType::kMinus, 3}));
}

TEST(Classify, RadicalIsCounted) {
  const QuadraticForm q = QuadraticForm::hyperbolic(2).direct_sum(QuadraticForm(2, {0, 0}));
  EXPECT_EQ(classify(q), (FormClass{2, SignType::kPlus, 4}));
}

TEST(Classify, DefectiveFormThrows) {
  // x0^2 alone: radical of the polarization is everything, q is not zero on it.
  EXPECT_THROW(classify(QuadraticForm(1, {1})), std::domain_error);
}

TEST(Classify, AgreesWithSingularCountOnRandomForms) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 * static_cast<int>(1 + rng() % 6);
    const QuadraticForm q = random_form(rng, n);
    if (!polarize(q).radical().empty()) continue;
    const FormClass c = classify(q);
    const int m = n / 2;
    const std::uint64_t half = std::uint64_t{1} << (m - 1);
    const std::uint64_t expect_with_zero =
        (std::uint64_t{1} << (2 * m - 1)) + (c.sign == SignType::kPlus ? half : -half);
    EXPECT_EQ(brute_singular(q) + 1, expect_with_zero);
    EXPECT_EQ(c.witt_index, c.sign == SignType::kPlus ? m : m - 1);
  }
}

TEST(CountSingular, ClosedFormPlusType) {
  for (int m = 1; m <= 5; ++m) {
    const std::uint64_t expected = ((std::uint64_t{1} << (m - 1)) + 1) * ((std::uint64_t{1} << m) - 1);
    EXPECT_EQ(count_singular(QuadraticForm::hyperbolic(m)), expected) << m;
  }
}

TEST(CountSingular, Dim10And2) {
  EXPECT_EQ(count_singular(QuadraticForm::hyperbolic(5)), 527u);
  EXPECT_EQ(count_singular(QuadraticForm::hyperbolic(5)), 17u * 31u);
  EXPECT_EQ(count_singular(QuadraticForm::hyperbolic(1)), brute_singular(QuadraticForm::hyperbolic(1)));
  EXPECT_EQ(count_singular(QuadraticForm::hyperbolic(1)), 2u);
}

TEST(CountSingular, Dim24PlusType) {
  EXPECT_EQ(count_singular(QuadraticForm::hyperbolic(12)), (1u << 23) + (1u << 11) - 1);
}

TEST(CountSingular, DegenerateThrows) {
  EXPECT_THROW(count_singular(QuadraticForm(3, {0b010, 0, 0})), std::domain_error);
}

TEST(Subspace, CanonicalFormMakesEqualityStructural) {
  const Subspace a = Subspace::span(6, std::vector<std::uint64_t>{0b000011, 0b000110});
  const Subspace b = Subspace::span(6, std::vector<std::uint64_t>{0b000101, 0b000011, 0b000110});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.dim(), 2);
  EXPECT_TRUE(a.contains(0b000101));
  EXPECT_FALSE(a.contains(0b001000));
}

TEST(Subspace, IntersectionMatchesEnumeration) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint64_t> g1, g2;
    for (int i = 0; i < 4; ++i) {
      g1.push_back(rng() & 0xff);
      g2.push_back(rng() & 0xff);
    }
    const Subspace a = Subspace::span(8, g1), b = Subspace::span(8, g2);
    const Subspace meet = a.intersect(b);
    std::uint64_t count = 0;
    for (std::uint64_t v : a.elements()) count += b.contains(v);
    EXPECT_EQ(count, meet.size());
    EXPECT_TRUE(a.contains(meet));
    EXPECT_TRUE(b.contains(meet));
  }
}

TEST(TotallySingular, Examples) {
  const QuadraticForm q = QuadraticForm::hyperbolic(5);
  const Subspace phi = Subspace::span(10, std::vector<std::uint64_t>{1, 1 << 2, 1 << 4, 1 << 6, 1 << 8});
  EXPECT_TRUE(is_totally_singular(phi, q));
  EXPECT_FALSE(is_totally_singular(Subspace::span(10, std::vector<std::uint64_t>{0b11}), q));
  EXPECT_THROW(is_totally_singular(Subspace(4), q), std::invalid_argument);
}

TEST(Mts, CountsMatchProductFormula) {
  for (int m = 1; m <= 5; ++m) {
    const QuadraticForm q = QuadraticForm::hyperbolic(m);
    const auto all = enumerate_mts(q);
    std::uint64_t formula = 1;
    for (int i = 0; i < m; ++i) formula *= (std::uint64_t{1} << i) + 1;
    EXPECT_EQ(all.size(), formula) << m;
    for (const Subspace& s : all) {
      ASSERT_EQ(s.dim(), m);
      ASSERT_TRUE(is_totally_singular(s, q));
    }
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
  }
}

TEST(Mts, Dim2AreTheIsotropicLines) {
  const auto all = enumerate_mts(QuadraticForm::hyperbolic(1));
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[0], Subspace::span(2, std::vector<std::uint64_t>{0b01}));
  EXPECT_EQ(all[1], Subspace::span(2, std::vector<std::uint64_t>{0b10}));
}

TEST(Mts, Dim10Is4590) { EXPECT_EQ(enumerate_mts(QuadraticForm::hyperbolic(5)).size(), 4590u); }

TEST(Mts, RejectsMinusAndDegenerate) {
  EXPECT_THROW(enumerate_mts(QuadraticForm::anisotropic_plane()), std::domain_error);
  EXPECT_THROW(enumerate_mts(QuadraticForm::hyperbolic(1).direct_sum(QuadraticForm(2, {0, 0}))), std::domain_error);
}

TEST(Mts, ComplementaryPairStandardModel) {
  const auto [phi, psi] = complementary_mts_pair(QuadraticForm::hyperbolic(5));
  EXPECT_EQ(phi, Subspace::span(10, std::vector<std::uint64_t>{1, 1 << 2, 1 << 4, 1 << 6, 1 << 8}));
  EXPECT_EQ(psi, Subspace::span(10, std::vector<std::uint64_t>{1 << 1, 1 << 3, 1 << 5, 1 << 7, 1 << 9}));
}

TEST(Mts, ComplementaryPairOnScrambledForm) {
  // Random basis change of five hyperbolic planes, then the pair must still be valid.
  std::mt19937_64 rng(17);
  const QuadraticForm base = QuadraticForm::hyperbolic(6);
  std::vector<std::uint64_t> images;
  while (true) {
    images.clear();
    for (int i = 0; i < 12; ++i) images.push_back(rng() & low_mask(12));
    if (Subspace::span(12, images).dim() == 12) break;
  }
  // q'(v) = q(A v); rebuild its upper-triangular matrix from values.
  auto qprime = [&](std::uint64_t v) {
    std::uint64_t w = 0;
    for (int i = 0; i < 12; ++i)
      if ((v >> i) & 1u) w ^= images[static_cast<std::size_t>(i)];
    return base(w);
  };
  std::vector<std::uint64_t> up(12, 0);
  for (int i = 0; i < 12; ++i) {
    const std::uint64_t ei = std::uint64_t{1} << i;
    if (qprime(ei)) up[static_cast<std::size_t>(i)] |= ei;
    for (int j = i + 1; j < 12; ++j) {
      const std::uint64_t ej = std::uint64_t{1} << j;
      if (qprime(ei ^ ej) ^ qprime(ei) ^ qprime(ej)) up[static_cast<std::size_t>(i)] |= ej;
    }
  }
  const QuadraticForm q(12, up);
  for (std::uint64_t v = 0; v < 4096; ++v) ASSERT_EQ(q(v), qprime(v));
  const auto [a, b] = complementary_mts_pair(q);
  EXPECT_EQ(a.dim(), 6);
  EXPECT_EQ(b.dim(), 6);
  EXPECT_TRUE(is_totally_singular(a, q));
  EXPECT_TRUE(is_totally_singular(b, q));
  EXPECT_EQ(a.intersect(b).dim(), 0);
}

}  // namespace
}  // namespace monstrous::gf2
