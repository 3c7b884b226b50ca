#include <gtest/gtest.h>

#include "hochdef/error.hpp"
#include "hochdef/hochschild.hpp"
#include "hochdef/oracle.hpp"
#include "hochdef/selftest.hpp"
#include "support/generators.hpp"

namespace hochdef {
namespace {

using testing::make_rng;

std::size_t full_dim(const AlgebraPtr& a, std::size_t n) {
  return hochschild_cohomology(a, n, {}, ComplexKind::Full).dimension;
}

TEST(Hochschild, GroundField) {
  const AlgebraPtr k = ground_field();
  EXPECT_EQ(full_dim(k, 0), 1u);
  for (std::size_t n = 1; n <= 3; ++n) EXPECT_EQ(full_dim(k, n), 0u);
}

TEST(Hochschild, KroneckerMatchesDerivationOracle) {
  const AlgebraPtr a = builtin_algebra("kronecker");
  const DerivationCount o = derivation_oracle(*a);
  EXPECT_EQ(o.center, 1u);
  EXPECT_EQ(o.outer(), 3u);
  EXPECT_EQ(full_dim(a, 0), o.center);
  EXPECT_EQ(full_dim(a, 1), o.outer());
  EXPECT_EQ(full_dim(a, 2), 0u);  // hereditary
}

TEST(Hochschild, A3Hereditary) {
  const AlgebraPtr a = builtin_algebra("a3");
  EXPECT_EQ(full_dim(a, 0), 1u);
  EXPECT_EQ(full_dim(a, 1), derivation_oracle(*a).outer());
  EXPECT_EQ(full_dim(a, 2), 0u);
}

TEST(Hochschild, BeilinsonHH2CountsCubicMonomials) {
  std::size_t cubics = 0;
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; i + j <= 3; ++j) ++cubics;
  ASSERT_EQ(cubics, 10u);
  const AlgebraPtr a = builtin_algebra("beilinson_p2");
  const HHSummary full = hochschild_cohomology(a, 2, {}, ComplexKind::Full);
  EXPECT_EQ(full.dimension, cubics);
  EXPECT_EQ(full.complex, ComplexKind::Full);
  EXPECT_EQ(hochschild_cohomology(a, 2, {}, ComplexKind::Reduced).dimension, cubics);
  EXPECT_EQ(full_dim(a, 1), derivation_oracle(*a).outer());
}

TEST(Hochschild, BudgetSelectsReducedComplex) {
  const AlgebraPtr a = builtin_algebra("beilinson_p2");
  const Budget tight{20'000};  // 15^4 does not fit
  const HHSummary s = hochschild_cohomology(a, 2, tight);
  EXPECT_EQ(s.complex, ComplexKind::Reduced);
  EXPECT_EQ(s.dimension, 10u);
  EXPECT_THROW(hochschild_cohomology(a, 2, tight, ComplexKind::Full), Error);
  EXPECT_THROW(hochschild_cohomology(a, 2, Budget{10}), Error);
  // No quiver data, so no reduced fallback.
  EXPECT_THROW(hochschild_cohomology(truncated_polynomial(3), 3, Budget{50}), Error);
}

TEST(Hochschild, BasisRepresentsDistinctClasses) {
  const AlgebraPtr a = builtin_algebra("beilinson_p2");
  const auto basis = hh_basis(a, 2);
  ASSERT_EQ(basis.size(), 10u);
  auto rng = make_rng(30);
  for (const auto& c : basis) {
    EXPECT_TRUE(is_cocycle(c.representative));
    EXPECT_FALSE(is_coboundary(c.representative));
  }
  for (int k = 0; k < 10; ++k) {
    Cochain comb(a, 2);
    bool nonzero = false;
    for (const auto& c : basis) {
      const Scalar s = testing::random_scalar(rng, 2);
      nonzero = nonzero || !s.is_zero();
      comb += c.representative.scaled(s);
    }
    if (nonzero) { EXPECT_FALSE(is_coboundary(comb)); }
  }
}

TEST(Hochschild, CoboundaryPreimage) {
  auto rng = make_rng(31);
  const AlgebraPtr a = builtin_algebra("kronecker");
  const Cochain v = random_cochain(a, 1, rng, 6);
  const auto pre = coboundary_preimage(differential(v));
  ASSERT_TRUE(pre.has_value());
  EXPECT_EQ(differential(*pre), differential(v));
  EXPECT_THROW(coboundary_preimage(Cochain(a, 0)), Error);
}

// Property: full and reduced complexes agree, and low degrees agree with the oracle.
TEST(HochschildProperty, ComplexesAndOracleAgree) {
  auto rng = make_rng(32);
  for (int trial = 0; trial < 25; ++trial) {
    const AlgebraPtr a = testing::random_quiver_algebra(rng, 9);
    const DerivationCount o = derivation_oracle(*a);
    std::vector<std::size_t> dims;
    for (std::size_t n = 0; n <= 2; ++n) {
      const std::size_t f = full_dim(a, n);
      EXPECT_EQ(hochschild_cohomology(a, n, {}, ComplexKind::Reduced).dimension, f) << "n = " << n;
      dims.push_back(f);
    }
    EXPECT_EQ(dims[0], o.center);
    EXPECT_EQ(dims[1], o.outer());
    EXPECT_EQ(hh_basis(a, 2).size(), dims[2]);
  }
}

TEST(HochschildProperty, CommutativeOracle) {
  for (std::size_t m = 1; m <= 4; ++m) {
    const AlgebraPtr a = truncated_polynomial(m);
    const DerivationCount o = derivation_oracle(*a);
    EXPECT_EQ(o.center, m);
    EXPECT_EQ(o.inner, 0u);
    EXPECT_EQ(full_dim(a, 0), m);
    EXPECT_EQ(full_dim(a, 1), o.derivations);
  }
}

TEST(ReducedComplex, EmbeddingIsChainMap) {
  const AlgebraPtr a = builtin_algebra("beilinson_p2");
  const ReducedComplex rc(a);
  auto rng = make_rng(33);
  for (std::size_t n = 0; n <= 1; ++n) {
    const SparseMatrix D = rc.differential_matrix(n);
    for (int k = 0; k < 5; ++k) {
      std::vector<Entry> es;
      for (int j = 0; j < 4; ++j) es.push_back({rng() % rc.dimension(n), testing::random_scalar(rng, 3)});
      const SparseVector v = SparseVector::from_unsorted(std::move(es));
      EXPECT_EQ(differential(rc.embed(n, v)), rc.embed(n + 1, D.multiply(v)));
    }
  }
  EXPECT_THROW(ReducedComplex(truncated_polynomial(2)), Error);
}

}  // namespace
}  // namespace hochdef
