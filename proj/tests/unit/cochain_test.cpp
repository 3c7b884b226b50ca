#include <gtest/gtest.h>

#include "hochdef/cochain.hpp"
#include "hochdef/error.hpp"
#include "hochdef/hochschild.hpp"
#include "hochdef/selftest.hpp"
#include "support/generators.hpp"

namespace hochdef {
namespace {

using testing::make_rng;

TEST(Cochain, SpaceDimension) {
  EXPECT_EQ(cochain_dimension(15, 2), 3375u);
  EXPECT_EQ(cochain_dimension(1, 40), 1u);
  EXPECT_FALSE(cochain_dimension(1000, 9).has_value());
  EXPECT_THROW(Cochain(builtin_algebra("beilinson_p2"), 40), Error);
}

TEST(Cochain, FlatIndexRoundTrip) {
  const Cochain f(builtin_algebra("kronecker"), 3);
  std::vector<std::size_t> t(3);
  for (std::size_t flat = 0; flat < f.space_dimension(); flat += 7) {
    const std::size_t out = f.decode(flat, t);
    EXPECT_EQ(f.flat_index(t, out), flat);
  }
}

TEST(Cochain, IdentityAndProductEvaluate) {
  const AlgebraPtr a = builtin_algebra("a3");
  const Cochain id = Cochain::identity(a);
  const Cochain mu = Cochain::product_map(a);
  const std::size_t ia = *a->find_label("a"), ib = *a->find_label("b"), iab = *a->find_label("a*b");
  const std::size_t one[] = {ia};
  EXPECT_EQ(id.evaluate(std::span<const std::size_t>(one)), SparseVector::unit(ia));
  const std::size_t pair[] = {ia, ib};
  EXPECT_EQ(mu.evaluate(std::span<const std::size_t>(pair)), SparseVector::unit(iab));
  const std::size_t rev[] = {ib, ia};
  EXPECT_TRUE(mu.evaluate(std::span<const std::size_t>(rev)).empty());
}

TEST(Cochain, MultilinearEvaluate) {
  const AlgebraPtr a = builtin_algebra("beilinson_p2");
  auto rng = make_rng(20);
  const Cochain f = random_cochain(a, 2, rng, 40);
  const SparseVector x = testing::random_element(rng, *a, 3), y = testing::random_element(rng, *a, 3);
  SparseVector expected;
  for (const auto& ex : x)
    for (const auto& ey : y) {
      const std::size_t t[] = {ex.index, ey.index};
      expected.add_scaled(f.evaluate(std::span<const std::size_t>(t)), ex.value * ey.value);
    }
  const SparseVector args[] = {x, y};
  EXPECT_EQ(f.evaluate(std::span<const SparseVector>(args)), expected);
}

TEST(Cochain, TextRoundTrip) {
  auto rng = make_rng(21);
  for (const char* name : {"a3", "kronecker", "beilinson_p2"}) {
    const AlgebraPtr a = builtin_algebra(name);
    std::vector<Cochain> cs;
    for (std::size_t n = 0; n <= 3; ++n) cs.push_back(random_cochain(a, n, rng, 12));
    cs.push_back(Cochain(a, 2));
    EXPECT_EQ(parse_cochains(a, write_cochains(cs)), cs) << name;
  }
}

TEST(Cochain, TextFormatFrozen) {
  const AlgebraPtr a = builtin_algebra("beilinson_p2");
  const auto cs = parse_cochains(a, "cochain degree 2\nf(x2,y1) = -x0*y2\nend\n");
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(write_cochains(cs), "cochain degree 2\nf(x2,y1) = -x0*y2\nend\n");
}

TEST(Cochain, ParseErrorsCarryLine) {
  const AlgebraPtr a = builtin_algebra("a3");
  try {
    parse_cochains(a, "cochain degree 1\nf(a) = b\nf(zz) = a\nend\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_cochains(a, "cochain degree 1\nf(a,b) = b\nend\n"), Error);
  EXPECT_THROW(parse_cochains(a, "cochain degree 1\nf(a) = b\n"), Error);
}

TEST(Cochain, MismatchedAlgebras) {
  Cochain f(builtin_algebra("a3"), 1);
  EXPECT_THROW(f += Cochain(builtin_algebra("kronecker"), 1), Error);
  EXPECT_THROW(f += Cochain(builtin_algebra("a3"), 2), Error);
}

// Property: the differential squares to zero and is the alternating sum of its cofaces.
TEST(CochainProperty, DifferentialSquaresToZero) {
  auto rng = make_rng(22);
  for (int trial = 0; trial < 25; ++trial) {
    const AlgebraPtr a = trial % 5 == 0 ? truncated_polynomial(2 + trial % 3) : testing::random_quiver_algebra(rng, 8);
    for (std::size_t n = 0; n <= 2; ++n) {
      const Cochain f = random_cochain(a, n, rng, 10);
      const Cochain df = differential(f);
      EXPECT_TRUE(differential(df).is_zero());
      Cochain sum(a, n + 1);
      for (std::size_t j = 0; j <= n + 1; ++j) {
        if (j % 2 == 0) {
          sum += coface(f, j);
        } else {
          sum -= coface(f, j);
        }
      }
      EXPECT_EQ(sum, df);
    }
  }
}

// Property: the differential matrix applied to coordinates agrees with the cochain map.
TEST(CochainProperty, MatrixAgreesWithMap) {
  auto rng = make_rng(23);
  const AlgebraPtr a = builtin_algebra("kronecker");
  for (std::size_t n = 0; n <= 2; ++n) {
    const SparseMatrix D = differential_matrix(*a, n);
    for (int k = 0; k < 5; ++k) {
      const Cochain f = random_cochain(a, n, rng, 6);
      EXPECT_EQ(D.multiply(f.coeffs()), differential(f).coeffs());
    }
  }
}

}  // namespace
}  // namespace hochdef
