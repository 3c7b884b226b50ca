#include <gtest/gtest.h>

#include "hochdef/error.hpp"
#include "hochdef/hkr.hpp"
#include "support/generators.hpp"

namespace hochdef {
namespace {

using testing::make_rng;

Polynomial P(std::string_view s, std::size_t d) { return Polynomial::parse(s, d); }

Polynomial random_poly(std::mt19937_64& rng, std::size_t d, std::size_t terms, std::uint32_t max_exp) {
  Polynomial p(d);
  for (std::size_t k = 0; k < terms; ++k) {
    Monomial m(d);
    for (auto& e : m) e = static_cast<std::uint32_t>(rng() % (max_exp + 1));
    p += Polynomial::monomial(m, testing::random_scalar(rng, 3));
  }
  return p;
}

PolyDerivation random_derivation(std::mt19937_64& rng, std::size_t d) {
  PolyDerivation D;
  for (std::size_t i = 0; i < d; ++i) D.coefficients.push_back(random_poly(rng, d, 2, 2));
  return D;
}

TEST(Polynomial, ParseAndPrint) {
  EXPECT_EQ(P("3/2*x1^2*x2 - x3 + 4", 3).to_string(), "3/2*x1^2*x2 - x3 + 4");
  EXPECT_EQ(P("x1*x1 - x1^2", 1).to_string(), "0");
  EXPECT_EQ(P("2*x2*3", 2).to_string(), "6*x2");
  EXPECT_THROW(P("x4", 3), Error);
  EXPECT_THROW(P("x1 +", 1), Error);
  EXPECT_THROW(P("", 1), Error);
  EXPECT_THROW(Polynomial(0), Error);
}

TEST(Polynomial, Derivative) {
  EXPECT_EQ(P("x1^3*x2 + x2", 2).derivative(0), P("3*x1^2*x2", 2));
  EXPECT_EQ(P("x1^3*x2 + x2", 2).derivative(1), P("x1^3 + 1", 2));
}

TEST(Hkr, Examples) {
  const auto dx = PolyDerivation::partial(2, 0), dy = PolyDerivation::partial(2, 1);
  const PolyCochain c = antisymmetrize({dx, dy});
  EXPECT_EQ(c({P("x1", 2), P("x2", 2)}), P("1", 2));
  EXPECT_EQ(c({P("x1^2", 2), P("x2^2", 2)}), P("4*x1*x2", 2));
  EXPECT_TRUE(antisymmetrize({dx, dx})({P("x1^2*x2", 2), P("x1*x2^3", 2)}).is_zero());
  EXPECT_THROW(c({P("x1", 2)}), Error);
  EXPECT_THROW(antisymmetrize({}), Error);
  EXPECT_THROW(antisymmetrize({dx, PolyDerivation::partial(3, 0)}), Error);
}

// The differential expanded by hand for n = 2 on (x, y, x): x c(y,x) - c(xy, x) + c(x, yx) - c(x,y) x.
TEST(Hkr, FiveTermExpansion) {
  const PolyCochain c = antisymmetrize({PolyDerivation::partial(2, 0), PolyDerivation::partial(2, 1)});
  const Polynomial x = P("x1", 2), y = P("x2", 2);
  const Polynomial manual = x * c({y, x}) - c({x * y, x}) + c({x, y * x}) - c({x, y}) * x;
  EXPECT_EQ(coboundary_value(c, {x, y, x}), manual);
  EXPECT_TRUE(manual.is_zero());
}

TEST(Hkr, CocycleChecks) {
  const auto d = [](std::size_t i) { return PolyDerivation::partial(3, i); };
  EXPECT_TRUE(verify_hkr_cocycle(antisymmetrize({PolyDerivation::partial(2, 0), PolyDerivation::partial(2, 1)}), 4, 4).passed());
  EXPECT_TRUE(verify_hkr_cocycle(antisymmetrize({PolyDerivation::partial(1, 0)}), 4, 4).passed());
  EXPECT_TRUE(verify_hkr_cocycle(antisymmetrize({d(0), d(1), d(2)}), 3, 4).passed());
  EXPECT_THROW(verify_hkr_cocycle(antisymmetrize({d(0), d(1), d(2), d(0)}), 2, 4), Error);
  EXPECT_TRUE(hkr_sweep(2, 2, 3, 4).passed());
}

TEST(Hkr, MonomialTupleCounts) {
  // Tuples of 4 monomials in 3 variables with total degree <= 4: monomials of degree <= 4 in 12 variables.
  EXPECT_EQ(monomial_tuples(3, 4, 4).size(), 1820u);
  EXPECT_EQ(monomial_tuples(2, 3, 0).size(), 1u);
  EXPECT_EQ(monomial_tuples(1, 2, 2).size(), 6u);  // (0,0) (0,1) (0,2) (1,0) (1,1) (2,0)
}

// Property: eps is alternating and multilinear in its derivations.
TEST(HkrProperty, AlternatingAndMultilinear) {
  auto rng = make_rng(70);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 1 + rng() % 3;
    const PolyDerivation f = random_derivation(rng, d), g = random_derivation(rng, d), h = random_derivation(rng, d);
    const std::vector<Polynomial> args{random_poly(rng, d, 2, 2), random_poly(rng, d, 2, 2)};
    const Polynomial fg = antisymmetrize({f, g})(args);
    EXPECT_EQ(antisymmetrize({g, f})(args), Scalar(-1) * fg);
    EXPECT_TRUE(antisymmetrize({f, f})(args).is_zero());
    PolyDerivation sum;
    const Scalar s = testing::random_scalar(rng, 3);
    for (std::size_t i = 0; i < d; ++i) sum.coefficients.push_back(f.coefficients[i] + s * h.coefficients[i]);
    EXPECT_EQ(antisymmetrize({sum, g})(args), fg + s * antisymmetrize({h, g})(args));
  }
}

// Property: every random polynomial derivation gives a cocycle.
TEST(HkrProperty, RandomDerivationsAreCocycles) {
  auto rng = make_rng(71);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t d = 1 + rng() % 3, n = 1 + rng() % 2;
    std::vector<PolyDerivation> fs;
    for (std::size_t k = 0; k < n; ++k) fs.push_back(random_derivation(rng, d));
    const Report r = verify_hkr_cocycle(antisymmetrize(fs), 3, 4);
    EXPECT_TRUE(r.passed()) << r.checks.front().detail;
  }
}

TEST(Hkr, DerivationParse) {
  const PolyDerivation D = PolyDerivation::parse("x2;0;1", 3);
  EXPECT_EQ(D(P("x1*x3", 3)), P("x2*x3 + x1", 3));
  EXPECT_THROW(PolyDerivation::parse("1;0", 3), Error);
}

}  // namespace
}  // namespace hochdef
