#include <gtest/gtest.h>

#include "hochdef/error.hpp"
#include "hochdef/eulerian.hpp"
#include "hochdef/hochschild.hpp"
#include "hochdef/linalg.hpp"
#include "hochdef/selftest.hpp"
#include "support/generators.hpp"

namespace hochdef {
namespace {

using testing::make_rng;

std::string failures(const Report& r) {
  std::string s;
  for (const auto& c : r.checks)
    if (!c.passed) s += c.name + ": " + c.detail + "\n";
  return s;
}

// Closed form for the first idempotent, sign-twisted to the anchor e_2^(1) = (id + (12))/2:
// coefficient of s is sgn(s) (-1)^{des} / (n binom(n - 1, des)), des counted on s^{-1}.
SymGroupElement first_idempotent_oracle(std::size_t n) {
  SymGroupElement e(n);
  for (const auto& s : Permutation::all(n)) {
    const auto des = static_cast<long>(s.inverse().descents());
    Scalar c = Scalar(1) / (Scalar(static_cast<long>(n)) * binomial(static_cast<long>(n) - 1, des));
    if (des % 2) c = -c;
    e.add(s, c * Scalar(s.sign()));
  }
  return e;
}

TEST(Permutation, GroupLaws) {
  const auto all = Permutation::all(4);
  EXPECT_EQ(all.size(), 24u);
  auto rng = make_rng(50);
  for (int k = 0; k < 30; ++k) {
    const Permutation& p = all[rng() % 24];
    const Permutation& q = all[rng() % 24];
    EXPECT_EQ((p * q).sign(), p.sign() * q.sign());
    EXPECT_EQ(p * p.inverse(), Permutation::identity(4));
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ((p * q)(i), p(q(i)));
  }
  EXPECT_THROW(Permutation({0, 0, 1}), Error);
}

TEST(Eulerian, FirstIdempotentMatchesClosedForm) {
  for (std::size_t n = 1; n <= 5; ++n) {
    EXPECT_EQ(eulerian_idempotents(n).front(), first_idempotent_oracle(n)) << "n = " << n;
  }
}

TEST(Eulerian, FrozenSmallCases) {
  const auto e2 = eulerian_idempotents(2);
  EXPECT_EQ(e2[0].to_string(), "1/2*[1 2] + 1/2*[2 1]");
  EXPECT_EQ(e2[1].to_string(), "1/2*[1 2] - 1/2*[2 1]");
  const auto e3 = eulerian_idempotents(3);
  ASSERT_EQ(e3.size(), 3u);
  EXPECT_EQ(e3[0].to_string(), "1/3*[1 2 3] + 1/6*[1 3 2] + 1/6*[2 1 3] - 1/6*[2 3 1] - 1/6*[3 1 2] - 1/3*[3 2 1]");
  EXPECT_EQ(e3[2], SymGroupElement::antisymmetrizer(3).scaled(Scalar(1, 6)));
  EXPECT_EQ(SymGroupElement::parse(e3[0].to_string()), e3[0]);
}

TEST(Eulerian, IdentitiesUpToFive) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const Report r = verify_eulerian(n);
    EXPECT_TRUE(r.passed()) << "n = " << n << "\n" << failures(r);
  }
}

TEST(Eulerian, Bounds) {
  EXPECT_THROW(eulerian_idempotents(7), Error);
  EXPECT_THROW(eulerian_idempotents(4, 3), Error);
  EXPECT_THROW(lambda_operation(0, 1), Error);
}

TEST(Eulerian, ChainCompatibility) {
  for (std::size_t m : {2, 3})
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::size_t i = 1; i <= n; ++i) {
        const Report r = chain_compatibility_check(truncated_polynomial(m), n, i);
        EXPECT_TRUE(r.passed()) << "m = " << m << ", n = " << n << ", i = " << i << "\n" << failures(r);
      }
  EXPECT_THROW(chain_compatibility_check(builtin_algebra("a3"), 1, 1), Error);
}

// A wrong convention is caught with a witness.
TEST(Eulerian, WrongConventionsAreDetected) {
  const EulerianConvention unsigned_family{false, true};
  EXPECT_FALSE(verify_eulerian(2, 6, unsigned_family).passed());
  EXPECT_FALSE(chain_compatibility_check(truncated_polynomial(2), 1, 1, 6, unsigned_family).passed());
  const EulerianConvention plain_descents{true, false};
  bool caught = false;
  for (std::size_t n = 3; n <= 4 && !caught; ++n)
    for (std::size_t i = 1; i <= n && !caught; ++i) {
      const Report r = chain_compatibility_check(truncated_polynomial(2), n, i, 6, plain_descents);
      caught = !r.passed();
      if (caught) {
        bool witness = false;
        for (const auto& c : r.checks) witness = witness || (!c.passed && !c.detail.empty());
        EXPECT_TRUE(witness);
      }
    }
  EXPECT_TRUE(caught);
}

// Property: the action is a left action.
TEST(EulerianProperty, PermutationActionIsLeft) {
  auto rng = make_rng(51);
  const AlgebraPtr b = truncated_polynomial(3);
  const auto all = Permutation::all(3);
  for (int k = 0; k < 20; ++k) {
    SymGroupElement s(3), t(3);
    s.add(all[rng() % 6], Scalar(1));
    t.add(all[rng() % 6], Scalar(1));
    const Cochain f = random_cochain(b, 3, rng, 6);
    EXPECT_EQ(perm_action(s * t, f), perm_action(s, perm_action(t, f)));
  }
}

// Property: on a commutative algebra the idempotents split the cocycle space.
TEST(EulerianProperty, CocycleSpaceDecomposes) {
  for (std::size_t m : {2, 3}) {
    const AlgebraPtr b = truncated_polynomial(m);
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto Z = linalg::kernel_basis(differential_matrix(*b, n));
      std::size_t total = 0;
      for (const auto& e : eulerian_idempotents(n)) {
        std::vector<SparseVector> images;
        for (const auto& z : Z) {
          const Cochain ez = perm_action(e, Cochain(b, n, z));
          EXPECT_TRUE(is_cocycle(ez));
          if (!ez.is_zero()) images.push_back(ez.coeffs());
        }
        if (!images.empty()) total += linalg::rank(SparseMatrix(Cochain(b, n).space_dimension(), std::move(images)));
      }
      EXPECT_EQ(total, Z.size()) << "m = " << m << ", n = " << n;
    }
  }
}

}  // namespace
}  // namespace hochdef
