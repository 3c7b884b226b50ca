#include <gtest/gtest.h>

#include "hochdef/deformation.hpp"
#include "hochdef/error.hpp"
#include "hochdef/hochschild.hpp"
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

// Random cocycle: a combination of HH^2 representatives plus a coboundary.
Cochain random_cocycle(const AlgebraPtr& a, std::mt19937_64& rng) {
  Cochain u = differential(random_cochain(a, 1, rng, 2 * a->dimension()));
  for (const auto& c : hh_basis(a, 2)) u += c.representative.scaled(testing::random_scalar(rng, 2));
  return u;
}

TEST(Deformation, ZeroCocycleGivesVertexIdempotents) {
  const AlgebraPtr a = builtin_algebra("a3");
  const DeformedAlgebra D{Cochain(a, 2)};
  const IdempotentData idem = solve_idempotents(D);
  const auto p = vertex_idempotents(*a);
  ASSERT_EQ(idem.vertices.size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_EQ(idem.vertices[k].idempotent, (DefElem{p[k].coeffs, {}}));
    EXPECT_TRUE(idem.vertices[k].lambda.is_zero());
  }
  const Report r = verify_deformation(D);
  EXPECT_TRUE(r.passed()) << failures(r);
}

TEST(Deformation, RejectsNonCocycles) {
  const AlgebraPtr a = builtin_algebra("kronecker");
  auto rng = make_rng(40);
  Cochain bad(a, 2);
  while (is_cocycle(bad)) bad = random_cochain(a, 2, rng, 5);
  try {
    DeformedAlgebra D(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotACocycle);
  }
  EXPECT_THROW(DeformedAlgebra(Cochain(a, 1)), Error);
}

TEST(Deformation, BeilinsonRepresentativesPassPipeline) {
  const AlgebraPtr a = builtin_algebra("beilinson_p2");
  for (const auto& c : hh_basis(a, 2)) {
    const DeformedAlgebra D(c.representative);
    const Report r = verify_deformation(D);
    EXPECT_TRUE(r.passed()) << failures(r);
  }
}

// Property: random cocycles, including coboundaries that make lambda, c and d nonzero.
TEST(DeformationProperty, RandomCocyclesPassPipeline) {
  auto rng = make_rng(41);
  std::size_t nontrivial = 0;
  for (const char* name : {"a3", "a3_rel", "kronecker", "beilinson_p2"}) {
    const AlgebraPtr a = builtin_algebra(name);
    for (int k = 0; k < 4; ++k) {
      const DeformedAlgebra D(random_cocycle(a, rng));
      const Report r = verify_deformation(D);
      EXPECT_TRUE(r.passed()) << name << "\n" << failures(r);
      const IdempotentData idem = solve_idempotents(D);
      for (const auto& v : idem.vertices) nontrivial += (!v.lambda.is_zero() || !v.c.empty()) ? 1 : 0;
      for (const auto& row : idem.d)
        for (const auto& dij : row) nontrivial += dij.empty() ? 0 : 1;
      EXPECT_EQ(deformation_unit(D), D.unit());
    }
  }
  EXPECT_GT(nontrivial, 0u);
}

// Hom blocks: 0 below the diagonal, k[eps] on it, twice the undeformed block above it.
TEST(DeformationProperty, HomBlockDimensions) {
  auto rng = make_rng(42);
  for (int trial = 0; trial < 8; ++trial) {
    const AlgebraPtr a = testing::random_quiver_algebra(rng, 9);
    const DeformedAlgebra D(random_cocycle(a, rng));
    const IdempotentData idem = solve_idempotents(D);
    const std::size_t n = idem.vertices.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t got = deformed_hom(D, idem, i, j).dimension();
        if (i > j) { EXPECT_EQ(got, 0u); }
        if (i == j) { EXPECT_EQ(got, 2u); }
        if (i < j) { EXPECT_EQ(got, 2 * hom_dimension(*a, i, j)); }
      }
    const Report r = verify_hom_decomposition(D, idem);
    EXPECT_TRUE(r.passed()) << failures(r);
  }
}

TEST(DeformationProperty, SolutionsAreConjugate) {
  auto rng = make_rng(43);
  const AlgebraPtr a = builtin_algebra("beilinson_p2");
  for (int k = 0; k < 3; ++k) {
    const DeformedAlgebra D(random_cocycle(a, rng));
    const auto first = solve_idempotents(D, IdempotentChoice::Deterministic);
    const auto second = solve_idempotents(D, IdempotentChoice::PreferB);
    for (std::size_t v = 0; v < first.vertices.size(); ++v) {
      EXPECT_TRUE(conjugating_elements(D, first.vertices[v].idempotent, second.vertices[v].idempotent).has_value());
    }
  }
}

TEST(DeformationProperty, IdempotentIdentities) {
  auto rng = make_rng(44);
  const AlgebraPtr a = builtin_algebra("beilinson_p2");
  const DeformedAlgebra D(random_cocycle(a, rng));
  std::vector<SparseVector> samples;
  for (int k = 0; k < 6; ++k) samples.push_back(testing::random_element(rng, *a, 4));
  const Report r = verify_idempotent_identities(D, samples);
  EXPECT_TRUE(r.passed()) << failures(r);
}

TEST(DeformationProperty, CoboundaryMapsAreIsomorphisms) {
  auto rng = make_rng(45);
  for (const char* name : {"a3", "kronecker", "beilinson_p2"}) {
    const AlgebraPtr a = builtin_algebra(name);
    for (int k = 0; k < 4; ++k) {
      const Cochain v = random_cochain(a, 1, rng, 2 * a->dimension());
      const Report r = verify_coboundary_isomorphism(v);
      EXPECT_TRUE(r.passed()) << name << "\n" << failures(r);
    }
  }
}

// Associativity of the deformed product holds exactly for cocycles.
TEST(DeformationProperty, AssociativityIffCocycle) {
  auto rng = make_rng(46);
  for (int trial = 0; trial < 30; ++trial) {
    const AlgebraPtr a = testing::random_quiver_algebra(rng, 8);
    const Cochain u = trial % 2 ? random_cochain(a, 2, rng, 1 + rng() % 6) : random_cocycle(a, rng);
    EXPECT_EQ(!DeformedAlgebra::unchecked(u).associativity_failure().has_value(), is_cocycle(u));
  }
}

}  // namespace
}  // namespace hochdef
