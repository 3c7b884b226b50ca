#include <gtest/gtest.h>

#include "hochdef/error.hpp"
#include "hochdef/lattice.hpp"
#include "hochdef/selftest.hpp"
#include "support/generators.hpp"

namespace hochdef {
namespace {

using linalg::DenseMatrix;
using testing::make_rng;

ClassVector cls(std::initializer_list<long> xs) {
  ClassVector v;
  for (long x : xs) v.push_back(Scalar(x));
  return v;
}

// chi(O(i), O(j)) on P^m is binom(j - i + m, m); line bundles as the bookkeeping oracle.
Scalar chi_line_bundles(long i, long j, long m) { return binomial(j - i + m, m); }

TEST(Lattice, ParseAndWrite) {
  const GramLattice l = builtin_lattice("p2");
  EXPECT_EQ(l.size(), 3u);
  EXPECT_EQ(l.ambient_dimension(), 2u);
  EXPECT_EQ(l.labels()[1], "O(1)");
  EXPECT_EQ(parse_lattice(write_lattice(l)), l);
  for (long i = 0; i < 3; ++i)
    for (long j = 0; j < 3; ++j) EXPECT_EQ(l.form()(i, j), i <= j ? chi_line_bundles(i, j, 2) : Scalar(0));
}

TEST(Lattice, ParseErrors) {
  EXPECT_THROW(parse_lattice("n 2\nd 1\nrow 1 2\n"), Error);
  EXPECT_THROW(parse_lattice("n 2\nd 1\nrow 1 2\nrow 1 1\n"), Error);  // not unitriangular
  EXPECT_THROW(parse_lattice("n 2\nd 1\nrow 1 2 3\nrow 0 1\n"), Error);
  EXPECT_THROW(parse_lattice("n 2\nrow 1 2\nrow 0 1\n"), Error);
  EXPECT_THROW(parse_lattice("n 2\nd 1\nrow 1 2\nrow 0 1\nfoo 3\n"), Error);
  try {
    parse_lattice("n 2\nd 1\nrow 1 q\nrow 0 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 7u);
  }
}

TEST(Lattice, BuiltinsMatchDataFiles) {
  for (const char* name : {"p1", "p2", "p1_perturbed"}) {
    EXPECT_EQ(read_lattice_file(std::string(HOCHDEF_DATA_DIR) + "/" + name + ".lat"), builtin_lattice(name)) << name;
  }
}

TEST(Lattice, LeftMutationOnP1) {
  const GramLattice l = mutate(builtin_lattice("p1"), 'L', 1);
  // L_O O(1) = O(-1), with [O(k)] = (1 - k)[O] + k[O(1)].
  EXPECT_EQ(l.classes()[0], cls({2, -1}));
  EXPECT_EQ(l.classes()[1], cls({1, 0}));
  EXPECT_EQ(l.gram(), DenseMatrix::from_rows({{Scalar(1), Scalar(2)}, {Scalar(0), Scalar(1)}}));
  EXPECT_EQ(l.gram()(0, 1), chi_line_bundles(-1, 0, 1));
  EXPECT_THROW(mutate(l, 'L', 2), Error);
  EXPECT_THROW(mutate(l, 'R', 0), Error);
  EXPECT_THROW(mutate(l, 'X', 1), Error);
}

TEST(Lattice, SerreOperator) {
  const DenseMatrix S = serre_operator(builtin_lattice("p1"));
  EXPECT_EQ(S, DenseMatrix::from_rows({{Scalar(-3), Scalar(-2)}, {Scalar(2), Scalar(1)}}));
  // S [O] = -[O(-2)].
  EXPECT_EQ(S.multiply(cls({1, 0})), cls({-3, 2}));
  const GramLattice one(DenseMatrix::identity(1), 0);
  EXPECT_EQ(serre_operator(one), DenseMatrix::identity(1));
}

// Property: the defining identity, checked by solving it column by column instead of
// inverting G.
TEST(LatticeProperty, SerreDefiningIdentity) {
  auto rng = make_rng(80);
  for (int trial = 0; trial < 30; ++trial) {
    const GramLattice l = random_lattice(2 + rng() % 5, rng, 5);
    const DenseMatrix S = serre_operator(l);
    const std::size_t n = l.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        ClassVector x(n, Scalar(0)), y(n, Scalar(0));
        x[i] = Scalar(1);
        y[j] = Scalar(1);
        EXPECT_EQ(l.chi(x, y), l.chi(y, S.multiply(x)));
      }
  }
}

TEST(Lattice, HelixChecks) {
  EXPECT_TRUE(helix_check(builtin_lattice("p1")).passed());
  EXPECT_TRUE(helix_check(builtin_lattice("p2")).passed());
  const Report bad = helix_check(builtin_lattice("p1_perturbed"));
  EXPECT_FALSE(bad.passed());
  bool witness = false;
  for (const auto& c : bad.checks) witness = witness || (!c.passed && !c.detail.empty());
  EXPECT_TRUE(witness);
}

TEST(Lattice, HelixContinuationOnP1) {
  // R through O(1) sends O to O(2) = -[O] + 2[O(1)].
  const GramLattice l = mutate(builtin_lattice("p1"), 'R', 1);
  EXPECT_EQ(l.classes()[1], cls({-1, 2}));
}

TEST(Lattice, RankGcd) {
  EXPECT_EQ(rank_gcd(builtin_lattice("p2")), Scalar(1));
  const GramLattice twos(DenseMatrix::identity(2), 1, std::vector<Scalar>{Scalar(2), Scalar(4)});
  EXPECT_EQ(rank_gcd(twos), Scalar(2));
  const GramLattice ones(DenseMatrix::identity(2), 1, std::vector<Scalar>{Scalar(1), Scalar(1)});
  EXPECT_EQ(rank_gcd(ones), Scalar(1));
  EXPECT_THROW(rank_gcd(GramLattice(DenseMatrix::identity(2), 1)), Error);
}

TEST(Lattice, MutationWords) {
  const auto w = parse_mutation_word("R1 L2,R10");
  ASSERT_EQ(w.size(), 3u);
  EXPECT_EQ(w[2].side, 'R');
  EXPECT_EQ(w[2].index, 10u);
  EXPECT_THROW(parse_mutation_word("Q1"), Error);
  EXPECT_THROW(parse_mutation_word("R"), Error);
}

TEST(Lattice, BraidOnP2) {
  const GramLattice l = builtin_lattice("p2");
  const GramLattice a = mutate(l, {{'R', 1}, {'R', 2}, {'R', 1}});
  const GramLattice b = mutate(l, {{'R', 2}, {'R', 1}, {'R', 2}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.gram(), b.gram());
}

// Property suite over random unit upper-triangular Gram matrices.
TEST(LatticeProperty, MutationSuite) {
  auto rng = make_rng(81);
  const Report r = mutation_suite(150, 6, 5, rng);
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

TEST(LatticeProperty, MutationsPreserveRanksAdditively) {
  auto rng = make_rng(82);
  const GramLattice p2 = builtin_lattice("p2");
  GramLattice l = p2;
  for (int k = 0; k < 20; ++k) {
    l = mutate(l, rng() % 2 ? 'L' : 'R', 1 + rng() % 2);
    const GramLattice reread = parse_lattice(write_lattice(l));
    EXPECT_EQ(reread.gram(), l.gram());
    for (std::size_t i = 0; i < l.size(); ++i) EXPECT_EQ((*reread.ranks())[i], l.rank_of(l.classes()[i]));
  }
}

}  // namespace
}  // namespace hochdef
