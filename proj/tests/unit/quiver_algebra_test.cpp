#include <gtest/gtest.h>

#include "hochdef/algebra.hpp"
#include "hochdef/error.hpp"
#include "hochdef/linalg.hpp"
#include "hochdef/oracle.hpp"
#include "hochdef/selftest.hpp"
#include "support/generators.hpp"

namespace hochdef {
namespace {

using testing::make_rng;

ErrorKind kind_of(std::string_view text) {
  try {
    parse_quiver(text);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return ErrorKind::Io;
}

// dim e_j A e_i from the multiplication table alone.
std::size_t block_rank(const Algebra& a, const SparseVector& left, const SparseVector& right) {
  std::vector<SparseVector> rows;
  for (std::size_t b = 0; b < a.dimension(); ++b) {
    const SparseVector v = a.multiply(a.multiply(left, SparseVector::unit(b)), right);
    if (!v.empty()) rows.push_back(v);
  }
  return rows.empty() ? 0 : linalg::rank(SparseMatrix(a.dimension(), std::move(rows)));
}

TEST(QuiverParse, A3) {
  const QuiverPresentation q = parse_quiver("vertices 3\narrow a 1 2\narrow b 2 3\n");
  EXPECT_EQ(q.quiver.arrows().size(), 2u);
  EXPECT_TRUE(q.relations.empty());
  const QuiverPresentation r = parse_quiver("vertices 3\narrow a 1 2\narrow b 2 3\nrel a*b\n");
  ASSERT_EQ(r.relations.size(), 1u);
  EXPECT_EQ(r.relations[0].terms.front().path.length(), 2u);
}

TEST(QuiverParse, RejectsBadInput) {
  EXPECT_EQ(kind_of("vertices 3\narrow a 1 2\narrow b 2 3\nrel a\n"), ErrorKind::NonAdmissible);
  EXPECT_EQ(kind_of("vertices 2\narrow a 1 3\n"), ErrorKind::DanglingVertex);
  EXPECT_EQ(kind_of("vertices 2\narrow a 1 2\narrow a 1 2\n"), ErrorKind::DuplicateLabel);
  EXPECT_EQ(kind_of("vertices 2\narrow p1 1 2\n"), ErrorKind::DuplicateLabel);
  EXPECT_EQ(kind_of("vertices 2\narrow a 1 2\narrow b 2 1\n"), ErrorKind::CyclicQuiver);
  EXPECT_EQ(kind_of("vertices 2\narrow a 1 2\nrel a*a\n"), ErrorKind::NonAdmissible);
  EXPECT_EQ(kind_of("vertices 2\narow a 1 2\n"), ErrorKind::Syntax);
  EXPECT_EQ(kind_of("vertices 3\narrow a 1 2\narrow b 2 3\narrow c 1 3\nrel a*b - c*c\n"), ErrorKind::NonAdmissible);
}

TEST(QuiverParse, ErrorsCarryPosition) {
  try {
    parse_quiver("vertices 2\narrow a 1 2\nrel a*zz\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_GT(e.column(), 4u);
  }
}

TEST(Algebra, FrozenDimensions) {
  EXPECT_EQ(builtin_algebra("a3")->dimension(), 6u);
  EXPECT_EQ(builtin_algebra("a3_rel")->dimension(), 5u);
  EXPECT_EQ(builtin_algebra("kronecker")->dimension(), 4u);
  EXPECT_EQ(builtin_algebra("beilinson_p2")->dimension(), 15u);
  EXPECT_EQ(truncated_polynomial(3)->dimension(), 3u);
  EXPECT_EQ(ground_field()->dimension(), 1u);
}

TEST(Algebra, DimensionsAgreeWithPathOracle) {
  for (const char* name : {"a3", "a3_rel", "kronecker", "beilinson_p2"}) {
    const AlgebraPtr a = builtin_algebra(name);
    const QuiverData* q = a->quiver_data();
    ASSERT_NE(q, nullptr);
    EXPECT_EQ(path_algebra_dimension(q->quiver, q->relations), a->dimension()) << name;
  }
}

TEST(Algebra, BuiltinsMatchDataFiles) {
  for (const char* name : {"a3", "a3_rel", "kronecker", "beilinson_p2"}) {
    const AlgebraPtr file = build_algebra(read_quiver_file(std::string(HOCHDEF_DATA_DIR) + "/" + name + ".qv"), name);
    EXPECT_EQ(file->labels(), builtin_algebra(name)->labels()) << name;
  }
}

TEST(Algebra, LabelsAndExceptionalOrder) {
  const AlgebraPtr a = builtin_algebra("a3");
  EXPECT_EQ(a->labels(), (std::vector<std::string>{"p1", "p2", "p3", "a", "b", "a*b"}));
  // Sinks first: vertex 3, then 2, then 1.
  EXPECT_EQ(a->quiver_data()->order, (std::vector<std::size_t>{2, 1, 0}));
}

TEST(Algebra, RelationsHoldInQuotient) {
  const AlgebraPtr a = builtin_algebra("beilinson_p2");
  EXPECT_THROW(parse_element(*a, "x1*y0"), Error);
  for (auto [x, y] : {std::pair{"x0", "y1"}, {"x0", "y2"}, {"x1", "y2"}}) {
    const std::string xs(x), ys(y);
    const auto lhs = a->multiply(parse_element(*a, xs), parse_element(*a, ys));
    const std::string xs2 = "x" + ys.substr(1), ys2 = "y" + xs.substr(1);
    const auto rhs = a->multiply(parse_element(*a, xs2), parse_element(*a, ys2));
    EXPECT_EQ(lhs, rhs) << xs << ys;
  }
  const AlgebraPtr r = builtin_algebra("a3_rel");
  EXPECT_TRUE(r->multiply(parse_element(*r, "a"), parse_element(*r, "b")).empty());
}

TEST(Algebra, ElementFormatRoundTrip) {
  const AlgebraPtr a = builtin_algebra("beilinson_p2");
  auto rng = make_rng(10);
  for (int k = 0; k < 30; ++k) {
    const SparseVector v = testing::random_element(rng, *a, 1 + rng() % 5);
    EXPECT_EQ(parse_element(*a, format_element(*a, v)), v);
  }
  EXPECT_EQ(format_element(*a, {}), "0");
  EXPECT_THROW(parse_element(*a, "x7"), Error);
}

TEST(Algebra, HomDimensionsFrozen) {
  const AlgebraPtr p2 = builtin_algebra("beilinson_p2");
  EXPECT_EQ(hom_dimension(*p2, 0, 2), 6u);
  EXPECT_EQ(hom_dimension(*p2, 0, 1), 3u);
  EXPECT_EQ(hom_dimension(*p2, 2, 0), 0u);
  EXPECT_EQ(hom_dimension(*builtin_algebra("kronecker"), 0, 1), 2u);
}

// Property: blocks partition the basis, vanish below the diagonal, and agree with ranks of
// e_j A e_i computed from the product table.
TEST(AlgebraProperty, BlocksOnRandomQuivers) {
  auto rng = make_rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const AlgebraPtr a = testing::random_quiver_algebra(rng, 14);
    const QuiverData* q = a->quiver_data();
    EXPECT_EQ(path_algebra_dimension(q->quiver, q->relations), a->dimension());
    EXPECT_FALSE(a->associativity_failure().has_value());
    const auto e = vertex_idempotents(*a);
    const std::size_t n = e.size();
    std::size_t total = 0;
    SparseVector sum;
    for (std::size_t i = 0; i < n; ++i) {
      sum += e[i].coeffs;
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t h = hom_dimension(*a, i, j);
        total += h;
        if (i > j) { EXPECT_EQ(h, 0u); }
        EXPECT_EQ(h, block_rank(*a, e[j].coeffs, e[i].coeffs));
      }
    }
    EXPECT_EQ(total, a->dimension());
    EXPECT_EQ(sum, a->unit());
    for (std::size_t b = 0; b < a->dimension(); ++b) {
      EXPECT_EQ(a->multiply(a->unit(), SparseVector::unit(b)), SparseVector::unit(b));
      EXPECT_EQ(a->multiply(SparseVector::unit(b), a->unit()), SparseVector::unit(b));
    }
  }
}

TEST(Algebra, TruncatedPolynomial) {
  const AlgebraPtr a = truncated_polynomial(3);
  EXPECT_TRUE(a->is_commutative());
  EXPECT_EQ(a->labels(), (std::vector<std::string>{"one", "x", "x^2"}));
  EXPECT_TRUE(a->product(1, 2).empty());
  EXPECT_FALSE(builtin_algebra("a3")->is_commutative());
}

TEST(Algebra, MixedAlgebrasRejected) {
  const AlgebraPtr a = builtin_algebra("a3"), b = builtin_algebra("kronecker");
  EXPECT_THROW(multiply(*a, one(*a), one(*b)), Error);
}

}  // namespace
}  // namespace hochdef
