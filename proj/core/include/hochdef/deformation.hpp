#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hochdef/cochain.hpp"
#include "hochdef/report.hpp"

namespace hochdef {

// a0 + eps * a1 over the base algebra.
struct DefElem {
  SparseVector a0;
  SparseVector a1;

  friend bool operator==(const DefElem&, const DefElem&) = default;
};

// First-order deformation A_u over k[eps]/(eps^2) with product
//   (a0 + eps a1)(b0 + eps b1) = a0 b0 + eps (a1 b0 + a0 b1 + u(a0, b0)).
class DeformedAlgebra {
 public:
  // Throws DegreeMismatch unless u has degree 2 and NotACocycle unless it is a cocycle.
  explicit DeformedAlgebra(Cochain u);
  // Skips the cocycle check; the product may then fail to be associative.
  static DeformedAlgebra unchecked(Cochain u);

  const Algebra& base() const { return u_.algebra(); }
  const AlgebraPtr& base_ptr() const { return u_.algebra_ptr(); }
  const Cochain& cocycle() const { return u_; }
  std::size_t dimension() const { return 2 * base().dimension(); }

  SparseVector u(const SparseVector& x, const SparseVector& y) const;
  DefElem multiply(const DefElem& x, const DefElem& y) const;
  // 1 - eps u(1, 1); a two-sided unit whenever u is a cocycle.
  const DefElem& unit() const { return unit_; }
  // Image of mu + eps nu under k[eps] -> A_u, i.e. mu 1_u + eps nu.
  DefElem scalar(const Scalar& mu, const Scalar& nu) const;

  // k-basis of A_u: (e_b, 0) for b < d, then (0, e_b).
  DefElem basis(std::size_t i) const;
  // Coordinates in Q^{2d} matching basis().
  SparseVector coordinates(const DefElem& x) const;
  DefElem from_coordinates(const SparseVector& v) const;

  std::optional<std::string> associativity_failure() const;
  std::string format(const DefElem& x) const;

 private:
  DeformedAlgebra(Cochain u, bool check);

  Cochain u_;
  std::vector<SparseVector> table_;  // u(e_i, e_j)
  DefElem unit_;
};

// Data attached to one vertex, listed by exceptional position.
struct VertexData {
  std::size_t vertex;  // 0-based quiver vertex
  Scalar lambda;
  SparseVector a, b, c;
  DefElem idempotent;  // p + eps(-lambda p + a p + p b + c)
};

struct IdempotentData {
  std::vector<VertexData> vertices;  // by exceptional position
  // d[i][j] for positions i != j; d[i][i] is zero.
  std::vector<std::vector<SparseVector>> d;
};

// u(p_k, p_k) = lambda_k p_k + c_k with p_k c_k = c_k p_k = 0 (k a position). Throws
// DecompositionFailure when u(p_k, p_k) has a component on p_k A p_j or p_j A p_k, j != k.
std::pair<Scalar, SparseVector> extract_lambda_c(const DeformedAlgebra& D, std::size_t k);
// d_ij = u(p_i, p_j) + p_i c_j + c_i p_j for positions i != j. Throws DecompositionFailure
// unless the result lies in p_i A p_j.
SparseVector extract_d(const DeformedAlgebra& D, std::size_t i, std::size_t j);
// 1 - eps(sum_k (lambda_k p_k - c_k) + sum_{i != j} d_ij).
DefElem deformation_unit(const DeformedAlgebra& D);

// Which unknown absorbs -d_ij in p_i a_j p_j + p_i b_i p_j + d_ij = 0 when the solver has a
// free choice. Both give valid systems; the second exists to test uniqueness up to conjugation.
enum class IdempotentChoice { Deterministic, PreferB };

// Deformed complete orthogonal idempotents. Throws NoSolution if the orthogonality system is
// inconsistent (never for cocycles over acyclic quiver algebras).
IdempotentData solve_idempotents(const DeformedAlgebra& D, IdempotentChoice choice = IdempotentChoice::Deterministic);

struct DeformedHomSpace {
  std::size_t i;  // positions
  std::size_t j;
  std::vector<DefElem> basis;  // k-basis of p_j^† A_u p_i^†
  std::size_t dimension() const { return basis.size(); }
};

// Hom(P_i, P_j) = p_j^† A_u p_i^† as a k-space.
DeformedHomSpace deformed_hom(const DeformedAlgebra& D, const IdempotentData& idem, std::size_t i, std::size_t j);

// Checks that x -> (p_j^† x p_i^†)_{i <= j} is a k-linear bijection of A_u onto the direct sum
// of Hom blocks, and reports the block dimensions.
Report verify_hom_decomposition(const DeformedAlgebra& D, const IdempotentData& idem);

// Idempotency, orthogonality, completeness, scalar-action stability and the Hom-block
// dimensions (0 below the diagonal, k[eps] p_i^† on it, 2 dim p_j A p_i above it).
Report verify_idempotents(const DeformedAlgebra& D, const IdempotentData& idem);

// Full pipeline for one cocycle: extraction identities, unit formula, idempotent solve,
// invariants, Hom blocks, the decomposition bijection, and conjugacy of two solutions.
Report verify_deformation(const DeformedAlgebra& D);

// phi(a0 + eps a1) = a0 + eps (a1 + v(a0)) from A_{dv} to A_0. Returns a report with checks
// for multiplicativity on all basis pairs, unitality and bijectivity.
DefElem apply_coboundary_map(const Cochain& v, const DefElem& x);
Report verify_coboundary_isomorphism(const Cochain& v);

// (1 + eps y) first (1 + eps z) = second for some y, z in A; returns (y, z) or nullopt.
std::optional<std::pair<SparseVector, SparseVector>> conjugating_elements(const DeformedAlgebra& D,
                                                                           const DefElem& first,
                                                                           const DefElem& second);

// Cocycle consequences relating u, the vertex idempotents and an arbitrary x: five
// identities per vertex, three per pair of positions i < j, and one combined identity for
// each vertex and each pair. Evaluated on every sample x.
Report verify_idempotent_identities(const DeformedAlgebra& D, const std::vector<SparseVector>& samples);

}  // namespace hochdef
