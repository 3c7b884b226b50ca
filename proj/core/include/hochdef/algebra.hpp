#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hochdef/quiver.hpp"
#include "hochdef/sparse.hpp"

namespace hochdef {

// Basis pair (left, right) whose product has `coefficient` at a fixed output index.
struct ProductTerm {
  std::size_t left;
  std::size_t right;
  Scalar coefficient;
};

// Quiver bookkeeping of an algebra built as kQ/I. Positions index the exceptional order:
// order[pos] is a vertex, position[v] its position, both 0-based. For every basis path b,
// b = p_{source} b p_{target} and position[target] <= position[source].
struct QuiverData {
  Quiver quiver;
  std::vector<Relation> relations;
  std::vector<Path> basis_paths;
  std::vector<std::size_t> idempotent;  // basis index of the trivial path at each vertex
  std::vector<std::size_t> order;
  std::vector<std::size_t> position;

  std::size_t source(std::size_t b) const { return basis_paths[b].source; }
  std::size_t target(std::size_t b) const { return basis_paths[b].target; }
  bool is_radical(std::size_t b) const { return basis_paths[b].length() > 0; }
};

// Finite-dimensional associative unital algebra given by structure constants on a basis.
class Algebra {
 public:
  // table[i * dim + j] = e_i * e_j. Throws DimensionMismatch on inconsistent sizes.
  Algebra(std::string name, std::vector<std::string> labels, std::vector<SparseVector> table, SparseVector unit,
          std::optional<QuiverData> quiver = std::nullopt);

  const std::string& name() const { return name_; }
  std::size_t dimension() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> find_label(const std::string& label) const;

  const SparseVector& product(std::size_t i, std::size_t j) const { return table_[i * dimension() + j]; }
  SparseVector multiply(const SparseVector& x, const SparseVector& y) const;
  const SparseVector& unit() const { return unit_; }
  // All basis pairs whose product involves e_t.
  const std::vector<ProductTerm>& preimages(std::size_t t) const { return preimages_[t]; }

  bool is_commutative() const;
  // First basis triple violating associativity, if any.
  std::optional<std::string> associativity_failure() const;
  // Null for algebras not built from a quiver.
  const QuiverData* quiver_data() const { return quiver_ ? &*quiver_ : nullptr; }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<SparseVector> table_;
  SparseVector unit_;
  std::vector<std::vector<ProductTerm>> preimages_;
  std::optional<QuiverData> quiver_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

struct AlgElem {
  const Algebra* algebra = nullptr;
  SparseVector coeffs;
};

AlgebraPtr build_algebra(const Quiver& q, const std::vector<Relation>& relations, std::string name = "kQ/I");
AlgebraPtr build_algebra(const QuiverPresentation& pres, std::string name = "kQ/I");
// One vertex, no arrows.
AlgebraPtr ground_field();
// k[x]/(x^m), basis one, x, x^2, ...
AlgebraPtr truncated_polynomial(std::size_t m);

AlgElem basis_element(const Algebra& a, std::size_t i);
AlgElem one(const Algebra& a);
// Throws MismatchedAlgebra when x and y belong to different algebras.
AlgElem multiply(const Algebra& a, const AlgElem& x, const AlgElem& y);
// Trivial-path classes in exceptional order.
std::vector<AlgElem> vertex_idempotents(const Algebra& a);
// dim p_j A p_i for 0-based positions i, j in the exceptional order.
std::size_t hom_dimension(const Algebra& a, std::size_t i, std::size_t j);
// Human-readable combination such as "3/2*ab - x0*y1"; "0" for the zero vector.
std::string format_element(const Algebra& a, const SparseVector& v);
// Inverse of format_element. Throws Syntax on malformed input or unknown labels.
SparseVector parse_element(const Algebra& a, std::string_view text);

}  // namespace hochdef
