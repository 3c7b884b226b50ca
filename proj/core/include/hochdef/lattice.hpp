#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hochdef/linalg.hpp"
#include "hochdef/report.hpp"

namespace hochdef {

using ClassVector = std::vector<Scalar>;

// Numerical shadow of an exceptional collection: the Euler form on Z^n in the basis of the
// initial collection, and the current ordered classes.
class GramLattice {
 public:
  // Throws DimensionMismatch unless gram is square and unit upper-triangular, or when ranks or
  // labels have the wrong length. Empty labels become "E1".."En".
  GramLattice(linalg::DenseMatrix gram, std::size_t ambient_dimension, std::optional<std::vector<Scalar>> ranks = {},
              std::vector<std::string> labels = {});

  std::size_t size() const { return classes_.size(); }
  std::size_t ambient_dimension() const { return d_; }
  const linalg::DenseMatrix& form() const { return form_; }
  const std::vector<ClassVector>& classes() const { return classes_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::optional<std::vector<Scalar>>& ranks() const { return ranks_; }

  Scalar chi(const ClassVector& x, const ClassVector& y) const;
  // Gram matrix of the current classes.
  linalg::DenseMatrix gram() const;
  // Rank of a class by additivity; throws MissingRankData.
  Scalar rank_of(const ClassVector& x) const;

  friend bool operator==(const GramLattice& a, const GramLattice& b) {
    return a.form_ == b.form_ && a.classes_ == b.classes_;
  }

 private:
  friend GramLattice mutate(const GramLattice&, char, std::size_t);
  linalg::DenseMatrix form_;
  std::size_t d_;
  std::optional<std::vector<Scalar>> ranks_;
  std::vector<std::string> labels_;
  std::vector<ClassVector> classes_;
};

struct MutationStep {
  char side = 'R';  // 'L' or 'R'
  std::size_t index = 1;  // 1-based, pair (index, index + 1)
};

// Left: (E_i, E_{i+1}) -> (L, E_i) with [L] = chi(E_i, E_{i+1}) [E_i] - [E_{i+1}].
// Right: (E_i, E_{i+1}) -> (E_{i+1}, R) with [R] = chi(E_i, E_{i+1}) [E_{i+1}] - [E_i].
// Throws IndexOutOfRange unless 1 <= i <= n - 1, Syntax for an unknown side.
GramLattice mutate(const GramLattice& latt, char side, std::size_t i);
GramLattice mutate(const GramLattice& latt, const std::vector<MutationStep>& word);
// "R1 L2 R1" (spaces or commas). Throws Syntax.
std::vector<MutationStep> parse_mutation_word(std::string_view text);

// S = G^{-1} G^T, so that chi(x, y) = chi(y, S x).
linalg::DenseMatrix serre_operator(const GramLattice& latt);

// For each i, [E_i] = (-1)^{d-n+1} w [E_{i+n}] with w = (-1)^d S and E_{i+n} the helix
// continuation (right mutation of E_i through the next n - 1 objects). With rank data the
// ranks must match as well, and w must preserve rank.
Report helix_check(const GramLattice& latt);
// Throws MissingRankData.
Scalar rank_gcd(const GramLattice& latt);

// Keywords: "n <count>", "d <dim>", "row <entries>" (n times), optional "ranks <entries>",
// optional "labels <names>". '#' starts a comment. Throws ParseError.
GramLattice parse_lattice(std::string_view text);
GramLattice read_lattice_file(const std::string& path);
std::string write_lattice(const GramLattice& latt);

// Unit upper-triangular integer Gram matrix with off-diagonal entries in [-bound, bound].
GramLattice random_lattice(std::size_t n, std::mt19937_64& rng, long bound);
// Inverse pairs, braid relations, far commutation, unitriangularity and exceptionality
// on `count` random lattices of size 2..max_n.
Report mutation_suite(std::size_t count, std::size_t max_n, long bound, std::mt19937_64& rng);

}  // namespace hochdef
