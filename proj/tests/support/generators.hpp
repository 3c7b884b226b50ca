#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hochdef/algebra.hpp"
#include "hochdef/cochain.hpp"
#include "hochdef/linalg.hpp"

namespace hochdef::testing {

// Deterministic per-test generator.
inline std::mt19937_64 make_rng(std::uint64_t salt) { return std::mt19937_64(0x5eed0000ULL + salt); }

Scalar random_scalar(std::mt19937_64& rng, long range, bool allow_fractions = true);

// Sparse matrix with roughly density * rows * cols nonzeros in [-range, range].
SparseMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density, long range = 4);

// Text of a random acyclic quiver with 2..max_vertices vertices, arrows only from lower to
// higher vertex, and 0..2 relations of length 2 (binomial or monomial).
std::string random_quiver_text(std::mt19937_64& rng, std::size_t max_vertices = 4, std::size_t max_arrows = 5);

// Random quiver algebra of dimension at most max_dim (retries until it fits).
AlgebraPtr random_quiver_algebra(std::mt19937_64& rng, std::size_t max_dim = 10);

// Random element with `nonzeros` entries.
SparseVector random_element(std::mt19937_64& rng, const Algebra& a, std::size_t nonzeros, long range = 3);

}  // namespace hochdef::testing
