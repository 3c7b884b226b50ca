#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hochdef/algebra.hpp"

namespace hochdef {

// d^(n+1), or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> cochain_dimension(std::size_t algebra_dim, std::size_t degree);

// Multilinear map A^{⊗n} -> A, stored sparsely on basis tuples. The coefficient of output
// e_k at input (e_{t1}, ..., e_{tn}) sits at flat index encode(t) * d + k, with encode the
// lexicographic (base d) index of the tuple.
class Cochain {
 public:
  // Zero cochain. Throws BudgetExceeded when the space does not fit in 64-bit indices.
  Cochain(AlgebraPtr algebra, std::size_t degree);
  Cochain(AlgebraPtr algebra, std::size_t degree, SparseVector coeffs);

  static Cochain from_element(AlgebraPtr algebra, SparseVector element);
  static Cochain identity(AlgebraPtr algebra);
  static Cochain product_map(AlgebraPtr algebra);
  // Unit vector of the cochain space.
  static Cochain basis(AlgebraPtr algebra, std::size_t degree, std::size_t flat_index);

  const Algebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  std::size_t degree() const { return degree_; }
  std::size_t space_dimension() const { return space_dim_; }
  const SparseVector& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  std::size_t flat_index(std::span<const std::size_t> inputs, std::size_t output) const;
  // Inverse of flat_index: fills `inputs` (size degree) and returns the output index.
  std::size_t decode(std::size_t flat, std::span<std::size_t> inputs) const;
  // f(e_{t1}, ..., e_{tn}).
  SparseVector evaluate(std::span<const std::size_t> inputs) const;
  // Multilinear extension to arbitrary elements.
  SparseVector evaluate(std::span<const SparseVector> inputs) const;

  Cochain& operator+=(const Cochain& other);
  Cochain& operator-=(const Cochain& other);
  Cochain scaled(const Scalar& c) const;
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend bool operator==(const Cochain& a, const Cochain& b);

 private:
  void check_compatible(const Cochain& other) const;

  AlgebraPtr algebra_;
  std::size_t degree_;
  std::size_t space_dim_;
  SparseVector coeffs_;
};

// Random cochain with about `nonzeros` entries drawn from [-range, range]. Uses only the raw
// engine output so results are identical across standard libraries.
Cochain random_cochain(AlgebraPtr algebra, std::size_t degree, std::mt19937_64& rng, std::size_t nonzeros,
                       long range = 3);

// Text format, one block per cochain:
//   cochain degree 2
//   f(x0,y1) = 3/2*x0*y1 - p2
//   end
// Only nonzero values are listed; inputs use basis labels; degree 0 writes f().
std::string write_cochains(const std::vector<Cochain>& cochains);
std::vector<Cochain> parse_cochains(const AlgebraPtr& algebra, std::string_view text);

}  // namespace hochdef
