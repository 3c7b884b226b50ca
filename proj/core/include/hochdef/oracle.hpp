#pragma once

#include <cstddef>
#include <vector>

#include "hochdef/algebra.hpp"

namespace hochdef {

// Reference computations that share no code with the cochain complex: derivations and the
// center come straight from the structure constants.
struct DerivationCount {
  std::size_t derivations = 0;
  std::size_t center = 0;
  std::size_t inner = 0;  // dim A - dim Z(A)

  std::size_t outer() const { return derivations - inner; }  // dim HH^1
};

DerivationCount derivation_oracle(const Algebra& a);

// dim kQ/I from every path of Q and the rank of the two-sided ideal inside the full path
// space, without splitting by endpoints.
std::size_t path_algebra_dimension(const Quiver& q, const std::vector<Relation>& relations);

}  // namespace hochdef
