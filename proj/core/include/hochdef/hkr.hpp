#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hochdef/report.hpp"
#include "hochdef/scalar.hpp"

namespace hochdef {

using Monomial = std::vector<std::uint32_t>;  // exponent per variable

// Element of Q[x1..xd].
class Polynomial {
 public:
  explicit Polynomial(std::size_t variables = 1);  // throws DimensionMismatch for 0
  static Polynomial constant(std::size_t variables, const Scalar& c);
  static Polynomial variable(std::size_t variables, std::size_t i);  // x_{i+1}
  static Polynomial monomial(Monomial exponents, const Scalar& c = Scalar(1));
  // "3/2*x1^2*x2 - x3 + 4"; variables x1..xd. Throws Syntax.
  static Polynomial parse(std::string_view text, std::size_t variables);

  std::size_t variables() const { return d_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Polynomial derivative(std::size_t i) const;
  std::string to_string() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& s, const Polynomial& p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void add_term(const Monomial& m, const Scalar& c);

  std::size_t d_;
  std::map<Monomial, Scalar> terms_;
};

// sum_i g_i d/dx_i.
struct PolyDerivation {
  std::vector<Polynomial> coefficients;

  static PolyDerivation partial(std::size_t variables, std::size_t i);
  // Coefficients separated by ';', e.g. "x2;0;1" is x2 d/dx1 + d/dx3.
  static PolyDerivation parse(std::string_view text, std::size_t variables);

  std::size_t variables() const { return coefficients.size(); }
  Polynomial operator()(const Polynomial& f) const;
  std::string to_string() const;
};

// eps_n(f_1..f_n)(a_1..a_n) = sum_s sgn(s) f_1(a_s(1)) * ... * f_n(a_s(n)).
class PolyCochain {
 public:
  std::size_t degree() const { return fs_.size(); }
  std::size_t variables() const { return d_; }
  const std::vector<PolyDerivation>& derivations() const { return fs_; }
  Polynomial operator()(const std::vector<Polynomial>& args) const;  // throws DegreeMismatch

 private:
  friend PolyCochain antisymmetrize(std::vector<PolyDerivation> fs);
  std::size_t d_ = 1;
  std::vector<PolyDerivation> fs_;
};

// Throws DimensionMismatch for an empty list or mixed variable counts.
PolyCochain antisymmetrize(std::vector<PolyDerivation> fs);

// Hochschild differential of c evaluated on n + 1 arguments:
// a_0 c(a_1..a_n) + sum_i (-1)^i c(.., a_{i-1} a_i, ..) + (-1)^{n+1} c(a_0..a_{n-1}) a_n.
Polynomial coboundary_value(const PolyCochain& c, const std::vector<Polynomial>& args);

// All tuples of n + 1 monomials (coefficient 1) with total degree <= max_degree.
std::vector<std::vector<Monomial>> monomial_tuples(std::size_t variables, std::size_t count, std::size_t max_degree);

// Evaluates the differential of c on every monomial tuple of total degree <= max_degree.
// Throws BoundExceeded when degree + 1 > bound.
Report verify_hkr_cocycle(const PolyCochain& c, std::size_t max_degree, std::size_t bound);

// Cocycle check over a fixed family of derivation tuples for every variable count and
// degree up to the given limits.
Report hkr_sweep(std::size_t max_variables, std::size_t max_n, std::size_t max_degree, std::size_t bound);

}  // namespace hochdef
