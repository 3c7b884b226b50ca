#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hochdef/cochain.hpp"
#include "hochdef/report.hpp"

namespace hochdef {

// Bijection of {1..n}, stored 0-based as its image sequence.
class Permutation {
 public:
  explicit Permutation(std::vector<std::uint8_t> image);  // throws DimensionMismatch if not a bijection
  static Permutation identity(std::size_t n);
  static std::vector<Permutation> all(std::size_t n);  // lexicographic order

  std::size_t size() const { return image_.size(); }
  std::size_t operator()(std::size_t i) const { return image_[i]; }
  // (this * other)(i) = this(other(i)).
  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  int sign() const;
  std::size_t descents() const;  // #{i : p(i) > p(i+1)}
  std::string to_string() const;  // "[2 1 3]", 1-based

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> image_;
};

// Element of Q[S_n].
class SymGroupElement {
 public:
  explicit SymGroupElement(std::size_t n) : n_(n) {}
  static SymGroupElement identity(std::size_t n);
  // Sum of sgn(s) s over S_n, not normalized.
  static SymGroupElement antisymmetrizer(std::size_t n);

  std::size_t degree() const { return n_; }
  const std::map<Permutation, Scalar>& terms() const { return terms_; }
  Scalar coefficient(const Permutation& p) const;
  void add(const Permutation& p, const Scalar& c);

  SymGroupElement& operator+=(const SymGroupElement& other);
  SymGroupElement& operator-=(const SymGroupElement& other);
  SymGroupElement scaled(const Scalar& c) const;
  // Composes the sign character into every coefficient.
  SymGroupElement sign_twisted() const;
  friend SymGroupElement operator+(SymGroupElement a, const SymGroupElement& b) { return a += b; }
  friend SymGroupElement operator-(SymGroupElement a, const SymGroupElement& b) { return a -= b; }
  friend SymGroupElement operator*(const SymGroupElement& a, const SymGroupElement& b);
  friend bool operator==(const SymGroupElement&, const SymGroupElement&) = default;

  // "1/2*[1 2] + 1/2*[2 1]"; "0" when empty.
  std::string to_string() const;
  static SymGroupElement parse(std::string_view text);

 private:
  void check(const SymGroupElement& other) const;

  std::size_t n_;
  std::map<Permutation, Scalar> terms_;
};

// Conventions for the idempotent construction. The defaults are the ones under which the
// anchors e_2^(1) = (id + (12))/2 and e_n^(n) = antisymmetrizer/n! hold and the cochain
// differential intertwines the idempotents.
struct EulerianConvention {
  bool sign_twist = true;         // compose the raw family with the sign character
  bool inverse_descents = true;   // count descents of s^{-1} rather than of s
};

// sum_s binom(k - des(s) + n - 1, n) s. Throws BoundExceeded when n > bound.
SymGroupElement lambda_operation(std::size_t n, long k, std::size_t bound = 6, EulerianConvention conv = {});
// e_n^(1), ..., e_n^(n) from lambda^k = sum_i k^i e^(i), k = 1..n.
std::vector<SymGroupElement> eulerian_idempotents(std::size_t n, std::size_t bound = 6, EulerianConvention conv = {});

// s(f)(a_1, ..., a_n) = f(a_{s(1)}, ..., a_{s(n)}), extended linearly. A left action.
Cochain perm_action(const SymGroupElement& s, const Cochain& f);

// Exact group-algebra identities for one n: sum = id, orthogonality, idempotency, the top
// idempotent, the n = 2 anchor, lambda^k lambda^m = lambda^{km} for k, m <= 3, and the
// polynomial identity lambda^k = sum_i k^i e^(i) beyond the interpolation points.
Report verify_eulerian(std::size_t n, std::size_t bound = 6, EulerianConvention conv = {});

// differential(e_n^(i) f) == e_{n+1}^(i) differential(f) for every basis cochain f of
// C^n(B, B). Throws NotCommutative for noncommutative B; i is 1-based.
Report chain_compatibility_check(const AlgebraPtr& b, std::size_t n, std::size_t i, std::size_t bound = 6,
                                 EulerianConvention conv = {});

}  // namespace hochdef
