#include "hochdef/scalar.hpp"

#include <cctype>
#include <ostream>

#include "hochdef/error.hpp"

namespace hochdef {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "Syntax";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::DanglingVertex: return "DanglingVertex";
    case ErrorKind::NonAdmissible: return "NonAdmissible";
    case ErrorKind::CyclicQuiver: return "CyclicQuiver";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::MismatchedAlgebra: return "MismatchedAlgebra";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::DecompositionFailure: return "DecompositionFailure";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::MissingRankData: return "MissingRankData";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

Scalar::Scalar(long numerator, long denominator) {
  if (denominator == 0) throw Error(ErrorKind::DimensionMismatch, "zero denominator");
  value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
  value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorKind::Syntax, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::Syntax, "zero denominator in '" + std::string(text) + "'");
  return Scalar(mpq_class(n, d));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DimensionMismatch, "inverse of zero");
  return Scalar(mpq_class(1 / value_));
}

Scalar& Scalar::operator/=(const Scalar& other) {
  if (other.is_zero()) throw Error(ErrorKind::DimensionMismatch, "division by zero");
  value_ /= other.value_;
  return *this;
}

std::string Scalar::to_string() const { return value_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar binomial(long top, long bottom) {
  if (bottom < 0) return Scalar(0);
  if (top >= 0 && top < bottom) return Scalar(0);
  mpq_class acc(1);
  for (long i = 0; i < bottom; ++i) {
    mpq_class step(mpz_class(top - i), mpz_class(i + 1));
    step.canonicalize();
    acc *= step;
  }
  return Scalar(std::move(acc));
}

}  // namespace hochdef
