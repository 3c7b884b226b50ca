#include "hochdef/eulerian.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "hochdef/error.hpp"
#include "hochdef/hochschild.hpp"
#include "hochdef/linalg.hpp"

namespace hochdef {

Permutation::Permutation(std::vector<std::uint8_t> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (auto v : image_) {
    if (v >= image_.size() || seen[v]) throw Error(ErrorKind::DimensionMismatch, "not a permutation");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint8_t> img(n);
  std::iota(img.begin(), img.end(), std::uint8_t{0});
  return Permutation(std::move(img));
}

std::vector<Permutation> Permutation::all(std::size_t n) {
  std::vector<std::uint8_t> img(n);
  std::iota(img.begin(), img.end(), std::uint8_t{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (size() != other.size()) throw Error(ErrorKind::DegreeMismatch, "permutations of different sizes");
  std::vector<std::uint8_t> img(size());
  for (std::size_t i = 0; i < size(); ++i) img[i] = image_[other.image_[i]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> img(size());
  for (std::size_t i = 0; i < size(); ++i) img[image_[i]] = static_cast<std::uint8_t>(i);
  return Permutation(std::move(img));
}

int Permutation::sign() const {
  int s = 1;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (image_[i] > image_[j]) s = -s;
  return s;
}

std::size_t Permutation::descents() const {
  std::size_t d = 0;
  for (std::size_t i = 0; i + 1 < size(); ++i)
    if (image_[i] > image_[i + 1]) ++d;
  return d;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < size(); ++i) s += (i ? " " : "") + std::to_string(image_[i] + 1);
  return s + "]";
}

SymGroupElement SymGroupElement::identity(std::size_t n) {
  SymGroupElement e(n);
  e.add(Permutation::identity(n), Scalar(1));
  return e;
}

SymGroupElement SymGroupElement::antisymmetrizer(std::size_t n) {
  SymGroupElement e(n);
  for (const auto& p : Permutation::all(n)) e.add(p, Scalar(p.sign()));
  return e;
}

Scalar SymGroupElement::coefficient(const Permutation& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void SymGroupElement::add(const Permutation& p, const Scalar& c) {
  if (p.size() != n_) throw Error(ErrorKind::DegreeMismatch, "permutation size differs from the group degree");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SymGroupElement::check(const SymGroupElement& other) const {
  if (n_ != other.n_) throw Error(ErrorKind::DegreeMismatch, "group-algebra elements of different degrees");
}

SymGroupElement& SymGroupElement::operator+=(const SymGroupElement& other) {
  check(other);
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

SymGroupElement& SymGroupElement::operator-=(const SymGroupElement& other) {
  check(other);
  for (const auto& [p, c] : other.terms_) add(p, -c);
  return *this;
}

SymGroupElement SymGroupElement::scaled(const Scalar& c) const {
  SymGroupElement out(n_);
  for (const auto& [p, v] : terms_) out.add(p, v * c);
  return out;
}

SymGroupElement SymGroupElement::sign_twisted() const {
  SymGroupElement out(n_);
  for (const auto& [p, v] : terms_) out.add(p, p.sign() > 0 ? v : -v);
  return out;
}

SymGroupElement operator*(const SymGroupElement& a, const SymGroupElement& b) {
  a.check(b);
  SymGroupElement out(a.n_);
  for (const auto& [p, x] : a.terms_)
    for (const auto& [q, y] : b.terms_) out.add(p * q, x * y);
  return out;
}

std::string SymGroupElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    Scalar v = c;
    if (first) {
      if (v.sign() < 0) {
        out += "-";
        v = -v;
      }
    } else {
      out += v.sign() < 0 ? " - " : " + ";
      if (v.sign() < 0) v = -v;
    }
    out += v.to_string() + "*" + p.to_string();
    first = false;
  }
  return out;
}

SymGroupElement SymGroupElement::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError(ErrorKind::Syntax, 1, pos + 1, msg);
  };
  skip();
  if (text.substr(pos) == "0") fail("the zero element has no degree; write at least one term");
  std::vector<std::pair<Scalar, std::vector<std::uint8_t>>> parsed;
  bool first = true;
  while (true) {
    skip();
    if (pos >= text.size()) break;
    Scalar sign(1);
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = Scalar(-1);
      ++pos;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Scalar coef(1);
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      const std::size_t start = pos;
      while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
      try {
        coef = Scalar::parse(text.substr(start, pos - start));
      } catch (const Error&) {
        fail("malformed coefficient");
      }
      skip();
      if (pos >= text.size() || text[pos] != '*') fail("expected '*' after coefficient");
      ++pos;
      skip();
    }
    if (pos >= text.size() || text[pos] != '[') fail("expected '['");
    const auto close = text.find(']', pos);
    if (close == std::string_view::npos) fail("missing ']'");
    std::istringstream in{std::string(text.substr(pos + 1, close - pos - 1))};
    std::vector<std::uint8_t> img;
    for (std::string tok; in >> tok;) {
      if (tok.empty() || tok.size() > 3 || !std::all_of(tok.begin(), tok.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          })) {
        fail("malformed permutation entry '" + tok + "'");
      }
      const int v = std::stoi(tok);
      if (v < 1 || v > 255) fail("permutation entry out of range");
      img.push_back(static_cast<std::uint8_t>(v - 1));
    }
    pos = close + 1;
    parsed.emplace_back(sign * coef, std::move(img));
  }
  if (parsed.empty()) fail("empty group-algebra element");
  SymGroupElement out(parsed.front().second.size());
  for (auto& [c, img] : parsed) {
    if (img.size() != out.n_) fail("permutations of different sizes");
    try {
      out.add(Permutation(std::move(img)), c);
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  return out;
}

namespace {

void check_bound(std::size_t n, std::size_t bound) {
  if (n == 0) throw Error(ErrorKind::BoundExceeded, "symmetric group degree must be at least 1");
  if (n > bound) {
    throw Error(ErrorKind::BoundExceeded,
                "S_" + std::to_string(n) + " exceeds the configured bound " + std::to_string(bound));
  }
}

SymGroupElement raw_lambda(std::size_t n, long k, bool inverse_descents) {
  SymGroupElement out(n);
  for (const auto& p : Permutation::all(n)) {
    const long d = static_cast<long>(inverse_descents ? p.inverse().descents() : p.descents());
    out.add(p, binomial(k - d + static_cast<long>(n) - 1, static_cast<long>(n)));
  }
  return out;
}

}  // namespace

SymGroupElement lambda_operation(std::size_t n, long k, std::size_t bound, EulerianConvention conv) {
  check_bound(n, bound);
  if (k < 1) throw Error(ErrorKind::IndexOutOfRange, "lambda operations need k >= 1");
  SymGroupElement raw = raw_lambda(n, k, conv.inverse_descents);
  return conv.sign_twist ? raw.sign_twisted() : raw;
}

std::vector<SymGroupElement> eulerian_idempotents(std::size_t n, std::size_t bound, EulerianConvention conv) {
  check_bound(n, bound);
  linalg::DenseMatrix v(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Scalar power(1);
    for (std::size_t i = 1; i <= n; ++i) {
      power *= Scalar(static_cast<long>(k));
      v(k - 1, i - 1) = power;
    }
  }
  const linalg::DenseMatrix vinv = v.inverse();
  std::vector<SymGroupElement> lambdas;
  for (std::size_t k = 1; k <= n; ++k) lambdas.push_back(lambda_operation(n, static_cast<long>(k), bound, conv));
  std::vector<SymGroupElement> out;
  for (std::size_t i = 0; i < n; ++i) {
    SymGroupElement e(n);
    for (std::size_t k = 0; k < n; ++k) e += lambdas[k].scaled(vinv(i, k));
    out.push_back(std::move(e));
  }
  return out;
}

Cochain perm_action(const SymGroupElement& s, const Cochain& f) {
  const std::size_t n = f.degree();
  if (s.degree() != n) throw Error(ErrorKind::DegreeMismatch, "group degree differs from cochain degree");
  std::vector<Entry> acc;
  std::vector<std::size_t> t(n), moved(n);
  for (const auto& [p, c] : s.terms()) {
    const Permutation inv = p.inverse();
    for (const auto& e : f.coeffs()) {
      const std::size_t k = f.decode(e.index, t);
      for (std::size_t j = 0; j < n; ++j) moved[j] = t[inv(j)];
      acc.push_back({f.flat_index(moved, k), c * e.value});
    }
  }
  return Cochain(f.algebra_ptr(), n, SparseVector::from_unsorted(std::move(acc)));
}

Report verify_eulerian(std::size_t n, std::size_t bound, EulerianConvention conv) {
  Report r;
  r.command = "euler-idem " + std::to_string(n);
  const auto e = eulerian_idempotents(n, bound, conv);
  const SymGroupElement id = SymGroupElement::identity(n);
  SymGroupElement sum(n);
  for (const auto& x : e) sum += x;
  r.add("sum-is-identity", sum == id, sum == id ? "" : "sum = " + sum.to_string());
  bool orth = true, idem = true;
  std::string witness;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const SymGroupElement prod = e[i] * e[j];
      if (i == j && prod != e[i]) {
        idem = false;
        witness = "e^(" + std::to_string(i + 1) + ") is not idempotent";
      }
      if (i != j && !prod.terms().empty()) {
        orth = false;
        witness = "e^(" + std::to_string(i + 1) + ") e^(" + std::to_string(j + 1) + ") != 0";
      }
    }
  r.add("orthogonal", orth, orth ? "" : witness);
  r.add("idempotent", idem, idem ? "" : witness);
  Scalar factorial(1);
  for (std::size_t i = 2; i <= n; ++i) factorial *= Scalar(static_cast<long>(i));
  const SymGroupElement top = SymGroupElement::antisymmetrizer(n).scaled(factorial.inverse());
  r.add("top-is-antisymmetrizer", e[n - 1] == top, e[n - 1] == top ? "" : "e^(n) = " + e[n - 1].to_string());
  if (n == 2) {
    SymGroupElement anchor = SymGroupElement::identity(2);
    anchor.add(Permutation({1, 0}), Scalar(1));
    anchor = anchor.scaled(Scalar(1, 2));
    r.add("first-idempotent-anchor", e[0] == anchor, "e^(1) = " + e[0].to_string());
  }
  bool ring = true;
  for (long k = 1; k <= 3; ++k)
    for (long m = 1; m <= 3; ++m) {
      if (lambda_operation(n, k, bound, conv) * lambda_operation(n, m, bound, conv) !=
          lambda_operation(n, k * m, bound, conv)) {
        ring = false;
        witness = "k=" + std::to_string(k) + ", m=" + std::to_string(m);
      }
    }
  r.add("lambda-multiplicative", ring, ring ? "" : witness);
  bool poly = true;
  for (long k = static_cast<long>(n) + 1; k <= static_cast<long>(n) + 3; ++k) {
    SymGroupElement rhs(n);
    Scalar power(1);
    for (std::size_t i = 0; i < n; ++i) {
      power *= Scalar(k);
      rhs += e[i].scaled(power);
    }
    if (rhs != lambda_operation(n, k, bound, conv)) poly = false;
  }
  r.add("lambda-polynomial", poly);
  return r;
}

Report chain_compatibility_check(const AlgebraPtr& b, std::size_t n, std::size_t i, std::size_t bound,
                                 EulerianConvention conv) {
  if (!b->is_commutative()) throw Error(ErrorKind::NotCommutative, b->name() + " is not commutative");
  if (i < 1 || i > n) throw Error(ErrorKind::IndexOutOfRange, "idempotent index out of range");
  Report r;
  r.command = "chain-compatibility " + b->name() + " n=" + std::to_string(n) + " i=" + std::to_string(i);
  const auto en = eulerian_idempotents(n, bound, conv);
  const auto en1 = eulerian_idempotents(n + 1, bound, conv);
  const Cochain probe(b, n);
  bool ok = true;
  std::string witness;
  for (std::size_t idx = 0; idx < probe.space_dimension() && ok; ++idx) {
    const Cochain f = Cochain::basis(b, n, idx);
    const Cochain lhs = differential(perm_action(en[i - 1], f));
    const Cochain rhs = perm_action(en1[i - 1], differential(f));
    if (lhs != rhs) {
      ok = false;
      witness = "basis cochain " + write_cochains({f}) + "differs";
      for (char& c : witness)
        if (c == '\n') c = ' ';
    }
  }
  r.add("intertwines", ok, ok ? std::to_string(probe.space_dimension()) + " basis cochains" : witness);
  return r;
}

}  // namespace hochdef
