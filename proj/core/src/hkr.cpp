#include "hochdef/hkr.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>

#include "hochdef/error.hpp"
#include "hochdef/eulerian.hpp"

namespace hochdef {

Polynomial::Polynomial(std::size_t variables) : d_(variables) {
  if (variables == 0) throw Error(ErrorKind::DimensionMismatch, "polynomial ring needs a variable");
}

Polynomial Polynomial::constant(std::size_t variables, const Scalar& c) {
  Polynomial p(variables);
  p.add_term(Monomial(variables, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t variables, std::size_t i) {
  if (i >= variables) throw Error(ErrorKind::IndexOutOfRange, "variable index out of range");
  Monomial m(variables, 0);
  m[i] = 1;
  return monomial(std::move(m));
}

Polynomial Polynomial::monomial(Monomial exponents, const Scalar& c) {
  Polynomial p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.d_ != d_) throw Error(ErrorKind::DimensionMismatch, "variable counts differ");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.d_ != d_) throw Error(ErrorKind::DimensionMismatch, "variable counts differ");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.d_ != b.d_) throw Error(ErrorKind::DimensionMismatch, "variable counts differ");
  Polynomial out(a.d_);
  Monomial m(a.d_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.d_; ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  return out;
}

Polynomial operator*(const Scalar& s, const Polynomial& p) {
  Polynomial out(p.d_);
  for (const auto& [m, c] : p.terms_) out.add_term(m, s * c);
  return out;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  if (i >= d_) throw Error(ErrorKind::IndexOutOfRange, "variable index out of range");
  Polynomial out(d_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Monomial dm = m;
    --dm[i];
    out.add_term(dm, c * Scalar(static_cast<long>(m[i])));
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest total degree first, reads like hand-written polynomials.
  std::vector<std::pair<Monomial, Scalar>> order(terms_.rbegin(), terms_.rend());
  std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    return std::accumulate(x.first.begin(), x.first.end(), 0u) > std::accumulate(y.first.begin(), y.first.end(), 0u);
  });
  for (const auto& [m, c] : order) {
    Scalar mag = c;
    if (out.empty()) {
      if (c.sign() < 0) {
        out += "-";
        mag = -c;
      }
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) mag = -c;
    }
    std::string factors;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += "x" + std::to_string(i + 1);
      if (m[i] > 1) factors += "^" + std::to_string(m[i]);
    }
    if (factors.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += factors;
    } else {
      out += mag.to_string() + "*" + factors;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t d) : s_(text), d_(d) {}

  Polynomial run() {
    Polynomial out(d_);
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      Scalar sign(1);
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        if (s_[pos_] == '-') sign = Scalar(-1);
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      out += term(sign);
      skip();
    }
    return out;
  }

 private:
  Polynomial term(Scalar coeff) {
    Monomial m(d_, 0);
    bool any = false;
    while (true) {
      skip();
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
        try {
          coeff *= Scalar::parse(s_.substr(start, pos_ - start));
        } catch (const Error&) {
          fail("malformed coefficient");
        }
      } else if (pos_ < s_.size() && s_[pos_] == 'x') {
        ++pos_;
        const std::size_t v = number();
        if (v == 0 || v > d_) fail("unknown variable x" + std::to_string(v));
        std::size_t e = 1;
        skip();
        if (pos_ < s_.size() && s_[pos_] == '^') {
          ++pos_;
          skip();
          e = number();
        }
        m[v - 1] += static_cast<std::uint32_t>(e);
      } else {
        fail("expected coefficient or variable");
      }
      any = true;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    return Polynomial::monomial(std::move(m), coeff);
  }

  std::size_t number() {
    const std::size_t start = pos_;
    std::size_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(s_[pos_] - '0');
      if (v > 1'000'000) fail("number too large");
      ++pos_;
    }
    if (start == pos_) fail("expected a number");
    return v;
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(ErrorKind::Syntax, 1, pos_ + 1, what);
  }

  std::string_view s_;
  std::size_t d_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, std::size_t variables) {
  return PolyParser(text, variables).run();
}

PolyDerivation PolyDerivation::partial(std::size_t variables, std::size_t i) {
  if (i >= variables) throw Error(ErrorKind::IndexOutOfRange, "variable index out of range");
  PolyDerivation D;
  D.coefficients.assign(variables, Polynomial(variables));
  D.coefficients[i] = Polynomial::constant(variables, Scalar(1));
  return D;
}

PolyDerivation PolyDerivation::parse(std::string_view text, std::size_t variables) {
  PolyDerivation D;
  std::size_t start = 0;
  while (true) {
    const auto semi = text.find(';', start);
    D.coefficients.push_back(Polynomial::parse(text.substr(start, semi - start), variables));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  if (D.coefficients.size() != variables) {
    throw Error(ErrorKind::DimensionMismatch, "derivation needs " + std::to_string(variables) + " coefficients, got " +
                                                  std::to_string(D.coefficients.size()));
  }
  return D;
}

Polynomial PolyDerivation::operator()(const Polynomial& f) const {
  if (f.variables() != variables()) throw Error(ErrorKind::DimensionMismatch, "variable counts differ");
  Polynomial out(variables());
  for (std::size_t i = 0; i < variables(); ++i) {
    if (!coefficients[i].is_zero()) out += coefficients[i] * f.derivative(i);
  }
  return out;
}

std::string PolyDerivation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (i) out += ";";
    out += coefficients[i].to_string();
  }
  return out;
}

PolyCochain antisymmetrize(std::vector<PolyDerivation> fs) {
  if (fs.empty()) throw Error(ErrorKind::DimensionMismatch, "antisymmetrization needs a derivation");
  for (const auto& f : fs) {
    if (f.variables() != fs.front().variables()) throw Error(ErrorKind::DimensionMismatch, "variable counts differ");
  }
  PolyCochain c;
  c.d_ = fs.front().variables();
  c.fs_ = std::move(fs);
  return c;
}

Polynomial PolyCochain::operator()(const std::vector<Polynomial>& args) const {
  const std::size_t n = degree();
  if (args.size() != n) throw Error(ErrorKind::DegreeMismatch, "expected " + std::to_string(n) + " arguments");
  // table[j][m] = f_j(a_m)
  std::vector<std::vector<Polynomial>> table(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t m = 0; m < n; ++m) table[j].push_back(fs_[j](args[m]));
  Polynomial out(d_);
  for (const auto& s : Permutation::all(n)) {
    Polynomial prod = Polynomial::constant(d_, Scalar(s.sign()));
    for (std::size_t j = 0; j < n && !prod.is_zero(); ++j) prod = prod * table[j][s(j)];
    out += prod;
  }
  return out;
}

Polynomial coboundary_value(const PolyCochain& c, const std::vector<Polynomial>& args) {
  const std::size_t n = c.degree();
  if (args.size() != n + 1) throw Error(ErrorKind::DegreeMismatch, "expected " + std::to_string(n + 1) + " arguments");
  Polynomial out = args.front() * c(std::vector<Polynomial>(args.begin() + 1, args.end()));
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<Polynomial> merged;
    for (std::size_t m = 0; m <= n; ++m) {
      if (m == i) continue;
      merged.push_back(m == i - 1 ? args[m] * args[m + 1] : args[m]);
    }
    const Polynomial v = c(merged);
    if (i % 2 == 0) {
      out += v;
    } else {
      out -= v;
    }
  }
  const Polynomial last = c(std::vector<Polynomial>(args.begin(), args.end() - 1)) * args.back();
  if ((n + 1) % 2 == 0) {
    out += last;
  } else {
    out -= last;
  }
  return out;
}

std::vector<std::vector<Monomial>> monomial_tuples(std::size_t variables, std::size_t count, std::size_t max_degree) {
  // Monomials by total degree.
  std::vector<std::vector<Monomial>> by_degree(max_degree + 1);
  Monomial m(variables, 0);
  const auto rec = [&](auto&& self, std::size_t var, std::size_t used) -> void {
    if (var == variables) {
      by_degree[used].push_back(m);
      return;
    }
    for (std::size_t e = 0; used + e <= max_degree; ++e) {
      m[var] = static_cast<std::uint32_t>(e);
      self(self, var + 1, used + e);
    }
    m[var] = 0;
  };
  rec(rec, 0, 0);
  std::vector<std::vector<Monomial>> out;
  std::vector<Monomial> tuple;
  const auto fill = [&](auto&& self, std::size_t left) -> void {
    if (tuple.size() == count) {
      out.push_back(tuple);
      return;
    }
    for (std::size_t deg = 0; deg <= left; ++deg)
      for (const auto& mono : by_degree[deg]) {
        tuple.push_back(mono);
        self(self, left - deg);
        tuple.pop_back();
      }
  };
  fill(fill, max_degree);
  return out;
}

namespace {

std::string describe(const PolyCochain& c) {
  std::string out = "eps(";
  for (std::size_t j = 0; j < c.degree(); ++j) {
    if (j) out += ", ";
    out += "[" + c.derivations()[j].to_string() + "]";
  }
  return out + ")";
}

// Evaluates eps on monomial arguments, caching f_j(m) per monomial. Products of monomials
// stay monomials, so every face of the differential hits the cache.
class MonomialEvaluator {
 public:
  explicit MonomialEvaluator(const PolyCochain& c) : c_(c), cache_(c.degree()), perms_(Permutation::all(c.degree())) {}

  Polynomial value(const std::vector<const Monomial*>& args) {
    const std::size_t n = c_.degree();
    Polynomial out(c_.variables());
    for (const auto& s : perms_) {
      Polynomial prod = Polynomial::constant(c_.variables(), Scalar(s.sign()));
      for (std::size_t j = 0; j < n && !prod.is_zero(); ++j) prod = prod * apply(j, *args[s(j)]);
      out += prod;
    }
    return out;
  }

  Polynomial coboundary(const std::vector<Monomial>& args) {
    const std::size_t n = c_.degree();
    std::vector<const Monomial*> view;
    for (std::size_t m = 1; m <= n; ++m) view.push_back(&args[m]);
    Polynomial out = Polynomial::monomial(args.front()) * value(view);
    Monomial merged;
    for (std::size_t i = 1; i <= n; ++i) {
      merged = args[i - 1];
      for (std::size_t v = 0; v < merged.size(); ++v) merged[v] += args[i][v];
      view.clear();
      for (std::size_t m = 0; m <= n; ++m) {
        if (m == i) continue;
        view.push_back(m == i - 1 ? &merged : &args[m]);
      }
      const Polynomial v = value(view);
      if (i % 2 == 0) {
        out += v;
      } else {
        out -= v;
      }
    }
    view.clear();
    for (std::size_t m = 0; m < n; ++m) view.push_back(&args[m]);
    const Polynomial last = value(view) * Polynomial::monomial(args.back());
    if ((n + 1) % 2 == 0) {
      out += last;
    } else {
      out -= last;
    }
    return out;
  }

 private:
  const Polynomial& apply(std::size_t j, const Monomial& m) {
    auto it = cache_[j].find(m);
    if (it == cache_[j].end()) it = cache_[j].emplace(m, c_.derivations()[j](Polynomial::monomial(m))).first;
    return it->second;
  }

  const PolyCochain& c_;
  std::vector<std::map<Monomial, Polynomial>> cache_;
  std::vector<Permutation> perms_;
};

// Returns the first failing tuple, or nothing. `tested` counts evaluations.
std::optional<std::string> first_failure(const PolyCochain& c, std::size_t max_degree, std::size_t& tested) {
  MonomialEvaluator eval(c);
  for (const auto& tuple : monomial_tuples(c.variables(), c.degree() + 1, max_degree)) {
    const Polynomial v = eval.coboundary(tuple);
    ++tested;
    if (!v.is_zero()) {
      std::string w = describe(c) + " on (";
      for (std::size_t j = 0; j < tuple.size(); ++j) w += (j ? ", " : "") + Polynomial::monomial(tuple[j]).to_string();
      return w + ") gives " + v.to_string();
    }
  }
  return std::nullopt;
}

void check_bound(std::size_t n, std::size_t bound) {
  if (n + 1 > bound) {
    throw Error(ErrorKind::BoundExceeded,
                "HKR check in degree " + std::to_string(n) + " exceeds the bound n + 1 <= " + std::to_string(bound));
  }
}

}  // namespace

Report verify_hkr_cocycle(const PolyCochain& c, std::size_t max_degree, std::size_t bound) {
  check_bound(c.degree(), bound);
  Report rep;
  rep.command = "hkr-check " + describe(c);
  std::size_t tested = 0;
  const auto fail = first_failure(c, max_degree, tested);
  rep.add("cocycle", !fail, fail ? *fail : std::to_string(tested) + " monomial tuples");
  return rep;
}

Report hkr_sweep(std::size_t max_variables, std::size_t max_n, std::size_t max_degree, std::size_t bound) {
  check_bound(max_n, bound);
  Report rep;
  rep.command = "hkr-check sweep";
  for (std::size_t d = 1; d <= max_variables; ++d) {
    // Coordinate partials plus two derivations with polynomial coefficients.
    std::vector<PolyDerivation> family;
    for (std::size_t i = 0; i < d; ++i) family.push_back(PolyDerivation::partial(d, i));
    PolyDerivation euler;
    for (std::size_t i = 0; i < d; ++i) euler.coefficients.push_back(Polynomial::variable(d, i));
    family.push_back(euler);
    PolyDerivation mixed;
    for (std::size_t i = 0; i < d; ++i) {
      const Polynomial x = Polynomial::variable(d, (i + 1) % d);
      mixed.coefficients.push_back(Scalar(static_cast<long>(i) + 1, 2) * x * x +
                                   Polynomial::constant(d, Scalar(-static_cast<long>(i))));
    }
    family.push_back(mixed);
    for (std::size_t n = 1; n <= max_n; ++n) {
      std::size_t tested = 0, cochains = 0;
      std::optional<std::string> fail;
      std::vector<std::size_t> pick(n, 0);
      while (!fail) {
        std::vector<PolyDerivation> fs;
        for (auto p : pick) fs.push_back(family[p]);
        fail = first_failure(antisymmetrize(std::move(fs)), max_degree, tested);
        ++cochains;
        // Nondecreasing picks: eps is alternating, so other orders only change the sign.
        std::size_t pos = n;
        while (pos > 0 && pick[pos - 1] + 1 == family.size()) --pos;
        if (pos == 0) break;
        ++pick[pos - 1];
        for (std::size_t q = pos; q < n; ++q) pick[q] = pick[pos - 1];
      }
      rep.add("cocycle[d=" + std::to_string(d) + ",n=" + std::to_string(n) + "]", !fail,
              fail ? *fail : std::to_string(cochains) + " cochains, " + std::to_string(tested) + " tuples");
    }
  }
  return rep;
}

}  // namespace hochdef
