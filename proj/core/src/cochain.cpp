#include "hochdef/cochain.hpp"

#include <algorithm>
#include <sstream>

#include "hochdef/error.hpp"

namespace hochdef {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::optional<std::uint64_t> cochain_dimension(std::size_t algebra_dim, std::size_t degree) {
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i <= degree; ++i) {
    if (algebra_dim != 0 && acc > UINT64_MAX / algebra_dim) return std::nullopt;
    acc *= algebra_dim;
  }
  return acc;
}

Cochain::Cochain(AlgebraPtr algebra, std::size_t degree) : Cochain(std::move(algebra), degree, SparseVector()) {}

Cochain::Cochain(AlgebraPtr algebra, std::size_t degree, SparseVector coeffs)
    : algebra_(std::move(algebra)), degree_(degree), coeffs_(std::move(coeffs)) {
  const auto dim = cochain_dimension(algebra_->dimension(), degree_);
  if (!dim || *dim > SIZE_MAX) throw Error(ErrorKind::BudgetExceeded, "cochain space too large to index");
  space_dim_ = static_cast<std::size_t>(*dim);
  if (!coeffs_.empty() && coeffs_.entries().back().index >= space_dim_) {
    throw Error(ErrorKind::DimensionMismatch, "cochain coefficient index out of range");
  }
}

Cochain Cochain::from_element(AlgebraPtr algebra, SparseVector element) {
  return Cochain(std::move(algebra), 0, std::move(element));
}

Cochain Cochain::identity(AlgebraPtr algebra) {
  const std::size_t d = algebra->dimension();
  SparseVector v;
  for (std::size_t i = 0; i < d; ++i) v.push_back(i * d + i, Scalar(1));
  return Cochain(std::move(algebra), 1, std::move(v));
}

Cochain Cochain::product_map(AlgebraPtr algebra) {
  const std::size_t d = algebra->dimension();
  SparseVector v;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& e : algebra->product(i, j)) v.push_back((i * d + j) * d + e.index, e.value);
  return Cochain(std::move(algebra), 2, std::move(v));
}

Cochain Cochain::basis(AlgebraPtr algebra, std::size_t degree, std::size_t flat_index) {
  return Cochain(std::move(algebra), degree, SparseVector::unit(flat_index));
}

std::size_t Cochain::flat_index(std::span<const std::size_t> inputs, std::size_t output) const {
  if (inputs.size() != degree_) throw Error(ErrorKind::DegreeMismatch, "wrong number of cochain arguments");
  const std::size_t d = algebra_->dimension();
  std::size_t idx = 0;
  for (std::size_t t : inputs) idx = idx * d + t;
  return idx * d + output;
}

std::size_t Cochain::decode(std::size_t flat, std::span<std::size_t> inputs) const {
  const std::size_t d = algebra_->dimension();
  const std::size_t out = flat % d;
  flat /= d;
  for (std::size_t i = degree_; i-- > 0;) {
    inputs[i] = flat % d;
    flat /= d;
  }
  return out;
}

SparseVector Cochain::evaluate(std::span<const std::size_t> inputs) const {
  const std::size_t d = algebra_->dimension();
  const std::size_t lo = flat_index(inputs, 0);
  const auto& es = coeffs_.entries();
  auto it = std::lower_bound(es.begin(), es.end(), lo, [](const Entry& e, std::size_t v) { return e.index < v; });
  SparseVector out;
  for (; it != es.end() && it->index < lo + d; ++it) out.push_back(it->index - lo, it->value);
  return out;
}

SparseVector Cochain::evaluate(std::span<const SparseVector> inputs) const {
  if (inputs.size() != degree_) throw Error(ErrorKind::DegreeMismatch, "wrong number of cochain arguments");
  std::vector<Entry> acc;
  std::vector<std::size_t> tuple(degree_);
  auto recurse = [&](auto&& self, std::size_t pos, const Scalar& weight) -> void {
    if (pos == degree_) {
      for (const auto& e : evaluate(std::span<const std::size_t>(tuple))) acc.push_back({e.index, weight * e.value});
      return;
    }
    for (const auto& e : inputs[pos]) {
      tuple[pos] = e.index;
      self(self, pos + 1, weight * e.value);
    }
  };
  recurse(recurse, 0, Scalar(1));
  return SparseVector::from_unsorted(std::move(acc));
}

void Cochain::check_compatible(const Cochain& other) const {
  if (algebra_ != other.algebra_) throw Error(ErrorKind::MismatchedAlgebra, "cochains over different algebras");
  if (degree_ != other.degree_) throw Error(ErrorKind::DegreeMismatch, "cochains of different degrees");
}

Cochain& Cochain::operator+=(const Cochain& other) {
  check_compatible(other);
  coeffs_ += other.coeffs_;
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& other) {
  check_compatible(other);
  coeffs_ -= other.coeffs_;
  return *this;
}

Cochain Cochain::scaled(const Scalar& c) const { return Cochain(algebra_, degree_, coeffs_.scaled(c)); }

bool operator==(const Cochain& a, const Cochain& b) {
  return a.algebra_ == b.algebra_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
}

Cochain random_cochain(AlgebraPtr algebra, std::size_t degree, std::mt19937_64& rng, std::size_t nonzeros,
                       long range) {
  Cochain zero(algebra, degree);
  const std::size_t space = zero.space_dimension();
  if (space == 0) return zero;
  const auto width = static_cast<std::uint64_t>(2 * range + 1);
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < nonzeros; ++i) {
    const std::size_t idx = static_cast<std::size_t>(rng() % space);
    const long value = static_cast<long>(rng() % width) - range;
    if (value != 0) entries.push_back({idx, Scalar(value)});
  }
  return Cochain(std::move(algebra), degree, SparseVector::from_unsorted(std::move(entries)));
}

std::string write_cochains(const std::vector<Cochain>& cochains) {
  std::ostringstream out;
  for (const auto& f : cochains) {
    const Algebra& a = f.algebra();
    const std::size_t d = a.dimension();
    out << "cochain degree " << f.degree() << "\n";
    std::vector<std::size_t> tuple(f.degree());
    const auto& es = f.coeffs().entries();
    for (std::size_t k = 0; k < es.size();) {
      const std::size_t base = es[k].index / d;
      SparseVector value;
      for (; k < es.size() && es[k].index / d == base; ++k) value.push_back(es[k].index % d, es[k].value);
      f.decode(base * d, tuple);
      out << "f(";
      for (std::size_t i = 0; i < tuple.size(); ++i) out << (i ? "," : "") << a.label(tuple[i]);
      out << ") = " << format_element(a, value) << "\n";
    }
    out << "end\n";
  }
  return out.str();
}

std::vector<Cochain> parse_cochains(const AlgebraPtr& algebra, std::string_view text) {
  std::vector<Cochain> result;
  std::optional<std::size_t> degree;
  std::vector<Entry> entries;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  const std::size_t d = algebra->dimension();
  auto fail = [&](const std::string& msg) -> void { throw ParseError(ErrorKind::Syntax, line_no, 1, msg); };

  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (!degree) {
      std::istringstream words{std::string(line)};
      std::string kw1, kw2, n;
      words >> kw1 >> kw2 >> n;
      std::string extra;
      if (kw1 != "cochain" || kw2 != "degree" || n.empty() || (words >> extra) ||
          !std::all_of(n.begin(), n.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        fail("expected 'cochain degree <n>'");
      }
      degree = static_cast<std::size_t>(std::stoul(n));
      entries.clear();
      continue;
    }
    if (line == "end") {
      try {
        result.emplace_back(algebra, *degree, SparseVector::from_unsorted(std::move(entries)));
      } catch (const Error& e) {
        throw ParseError(e.kind(), line_no, 1, e.what());
      }
      entries = {};
      degree.reset();
      continue;
    }
    if (line.substr(0, 2) != "f(") fail("expected 'f(...) = ...' or 'end'");
    const auto close = line.find(')');
    const auto eq = line.find('=', close == std::string_view::npos ? 0 : close);
    if (close == std::string_view::npos || eq == std::string_view::npos) fail("malformed cochain value line");
    std::vector<std::size_t> tuple;
    std::string_view args = trim(line.substr(2, close - 2));
    while (!args.empty()) {
      const auto comma = args.find(',');
      const std::string label(trim(args.substr(0, comma)));
      const auto idx = algebra->find_label(label);
      if (!idx) fail("unknown basis label '" + label + "'");
      tuple.push_back(*idx);
      if (comma == std::string_view::npos) break;
      args = args.substr(comma + 1);
    }
    if (tuple.size() != *degree) {
      throw ParseError(ErrorKind::DegreeMismatch, line_no, 1, "argument count does not match the cochain degree");
    }
    if (!trim(line.substr(close + 1, eq - close - 1)).empty()) fail("unexpected text before '='");
    SparseVector value;
    try {
      value = parse_element(*algebra, line.substr(eq + 1));
    } catch (const Error& e) {
      throw ParseError(e.kind(), line_no, eq + 2, e.what());
    }
    std::size_t base = 0;
    for (std::size_t t : tuple) base = base * d + t;
    for (const auto& e : value) entries.push_back({base * d + e.index, e.value});
  }
  if (degree) throw ParseError(ErrorKind::Syntax, line_no, 1, "missing 'end'");
  return result;
}

}  // namespace hochdef
