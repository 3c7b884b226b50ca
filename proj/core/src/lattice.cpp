#include "hochdef/lattice.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "hochdef/error.hpp"

namespace hochdef {

using linalg::DenseMatrix;

namespace {

ClassVector unit_vector(std::size_t n, std::size_t i) {
  ClassVector v(n, Scalar(0));
  v[i] = Scalar(1);
  return v;
}

ClassVector combine(const Scalar& a, const ClassVector& x, const Scalar& b, const ClassVector& y) {
  ClassVector out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = a * x[k] + b * y[k];
  return out;
}

std::string format_class(const ClassVector& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + v[k].to_string();
  return out + ")";
}

bool unit_upper_triangular(const DenseMatrix& g) {
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (g(i, j) != Scalar(i == j ? 1 : 0)) return false;
  return true;
}

}  // namespace

GramLattice::GramLattice(DenseMatrix gram, std::size_t ambient_dimension, std::optional<std::vector<Scalar>> ranks,
                         std::vector<std::string> labels)
    : form_(std::move(gram)), d_(ambient_dimension), ranks_(std::move(ranks)), labels_(std::move(labels)) {
  const std::size_t n = form_.rows();
  if (n == 0 || form_.cols() != n) throw Error(ErrorKind::DimensionMismatch, "Gram matrix must be square and nonempty");
  if (!unit_upper_triangular(form_)) throw Error(ErrorKind::DimensionMismatch, "Gram matrix is not unit upper-triangular");
  if (ranks_ && ranks_->size() != n) throw Error(ErrorKind::DimensionMismatch, "rank vector has the wrong length");
  if (labels_.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels_.push_back("E" + std::to_string(i + 1));
  } else if (labels_.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "label list has the wrong length");
  }
  for (std::size_t i = 0; i < n; ++i) classes_.push_back(unit_vector(n, i));
}

Scalar GramLattice::chi(const ClassVector& x, const ClassVector& y) const { return linalg::bilinear(x, form_, y); }

DenseMatrix GramLattice::gram() const {
  DenseMatrix g(size(), size());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) g(i, j) = chi(classes_[i], classes_[j]);
  return g;
}

Scalar GramLattice::rank_of(const ClassVector& x) const {
  if (!ranks_) throw Error(ErrorKind::MissingRankData, "lattice has no rank data");
  Scalar r(0);
  for (std::size_t k = 0; k < x.size(); ++k) r += x[k] * (*ranks_)[k];
  return r;
}

GramLattice mutate(const GramLattice& latt, char side, std::size_t i) {
  if (side != 'L' && side != 'R') throw Error(ErrorKind::Syntax, std::string("unknown mutation side '") + side + "'");
  if (i < 1 || i >= latt.size()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "mutation index " + std::to_string(i) + " outside 1.." + std::to_string(latt.size() - 1));
  }
  GramLattice out = latt;
  const ClassVector& e = latt.classes_[i - 1];
  const ClassVector& f = latt.classes_[i];
  const Scalar c = latt.chi(e, f);
  std::string& le = out.labels_[i - 1];
  std::string& lf = out.labels_[i];
  if (side == 'L') {
    out.classes_[i - 1] = combine(c, e, Scalar(-1), f);
    out.classes_[i] = e;
    lf = latt.labels_[i - 1];
    le = "L(" + latt.labels_[i - 1] + "," + latt.labels_[i] + ")";
  } else {
    out.classes_[i - 1] = f;
    out.classes_[i] = combine(c, f, Scalar(-1), e);
    le = latt.labels_[i];
    lf = "R(" + latt.labels_[i] + "," + latt.labels_[i - 1] + ")";
  }
  return out;
}

GramLattice mutate(const GramLattice& latt, const std::vector<MutationStep>& word) {
  GramLattice out = latt;
  for (const auto& step : word) out = mutate(out, step.side, step.index);
  return out;
}

std::vector<MutationStep> parse_mutation_word(std::string_view text) {
  std::vector<MutationStep> word;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      ++pos;
      continue;
    }
    if (ch != 'L' && ch != 'R') throw ParseError(ErrorKind::Syntax, 1, pos + 1, "expected 'L' or 'R'");
    const std::size_t start = ++pos;
    std::size_t index = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      index = index * 10 + static_cast<std::size_t>(text[pos] - '0');
      if (index > 1'000'000) throw ParseError(ErrorKind::Syntax, 1, start + 1, "index too large");
      ++pos;
    }
    if (pos == start) throw ParseError(ErrorKind::Syntax, 1, start + 1, "expected a mutation index");
    word.push_back({ch, index});
  }
  return word;
}

DenseMatrix serre_operator(const GramLattice& latt) { return latt.form().inverse() * latt.form().transpose(); }

Report helix_check(const GramLattice& latt) {
  Report rep;
  rep.command = "helix-check";
  const std::size_t n = latt.size();
  const std::size_t d = latt.ambient_dimension();
  const DenseMatrix S = serre_operator(latt);

  bool serre_ok = true;
  for (std::size_t i = 0; i < n && serre_ok; ++i)
    for (std::size_t j = 0; j < n && serre_ok; ++j) {
      const ClassVector x = unit_vector(n, i), y = unit_vector(n, j);
      serre_ok = latt.chi(x, y) == latt.chi(y, S.multiply(x));
    }
  rep.add("serre-identity", serre_ok);

  // Numerical omega: (-1)^d S; helix shift sign (-1)^{d-n+1}.
  const Scalar omega_sign(d % 2 == 0 ? 1 : -1);
  const long shift = static_cast<long>(d) - static_cast<long>(n) + 1;
  const Scalar shift_sign(shift % 2 == 0 ? 1 : -1);

  // Helix continuation: E_{k+n} = R through E_{k+1}..E_{k+n-1}.
  std::vector<ClassVector> helix = latt.classes();
  for (std::size_t k = 0; k < n; ++k) {
    ClassVector moving = helix[k];
    for (std::size_t m = k + 1; m < k + n; ++m) moving = combine(latt.chi(moving, helix[m]), helix[m], Scalar(-1), moving);
    helix.push_back(moving);
  }
  for (std::size_t k = 0; k < n; ++k) {
    ClassVector twisted = S.multiply(helix[k + n]);
    for (auto& x : twisted) x *= omega_sign * shift_sign;
    const bool ok = twisted == helix[k];
    rep.add("helix-class[" + std::to_string(k + 1) + "]", ok,
            ok ? "" : "expected " + format_class(helix[k]) + ", got " + format_class(twisted));
  }
  if (latt.ranks()) {
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar want = latt.rank_of(helix[k]);
      const Scalar got = shift_sign * latt.rank_of(helix[k + n]);
      rep.add("helix-rank[" + std::to_string(k + 1) + "]", want == got,
              want == got ? "" : "rank " + want.to_string() + " vs shifted continuation rank " + got.to_string() +
                                     " of " + format_class(helix[k + n]));
    }
    bool preserves = true;
    std::string witness;
    for (std::size_t k = 0; k < n && preserves; ++k) {
      ClassVector w = S.multiply(unit_vector(n, k));
      for (auto& x : w) x *= omega_sign;
      if (latt.rank_of(w) != latt.rank_of(unit_vector(n, k))) {
        preserves = false;
        witness = "w(" + latt.labels()[k] + ") = " + format_class(w) + " has rank " + latt.rank_of(w).to_string();
      }
    }
    rep.add("omega-preserves-rank", preserves, witness);
  } else {
    rep.note("ranks", "absent; rank compatibility not checked");
  }
  rep.note("scope", "numerical shadow only: a pass is necessary, not sufficient, for a helix");
  return rep;
}

Scalar rank_gcd(const GramLattice& latt) {
  if (!latt.ranks()) throw Error(ErrorKind::MissingRankData, "lattice has no rank data");
  mpz_class g = 0;
  for (const auto& r : *latt.ranks()) {
    if (!r.is_integer()) throw Error(ErrorKind::MissingRankData, "rank " + r.to_string() + " is not an integer");
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.numerator().get_mpz_t());
  }
  return Scalar(mpq_class(g));
}

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> split_line(const std::string& line) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (line[pos] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos])) && line[pos] != '#') ++pos;
    out.push_back({line.substr(start, pos - start), start + 1});
  }
  return out;
}

std::size_t parse_count(const Token& t, std::size_t line) {
  std::size_t v = 0;
  if (t.text.empty() || t.text.size() > 6) throw ParseError(ErrorKind::Syntax, line, t.column, "expected a count");
  for (char ch : t.text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError(ErrorKind::Syntax, line, t.column, "expected a count");
    v = v * 10 + static_cast<std::size_t>(ch - '0');
  }
  return v;
}

Scalar parse_entry(const Token& t, std::size_t line) {
  try {
    return Scalar::parse(t.text);
  } catch (const Error&) {
    throw ParseError(ErrorKind::Syntax, line, t.column, "malformed number '" + t.text + "'");
  }
}

}  // namespace

GramLattice parse_lattice(std::string_view text) {
  std::optional<std::size_t> n, d;
  std::vector<std::vector<Scalar>> rows;
  std::optional<std::vector<Scalar>> ranks;
  std::vector<std::string> labels;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::size_t last_line = 1;
  while (std::getline(in, line)) {
    ++lineno;
    const auto toks = split_line(line);
    if (toks.empty()) continue;
    last_line = lineno;
    const std::string& key = toks.front().text;
    const auto need_n = [&] {
      if (!n) throw ParseError(ErrorKind::Syntax, lineno, 1, "'" + key + "' before 'n'");
    };
    const auto exact_count = [&](std::size_t want) {
      if (toks.size() - 1 != want) {
        throw ParseError(ErrorKind::Syntax, lineno, toks.back().column,
                         "'" + key + "' expects " + std::to_string(want) + " entries, got " + std::to_string(toks.size() - 1));
      }
    };
    if (key == "n" || key == "d") {
      exact_count(1);
      auto& slot = key == "n" ? n : d;
      if (slot) throw ParseError(ErrorKind::Syntax, lineno, 1, "duplicate '" + key + "'");
      slot = parse_count(toks[1], lineno);
      if (key == "n" && *n == 0) throw ParseError(ErrorKind::Syntax, lineno, toks[1].column, "n must be positive");
    } else if (key == "row") {
      need_n();
      exact_count(*n);
      if (rows.size() == *n) throw ParseError(ErrorKind::Syntax, lineno, 1, "too many rows");
      std::vector<Scalar> row;
      for (std::size_t k = 1; k < toks.size(); ++k) row.push_back(parse_entry(toks[k], lineno));
      rows.push_back(std::move(row));
    } else if (key == "ranks") {
      need_n();
      exact_count(*n);
      if (ranks) throw ParseError(ErrorKind::Syntax, lineno, 1, "duplicate 'ranks'");
      ranks.emplace();
      for (std::size_t k = 1; k < toks.size(); ++k) ranks->push_back(parse_entry(toks[k], lineno));
    } else if (key == "labels") {
      need_n();
      exact_count(*n);
      if (!labels.empty()) throw ParseError(ErrorKind::Syntax, lineno, 1, "duplicate 'labels'");
      for (std::size_t k = 1; k < toks.size(); ++k) labels.push_back(toks[k].text);
    } else {
      throw ParseError(ErrorKind::Syntax, lineno, toks.front().column, "unknown keyword '" + key + "'");
    }
  }
  if (!n) throw ParseError(ErrorKind::Syntax, last_line, 1, "missing 'n'");
  if (!d) throw ParseError(ErrorKind::Syntax, last_line, 1, "missing 'd'");
  if (rows.size() != *n) {
    throw ParseError(ErrorKind::Syntax, last_line, 1, "expected " + std::to_string(*n) + " rows, got " + std::to_string(rows.size()));
  }
  return GramLattice(DenseMatrix::from_rows(rows), *d, std::move(ranks), std::move(labels));
}

GramLattice read_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_lattice(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), e.line(), e.column(), path + ": " + e.what());
  }
}

std::string write_lattice(const GramLattice& latt) {
  std::ostringstream out;
  const DenseMatrix g = latt.gram();
  out << "n " << latt.size() << "\n"
      << "d " << latt.ambient_dimension() << "\n";
  for (std::size_t i = 0; i < latt.size(); ++i) {
    out << "row";
    for (std::size_t j = 0; j < latt.size(); ++j) out << ' ' << g(i, j);
    out << "\n";
  }
  if (latt.ranks()) {
    out << "ranks";
    for (const auto& c : latt.classes()) out << ' ' << latt.rank_of(c);
    out << "\n";
  }
  out << "labels";
  for (const auto& l : latt.labels()) out << ' ' << l;
  out << "\n";
  return out.str();
}

GramLattice random_lattice(std::size_t n, std::mt19937_64& rng, long bound) {
  DenseMatrix g = DenseMatrix::identity(n);
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g(i, j) = Scalar(static_cast<long>(rng() % span) - bound);
  return GramLattice(std::move(g), n - 1);
}

Report mutation_suite(std::size_t count, std::size_t max_n, long bound, std::mt19937_64& rng) {
  Report rep;
  rep.command = "mutation-suite";
  bool inverse = true, braid = true, far = true, triangular = true, exceptional = true;
  std::string w_inverse, w_braid, w_far, w_tri, w_exc;
  const auto describe = [](const GramLattice& l) {
    std::string s = "G = [";
    const DenseMatrix g = l.form();
    for (std::size_t i = 0; i < g.rows(); ++i) {
      s += i ? "; " : "";
      for (std::size_t j = 0; j < g.cols(); ++j) s += (j ? " " : "") + g(i, j).to_string();
    }
    return s + "]";
  };
  const auto observe = [&](const GramLattice& l, const GramLattice& origin) {
    const DenseMatrix g = l.gram();
    if (triangular && !unit_upper_triangular(g)) {
      triangular = false;
      w_tri = describe(origin);
    }
    for (std::size_t i = 0; i < g.rows() && exceptional; ++i) {
      if (!g(i, i).is_one()) {
        exceptional = false;
        w_exc = describe(origin);
      }
    }
  };
  for (std::size_t trial = 0; trial < count; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng() % (max_n - 1));
    const GramLattice base = random_lattice(n, rng, bound);
    // A random short word moves away from the standard basis first.
    GramLattice l = base;
    for (int step = 0; step < 4; ++step) {
      l = mutate(l, rng() % 2 ? 'L' : 'R', 1 + static_cast<std::size_t>(rng() % (n - 1)));
      observe(l, base);
    }
    for (std::size_t i = 1; i < n; ++i) {
      const GramLattice lr = mutate(mutate(l, 'R', i), 'L', i);
      const GramLattice rl = mutate(mutate(l, 'L', i), 'R', i);
      observe(mutate(l, 'L', i), base);
      observe(mutate(l, 'R', i), base);
      if (inverse && (lr != l || rl != l)) {
        inverse = false;
        w_inverse = describe(base) + " at i = " + std::to_string(i);
      }
      if (i + 1 < n) {
        for (char side : {'L', 'R'}) {
          const GramLattice a = mutate(l, {{side, i}, {side, i + 1}, {side, i}});
          const GramLattice b = mutate(l, {{side, i + 1}, {side, i}, {side, i + 1}});
          if (braid && (a != b || a.gram() != b.gram())) {
            braid = false;
            w_braid = describe(base) + " side " + side + " at i = " + std::to_string(i);
          }
        }
      }
      for (std::size_t j = i + 2; j < n; ++j) {
        for (char s1 : {'L', 'R'})
          for (char s2 : {'L', 'R'}) {
            if (far && mutate(l, {{s1, i}, {s2, j}}) != mutate(l, {{s2, j}, {s1, i}})) {
              far = false;
              w_far = describe(base) + " at " + s1 + std::to_string(i) + ", " + s2 + std::to_string(j);
            }
          }
      }
    }
  }
  rep.add("inverse-pairs", inverse, inverse ? std::to_string(count) + " lattices" : w_inverse);
  rep.add("braid-relations", braid, w_braid);
  rep.add("far-commutation", far, w_far);
  rep.add("unitriangular-preserved", triangular, w_tri);
  rep.add("exceptional-preserved", exceptional, w_exc);
  return rep;
}

}  // namespace hochdef
