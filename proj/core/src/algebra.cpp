#include "hochdef/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "hochdef/error.hpp"
#include "hochdef/linalg.hpp"

namespace hochdef {
namespace {

std::vector<Path> enumerate_paths(const Quiver& q) {
  std::vector<Path> all;
  std::vector<Path> frontier;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) all.push_back({v, v, {}});
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    frontier.push_back({q.arrows()[a].source, q.arrows()[a].target, {a}});
  }
  while (!frontier.empty()) {
    std::vector<Path> next;
    for (const auto& p : frontier) {
      for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        if (q.arrows()[a].source != p.target) continue;
        Path longer = p;
        longer.arrows.push_back(a);
        longer.target = q.arrows()[a].target;
        next.push_back(std::move(longer));
      }
    }
    all.insert(all.end(), frontier.begin(), frontier.end());
    frontier = std::move(next);
  }
  return all;
}

Path concatenate(const Path& a, const Path& b) {
  Path out;
  out.source = a.source;
  out.target = b.target;
  out.arrows = a.arrows;
  out.arrows.insert(out.arrows.end(), b.arrows.begin(), b.arrows.end());
  return out;
}

// Sinks first: repeatedly place the smallest vertex whose arrow targets are all placed.
std::vector<std::size_t> exceptional_order(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  std::vector<char> placed(n, 0);
  std::vector<std::size_t> order;
  while (order.size() < n) {
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v]) continue;
      const bool ready = std::all_of(q.arrows().begin(), q.arrows().end(),
                                     [&](const Arrow& a) { return a.source != v || placed[a.target]; });
      if (ready) {
        placed[v] = 1;
        order.push_back(v);
        break;
      }
    }
  }
  return order;
}

// Paths between one pair of vertices; larger paths in deglex order get smaller columns so
// that RowSpace pivots (smallest column) are leading terms.
struct Block {
  std::vector<Path> paths;  // column order
  std::map<std::vector<std::size_t>, std::size_t> column;
  linalg::RowSpace ideal{0};
};

}  // namespace

Algebra::Algebra(std::string name, std::vector<std::string> labels, std::vector<SparseVector> table,
                 SparseVector unit, std::optional<QuiverData> quiver)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      table_(std::move(table)),
      unit_(std::move(unit)),
      quiver_(std::move(quiver)) {
  const std::size_t d = labels_.size();
  if (table_.size() != d * d) throw Error(ErrorKind::DimensionMismatch, "structure table has wrong size");
  preimages_.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (const auto& e : table_[i * d + j]) {
        if (e.index >= d) throw Error(ErrorKind::DimensionMismatch, "structure constant out of range");
        preimages_[e.index].push_back({i, j, e.value});
      }
    }
  }
  if (!unit_.empty() && unit_.entries().back().index >= d) {
    throw Error(ErrorKind::DimensionMismatch, "unit out of range");
  }
}

std::optional<std::size_t> Algebra::find_label(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

SparseVector Algebra::multiply(const SparseVector& x, const SparseVector& y) const {
  std::vector<Entry> acc;
  for (const auto& a : x) {
    for (const auto& b : y) {
      const Scalar ab = a.value * b.value;
      for (const auto& e : product(a.index, b.index)) acc.push_back({e.index, ab * e.value});
    }
  }
  return SparseVector::from_unsorted(std::move(acc));
}

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < dimension(); ++i)
    for (std::size_t j = i + 1; j < dimension(); ++j)
      if (product(i, j) != product(j, i)) return false;
  return true;
}

std::optional<std::string> Algebra::associativity_failure() const {
  const std::size_t d = dimension();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const SparseVector ij = product(i, j);
      for (std::size_t k = 0; k < d; ++k) {
        const SparseVector e_k = SparseVector::unit(k);
        if (multiply(ij, e_k) != multiply(SparseVector::unit(i), product(j, k))) {
          return "(" + label(i) + "*" + label(j) + ")*" + label(k) + " != " + label(i) + "*(" + label(j) + "*" +
                 label(k) + ")";
        }
      }
    }
  }
  return std::nullopt;
}

AlgebraPtr build_algebra(const Quiver& q, const std::vector<Relation>& relations, std::string name) {
  for (const auto& r : relations) validate_relation(r);
  const std::size_t n = q.vertex_count();

  std::vector<Block> blocks(n * n);
  auto block_of = [&](std::size_t s, std::size_t t) -> Block& { return blocks[s * n + t]; };
  for (auto& p : enumerate_paths(q)) block_of(p.source, p.target).paths.push_back(std::move(p));
  for (auto& b : blocks) {
    std::sort(b.paths.begin(), b.paths.end(), [](const Path& x, const Path& y) { return path_less(y, x); });
    for (std::size_t c = 0; c < b.paths.size(); ++c) b.column.emplace(b.paths[c].arrows, c);
    b.ideal = linalg::RowSpace(b.paths.size());
  }

  // Paths ending / starting at each vertex, trivial ones included.
  std::vector<std::vector<const Path*>> ending(n), starting(n);
  for (const auto& b : blocks) {
    for (const auto& p : b.paths) {
      ending[p.target].push_back(&p);
      starting[p.source].push_back(&p);
    }
  }
  for (const auto& r : relations) {
    if (r.terms.empty()) continue;
    const std::size_t s = r.terms.front().path.source;
    const std::size_t t = r.terms.front().path.target;
    for (const Path* u : ending[s]) {
      for (const Path* v : starting[t]) {
        Block& blk = block_of(u->source, v->target);
        std::vector<Entry> entries;
        for (const auto& term : r.terms) {
          const Path full = concatenate(concatenate(*u, term.path), *v);
          entries.push_back({blk.column.at(full.arrows), term.coefficient});
        }
        blk.ideal.insert(SparseVector::from_unsorted(std::move(entries)));
      }
    }
  }

  // Standard paths: non-pivot columns of each block.
  std::vector<Path> basis;
  for (const auto& b : blocks) {
    for (std::size_t c = 0; c < b.paths.size(); ++c)
      if (!b.ideal.rows().count(c)) basis.push_back(b.paths[c]);
  }
  std::sort(basis.begin(), basis.end(), path_less);
  const std::size_t d = basis.size();
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> basis_index;
  for (std::size_t i = 0; i < d; ++i) basis_index.emplace(std::pair(basis[i].source, basis[i].arrows), i);

  auto normal_form = [&](const Path& p) {
    const Block& blk = block_of(p.source, p.target);
    const SparseVector reduced = blk.ideal.reduce(SparseVector::unit(blk.column.at(p.arrows)));
    std::vector<Entry> out;
    for (const auto& e : reduced) {
      out.push_back({basis_index.at(std::pair(p.source, blk.paths[e.index].arrows)), e.value});
    }
    return SparseVector::from_unsorted(std::move(out));
  };

  std::vector<SparseVector> table(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (basis[i].target != basis[j].source) continue;
      table[i * d + j] = normal_form(concatenate(basis[i], basis[j]));
    }
  }

  QuiverData data{q, relations, basis, std::vector<std::size_t>(n), exceptional_order(q), std::vector<std::size_t>(n)};
  std::vector<Entry> unit;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) {
    labels.push_back(path_label(q, basis[i]));
    if (basis[i].length() == 0) {
      data.idempotent[basis[i].source] = i;
      unit.push_back({i, Scalar(1)});
    }
  }
  for (std::size_t pos = 0; pos < n; ++pos) data.position[data.order[pos]] = pos;
  return std::make_shared<const Algebra>(std::move(name), std::move(labels), std::move(table),
                                         SparseVector::from_unsorted(std::move(unit)), std::move(data));
}

AlgebraPtr build_algebra(const QuiverPresentation& pres, std::string name) {
  return build_algebra(pres.quiver, pres.relations, std::move(name));
}

AlgebraPtr ground_field() { return build_algebra(Quiver(1, {}), {}, "k"); }

AlgebraPtr truncated_polynomial(std::size_t m) {
  if (m == 0) throw Error(ErrorKind::DimensionMismatch, "k[x]/(x^0) is the zero ring");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) labels.push_back(i == 0 ? "one" : (i == 1 ? "x" : "x^" + std::to_string(i)));
  std::vector<SparseVector> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i + j < m) table[i * m + j] = SparseVector::unit(i + j);
  return std::make_shared<const Algebra>("k[x]/(x^" + std::to_string(m) + ")", std::move(labels), std::move(table),
                                         SparseVector::unit(0));
}

AlgElem basis_element(const Algebra& a, std::size_t i) {
  if (i >= a.dimension()) throw Error(ErrorKind::IndexOutOfRange, "basis index out of range");
  return {&a, SparseVector::unit(i)};
}

AlgElem one(const Algebra& a) { return {&a, a.unit()}; }

AlgElem multiply(const Algebra& a, const AlgElem& x, const AlgElem& y) {
  if (x.algebra != &a || y.algebra != &a) throw Error(ErrorKind::MismatchedAlgebra, "elements of different algebras");
  return {&a, a.multiply(x.coeffs, y.coeffs)};
}

std::vector<AlgElem> vertex_idempotents(const Algebra& a) {
  const QuiverData* q = a.quiver_data();
  if (!q) return {one(a)};
  std::vector<AlgElem> out;
  for (std::size_t v : q->order) out.push_back(basis_element(a, q->idempotent[v]));
  return out;
}

std::size_t hom_dimension(const Algebra& a, std::size_t i, std::size_t j) {
  const QuiverData* q = a.quiver_data();
  if (!q) throw Error(ErrorKind::DimensionMismatch, "hom_dimension needs a quiver algebra");
  const std::size_t n = q->order.size();
  if (i >= n || j >= n) throw Error(ErrorKind::IndexOutOfRange, "vertex position out of range");
  std::size_t count = 0;
  for (std::size_t b = 0; b < a.dimension(); ++b) {
    if (q->position[q->source(b)] == j && q->position[q->target(b)] == i) ++count;
  }
  return count;
}

std::string format_element(const Algebra& a, const SparseVector& v) {
  if (v.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& e : v) {
    Scalar c = e.value;
    if (first) {
      if (c.sign() < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    }
    if (!c.is_one()) out += c.to_string() + "*";
    out += a.label(e.index);
    first = false;
  }
  return out;
}

SparseVector parse_element(const Algebra& a, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.size() == 1 && tokens[0] == "0") return {};
  if (tokens.empty()) throw Error(ErrorKind::Syntax, "empty algebra element");

  std::vector<Entry> entries;
  Scalar sign(1);
  bool expect_term = true;
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    std::string tok = tokens[k];
    if (!expect_term) {
      if (tok != "+" && tok != "-") throw Error(ErrorKind::Syntax, "expected '+' or '-' before '" + tok + "'");
      sign = Scalar(tok == "-" ? -1 : 1);
      expect_term = true;
      continue;
    }
    if (k == 0 && tok.size() > 1 && tok[0] == '-') {
      sign = Scalar(-1);
      tok = tok.substr(1);
    }
    Scalar coef(1);
    if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
      const auto star = tok.find('*');
      if (star == std::string::npos) throw Error(ErrorKind::Syntax, "coefficient without label in '" + tok + "'");
      coef = Scalar::parse(tok.substr(0, star));
      tok = tok.substr(star + 1);
    }
    const auto idx = a.find_label(tok);
    if (!idx) throw Error(ErrorKind::Syntax, "unknown basis label '" + tok + "'");
    entries.push_back({*idx, sign * coef});
    expect_term = false;
  }
  if (expect_term) throw Error(ErrorKind::Syntax, "dangling operator in algebra element");
  return SparseVector::from_unsorted(std::move(entries));
}

}  // namespace hochdef
