#include "hochdef/deformation.hpp"

#include "hochdef/error.hpp"
#include "hochdef/hochschild.hpp"
#include "hochdef/linalg.hpp"

namespace hochdef {
namespace {

const QuiverData& quiver_of(const DeformedAlgebra& D) {
  const QuiverData* q = D.base().quiver_data();
  if (!q) throw Error(ErrorKind::DimensionMismatch, "idempotent data needs a quiver algebra");
  return *q;
}

SparseVector idem(const DeformedAlgebra& D, std::size_t pos) {
  const QuiverData& q = quiver_of(D);
  if (pos >= q.order.size()) throw Error(ErrorKind::IndexOutOfRange, "vertex position out of range");
  return SparseVector::unit(q.idempotent[q.order[pos]]);
}

std::string pos_label(std::size_t i) { return std::to_string(i + 1); }
std::string pair_label(std::size_t i, std::size_t j) { return "[" + pos_label(i) + "," + pos_label(j) + "]"; }

}  // namespace

DeformedAlgebra::DeformedAlgebra(Cochain u) : DeformedAlgebra(std::move(u), true) {}

DeformedAlgebra DeformedAlgebra::unchecked(Cochain u) { return DeformedAlgebra(std::move(u), false); }

DeformedAlgebra::DeformedAlgebra(Cochain u, bool check) : u_(std::move(u)) {
  if (u_.degree() != 2) throw Error(ErrorKind::DegreeMismatch, "deformations need a 2-cochain");
  if (check && !is_cocycle(u_)) throw Error(ErrorKind::NotACocycle, "the 2-cochain is not a cocycle");
  const std::size_t d = base().dimension();
  table_.resize(d * d);
  std::size_t pair[2];
  const auto& es = u_.coeffs().entries();
  for (std::size_t k = 0; k < es.size();) {
    const std::size_t slot = es[k].index / d;
    SparseVector v;
    for (; k < es.size() && es[k].index / d == slot; ++k) v.push_back(es[k].index % d, es[k].value);
    u_.decode(slot * d, pair);
    table_[pair[0] * d + pair[1]] = std::move(v);
  }
  unit_ = {base().unit(), this->u(base().unit(), base().unit()).scaled(Scalar(-1))};
}

SparseVector DeformedAlgebra::u(const SparseVector& x, const SparseVector& y) const {
  const std::size_t d = base().dimension();
  std::vector<Entry> acc;
  for (const auto& a : x)
    for (const auto& b : y) {
      const Scalar w = a.value * b.value;
      for (const auto& e : table_[a.index * d + b.index]) acc.push_back({e.index, w * e.value});
    }
  return SparseVector::from_unsorted(std::move(acc));
}

DefElem DeformedAlgebra::multiply(const DefElem& x, const DefElem& y) const {
  const Algebra& a = base();
  SparseVector eps = a.multiply(x.a1, y.a0);
  eps += a.multiply(x.a0, y.a1);
  eps += u(x.a0, y.a0);
  return {a.multiply(x.a0, y.a0), std::move(eps)};
}

DefElem DeformedAlgebra::scalar(const Scalar& mu, const Scalar& nu) const {
  DefElem s{unit_.a0.scaled(mu), unit_.a1.scaled(mu)};
  s.a1 += base().unit().scaled(nu);
  return s;
}

DefElem DeformedAlgebra::basis(std::size_t i) const {
  const std::size_t d = base().dimension();
  if (i >= 2 * d) throw Error(ErrorKind::IndexOutOfRange, "deformed basis index out of range");
  return i < d ? DefElem{SparseVector::unit(i), {}} : DefElem{{}, SparseVector::unit(i - d)};
}

SparseVector DeformedAlgebra::coordinates(const DefElem& x) const {
  SparseVector v = x.a0;
  for (const auto& e : x.a1) v.push_back(e.index + base().dimension(), e.value);
  return v;
}

DefElem DeformedAlgebra::from_coordinates(const SparseVector& v) const {
  const std::size_t d = base().dimension();
  DefElem x;
  for (const auto& e : v) {
    if (e.index < d) {
      x.a0.push_back(e.index, e.value);
    } else {
      x.a1.push_back(e.index - d, e.value);
    }
  }
  return x;
}

std::optional<std::string> DeformedAlgebra::associativity_failure() const {
  const std::size_t n = dimension();
  std::vector<DefElem> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(basis(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const DefElem ij = multiply(b[i], b[j]);
      for (std::size_t k = 0; k < n; ++k) {
        if (multiply(ij, b[k]) != multiply(b[i], multiply(b[j], b[k]))) {
          return "(" + format(b[i]) + ")(" + format(b[j]) + ")(" + format(b[k]) + ") is not associative";
        }
      }
    }
  return std::nullopt;
}

std::string DeformedAlgebra::format(const DefElem& x) const {
  if (x.a1.empty()) return format_element(base(), x.a0);
  if (x.a0.empty()) return "eps*(" + format_element(base(), x.a1) + ")";
  return format_element(base(), x.a0) + " + eps*(" + format_element(base(), x.a1) + ")";
}

std::pair<Scalar, SparseVector> extract_lambda_c(const DeformedAlgebra& D, std::size_t k) {
  const Algebra& a = D.base();
  const SparseVector p = idem(D, k);
  const SparseVector w = D.u(p, p);
  const Scalar lambda = w.at(p.front().index);
  SparseVector c = w;
  c.add_scaled(p, -lambda);
  if (!a.multiply(p, c).empty() || !a.multiply(c, p).empty()) {
    throw Error(ErrorKind::DecompositionFailure,
                "u(p,p) at position " + pos_label(k) + " has off-diagonal components: " + format_element(a, w));
  }
  return {lambda, std::move(c)};
}

SparseVector extract_d(const DeformedAlgebra& D, std::size_t i, std::size_t j) {
  if (i == j) throw Error(ErrorKind::IndexOutOfRange, "d_ij needs distinct positions");
  const Algebra& a = D.base();
  const SparseVector pi = idem(D, i);
  const SparseVector pj = idem(D, j);
  const SparseVector ci = extract_lambda_c(D, i).second;
  const SparseVector cj = extract_lambda_c(D, j).second;
  SparseVector d = D.u(pi, pj);
  d += a.multiply(pi, cj);
  d += a.multiply(ci, pj);
  if (a.multiply(a.multiply(pi, d), pj) != d) {
    throw Error(ErrorKind::DecompositionFailure, "d" + pair_label(i, j) + " leaves p_i A p_j: " + format_element(a, d));
  }
  return d;
}

DefElem deformation_unit(const DeformedAlgebra& D) {
  const std::size_t n = quiver_of(D).order.size();
  SparseVector sum;
  for (std::size_t k = 0; k < n; ++k) {
    auto [lambda, c] = extract_lambda_c(D, k);
    sum.add_scaled(idem(D, k), lambda);
    sum -= c;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) sum += extract_d(D, i, j);
  return {D.base().unit(), sum.scaled(Scalar(-1))};
}

IdempotentData solve_idempotents(const DeformedAlgebra& D, IdempotentChoice choice) {
  const Algebra& a = D.base();
  const QuiverData& q = quiver_of(D);
  const std::size_t n = q.order.size();
  IdempotentData out;
  out.vertices.resize(n);
  out.d.assign(n, std::vector<SparseVector>(n));
  for (std::size_t k = 0; k < n; ++k) {
    auto [lambda, c] = extract_lambda_c(D, k);
    out.vertices[k].vertex = q.order[k];
    out.vertices[k].lambda = lambda;
    out.vertices[k].c = std::move(c);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) out.d[i][j] = extract_d(D, i, j);

  // Unknowns: the block of a_j p_j in p_i A p_j and the block of p_i b_i in p_i A p_j, one
  // per basis path c of p_i A p_j (i != j). Equation per such c: alpha_j[c] + beta_i[c] = -d_ij[c].
  struct Unknown {
    bool is_a;
    std::size_t owner;  // position whose a or b this belongs to
    std::size_t basis;
  };
  std::vector<Unknown> unknowns;
  std::vector<std::pair<std::size_t, std::size_t>> rows;  // (alpha column, beta column)
  std::vector<Scalar> rhs;
  const std::size_t d = a.dimension();
  std::vector<std::size_t> alpha_col(d), beta_col(d);
  for (int pass = 0; pass < 2; ++pass) {
    const bool a_side = (pass == 0) == (choice == IdempotentChoice::Deterministic);
    for (std::size_t owner = 0; owner < n; ++owner) {
      for (std::size_t b = 0; b < d; ++b) {
        const std::size_t s = q.position[q.source(b)];
        const std::size_t t = q.position[q.target(b)];
        if (s == t) continue;
        if (a_side && t == owner) {
          alpha_col[b] = unknowns.size();
          unknowns.push_back({true, owner, b});
        } else if (!a_side && s == owner) {
          beta_col[b] = unknowns.size();
          unknowns.push_back({false, owner, b});
        }
      }
    }
  }
  std::vector<Triplet> triplets;
  for (std::size_t b = 0; b < d; ++b) {
    const std::size_t s = q.position[q.source(b)];
    const std::size_t t = q.position[q.target(b)];
    if (s == t) continue;
    triplets.push_back({rows.size(), alpha_col[b], Scalar(1)});
    triplets.push_back({rows.size(), beta_col[b], Scalar(1)});
    rows.emplace_back(alpha_col[b], beta_col[b]);
    rhs.push_back(-out.d[s][t].at(b));
  }
  const SparseMatrix m = SparseMatrix::from_triplets(rows.size(), unknowns.size(), std::move(triplets));
  const auto x = linalg::solve(m, rhs);
  if (!x) throw Error(ErrorKind::NoSolution, "orthogonality system has no solution");
  for (std::size_t c = 0; c < unknowns.size(); ++c) {
    if ((*x)[c].is_zero()) continue;
    VertexData& vd = out.vertices[unknowns[c].owner];
    SparseVector& target = unknowns[c].is_a ? vd.a : vd.b;
    target.add_scaled(SparseVector::unit(unknowns[c].basis), (*x)[c]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    VertexData& vd = out.vertices[k];
    const SparseVector p = idem(D, k);
    SparseVector eps = p.scaled(-vd.lambda);
    eps += a.multiply(vd.a, p);
    eps += a.multiply(p, vd.b);
    eps += vd.c;
    vd.idempotent = {p, std::move(eps)};
  }
  return out;
}

DeformedHomSpace deformed_hom(const DeformedAlgebra& D, const IdempotentData& idem_data, std::size_t i,
                              std::size_t j) {
  const std::size_t n = idem_data.vertices.size();
  if (i >= n || j >= n) throw Error(ErrorKind::IndexOutOfRange, "vertex position out of range");
  const DefElem& left = idem_data.vertices[j].idempotent;
  const DefElem& right = idem_data.vertices[i].idempotent;
  DeformedHomSpace hs{i, j, {}};
  linalg::RowSpace span(D.dimension());
  for (std::size_t b = 0; b < D.dimension(); ++b) {
    DefElem z = D.multiply(D.multiply(left, D.basis(b)), right);
    if (span.insert(D.coordinates(z))) hs.basis.push_back(std::move(z));
  }
  return hs;
}

namespace {

linalg::RowSpace span_of(const DeformedAlgebra& D, const DeformedHomSpace& hs) {
  linalg::RowSpace s(D.dimension());
  for (const auto& z : hs.basis) s.insert(D.coordinates(z));
  return s;
}

}  // namespace

Report verify_idempotents(const DeformedAlgebra& D, const IdempotentData& idem_data) {
  Report r;
  r.command = "idempotents";
  const Algebra& a = D.base();
  const std::size_t n = idem_data.vertices.size();
  for (std::size_t k = 0; k < n; ++k) {
    const VertexData& vd = idem_data.vertices[k];
    const SparseVector p = idem(D, k);
    const bool side = a.multiply(p, vd.a).empty() && a.multiply(vd.b, p).empty() && a.multiply(p, vd.c).empty() &&
                      a.multiply(vd.c, p).empty();
    r.add("side-conditions" + pair_label(k, k), side, side ? "" : "p a, b p, p c or c p is nonzero");
    const DefElem sq = D.multiply(vd.idempotent, vd.idempotent);
    r.add("idempotent" + pair_label(k, k), sq == vd.idempotent,
          sq == vd.idempotent ? "" : "square is " + D.format(sq));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const DefElem prod = D.multiply(idem_data.vertices[i].idempotent, idem_data.vertices[j].idempotent);
      const bool zero = prod.a0.empty() && prod.a1.empty();
      r.add("orthogonal" + pair_label(i, j), zero, zero ? "" : "product is " + D.format(prod));
    }
  DefElem sum;
  for (const auto& vd : idem_data.vertices) {
    sum.a0 += vd.idempotent.a0;
    sum.a1 += vd.idempotent.a1;
  }
  r.add("sum-equals-unit", sum == D.unit(), sum == D.unit() ? "" : "sum is " + D.format(sum));
  bool unit_ok = true;
  std::string unit_detail;
  for (std::size_t b = 0; b < D.dimension() && unit_ok; ++b) {
    const DefElem x = D.basis(b);
    if (D.multiply(D.unit(), x) != x || D.multiply(x, D.unit()) != x) {
      unit_ok = false;
      unit_detail = "fails on " + D.format(x);
    }
  }
  r.add("two-sided-unit", unit_ok, unit_detail);

  const std::vector<std::pair<Scalar, Scalar>> scalars = {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)},
                                                          {Scalar(2), Scalar(-3)}, {Scalar(-1, 2), Scalar(5, 3)}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const DeformedHomSpace hs = deformed_hom(D, idem_data, i, j);
      const std::size_t base_dim = hom_dimension(a, i, j);
      const std::string name = "hom" + pair_label(i, j);
      const std::string dims = "k-dimension " + std::to_string(hs.dimension());
      if (i > j) {
        r.add(name + "-vanishes", hs.dimension() == 0, dims);
      } else if (i == j) {
        const linalg::RowSpace s = span_of(D, hs);
        const DefElem& p = idem_data.vertices[i].idempotent;
        const bool ok = hs.dimension() == 2 && s.contains(D.coordinates(p)) &&
                        s.contains(D.coordinates(D.multiply(D.scalar(Scalar(0), Scalar(1)), p)));
        r.add(name + "-is-k[eps]", ok, dims);
      } else {
        r.add(name + "-free", hs.dimension() == 2 * base_dim,
              dims + ", expected " + std::to_string(2 * base_dim));
      }
      const linalg::RowSpace s = span_of(D, hs);
      bool stable = true;
      for (const auto& [mu, nu] : scalars) {
        const DefElem sc = D.scalar(mu, nu);
        for (const auto& z : hs.basis) {
          const DefElem left = D.multiply(sc, z);
          if (left != D.multiply(z, sc) || !s.contains(D.coordinates(left))) stable = false;
        }
      }
      r.add(name + "-scalar-stable", stable);
    }
  return r;
}

Report verify_hom_decomposition(const DeformedAlgebra& D, const IdempotentData& idem_data) {
  Report r;
  r.command = "hom-decomposition";
  const std::size_t n = idem_data.vertices.size();
  const std::size_t dim = D.dimension();
  std::size_t total = 0;
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const std::size_t bd = deformed_hom(D, idem_data, i, j).dimension();
      r.note("block" + pair_label(i, j), std::to_string(bd));
      total += bd;
      blocks.emplace_back(i, j);
    }
  // Stacked map A_u -> direct sum of the blocks, one column per basis element.
  std::vector<SparseVector> columns;
  for (std::size_t b = 0; b < dim; ++b) {
    const DefElem x = D.basis(b);
    SparseVector col;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      const auto [i, j] = blocks[k];
      const DefElem z = D.multiply(D.multiply(idem_data.vertices[j].idempotent, x), idem_data.vertices[i].idempotent);
      for (const auto& e : D.coordinates(z)) col.push_back(k * dim + e.index, e.value);
    }
    columns.push_back(std::move(col));
  }
  const std::size_t rank = linalg::rank(SparseMatrix::from_columns(blocks.size() * dim, columns));
  r.add("injective", rank == dim, "rank " + std::to_string(rank) + " of " + std::to_string(dim));
  r.add("dimensions-match", total == dim,
        "sum of blocks " + std::to_string(total) + ", dim A_u " + std::to_string(dim));
  return r;
}

std::optional<std::pair<SparseVector, SparseVector>> conjugating_elements(const DeformedAlgebra& D,
                                                                           const DefElem& first,
                                                                           const DefElem& second) {
  const Algebra& a = D.base();
  const std::size_t d = a.dimension();
  if (first.a0 != second.a0) return std::nullopt;
  // (1 + eps y) F (1 + eps z) = F + eps (y f0 + f0 z + u(1, f0) + u(f0, 1)).
  SparseVector target = second.a1 - first.a1;
  target -= D.u(a.unit(), first.a0);
  target -= D.u(first.a0, a.unit());
  std::vector<SparseVector> columns;
  for (std::size_t b = 0; b < d; ++b) columns.push_back(a.multiply(SparseVector::unit(b), first.a0));
  for (std::size_t b = 0; b < d; ++b) columns.push_back(a.multiply(first.a0, SparseVector::unit(b)));
  const auto x = linalg::solve(SparseMatrix::from_columns(d, columns), target);
  if (!x) return std::nullopt;
  SparseVector y, z;
  for (const auto& e : *x) {
    if (e.index < d) {
      y.push_back(e.index, e.value);
    } else {
      z.push_back(e.index - d, e.value);
    }
  }
  const DefElem lhs = D.multiply(D.multiply({a.unit(), y}, first), {a.unit(), z});
  if (lhs != second) return std::nullopt;
  return std::pair(std::move(y), std::move(z));
}

Report verify_deformation(const DeformedAlgebra& D) {
  Report r;
  r.command = "deform";
  const Algebra& a = D.base();
  const std::size_t n = quiver_of(D).order.size();
  r.add("cocycle", is_cocycle(D.cocycle()));
  std::vector<std::string> order;
  for (std::size_t v : quiver_of(D).order) order.push_back(std::to_string(v + 1));
  std::string order_text;
  for (const auto& s : order) order_text += (order_text.empty() ? "" : " ") + s;
  r.note("exceptional order (vertices)", order_text);

  IdempotentData data;
  try {
    data = solve_idempotents(D);
  } catch (const Error& e) {
    r.add("solve-idempotents", false, std::string(to_string(e.kind())) + ": " + e.what());
    return r;
  }
  r.add("solve-idempotents", true);
  for (std::size_t k = 0; k < n; ++k) {
    const VertexData& vd = data.vertices[k];
    const std::string tag = "[" + pos_label(k) + "]";
    r.note("lambda" + tag, vd.lambda.to_string());
    r.note("c" + tag, format_element(a, vd.c));
    r.note("a" + tag, format_element(a, vd.a));
    r.note("b" + tag, format_element(a, vd.b));
    r.note("p_dagger" + tag, D.format(vd.idempotent));
    SparseVector recon = idem(D, k).scaled(vd.lambda) + vd.c;
    const SparseVector w = D.u(idem(D, k), idem(D, k));
    r.add("lambda-c-decomposition" + tag, recon == w, recon == w ? "" : "u(p,p) = " + format_element(a, w));
  }
  bool d_vanish = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const SparseVector& dij = data.d[i][j];
      if (!dij.empty()) r.note("d" + pair_label(i, j), format_element(a, dij));
      SparseVector recon = dij;
      recon -= a.multiply(idem(D, i), data.vertices[j].c);
      recon -= a.multiply(data.vertices[i].c, idem(D, j));
      const bool ok = recon == D.u(idem(D, i), idem(D, j));
      r.add("d-identity" + pair_label(i, j), ok);
      if (i < j && !dij.empty()) d_vanish = false;
    }
  r.add("d-vanishes-below-order", d_vanish);
  const DefElem formula = deformation_unit(D);
  r.add("unit-formula", formula == D.unit(), "1_u = " + D.format(D.unit()));
  r.absorb("", verify_idempotents(D, data));
  r.absorb("decomposition-", verify_hom_decomposition(D, data));

  const IdempotentData other = solve_idempotents(D, IdempotentChoice::PreferB);
  for (std::size_t k = 0; k < n; ++k) {
    const auto yz = conjugating_elements(D, data.vertices[k].idempotent, other.vertices[k].idempotent);
    r.add("conjugate-solutions[" + pos_label(k) + "]", yz.has_value());
  }
  return r;
}

DefElem apply_coboundary_map(const Cochain& v, const DefElem& x) {
  if (v.degree() != 1) throw Error(ErrorKind::DegreeMismatch, "coboundary map needs a 1-cochain");
  const SparseVector args[1] = {x.a0};
  return {x.a0, x.a1 + v.evaluate(std::span<const SparseVector>(args))};
}

Report verify_coboundary_isomorphism(const Cochain& v) {
  Report r;
  r.command = "coboundary-isomorphism";
  const DeformedAlgebra twisted(differential(v));
  const DeformedAlgebra trivial(Cochain(v.algebra_ptr(), 2));
  const std::size_t n = twisted.dimension();
  std::vector<DefElem> basis, image;
  for (std::size_t b = 0; b < n; ++b) {
    basis.push_back(twisted.basis(b));
    image.push_back(apply_coboundary_map(v, basis.back()));
  }
  bool mult = true;
  std::string witness;
  for (std::size_t i = 0; i < n && mult; ++i)
    for (std::size_t j = 0; j < n && mult; ++j) {
      const DefElem lhs = apply_coboundary_map(v, twisted.multiply(basis[i], basis[j]));
      const DefElem rhs = trivial.multiply(image[i], image[j]);
      if (lhs != rhs) {
        mult = false;
        witness = "fails on (" + twisted.format(basis[i]) + ", " + twisted.format(basis[j]) + ")";
      }
    }
  r.add("multiplicative", mult, witness);
  const DefElem one_image = apply_coboundary_map(v, twisted.unit());
  r.add("unital", one_image == trivial.unit(), "image of 1_u is " + trivial.format(one_image));
  std::vector<SparseVector> cols;
  for (const auto& x : image) cols.push_back(trivial.coordinates(x));
  const std::size_t rank = linalg::rank(SparseMatrix::from_columns(n, cols));
  r.add("bijective", rank == n, "rank " + std::to_string(rank));
  return r;
}

Report verify_idempotent_identities(const DeformedAlgebra& D, const std::vector<SparseVector>& samples) {
  Report r;
  r.command = "idempotent-identities";
  const Algebra& a = D.base();
  const std::size_t n = quiver_of(D).order.size();
  auto m = [&](const SparseVector& x, const SparseVector& y) { return a.multiply(x, y); };
  auto u = [&](const SparseVector& x, const SparseVector& y) { return D.u(x, y); };
  std::vector<bool> vertex_ok(6, true), pair_ok(4, true);
  for (const auto& x : samples) {
    for (std::size_t k = 0; k < n; ++k) {
      const SparseVector p = idem(D, k);
      const SparseVector px = m(p, x), xp = m(x, p), pxp = m(px, p);
      const SparseVector checks[6] = {
          m(p, u(p, x)) - u(p, x) + u(p, px) - m(u(p, p), x),
          m(x, u(p, p)) - u(xp, p) + u(x, p) - m(u(x, p), p),
          m(p, u(px, p)) - u(px, p) + u(p, pxp) - m(u(p, px), p),
          m(p, u(xp, p)) - u(pxp, p) + u(p, xp) - m(u(p, xp), p),
          m(p, u(x, p)) - u(px, p) + u(p, xp) - m(u(p, x), p),
          (m(p, u(xp, p)) - m(p, u(x, p)) + m(p, u(px, p))) -
              (m(u(p, px), p) + m(u(p, xp), p) - m(u(p, x), p)),
      };
      for (std::size_t c = 0; c < 6; ++c)
        if (!checks[c].empty()) vertex_ok[c] = false;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const SparseVector pi = idem(D, i), pj = idem(D, j);
        const SparseVector pix = m(pi, x), xpj = m(x, pj);
        const SparseVector left13 = m(u(pi, pix), pj) + m(u(pi, xpj), pj) - m(u(pi, x), pj);
        const SparseVector right13 = m(pi, u(pix, pj)) - m(pi, u(x, pj)) + m(pi, u(xpj, pj));
        const SparseVector checks[4] = {
            m(pi, u(xpj, pj)) + u(pi, xpj) - m(u(pi, xpj), pj),
            m(pi, u(x, pj)) - u(pix, pj) + u(pi, xpj) - m(u(pi, x), pj),
            m(pi, u(pix, pj)) - u(pix, pj) - m(u(pi, pix), pj),
            left13 - right13,
        };
        for (std::size_t c = 0; c < 4; ++c)
          if (!checks[c].empty()) pair_ok[c] = false;
        if (!right13.empty()) pair_ok[3] = false;
      }
  }
  for (std::size_t c = 0; c < 5; ++c) r.add("vertex-identity-" + std::to_string(c + 1), vertex_ok[c]);
  r.add("vertex-combined", vertex_ok[5]);
  for (std::size_t c = 0; c < 3; ++c) r.add("pair-identity-" + std::to_string(c + 1), pair_ok[c]);
  r.add("pair-combined", pair_ok[3]);
  return r;
}

}  // namespace hochdef
