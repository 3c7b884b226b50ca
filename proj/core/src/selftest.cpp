#include "hochdef/selftest.hpp"

#include <chrono>
#include <random>

#include "hochdef/deformation.hpp"
#include "hochdef/error.hpp"
#include "hochdef/hkr.hpp"
#include "hochdef/hochschild.hpp"
#include "hochdef/morita.hpp"
#include "hochdef/oracle.hpp"

namespace hochdef {
namespace {

constexpr std::string_view kA3 = "vertices 3\narrow a 1 2\narrow b 2 3\n";
constexpr std::string_view kA3Rel = "vertices 3\narrow a 1 2\narrow b 2 3\nrel a*b\n";
constexpr std::string_view kKronecker = "vertices 2\narrow a 1 2\narrow b 1 2\n";
constexpr std::string_view kBeilinsonP2 =
    "vertices 3\n"
    "arrow x0 1 2\narrow x1 1 2\narrow x2 1 2\n"
    "arrow y0 2 3\narrow y1 2 3\narrow y2 2 3\n"
    "rel x0*y1 - x1*y0\nrel x0*y2 - x2*y0\nrel x1*y2 - x2*y1\n";

constexpr std::string_view kP1 = "n 2\nd 1\nrow 1 2\nrow 0 1\nranks 1 1\nlabels O O(1)\n";
constexpr std::string_view kP2 = "n 3\nd 2\nrow 1 3 6\nrow 0 1 3\nrow 0 0 1\nranks 1 1 1\nlabels O O(1) O(2)\n";
constexpr std::string_view kP1Perturbed = "n 2\nd 1\nrow 1 3\nrow 0 1\nranks 1 1\n";

Budget budget_of(const SelftestOptions& o) { return Budget{o.config.max_cochain_dim}; }

std::mt19937_64 rng_for(const SelftestOptions& o, int id) {
  return std::mt19937_64(o.config.seed * 1000003ULL + static_cast<std::uint64_t>(id));
}

void expect_dim(Report& rep, const std::string& name, std::size_t got, std::size_t want) {
  rep.add(name, got == want, "got " + std::to_string(got) + ", expected " + std::to_string(want));
}

Report hh_of_ground_field(const SelftestOptions& o) {
  Report rep;
  rep.command = "HH of the ground field";
  const AlgebraPtr k = ground_field();
  for (std::size_t n = 0; n <= 3; ++n) {
    const auto s = hochschild_cohomology(k, n, budget_of(o), ComplexKind::Full);
    expect_dim(rep, "HH^" + std::to_string(n), s.dimension, n == 0 ? 1 : 0);
  }
  return rep;
}

Report kronecker(const SelftestOptions& o) {
  Report rep;
  rep.command = "Kronecker algebra";
  const AlgebraPtr a = builtin_algebra("kronecker");
  const auto h0 = hochschild_cohomology(a, 0, budget_of(o), ComplexKind::Full);
  const auto h1 = hochschild_cohomology(a, 1, budget_of(o), ComplexKind::Full);
  const auto h2 = hochschild_cohomology(a, 2, budget_of(o), ComplexKind::Full);
  expect_dim(rep, "HH^1", h1.dimension, 3);
  expect_dim(rep, "HH^2", h2.dimension, 0);
  const DerivationCount oracle = derivation_oracle(*a);
  expect_dim(rep, "HH^1-vs-derivations-mod-inner", h1.dimension, oracle.outer());
  expect_dim(rep, "HH^0-vs-center", h0.dimension, oracle.center);
  rep.note("derivations", std::to_string(oracle.derivations));
  rep.note("inner-derivations", std::to_string(oracle.inner));
  return rep;
}

Report beilinson_hh2(const SelftestOptions& o) {
  Report rep;
  rep.command = "Beilinson P2 algebra";
  const AlgebraPtr a = builtin_algebra("beilinson_p2");
  expect_dim(rep, "dim-A", a->dimension(), 15);
  const auto s = hochschild_cohomology(a, 2, budget_of(o), ComplexKind::Full);
  expect_dim(rep, "HH^2", s.dimension, 10);
  rep.note("cocycles", std::to_string(s.cocycles));
  rep.note("coboundaries", std::to_string(s.coboundaries));
  return rep;
}

Report deformation_pipeline(const SelftestOptions& o) {
  Report rep;
  rep.command = "deformation pipeline on Beilinson P2";
  const AlgebraPtr a = builtin_algebra("beilinson_p2");
  const auto classes = hh_basis(a, 2, budget_of(o));
  expect_dim(rep, "representatives", classes.size(), 10);
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const DeformedAlgebra D(classes[k].representative);
    Report r = verify_deformation(D);
    r.info.clear();
    rep.absorb("rep" + std::to_string(k + 1) + ".", r);
  }
  return rep;
}

Report coboundary_triviality(const SelftestOptions& o) {
  Report rep;
  rep.command = "coboundary deformations are trivial";
  auto rng = rng_for(o, 5);
  const AlgebraPtr a = builtin_algebra("beilinson_p2");
  for (int k = 0; k < 20; ++k) {
    const Cochain v = random_cochain(a, 1, rng, 40);
    rep.absorb("v" + std::to_string(k + 1) + ".", verify_coboundary_isomorphism(v));
  }
  return rep;
}

Report gerstenhaber(const SelftestOptions& o) {
  Report rep;
  rep.command = "associativity iff cocycle";
  auto rng = rng_for(o, 6);
  for (const char* name : {"a3", "a3_rel", "kronecker", "beilinson_p2"}) {
    const AlgebraPtr a = builtin_algebra(name);
    const auto classes = hh_basis(a, 2, budget_of(o));
    std::size_t agree = 0, associative = 0, broken = 0;
    std::string witness;
    for (int k = 0; k < 20; ++k) {
      Cochain u(a, 2);
      if (k % 2 == 0) {
        // Cocycle: classes plus a coboundary.
        for (const auto& c : classes) u += c.representative.scaled(Scalar(static_cast<long>(rng() % 7) - 3));
        u += differential(random_cochain(a, 1, rng, 2 * a->dimension()));
      } else {
        u = random_cochain(a, 2, rng, 1 + rng() % (2 * a->dimension()));
      }
      const bool assoc = !DeformedAlgebra::unchecked(u).associativity_failure();
      const bool cocycle = is_cocycle(u);
      (assoc ? associative : broken) += 1;
      if (assoc == cocycle) {
        ++agree;
      } else if (witness.empty()) {
        witness = "sample " + std::to_string(k + 1) + ": associative=" + (assoc ? "yes" : "no") +
                  ", cocycle=" + (cocycle ? "yes" : "no");
      }
    }
    const std::string tag = std::string(name) + ".";
    rep.add(tag + "equivalence", agree == 20, witness.empty() ? "20 samples" : witness);
    rep.add(tag + "both-directions-seen", associative > 0 && broken > 0,
            std::to_string(associative) + " associative, " + std::to_string(broken) + " not");
  }
  return rep;
}

Report eulerian_suite(const SelftestOptions& o) {
  Report rep;
  rep.command = "Eulerian idempotents";
  for (std::size_t n = 1; n <= 5; ++n) {
    rep.absorb("n" + std::to_string(n) + ".", verify_eulerian(n, o.config.euler_bound, o.euler));
  }
  return rep;
}

Report chain_compatibility(const SelftestOptions& o) {
  Report rep;
  rep.command = "Eulerian idempotents commute with the differential";
  for (std::size_t m : {2, 3}) {
    const AlgebraPtr b = truncated_polynomial(m);
    for (std::size_t n = 1; n <= 2; ++n)
      for (std::size_t i = 1; i <= n; ++i) {
        rep.absorb("x^" + std::to_string(m) + ".n" + std::to_string(n) + ".i" + std::to_string(i) + ".",
                   chain_compatibility_check(b, n, i, o.config.euler_bound, o.euler));
      }
  }
  return rep;
}

Report morita_suite(const SelftestOptions&) {
  Report rep;
  rep.command = "Morita cotrace and inclusion";
  for (const AlgebraPtr& b : {ground_field(), truncated_polynomial(2)})
    for (std::size_t r = 1; r <= 3; ++r) {
      rep.absorb(b->name() + ".r" + std::to_string(r) + ".", morita_check(b, r, 2));
    }
  return rep;
}

Report hkr_suite(const SelftestOptions& o) {
  Report rep = hkr_sweep(3, 3, 4, o.config.hkr_bound);
  rep.command = "HKR antisymmetrization";
  return rep;
}

Report mutation_criterion(const SelftestOptions& o) {
  Report rep;
  rep.command = "mutations and helices";
  auto rng = rng_for(o, 11);
  rep.absorb("random.", mutation_suite(100, 6, 5, rng));
  const Report p1 = helix_check(builtin_lattice("p1"));
  const Report p2 = helix_check(builtin_lattice("p2"));
  const Report bad = helix_check(builtin_lattice("p1_perturbed"));
  const auto failures = [](const Report& r) {
    std::string out;
    for (const auto& c : r.checks)
      if (!c.passed) out += (out.empty() ? "" : "; ") + c.name + (c.detail.empty() ? "" : ": " + c.detail);
    return out;
  };
  rep.add("helix-P1", p1.passed(), failures(p1));
  rep.add("helix-P2", p2.passed(), failures(p2));
  rep.add("helix-perturbed-P1-rejected", !bad.passed(), failures(bad));
  const Scalar g = rank_gcd(builtin_lattice("p2"));
  rep.add("rank-gcd-P2", g.is_one(), "gcd " + g.to_string());
  return rep;
}

}  // namespace

AlgebraPtr builtin_algebra(std::string_view name) {
  const auto make = [&](std::string_view text) { return build_algebra(parse_quiver(text), std::string(name)); };
  if (name == "a3") return make(kA3);
  if (name == "a3_rel") return make(kA3Rel);
  if (name == "kronecker") return make(kKronecker);
  if (name == "beilinson_p2") return make(kBeilinsonP2);
  throw Error(ErrorKind::IndexOutOfRange, "no built-in algebra '" + std::string(name) + "'");
}

GramLattice builtin_lattice(std::string_view name) {
  if (name == "p1") return parse_lattice(kP1);
  if (name == "p2") return parse_lattice(kP2);
  if (name == "p1_perturbed") return parse_lattice(kP1Perturbed);
  throw Error(ErrorKind::IndexOutOfRange, "no built-in lattice '" + std::string(name) + "'");
}

const std::vector<Criterion>& selftest_criteria() {
  static const std::vector<Criterion> criteria = {
      {1, "HH of the ground field", 1, hh_of_ground_field},
      {2, "Kronecker HH^1 = 3, HH^2 = 0 with derivation oracle", 10, kronecker},
      {3, "Beilinson P2 HH^2 = 10", 600, beilinson_hh2},
      {4, "deformed idempotents and Hom blocks for all HH^2 classes", 300, deformation_pipeline},
      {5, "coboundary deformations are trivial", 60, coboundary_triviality},
      {6, "associativity iff cocycle", 60, gerstenhaber},
      {7, "Eulerian idempotents", 30, eulerian_suite},
      {8, "Eulerian chain compatibility", 120, chain_compatibility},
      {9, "Morita cotrace, inclusion and homotopy", 120, morita_suite},
      {10, "HKR cocycles", 60, hkr_suite},
      {11, "mutations, helices and rank gcd", 30, mutation_criterion},
  };
  return criteria;
}

std::vector<CriterionOutcome> run_criteria(const SelftestOptions& options) {
  std::vector<CriterionOutcome> out;
  for (const auto& c : selftest_criteria()) {
    const auto start = std::chrono::steady_clock::now();
    Report rep;
    try {
      rep = c.run(options);
    } catch (const Error& e) {
      rep.command = c.name;
      rep.add("completed", false, std::string(to_string(e.kind())) + ": " + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back({c.id, c.name, std::move(rep), secs, c.limit_seconds});
  }
  return out;
}

Report selftest_report(const std::vector<CriterionOutcome>& outcomes) {
  Report rep;
  rep.command = "selftest";
  for (const auto& o : outcomes) {
    const std::string prefix = "c" + std::to_string(o.id) + ".";
    rep.absorb(prefix, o.report);
    rep.add(prefix + "time-limit", o.seconds <= o.limit_seconds, "limit " + std::to_string(static_cast<long>(o.limit_seconds)) + " s");
    rep.timings.emplace_back("c" + std::to_string(o.id), o.seconds);
  }
  return rep;
}

}  // namespace hochdef
