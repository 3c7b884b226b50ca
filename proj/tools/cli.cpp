#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "hochdef/deformation.hpp"
#include "hochdef/error.hpp"
#include "hochdef/eulerian.hpp"
#include "hochdef/hkr.hpp"
#include "hochdef/hochschild.hpp"
#include "hochdef/lattice.hpp"
#include "hochdef/morita.hpp"
#include "hochdef/selftest.hpp"

namespace hochdef::cli {

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorKind::Io, "cannot write '" + path.string() + "'");
}

struct QuiverInput {
  std::string path;
  std::string text;
  AlgebraPtr algebra;
};

QuiverInput load_quiver(const std::string& path) {
  QuiverInput q;
  q.path = path;
  q.text = read_file(path);
  try {
    q.algebra = build_algebra(parse_quiver(q.text), fs::path(path).stem().string());
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), e.line(), e.column(), path + ": " + e.what());
  }
  return q;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << v;
  return s.str();
}

fs::path cache_path(const std::string& cache_dir, const QuiverInput& q) {
  return fs::path(cache_dir) / (hex64(fnv1a(q.text)) + "-hh2.coc");
}

// HH^2 representatives, read from the cache when present.
std::vector<Cochain> hh2_basis_cached(const QuiverInput& q, const std::string& cache_dir, const Budget& budget) {
  const fs::path p = cache_path(cache_dir, q);
  if (fs::exists(p)) return parse_cochains(q.algebra, read_file(p.string()));
  std::vector<Cochain> reps;
  for (auto& c : hh_basis(q.algebra, 2, budget)) reps.push_back(std::move(c.representative));
  write_file(p, write_cochains(reps));
  return reps;
}

// zero | index:N (1-based, into the HH^2 basis) | file:PATH | PATH
Cochain resolve_cocycle(const std::string& source, const QuiverInput& q, const std::string& cache_dir,
                        const Budget& budget) {
  if (source == "zero") return Cochain(q.algebra, 2);
  if (source.rfind("index:", 0) == 0) {
    const std::string num = source.substr(6);
    if (num.empty() || num.size() > 6 || num.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("--cocycle: malformed index in '" + source + "'");
    }
    const std::size_t k = std::stoul(num);
    const auto reps = hh2_basis_cached(q, cache_dir, budget);
    if (k == 0 || k > reps.size()) {
      throw UsageError("--cocycle: index " + num + " outside 1.." + std::to_string(reps.size()));
    }
    return reps[k - 1];
  }
  const std::string path = source.rfind("file:", 0) == 0 ? source.substr(5) : source;
  auto cochains = parse_cochains(q.algebra, read_file(path));
  if (cochains.size() != 1) {
    throw UsageError("--cocycle: '" + path + "' holds " + std::to_string(cochains.size()) + " cochains, expected 1");
  }
  return cochains.front();
}

AlgebraPtr resolve_base(const std::string& source) {
  if (source == "k") return ground_field();
  if (source.rfind("x^", 0) == 0) {
    const std::string num = source.substr(2);
    if (!num.empty() && num.size() < 4 && num.find_first_not_of("0123456789") == std::string::npos) {
      const std::size_t m = std::stoul(num);
      if (m >= 1) return truncated_polynomial(m);
    }
  }
  throw UsageError("--base: expected 'k' or 'x^m' (for k[x]/(x^m)), got '" + source + "'");
}

struct Output {
  Report report;
  std::string human_prefix;  // printed before the report in human format
  std::string human_suffix;
};

int emit(const Output& o, const Config& cfg, std::ostream& out) {
  if (cfg.format == OutputFormat::Machine) {
    out << o.report.to_json();
  } else {
    out << o.human_prefix << o.report.to_human() << o.human_suffix;
  }
  return o.report.passed() ? kPass : kCheckFailure;
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::DecompositionFailure:
    case ErrorKind::NoSolution:
      return kCheckFailure;
    default:
      return kUsageError;
  }
}

std::string list_idempotents(const DeformedAlgebra& D, const IdempotentData& idem) {
  std::string s;
  for (const auto& v : idem.vertices) {
    s += "p" + std::to_string(v.vertex + 1) + "^dagger = " + D.format(v.idempotent) + "\n";
  }
  return s;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hochschild cohomology, deformations and exceptional collections over Q", "hochdef"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  std::string format = "human";
  std::optional<std::uint64_t> max_dim, seed;
  std::optional<std::size_t> euler_bound, hkr_bound;
  std::string cache_dir = ".hochdef-cache";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"human", "machine"}));
  app.add_option("--max-cochain-dim", max_dim, "Largest cochain space a differential may map into")
      ->check(CLI::PositiveNumber);
  app.add_option("--euler-bound", euler_bound, "Largest n for symmetric group computations")->check(CLI::PositiveNumber);
  app.add_option("--hkr-bound", hkr_bound, "Largest n + 1 for HKR cocycle checks")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for sampled checks");
  app.add_option("--cache-dir", cache_dir, "Directory for cached HH^2 bases");

  std::string quiver, lattice, cocycle = "zero", word, complex = "auto", output, base = "k";
  std::size_t degree = 2, n = 3, r = 2, max_degree = 2, vars = 2, poly_degree = 4;
  std::optional<std::size_t> truncation;
  std::vector<std::string> derivations;
  bool print_basis = false;

  auto* hh = app.add_subcommand("hh", "Dimension and basis of HH^n");
  hh->add_option("--quiver", quiver, "Quiver file")->required();
  hh->add_option("--degree", degree, "Cohomological degree")->required();
  hh->add_option("--complex", complex, "Cochain complex")->check(CLI::IsMember({"auto", "full", "reduced"}));
  hh->add_option("--output", output, "Write the basis to this file");
  hh->add_flag("--print-basis", print_basis, "Print the basis after the report");

  auto* deform = app.add_subcommand("deform", "Deformed idempotents for a 2-cocycle");
  auto* verify_ec = app.add_subcommand("verify-ec", "Exceptional-collection checks for a deformation");
  for (auto* sub : {deform, verify_ec}) {
    sub->add_option("--quiver", quiver, "Quiver file")->required();
    sub->add_option("--cocycle", cocycle, "zero | index:N | file:PATH");
  }

  auto* mutate_cmd = app.add_subcommand("mutate", "Apply a mutation word to a lattice");
  mutate_cmd->add_option("--lattice", lattice, "Lattice file")->required();
  mutate_cmd->add_option("--word", word, "Mutation word such as \"R1 L2\"")->required();
  mutate_cmd->add_option("--output", output, "Write the mutated lattice to this file");

  auto* helix = app.add_subcommand("helix-check", "Numerical helix and rank checks");
  helix->add_option("--lattice", lattice, "Lattice file")->required();

  auto* euler = app.add_subcommand("euler-idem", "Eulerian idempotents in Q[S_n]");
  euler->add_option("--n", n, "Symmetric group degree")->check(CLI::PositiveNumber);
  euler->add_option("--truncation", truncation, "Also check chain compatibility on k[x]/(x^m)")
      ->check(CLI::Range(2, 6));

  auto* morita = app.add_subcommand("morita-check", "Cotrace, inclusion and homotopy for matrix algebras");
  morita->add_option("--base", base, "k or x^m");
  morita->add_option("--r", r, "Matrix size")->check(CLI::Range(1, 4));
  morita->add_option("--max-degree", max_degree, "Largest cochain degree")->check(CLI::Range(0, 3));

  auto* hkr = app.add_subcommand("hkr-check", "HKR antisymmetrization cocycle checks");
  hkr->add_option("--vars", vars, "Number of polynomial variables")->check(CLI::Range(1, 6));
  hkr->add_option("--derivation", derivations, "Coefficients g1;..;gd of sum g_i d/dx_i (repeat for n > 1)");
  hkr->add_option("--max-degree", poly_degree, "Total degree bound for monomial tuples")->check(CLI::Range(0, 8));

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kPass;
    }
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    cfg.apply_environment();
    if (max_dim) cfg.max_cochain_dim = *max_dim;
    if (euler_bound) cfg.euler_bound = *euler_bound;
    if (hkr_bound) cfg.hkr_bound = *hkr_bound;
    if (seed) cfg.seed = *seed;
    cfg.format = format == "machine" ? OutputFormat::Machine : OutputFormat::Human;
    cfg.validate();
    const Budget budget{cfg.max_cochain_dim};

    Output o;
    if (*hh) {
      const QuiverInput q = load_quiver(quiver);
      std::optional<ComplexKind> force;
      if (complex == "full") force = ComplexKind::Full;
      if (complex == "reduced") force = ComplexKind::Reduced;
      const HHSummary s = hochschild_cohomology(q.algebra, degree, budget, force);
      o.report.command = "hh --quiver " + quiver + " --degree " + std::to_string(degree);
      o.report.note("algebra-dimension", std::to_string(q.algebra->dimension()));
      o.report.note("complex", s.complex == ComplexKind::Full ? "full" : "reduced");
      o.report.note("cocycles", std::to_string(s.cocycles));
      o.report.note("coboundaries", std::to_string(s.coboundaries));
      o.report.note("dimension", std::to_string(s.dimension));
      o.human_prefix = "dim HH^" + std::to_string(degree) + " = " + std::to_string(s.dimension) + "\n";
      if (!output.empty() || print_basis || degree == 2) {
        std::vector<Cochain> reps;
        for (auto& c : hh_basis(q.algebra, degree, budget, force)) reps.push_back(std::move(c.representative));
        const std::string text = write_cochains(reps);
        if (degree == 2) {
          const fs::path p = cache_path(cache_dir, q);
          write_file(p, text);
          o.report.note("cache", p.string());
        }
        if (!output.empty()) {
          write_file(output, text);
          o.report.note("basis-file", output);
        }
        if (print_basis) o.human_suffix = text;
      }
    } else if (*deform || *verify_ec) {
      const QuiverInput q = load_quiver(quiver);
      const DeformedAlgebra D(resolve_cocycle(cocycle, q, cache_dir, budget));
      if (*deform) {
        o.report = verify_deformation(D);
        o.report.command = "deform --quiver " + quiver + " --cocycle " + cocycle;
        o.human_suffix = list_idempotents(D, solve_idempotents(D));
      } else {
        const IdempotentData idem = solve_idempotents(D);
        o.report.command = "verify-ec --quiver " + quiver + " --cocycle " + cocycle;
        o.report.absorb("", verify_idempotents(D, idem));
        o.report.absorb("", verify_hom_decomposition(D, idem));
        const std::size_t m = idem.vertices.size();
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j) {
            o.report.note("dim Hom(P" + std::to_string(i + 1) + ",P" + std::to_string(j + 1) + ")",
                          std::to_string(deformed_hom(D, idem, i, j).dimension()));
          }
      }
    } else if (*mutate_cmd) {
      const GramLattice start = read_lattice_file(lattice);
      const GramLattice end = mutate(start, parse_mutation_word(word));
      const linalg::DenseMatrix g = end.gram();
      bool tri = true, exc = true;
      for (std::size_t i = 0; i < g.rows(); ++i) {
        exc = exc && g(i, i).is_one();
        for (std::size_t j = 0; j < i; ++j) tri = tri && g(i, j).is_zero();
      }
      o.report.command = "mutate --lattice " + lattice + " --word \"" + word + "\"";
      for (std::size_t i = 0; i < end.size(); ++i) {
        std::string cls;
        for (std::size_t k = 0; k < end.size(); ++k) cls += (k ? " " : "") + end.classes()[i][k].to_string();
        o.report.note("class " + end.labels()[i], cls);
      }
      o.report.add("semiorthogonal", tri);
      o.report.add("exceptional", exc);
      const std::string text = write_lattice(end);
      if (!output.empty()) {
        write_file(output, text);
        o.report.note("output", output);
      } else {
        o.human_suffix = text;
      }
    } else if (*helix) {
      const GramLattice l = read_lattice_file(lattice);
      o.report = helix_check(l);
      o.report.command = "helix-check --lattice " + lattice;
      if (l.ranks()) o.report.note("rank-gcd", rank_gcd(l).to_string());
    } else if (*euler) {
      o.report = verify_eulerian(n, cfg.euler_bound);
      o.report.command = "euler-idem --n " + std::to_string(n);
      const auto es = eulerian_idempotents(n, cfg.euler_bound);
      for (std::size_t i = 0; i < es.size(); ++i) o.report.note("e^(" + std::to_string(i + 1) + ")", es[i].to_string());
      if (truncation) {
        const AlgebraPtr b = truncated_polynomial(*truncation);
        for (std::size_t i = 1; i <= n; ++i) {
          o.report.absorb("i" + std::to_string(i) + ".", chain_compatibility_check(b, n, i, cfg.euler_bound));
        }
      }
    } else if (*morita) {
      const AlgebraPtr b = resolve_base(base);
      o.report = morita_check(b, r, max_degree);
      std::mt19937_64 rng(cfg.seed);
      const MatrixAlgebra m = matrix_algebra(b, r);
      std::vector<Cochain> samples;
      for (std::size_t deg = 1; deg <= std::max<std::size_t>(max_degree, 1); ++deg)
        for (int k = 0; k < 3; ++k) samples.push_back(random_cochain(m.algebra, deg, rng, 8));
      o.report.absorb("", precosimplicial_check(m, samples));
      o.report.command = "morita-check --base " + base + " --r " + std::to_string(r);
    } else if (*hkr) {
      if (derivations.empty()) {
        o.report = hkr_sweep(vars, std::min<std::size_t>(3, cfg.hkr_bound - 1), poly_degree, cfg.hkr_bound);
      } else {
        std::vector<PolyDerivation> fs;
        for (const auto& d : derivations) fs.push_back(PolyDerivation::parse(d, vars));
        o.report = verify_hkr_cocycle(antisymmetrize(std::move(fs)), poly_degree, cfg.hkr_bound);
      }
    } else if (*selftest) {
      SelftestOptions opts;
      opts.config = cfg;
      const auto outcomes = run_criteria(opts);
      o.report = selftest_report(outcomes);
    }
    return emit(o, cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const fs::filesystem_error& e) {
    err << "error: Io: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace hochdef::cli
