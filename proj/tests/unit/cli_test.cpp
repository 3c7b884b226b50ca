#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "hochdef/report.hpp"

namespace hochdef {
namespace {

namespace fs = std::filesystem;

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  args.insert(args.begin(), "hochdef");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(HOCHDEF_DATA_DIR) + "/" + name; }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    cache_ = fs::temp_directory_path() /
             ("hochdef-cli-test-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(cache_);
  }
  void TearDown() override { fs::remove_all(cache_); }
  fs::path cache_;
};

TEST(Fnv1a, KnownVectors) {
  EXPECT_EQ(cli::fnv1a(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(cli::fnv1a("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(cli::fnv1a("foobar"), 0x85944171f73967e8ULL);
}

TEST_F(CliTest, HHPrintsDimensionAndCachesBasis) {
  const Invocation r = run({"--cache-dir", cache_.string(), "hh", "--quiver", data("beilinson_p2.qv"), "--degree", "2"});
  EXPECT_EQ(r.code, cli::kPass) << r.err;
  EXPECT_EQ(r.out.rfind("dim HH^2 = 10\n", 0), 0u);
  std::size_t cached = 0;
  for (const auto& e : fs::directory_iterator(cache_)) cached += e.path().string().ends_with("-hh2.coc") ? 1 : 0;
  EXPECT_EQ(cached, 1u);
}

TEST_F(CliTest, MachineOutputIsDeterministicAndParses) {
  const std::vector<std::string> args{"--format", "machine", "--cache-dir", cache_.string(), "hh",
                                      "--quiver", data("kronecker.qv"), "--degree", "1"};
  const Invocation a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const Report rep = Report::from_json(a.out);
  bool found = false;
  for (const auto& [k, v] : rep.info) found = found || (k == "dimension" && v == "3");
  EXPECT_TRUE(found);
}

TEST_F(CliTest, DeformWithCocycleSources) {
  EXPECT_EQ(run({"deform", "--quiver", data("a3.qv"), "--cocycle", "zero"}).code, cli::kPass);
  const Invocation idx =
      run({"--cache-dir", cache_.string(), "deform", "--quiver", data("beilinson_p2.qv"), "--cocycle", "index:4"});
  EXPECT_EQ(idx.code, cli::kPass) << idx.err;
  EXPECT_NE(idx.out.find("^dagger = "), std::string::npos);
  // The cached basis is reused on the next run.
  std::string cache_file;
  for (const auto& e : fs::directory_iterator(cache_)) cache_file = e.path().string();
  ASSERT_FALSE(cache_file.empty());
  const auto stamp = fs::last_write_time(cache_file);
  EXPECT_EQ(run({"--cache-dir", cache_.string(), "verify-ec", "--quiver", data("beilinson_p2.qv"), "--cocycle",
                 "index:10"})
                .code,
            cli::kPass);
  EXPECT_EQ(fs::last_write_time(cache_file), stamp);
  const fs::path file = cache_ / "u.coc";
  std::ofstream(file) << "cochain degree 2\nf(x2,y1) = -x0*y2\nend\n";
  EXPECT_EQ(run({"deform", "--quiver", data("beilinson_p2.qv"), "--cocycle", "file:" + file.string()}).code,
            cli::kPass);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsageError);
  EXPECT_EQ(run({"hh", "--degree", "2"}).code, cli::kUsageError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsageError);
  EXPECT_EQ(run({"--format", "xml", "selftest"}).code, cli::kUsageError);
  const Invocation missing = run({"hh", "--quiver", "/nonexistent/q.qv", "--degree", "1"});
  EXPECT_EQ(missing.code, cli::kUsageError);
  EXPECT_NE(missing.err.find("/nonexistent/q.qv"), std::string::npos);
  const Invocation bad_index =
      run({"--cache-dir", cache_.string(), "deform", "--quiver", data("beilinson_p2.qv"), "--cocycle", "index:11"});
  EXPECT_EQ(bad_index.code, cli::kUsageError);
  EXPECT_NE(bad_index.err.find("--cocycle"), std::string::npos);
  const fs::path file = cache_ / "bad.coc";
  fs::create_directories(cache_);
  std::ofstream(file) << "cochain degree 2\nf(a,b) = a\nend\n";
  const Invocation not_cocycle = run({"deform", "--quiver", data("a3.qv"), "--cocycle", file.string()});
  EXPECT_EQ(not_cocycle.code, cli::kUsageError);
  EXPECT_NE(not_cocycle.err.find("NotACocycle"), std::string::npos);
}

TEST_F(CliTest, BudgetFromEnvironment) {
  ::setenv("HOCHDEF_MAX_COCHAIN_DIM", "10", 1);
  const Invocation r = run({"hh", "--quiver", data("beilinson_p2.qv"), "--degree", "2", "--complex", "full"});
  ::unsetenv("HOCHDEF_MAX_COCHAIN_DIM");
  EXPECT_EQ(r.code, cli::kCheckFailure);
  EXPECT_NE(r.err.find("BudgetExceeded"), std::string::npos);
}

TEST(Cli, LatticeCommands) {
  EXPECT_EQ(run({"helix-check", "--lattice", data("p1.lat")}).code, cli::kPass);
  EXPECT_EQ(run({"helix-check", "--lattice", data("p2.lat")}).code, cli::kPass);
  EXPECT_EQ(run({"helix-check", "--lattice", data("p1_perturbed.lat")}).code, cli::kCheckFailure);
  const Invocation m = run({"mutate", "--lattice", data("p1.lat"), "--word", "L1"});
  EXPECT_EQ(m.code, cli::kPass);
  EXPECT_NE(m.out.find("class L(O,O(1)) = 2 -1"), std::string::npos);
  EXPECT_EQ(run({"mutate", "--lattice", data("p1.lat"), "--word", "L5"}).code, cli::kUsageError);
}

TEST(Cli, AlgebraicSuites) {
  EXPECT_EQ(run({"euler-idem", "--n", "3", "--truncation", "2"}).code, cli::kPass);
  EXPECT_EQ(run({"euler-idem", "--n", "7"}).code, cli::kUsageError);
  EXPECT_EQ(run({"morita-check", "--base", "x^2", "--r", "2"}).code, cli::kPass);
  EXPECT_EQ(run({"morita-check", "--base", "y"}).code, cli::kUsageError);
  EXPECT_EQ(run({"hkr-check", "--vars", "2", "--derivation", "1;0", "--derivation", "0;1"}).code, cli::kPass);
  EXPECT_EQ(run({"hkr-check", "--vars", "2", "--max-degree", "2"}).code, cli::kPass);
  EXPECT_EQ(run({"--hkr-bound", "2", "hkr-check", "--vars", "2", "--derivation", "1;0", "--derivation", "0;1"}).code,
            cli::kUsageError);
}

}  // namespace
}  // namespace hochdef
