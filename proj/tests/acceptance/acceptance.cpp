// Runs every acceptance criterion, one pass/fail line each, with its time limit enforced.
#include <array>
#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <string>
#include <sys/wait.h>

#include "hochdef/selftest.hpp"

namespace {

struct CommandResult {
  int status = -1;
  std::string output;
};

CommandResult capture(const std::string& command) {
  CommandResult r;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

void print_line(bool ok, int id, const std::string& name, double secs, double limit) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << std::setw(2) << id << ": " << name << " ("
            << std::fixed << std::setprecision(2) << secs << " s, limit " << std::setprecision(0) << limit << " s)"
            << std::endl;
}

}  // namespace

int main() {
  hochdef::SelftestOptions options;
  options.config.apply_environment();
  bool all = true;
  for (const auto& c : hochdef::run_criteria(options)) {
    print_line(c.passed(), c.id, c.name, c.seconds, c.limit_seconds);
    if (c.passed()) continue;
    all = false;
    if (c.seconds > c.limit_seconds) std::cout << "       over the time limit\n";
    for (const auto& check : c.report.checks) {
      if (!check.passed) std::cout << "       " << check.name << ": " << check.detail << "\n";
    }
  }

  const double limit = 600;
  const auto start = std::chrono::steady_clock::now();
  const std::string cmd = std::string("'") + HOCHDEF_EXE + "' selftest --format machine 2>/dev/null";
  const CommandResult first = capture(cmd);
  const CommandResult second = capture(cmd);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool same = first.status == 0 && second.status == 0 && !first.output.empty() && first.output == second.output;
  const bool ok = same && secs <= limit;
  print_line(ok, 12, "selftest --format machine is byte-identical across runs", secs, limit);
  if (!ok) {
    all = false;
    std::cout << "       exit statuses " << first.status << ", " << second.status << "; outputs "
              << (first.output == second.output ? "identical" : "differ") << " (" << first.output.size() << " and "
              << second.output.size() << " bytes)\n";
  }
  std::cout << (all ? "all criteria passed" : "some criteria failed") << std::endl;
  return all ? 0 : 1;
}
