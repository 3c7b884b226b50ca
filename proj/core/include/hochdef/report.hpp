#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hochdef {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;  // exact witness on failure, short summary on success

  friend bool operator==(const Check&, const Check&) = default;
};

// Outcome of one command: named checks plus informational key/value lines. Timings are kept
// for human output only and never enter the machine form, so machine reports are
// reproducible byte for byte.
struct Report {
  std::string command;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, std::string>> info;
  std::vector<std::pair<std::string, double>> timings;  // seconds

  bool passed() const;
  void add(std::string name, bool passed, std::string detail = {});
  void note(std::string key, std::string value);
  // Appends the checks and info of `other`, prefixing names with `prefix`.
  void absorb(const std::string& prefix, const Report& other);

  std::string to_json() const;
  static Report from_json(const std::string& text);
  std::string to_human() const;

  friend bool operator==(const Report& a, const Report& b) {
    return a.command == b.command && a.checks == b.checks && a.info == b.info;
  }
};

enum class OutputFormat { Human, Machine };

struct Config {
  std::uint64_t max_cochain_dim = 10'000'000;
  std::size_t euler_bound = 6;
  std::size_t hkr_bound = 4;  // largest n + 1 for HKR cocycle checks
  OutputFormat format = OutputFormat::Human;
  std::uint64_t seed = 20240607;

  // Reads HOCHDEF_MAX_COCHAIN_DIM, HOCHDEF_EULER_BOUND and HOCHDEF_HKR_BOUND. Throws
  // Syntax on malformed or non-positive values.
  void apply_environment();
  // Throws Syntax when a budget is zero.
  void validate() const;
};

}  // namespace hochdef
