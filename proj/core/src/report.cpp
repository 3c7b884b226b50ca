#include "hochdef/report.hpp"

#include <cstdlib>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <sstream>

#include "hochdef/error.hpp"

namespace hochdef {

bool Report::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

void Report::add(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail)});
}

void Report::note(std::string key, std::string value) { info.emplace_back(std::move(key), std::move(value)); }

void Report::absorb(const std::string& prefix, const Report& other) {
  for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.passed, c.detail});
  for (const auto& [k, v] : other.info) info.emplace_back(prefix + k, v);
  for (const auto& [k, v] : other.timings) timings.emplace_back(prefix + k, v);
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["passed"] = passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
  }
  j["info"] = nlohmann::ordered_json::array();
  for (const auto& [k, v] : info) j["info"].push_back({{"key", k}, {"value", v}});
  return j.dump(2) + "\n";
}

Report Report::from_json(const std::string& text) {
  Report r;
  try {
    const auto j = nlohmann::json::parse(text);
    r.command = j.at("command").get<std::string>();
    for (const auto& c : j.at("checks")) {
      const std::string status = c.at("status").get<std::string>();
      if (status != "pass" && status != "fail") throw Error(ErrorKind::Syntax, "bad check status " + status);
      r.checks.push_back({c.at("name").get<std::string>(), status == "pass", c.at("detail").get<std::string>()});
    }
    for (const auto& i : j.at("info")) r.info.emplace_back(i.at("key").get<std::string>(), i.at("value").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Syntax, std::string("malformed report: ") + e.what());
  }
  return r;
}

std::string Report::to_human() const {
  std::ostringstream out;
  out << "== " << command << "\n";
  for (const auto& [k, v] : info) out << k << " = " << v << "\n";
  for (const auto& c : checks) {
    out << (c.passed ? "[pass] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  for (const auto& [k, t] : timings) out << "time " << k << ": " << std::fixed << std::setprecision(3) << t << " s\n";
  std::size_t failed = 0;
  for (const auto& c : checks) failed += c.passed ? 0 : 1;
  out << (failed == 0 ? "all " + std::to_string(checks.size()) + " checks passed"
                      : std::to_string(failed) + " of " + std::to_string(checks.size()) + " checks failed")
      << "\n";
  return out.str();
}

namespace {

std::optional<std::uint64_t> env_count(const char* name) {
  const char* raw = std::getenv(name);
  if (!raw) return std::nullopt;
  const std::string s(raw);
  if (s.empty() || s.size() > 18 || s.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorKind::Syntax, std::string(name) + " must be a positive integer, got '" + s + "'");
  }
  const std::uint64_t v = std::stoull(s);
  if (v == 0) throw Error(ErrorKind::Syntax, std::string(name) + " must be positive");
  return v;
}

}  // namespace

void Config::apply_environment() {
  if (auto v = env_count("HOCHDEF_MAX_COCHAIN_DIM")) max_cochain_dim = *v;
  if (auto v = env_count("HOCHDEF_EULER_BOUND")) euler_bound = static_cast<std::size_t>(*v);
  if (auto v = env_count("HOCHDEF_HKR_BOUND")) hkr_bound = static_cast<std::size_t>(*v);
}

void Config::validate() const {
  if (max_cochain_dim == 0 || euler_bound == 0 || hkr_bound == 0) {
    throw Error(ErrorKind::Syntax, "budgets must be positive");
  }
}

}  // namespace hochdef
