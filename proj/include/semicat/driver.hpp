#ifndef SEMICAT_DRIVER_HPP_
#define SEMICAT_DRIVER_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace semicat {

// One verification step of a CLI run.  verdict is "pass", "fail" or "info";
// info rows carry analysis results that are data rather than requirements.
struct CheckResult {
  std::string name;
  std::string verdict;
  std::string detail;

  bool operator==(CheckResult const&) const = default;
};

// Exit codes: 0 all checks pass, 1 a property or precondition was violated,
// 2 the input was unreadable or malformed.
struct RunReport {
  std::string command;
  std::string input;
  std::string digest;
  std::vector<CheckResult> checks;
  std::vector<std::pair<std::string, double>> timings_ms;
  int exit_code = 0;
  nlohmann::json extra = nlohmann::json::object();

  bool operator==(RunReport const&) const = default;
};

nlohmann::json report_to_json(RunReport const& r);
RunReport report_from_json(nlohmann::json const& j);
std::string format_report_text(RunReport const& r);

struct DriverOptions {
  bool json = false;
  std::string format = "cayley";  // or "socat" for cmd_analyze
  long long max_enum = 10'000'000;
  std::uint64_t seed = 0;
};

// Classification of a semigroup (or an abstract category): the theorem
// conditions are printed one by one; the verdicts are data, so the run
// fails only on internal errors or bad input.
RunReport cmd_analyze(std::string const& path, DriverOptions const& opts);

// Full cross-connection rebuild S -> Omega S -> S Omega with the
// isomorphism witness; requires a locally inverse input.
RunReport cmd_rebuild(std::string const& path, DriverOptions const& opts);

// Rees matrix pipeline: build the semigroup, compare the cone semigroup
// with the wreath quotient, match the sandwich-matrix functors against the
// canonical ones.
RunReport cmd_rees(std::string const& path, DriverOptions const& opts);

// Inverse-case pipeline: groupoid export, both round trips and the
// principal-cone isomorphism; requires an inverse input.
RunReport cmd_esn(std::string const& path, DriverOptions const& opts);

// Runs cmd_analyze-style classification over the built-in corpus.
RunReport cmd_fixtures(DriverOptions const& opts);

// Random regular sandwich matrices over small groups, each pushed through
// the Rees checks; seeded for reproducibility.
RunReport cmd_rees_random(int count, DriverOptions const& opts);

}  // namespace semicat

#endif  // SEMICAT_DRIVER_HPP_
