#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "jsuper/super.hpp"

namespace jsuper {

enum class Construction { JVec, JADelta, Double, CK, GCK };
enum class SuiteKind { Jordan, Bracket, Simplicity, Noncyclic, Embedding, Certificates, All };
enum class Overall { Pass, Fail, Inconclusive };

std::string construction_name(Construction c);
std::string suite_name(SuiteKind k);
std::string overall_name(Overall o);
std::optional<Construction> construction_from_name(const std::string& s);
std::optional<SuiteKind> suite_from_name(const std::string& s);

struct SuiteConfig {
  Construction construction = Construction::JVec;
  SuiteKind suite = SuiteKind::Jordan;
  long trials = 200;
  int max_deg = 4;
  int window = 24;      // starting saturation window
  int max_window = 48;  // saturation gives up past this
  int deg_bound = 16;   // probe and certificate search bound
  std::uint64_t seed = 0;
  ExecPolicy exec = ExecPolicy::Serial;
};

/*
 * Outcome of one suite run.  `overall` folds the checks: any counterexample
 * is a failure, otherwise any inconclusive check (a bounded search that ran
 * out of room) leaves the run inconclusive, otherwise it passes; vacuous
 * passes count as passes.  wall_seconds is console information only and
 * never serialized, so reports are byte-stable across machines.
 */
struct RunReport {
  SuiteConfig config;
  std::vector<CheckReport> checks;
  Overall overall = Overall::Pass;
  double wall_seconds = 0.0;
};

/*
 * Compose and run the checks for the configured construction and suite.
 * Throws std::invalid_argument when the suite does not apply to the
 * construction (the All suite silently runs just the applicable ones).
 */
RunReport run_suite(const SuiteConfig& cfg);

// which suites run_suite accepts for the construction, All excluded
std::vector<SuiteKind> applicable_suites(Construction c);

nlohmann::ordered_json report_to_json(const RunReport& rep);

}  // namespace jsuper
