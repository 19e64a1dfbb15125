#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qgroot/report.hpp"

namespace qgroot::cli {

struct RunConfig {
  std::optional<int> ell;
  std::optional<std::string> cartan;  // named type or "2,-1;-1,2"
  std::vector<int> d;                 // multiply-laced torus when non-empty
  std::optional<int> bound;           // overrides the per-suite default
  std::string format = "text";        // text | json
  std::uint64_t seed = 42;
  std::string suite = "all";          // torus | iso | commutators | td | multi | all

  /// Throws std::invalid_argument on a bad value.
  void validate() const;
};

struct Outcome {
  std::string out;
  int exit_code = 0;
};

/// Runs the selected suite; sub-suites run concurrently, the merged report
/// is sorted by id.
Report run_suite(const RunConfig& cfg);
std::string report_json(const Report& r, const RunConfig& cfg);

Outcome cmd_nf(const RunConfig& cfg, const std::string& expr);
/// which: p | q | b | h; rows up to n.
Outcome cmd_tables(const RunConfig& cfg, const std::string& which, int n);
Outcome cmd_verify(const RunConfig& cfg);
/// left in V^- (F letters), right in V^+ (E letters).
Outcome cmd_pairing(const RunConfig& cfg, const std::string& left, const std::string& right);

}  // namespace qgroot::cli
