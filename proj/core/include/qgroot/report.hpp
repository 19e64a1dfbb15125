#pragma once

#include <string>
#include <vector>

namespace qgroot {

enum class Status { Pass, Fail, Info };

const char* status_name(Status s);

/// One instantiated identity. `ref` names the relation or statement being
/// checked (e.g. "g8", "kiell-Ejell"); `witness` carries the offending
/// difference on failure, or the computed value for informational entries.
struct Check {
  std::string id;
  std::string ref;
  Status status = Status::Pass;
  std::string witness;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  void pass(std::string id, std::string ref);
  void fail(std::string id, std::string ref, std::string witness);
  void info(std::string id, std::string ref, std::string value);
  /// pass or fail depending on ok.
  void expect(bool ok, std::string id, std::string ref, const std::string& witness = "");
  void append(const Report& other);

  bool all_pass() const;
  std::size_t count(Status s) const;
  /// Sorts by id so that output is independent of evaluation order.
  void sort();
  /// One line per check: "PASS id [ref]" plus witness when present.
  std::string text() const;
};

}  // namespace qgroot
