#include "qgroot/report.hpp"

#include <algorithm>
#include <sstream>

namespace qgroot {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Info: return "info";
  }
  return "?";
}

void Report::pass(std::string id, std::string ref) {
  checks.push_back({std::move(id), std::move(ref), Status::Pass, {}});
}

void Report::fail(std::string id, std::string ref, std::string witness) {
  checks.push_back({std::move(id), std::move(ref), Status::Fail, std::move(witness)});
}

void Report::info(std::string id, std::string ref, std::string value) {
  checks.push_back({std::move(id), std::move(ref), Status::Info, std::move(value)});
}

void Report::expect(bool ok, std::string id, std::string ref, const std::string& witness) {
  if (ok)
    pass(std::move(id), std::move(ref));
  else
    fail(std::move(id), std::move(ref), witness.empty() ? "mismatch" : witness);
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool Report::all_pass() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::Fail; });
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

void Report::sort() {
  std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
}

std::string Report::text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    std::string tag = status_name(c.status);
    std::transform(tag.begin(), tag.end(), tag.begin(), ::toupper);
    out << tag << ' ' << c.id << " [" << c.ref << ']';
    if (!c.witness.empty()) out << ": " << c.witness;
    out << '\n';
  }
  out << "summary: " << count(Status::Pass) << " pass, " << count(Status::Fail) << " fail, "
      << count(Status::Info) << " info\n";
  return out.str();
}

}  // namespace qgroot
