#include "sroot/report.hpp"

#include <algorithm>

namespace sroot {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skip:
      return "skip";
  }
  return "fail";
}

Check& Report::add(std::string id, std::string anchor, bool pass, Witness witness) {
  checks.push_back({std::move(id), std::move(anchor), pass ? Status::Pass : Status::Fail, std::move(witness)});
  return checks.back();
}

void Report::append(const std::vector<Check>& more) { checks.insert(checks.end(), more.begin(), more.end()); }

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::Fail; }));
}

}  // namespace sroot
