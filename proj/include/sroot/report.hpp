#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sroot {

enum class Status { Pass, Fail, Skip };

std::string to_string(Status s);

using Witness = std::vector<std::pair<std::string, std::string>>;

struct Check {
  std::string id;
  std::string anchor;
  Status status = Status::Pass;
  Witness witness;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  std::string version;
  std::string fingerprint;
  /// Options the suite ran with, in a fixed order.
  Witness parameters;
  /// Markdown blocks (egg-box tables) shown by the pretty printer.
  std::vector<std::string> figures;

  Check& add(std::string id, std::string anchor, bool pass, Witness witness = {});
  void append(const std::vector<Check>& more);
  bool passed() const;
  std::size_t failures() const;
};

}  // namespace sroot
