#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "sroot/cli.hpp"

namespace sroot {

std::string fingerprint(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

using ordered_json = nlohmann::ordered_json;

// Witness keys may repeat; repeated values are joined.
ordered_json witness_object(const Witness& w) {
  ordered_json o = ordered_json::object();
  for (const auto& [k, v] : w) {
    if (o.contains(k))
      o[k] = o[k].get<std::string>() + "; " + v;
    else
      o[k] = v;
  }
  return o;
}

std::string escape_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

}  // namespace

std::string report_json(const Report& r) {
  ordered_json j;
  j["suite"] = r.suite;
  j["version"] = r.version;
  j["fingerprint"] = r.fingerprint;
  j["parameters"] = witness_object(r.parameters);
  std::size_t skipped = 0;
  for (const auto& c : r.checks) skipped += c.status == Status::Skip;
  j["summary"] = {{"total", r.checks.size()},
                  {"passed", r.checks.size() - r.failures() - skipped},
                  {"failed", r.failures()},
                  {"skipped", skipped},
                  {"status", r.passed() ? "pass" : "fail"}};
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"id", c.id}, {"anchor", c.anchor}, {"status", to_string(c.status)}, {"witness", witness_object(c.witness)}});
  j["checks"] = std::move(checks);
  j["figures"] = r.figures;
  return j.dump(2);
}

std::string report_markdown(const Report& r) {
  std::ostringstream os;
  os << "# " << r.suite << "\n\n";
  os << "version " << r.version << ", fingerprint `" << r.fingerprint << "`";
  for (const auto& [k, v] : r.parameters) os << ", " << k << "=" << v;
  os << "\n\n";
  os << "**" << (r.passed() ? "PASS" : "FAIL") << "**: " << r.checks.size() - r.failures() << "/" << r.checks.size()
     << " checks\n\n";
  os << "| status | check | anchor | witness |\n|---|---|---|---|\n";
  for (const auto& c : r.checks) {
    std::string w;
    for (const auto& [k, v] : c.witness) w += (w.empty() ? "" : ", ") + k + "=" + v;
    os << "| " << to_string(c.status) << " | " << escape_cell(c.id) << " | " << escape_cell(c.anchor) << " | "
       << escape_cell(w) << " |\n";
  }
  for (const auto& f : r.figures) os << "\n" << f << "\n";
  return os.str();
}

}  // namespace sroot
