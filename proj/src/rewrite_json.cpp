#include <json.hpp>

#include "sroot/error.hpp"
#include "sroot/rewrite.hpp"

namespace sroot {

using nlohmann::json;

Presentation presentation_from_json(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("presentation JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("alphabet") || !j.contains("relations"))
    throw InputError("presentation JSON needs 'alphabet' and 'relations'");
  Presentation p;
  try {
    p.alphabet = j.at("alphabet").get<std::vector<std::string>>();
    for (const auto& rel : j.at("relations")) {
      if (!rel.is_array() || rel.size() != 2) throw InputError("each relation must be a pair [u, v]");
      p.relations.emplace_back(p.parse(rel[0].get<std::string>()), p.parse(rel[1].get<std::string>()));
    }
    if (j.contains("grading") && !j.at("grading").is_null()) {
      p.grading.assign(p.alphabet.size(), 0);
      for (const auto& [name, weight] : j.at("grading").items()) p.grading[p.letter(name)] = weight.get<int>();
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("presentation JSON: ") + e.what());
  }
  p.validate();
  return p;
}

std::string presentation_to_json(const Presentation& p) {
  json j;
  j["alphabet"] = p.alphabet;
  j["relations"] = json::array();
  for (const auto& [u, v] : p.relations) j["relations"].push_back({p.format(u), p.format(v)});
  if (!p.grading.empty()) {
    json g = json::object();
    for (std::size_t k = 0; k < p.alphabet.size(); ++k) g[p.alphabet[k]] = p.grading[k];
    j["grading"] = g;
  }
  return j.dump();
}

}  // namespace sroot
