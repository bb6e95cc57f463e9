#include <json.hpp>

#include <sstream>

#include "sroot/block_algebra.hpp"
#include "sroot/error.hpp"

namespace sroot {

namespace {

using nlohmann::json;

Rational parse_coefficient(const json& c) {
  if (c.is_number_integer()) return Rational(c.get<long>());
  if (c.is_string()) {
    Rational r;
    try {
      r = Rational(c.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw InputError("bad coefficient '" + c.get<std::string>() + "'");
    }
    r.canonicalize();
    return r;
  }
  throw InputError("relation coefficients must be integers or strings like \"3/2\"");
}

Path parse_path(const Quiver& q, const std::string& text) {
  std::istringstream in(text);
  std::string name;
  Path p;
  bool first = true;
  while (in >> name) {
    std::size_t k = q.arrow_index(name);
    if (first) p.source = q.arrow(k).from;
    first = false;
    p.arrows.push_back(k);
  }
  if (first) throw InputError("empty path in relation");
  p.target(q);
  return p;
}

WeylElement vertex_label(const std::string& name, int rank) {
  if (name == "s" && rank == 2) return WeylElement::from_word(2, {1});
  return WeylElement::from_word(rank, parse_reflection_word(name));
}

int infer_rank(const std::vector<std::string>& names) {
  int top = 1;
  for (const auto& n : names) {
    if (n == "s") top = std::max(top, 1);
    else
      for (int i : parse_reflection_word(n)) top = std::max(top, i);
  }
  return top + 1;
}

}  // namespace

BlockAlgebra algebra_from_json(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("algebra JSON: ") + e.what());
  }
  try {
    auto vertices = j.at("vertices").get<std::vector<std::string>>();
    int rank = j.contains("rank") ? j.at("rank").get<int>() : infer_rank(vertices);
    std::vector<Arrow> arrows;
    auto index_of = [&](const std::string& v) {
      for (std::size_t k = 0; k < vertices.size(); ++k)
        if (vertices[k] == v) return k;
      throw InputError("arrow endpoint '" + v + "' is not a vertex");
    };
    for (const auto& a : j.at("arrows"))
      arrows.push_back({a.at("name").get<std::string>(), index_of(a.at("from").get<std::string>()),
                        index_of(a.at("to").get<std::string>())});
    std::vector<std::size_t> involution;
    if (j.contains("antiinvolution")) {
      involution.assign(arrows.size(), arrows.size());
      for (auto it = j.at("antiinvolution").begin(); it != j.at("antiinvolution").end(); ++it) {
        std::size_t from = arrows.size(), to = arrows.size();
        for (std::size_t k = 0; k < arrows.size(); ++k) {
          if (arrows[k].name == it.key()) from = k;
          if (arrows[k].name == it.value().get<std::string>()) to = k;
        }
        if (from == arrows.size() || to == arrows.size()) throw InputError("antiinvolution names an unknown arrow");
        involution[from] = to;
        involution[to] = from;
      }
      for (auto x : involution)
        if (x == arrows.size()) throw InputError("antiinvolution must pair every arrow");
    }
    auto q = std::make_shared<const Quiver>(vertices, arrows, involution);
    std::vector<Relation> relations;
    if (j.contains("relations"))
      for (const auto& r : j.at("relations")) {
        Relation rel;
        for (const auto& term : r) rel.terms.push_back({parse_coefficient(term.at(0)), parse_path(*q, term.at(1))});
        relations.push_back(std::move(rel));
      }
    std::vector<WeylElement> labels;
    for (const auto& v : vertices) labels.push_back(vertex_label(v, rank));
    std::map<int, std::size_t> walls;
    if (j.contains("wall_idempotents"))
      for (auto it = j.at("wall_idempotents").begin(); it != j.at("wall_idempotents").end(); ++it)
        walls[std::stoi(it.key())] = index_of(it.value().get<std::string>());
    std::string name = j.value("name", std::string("user"));
    if (name == "sl2") name = "sl2-user";
    return BlockAlgebra(q, std::move(relations), rank, std::move(labels), std::move(walls), name);
  } catch (const json::exception& e) {
    throw InputError(std::string("algebra JSON: ") + e.what());
  }
}

std::string algebra_to_json(const BlockAlgebra& alg) {
  const Quiver& q = alg.quiver();
  json j;
  j["name"] = alg.name();
  j["rank"] = alg.rank();
  j["vertices"] = q.vertices();
  j["arrows"] = json::array();
  for (const auto& a : q.arrows())
    j["arrows"].push_back({{"name", a.name}, {"from", q.vertices()[a.from]}, {"to", q.vertices()[a.to]}});
  j["relations"] = json::array();
  for (const auto& r : alg.relations()) {
    json rel = json::array();
    for (const auto& [c, p] : r.terms) {
      json coeff = c.get_den() == 1 ? json(c.get_num().get_si()) : json(c.get_str());
      rel.push_back({coeff, format_path(q, p)});
    }
    j["relations"].push_back(rel);
  }
  if (q.has_involution()) {
    j["antiinvolution"] = json::object();
    for (std::size_t k = 0; k < q.arrow_count(); ++k) j["antiinvolution"][q.arrow(k).name] = q.arrow(q.involution(k)).name;
  }
  j["wall_idempotents"] = json::object();
  for (int i = 1; i < alg.rank(); ++i) {
    try {
      j["wall_idempotents"][std::to_string(i)] = q.vertices()[alg.wall_vertex(i)];
    } catch (const ConfigError&) {
    }
  }
  return j.dump(2);
}

}  // namespace sroot
