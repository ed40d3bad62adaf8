#include "rclat/io.hpp"

#include <map>
#include <sstream>

namespace rclat {

json poset_to_json(const Poset& p) {
  json covers = json::array();
  for (auto [a, b] : p.covers()) covers.push_back({a, b});
  return json{{"n", p.size()}, {"covers", std::move(covers)}};
}

Poset poset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("covers"))
    throw std::invalid_argument("poset record needs \"n\" and \"covers\"");
  const int n = j.at("n").get<int>();
  std::vector<Cover> covers;
  for (const auto& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2) throw std::invalid_argument("cover must be a pair");
    covers.emplace_back(c[0].get<int>(), c[1].get<int>());
  }
  return poset_from_covers(n, covers);
}

json decomposition_to_json(const AdjunctDecomposition& d) {
  json steps = json::array();
  for (const auto& s : d.steps) steps.push_back({{"chain", s.chain}, {"pair", {s.a, s.b}}});
  return json{{"c0", d.c0}, {"steps", std::move(steps)}};
}

AdjunctDecomposition decomposition_from_json(const json& j) {
  AdjunctDecomposition d;
  d.c0 = j.at("c0").get<std::vector<int>>();
  for (const auto& s : j.at("steps")) {
    const auto pair = s.at("pair").get<std::vector<int>>();
    if (pair.size() != 2) throw std::invalid_argument("adjunct pair must have two ids");
    d.steps.push_back(AdjunctStep{s.at("chain").get<std::vector<int>>(), pair[0], pair[1]});
  }
  return d;
}

json enumerated_to_json(const EnumeratedLattice& e) {
  json j = poset_to_json(e.lattice.poset());
  j["meta"] = {{"n", e.lattice.size()},
               {"k", e.k},
               {"r", e.r},
               {"basic_block_key", e.basic_block_key.hex()}};
  return j;
}

std::string to_dot(const Poset& p, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=circle];\n";
  for (int x = 0; x < p.size(); ++x) {
    const bool reducible = p.lower_covers(x).size() >= 2 || p.upper_covers(x).size() >= 2;
    out << "  " << x << " [label=\"" << x << "\"" << (reducible ? ", shape=box" : "") << "];\n";
  }
  for (auto [a, b] : p.covers()) out << "  " << a << " -> " << b << ";\n";
  std::map<int, std::vector<int>> ranks;
  const auto heights = p.heights();
  for (int x = 0; x < p.size(); ++x) ranks[heights[x]].push_back(x);
  for (const auto& [h, members] : ranks) {
    out << "  { rank=same;";
    for (int x : members) out << " " << x << ";";
    out << " }\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace rclat
