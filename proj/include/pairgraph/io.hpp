#pragma once

// JSON descriptors for groups and subgroups, element-list parsing, and the
// export formats (graph JSON, DOT, spectrum CSV, report JSON, trial JSONL).

#include <cctype>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "pairgraph/error.hpp"
#include "pairgraph/group.hpp"
#include "pairgraph/pair_graph.hpp"
#include "pairgraph/search.hpp"
#include "pairgraph/spectral.hpp"
#include "pairgraph/structure.hpp"
#include "pairgraph/subgroup.hpp"

namespace pairgraph {

using nlohmann::json;

inline GroupDescriptor group_descriptor_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ValidationError("group descriptor: expected an object with a string field \"kind\"");
  GroupDescriptor d;
  d.kind = j["kind"].get<std::string>();
  if (!j.contains("params") || !j["params"].is_array())
    throw ValidationError("group descriptor: field \"params\" must be an array");
  if (d.kind == "product") {
    for (const auto& f : j["params"]) d.factors.push_back(group_descriptor_from_json(f));
  } else {
    for (const auto& p : j["params"]) {
      if (!p.is_number_unsigned()) throw ValidationError("group descriptor: params must be non-negative integers");
      d.params.push_back(p.get<unsigned>());
    }
  }
  return d;
}

inline json to_json(const GroupDescriptor& d) {
  json params = json::array();
  if (d.kind == "product") {
    for (const auto& f : d.factors) params.push_back(to_json(f));
  } else {
    for (auto p : d.params) params.push_back(p);
  }
  return {{"kind", d.kind}, {"params", params}};
}

/// Accepts a JSON object, or the shorthand "kind:a,b" with "*" joining the
/// two factors of a direct product ("cyclic:2*cyclic:3").
inline GroupDescriptor parse_group_descriptor(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ValidationError(std::string("group descriptor: invalid JSON: ") + e.what());
    }
    return group_descriptor_from_json(j);
  }
  if (auto star = text.find('*'); star != std::string::npos) {
    return {"product", {}, {parse_group_descriptor(text.substr(0, star)), parse_group_descriptor(text.substr(star + 1))}};
  }
  GroupDescriptor d;
  const auto colon = text.find(':');
  d.kind = text.substr(0, colon);
  if (colon != std::string::npos) {
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        const unsigned long v = std::stoul(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
        d.params.push_back(static_cast<unsigned>(v));
      } catch (const std::logic_error&) {
        throw ValidationError("group descriptor: parameter '" + item + "' is not a non-negative integer");
      }
    }
  }
  return d;
}

/// Comma-separated indices ("0,3,6,9"), or ';'-separated element labels
/// ("(1,2);(3,4)"). "e" names the identity. Empty text is the empty set.
inline ElementSet parse_element_list(const FiniteGroup& g, const std::string& text) {
  ElementSet out;
  const bool numeric = text.find_first_not_of("0123456789, ") == std::string::npos;
  std::stringstream ss(text);
  std::string item;
  const char sep = numeric ? ',' : ';';
  while (std::getline(ss, item, sep)) {
    const auto b = item.find_first_not_of(' ');
    if (b == std::string::npos) continue;
    item = item.substr(b, item.find_last_not_of(' ') - b + 1);
    if (numeric) {
      unsigned long v = 0;
      try {
        v = std::stoul(item);
      } catch (const std::logic_error&) {
        throw ValidationError("element index '" + item + "' is not a valid integer");
      }
      if (v >= g.order()) throw ValidationError("element index " + item + " out of range for group of order " + std::to_string(g.order()));
      out.push_back(static_cast<Element>(v));
    } else if (item == "e") {
      out.push_back(g.identity());
    } else if (auto x = g.find_label(item)) {
      out.push_back(*x);
    } else {
      throw ValidationError("unknown element label '" + item + "'");
    }
  }
  return normalize(std::move(out));
}

inline ElementSet element_list_from_json(const FiniteGroup& g, const json& j) {
  if (!j.is_array()) throw ValidationError("expected an array of element indices or labels");
  ElementSet out;
  for (const auto& x : j) {
    if (x.is_number_unsigned()) {
      if (x.get<std::size_t>() >= g.order()) throw ValidationError("element index out of range");
      out.push_back(x.get<Element>());
    } else if (x.is_string()) {
      auto found = x.get<std::string>() == "e" ? std::optional<Element>(g.identity()) : g.find_label(x.get<std::string>());
      if (!found) throw ValidationError("unknown element label '" + x.get<std::string>() + "'");
      out.push_back(*found);
    } else {
      throw ValidationError("element must be an index or a label");
    }
  }
  return normalize(std::move(out));
}

/// {"elements": [...]}, {"builtin": name} or {"generators": [...]}.
inline Subgroup subgroup_from_json(const FiniteGroup& g, const json& j) {
  if (!j.is_object()) throw ValidationError("subgroup descriptor must be an object");
  if (j.contains("builtin")) return builtin_subgroup(g, j["builtin"].get<std::string>());
  if (j.contains("elements")) return Subgroup::from_elements(g, element_list_from_json(g, j["elements"]));
  if (j.contains("generators")) return subgroup_generated(g, element_list_from_json(g, j["generators"]));
  throw ValidationError("subgroup descriptor needs \"elements\", \"builtin\" or \"generators\"");
}

inline json element_array(const ElementSet& s) { return json(std::vector<Element>(s.begin(), s.end())); }

inline json graph_to_json(const PairGraph& graph) {
  json edges = json::array();
  for (const auto& [u, v] : graph.edges()) edges.push_back({u, v});
  return {{"n", graph.vertex_count()},
          {"edges", edges},
          {"coset_of", graph.subgroup().coset_labels()},
          {"degrees", graph.degrees()}};
}

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

/// Undirected; H-vertices are boxes, the rest ellipses.
inline std::string graph_to_dot(const PairGraph& graph) {
  std::ostringstream os;
  os << "graph pair_graph {\n";
  for (Element v = 0; v < graph.vertex_count(); ++v)
    os << "  " << v << " [label=\"" << dot_escape(graph.group().label(v)) << "\", shape="
       << (graph.subgroup().contains(v) ? "box" : "ellipse") << "];\n";
  for (const auto& [u, v] : graph.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string spectrum_to_csv(const Spectrum& s) {
  std::ostringstream os;
  os << "value,multiplicity\n" << std::setprecision(15);
  for (const auto& c : s.clusters) os << (std::abs(c.value) < s.merge_gap() ? 0.0 : c.value) << ',' << c.multiplicity << '\n';
  return os.str();
}

inline json structure_report(const PairGraph& graph) {
  const auto& h = graph.subgroup();
  const auto& gen = graph.generating_set();
  const auto comps = components_bfs(graph);
  const auto formula = component_count_formula(h, gen);
  const auto conn = is_connected(h, gen);
  const auto reg = regularity_check(graph);
  json degrees = json::array();
  for (const auto& d : degree_profile(graph))
    degrees.push_back({{"coset", d.coset}, {"degree", d.degree}, {"size", d.size}});
  return {{"components", comps.count},
          {"formula_components", formula.total()},
          {"formula_terms", {formula.subgroup_index, formula.outer_vertices, formula.covered_vertices}},
          {"connected", conn.connected},
          {"connectivity_witness", conn.witness},
          {"bipartite", is_bipartite(graph).bipartite},
          {"regular", reg.regular},
          {"regular_degree", reg.degree ? json(*reg.degree) : json(nullptr)},
          {"isolated", element_array(isolated_vertices(graph))},
          {"degree_profile", degrees}};
}

inline json spectrum_clusters_json(const Spectrum& s) {
  json out = json::array();
  for (const auto& c : s.clusters) out.push_back({{"value", c.value}, {"multiplicity", c.multiplicity}});
  return out;
}

inline json trial_to_json(const TrialResult& r) {
  return {{"trial", r.trial},
          {"S", element_array(r.set)},
          {"connected", r.connected},
          {"ramanujan", r.ramanujan.value_or(false)},
          {"worst_nontrivial", r.worst_nontrivial ? json(*r.worst_nontrivial) : json(nullptr)},
          {"bound", r.bound}};
}

}  // namespace pairgraph
