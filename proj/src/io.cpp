#include "nwr/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "json.hpp"
#include "nwr/error.hpp"

namespace nwr {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

void require_keys(const json& object, std::initializer_list<std::string_view> allowed, std::string_view where) {
  if (!object.is_object()) throw InputError(std::string(where) + " must be a JSON object");
  for (const auto& [key, value] : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw InputError("unknown key '" + key + "' in " + std::string(where));
    }
  }
}

const std::string& as_string(const json& value, std::string_view where) {
  if (!value.is_string()) throw InputError(std::string(where) + " must be a string");
  return value.get_ref<const std::string&>();
}

const json& member(const json& object, const char* key, std::string_view where) {
  auto it = object.find(key);
  if (it == object.end()) throw InputError(std::string(where) + " lacks '" + key + "'");
  return *it;
}

json id_list(const TargetArena& arena, const std::vector<Vertex>& vs) {
  json out = json::array();
  for (Vertex v : vs) out.push_back(arena.id(v));
  return out;
}

json id_list(const TargetArena& arena, const VertexSet& s) { return id_list(arena, members(s)); }

VertexSet parse_id_set(const TargetArena& arena, const json& list, std::string_view where) {
  if (!list.is_array()) throw InputError(std::string(where) + " must be a list of vertex ids");
  VertexSet s = arena.empty_set();
  for (const auto& id : list) s.set(arena.at(as_string(id, where)));
  return s;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

TargetArena parse_arena(std::string_view text, ParseMode mode) {
  const json root = parse_json(text);
  require_keys(root, {"vertices", "edges"}, "arena");
  const json& vertices = member(root, "vertices", "arena");
  if (!vertices.is_array()) throw InputError("'vertices' must be a list");
  std::vector<VertexSpec> specs;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const json& entry = vertices[i];
    const std::string where = "vertex #" + std::to_string(i);
    require_keys(entry, {"id", "owner", "target"}, where);
    VertexSpec spec;
    spec.id = as_string(member(entry, "id", where), where + " id");
    const std::string& owner = as_string(member(entry, "owner", where), where + " owner");
    if (owner == "P") {
      spec.owner = Owner::Protagonist;
    } else if (owner == "N") {
      spec.owner = Owner::Nature;
    } else {
      throw InputError(where + " has owner '" + owner + "', expected \"P\" or \"N\"");
    }
    if (auto it = entry.find("target"); it != entry.end()) {
      if (!it->is_boolean()) throw InputError(where + " target must be a boolean");
      spec.target = it->get<bool>();
    }
    specs.push_back(std::move(spec));
  }
  std::vector<EdgeSpec> edges;
  if (auto it = root.find("edges"); it != root.end()) {
    if (!it->is_array()) throw InputError("'edges' must be a list");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& e = (*it)[i];
      const std::string where = "edge #" + std::to_string(i);
      if (!e.is_array() || e.size() != 2) throw InputError(where + " must be a pair of vertex ids");
      edges.emplace_back(as_string(e[0], where), as_string(e[1], where));
    }
  }
  TargetArena arena(std::move(specs), edges);
  if (mode == ParseMode::Strict) {
    const auto report = validate_arena(arena);
    if (!report.ok()) throw InputError("invalid arena: " + report.violations.front());
  }
  return arena;
}

std::string serialize_arena(const TargetArena& arena) {
  json root;
  root["vertices"] = json::array();
  for (Vertex v = 0; v < arena.size(); ++v) {
    root["vertices"].push_back(
        {{"id", arena.id(v)}, {"owner", arena.is_protagonist(v) ? "P" : "N"}, {"target", arena.is_target(v)}});
  }
  root["edges"] = json::array();
  for (const auto& [from, to] : arena.edge_specs()) root["edges"].push_back({from, to});
  return dump(root);
}

DistributionFamily parse_family(const TargetArena& arena, std::string_view text) {
  const json root = parse_json(text);
  if (!root.is_object()) throw InputError("family must be a JSON object");
  DistributionFamily mu(arena.size());
  for (const auto& [uid, dist] : root.items()) {
    const Vertex u = arena.at(uid);
    if (!arena.is_nature(u)) throw InputError("family entry '" + uid + "' is not a Nature vertex");
    if (!dist.is_object()) throw InputError("distribution of " + uid + " must be an object");
    for (const auto& [vid, p] : dist.items()) {
      mu.at(u).emplace_back(arena.at(vid), parse_rational(as_string(p, "probability of " + uid + "->" + vid)));
    }
    std::sort(mu.at(u).begin(), mu.at(u).end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  check_family(arena, mu);
  return mu;
}

std::string serialize_family(const TargetArena& arena, const DistributionFamily& mu) {
  json root = json::object();
  for (Vertex u = 0; u < arena.size(); ++u) {
    if (!arena.is_nature(u)) continue;
    json dist = json::object();
    for (const auto& [v, p] : mu.at(u)) dist[arena.id(v)] = format_rational(p);
    root[arena.id(u)] = dist;
  }
  return dump(root);
}

std::string serialize_values(const TargetArena& arena, const std::vector<Rational>& values) {
  json out = json::object();
  for (Vertex v = 0; v < arena.size(); ++v) out[arena.id(v)] = format_rational(values[v]);
  return dump({{"mode", "exact"}, {"values", out}});
}

std::string serialize_values(const TargetArena& arena, const IterativeValues& values) {
  json out = json::object();
  for (Vertex v = 0; v < arena.size(); ++v) {
    std::ostringstream text;
    text << std::setprecision(15) << values.values[v];
    out[arena.id(v)] = text.str();
  }
  return dump({{"mode", "iterative"},
               {"iterations", values.iterations},
               {"converged", values.converged},
               {"values", out}});
}

std::string serialize_relation(const TargetArena& arena, const NwrRelation& r) {
  json out = json::array();
  for (const auto& [v, w] : r.pairs()) {
    if (r.set(w).test(v)) continue;
    out.push_back({{"v", arena.id(v)}, {"W", id_list(arena, r.set(w))}});
  }
  return dump(out);
}

std::string serialize_classes(const TargetArena& arena, const std::vector<std::vector<Vertex>>& classes) {
  json out = json::array();
  for (const auto& c : classes) out.push_back(id_list(arena, c));
  return dump(out);
}

std::string serialize_sets(const TargetArena& arena, const std::vector<VertexSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(id_list(arena, s));
  return dump(out);
}

NwrCertificate parse_certificate(const TargetArena& arena, std::string_view text) {
  const json root = parse_json(text);
  require_keys(root, {"layers", "path", "v", "W"}, "certificate");
  NwrCertificate c;
  const json& layers = member(root, "layers", "certificate");
  if (!layers.is_array()) throw InputError("'layers' must be a list of lists");
  for (const auto& layer : layers) c.layers.push_back(members(parse_id_set(arena, layer, "layer")));
  const json& path = member(root, "path", "certificate");
  if (!path.is_array()) throw InputError("'path' must be a list of vertex ids");
  for (const auto& id : path) c.path.push_back(arena.at(as_string(id, "path entry")));
  c.v = arena.at(as_string(member(root, "v", "certificate"), "'v'"));
  c.w = parse_id_set(arena, member(root, "W", "certificate"), "'W'");
  return c;
}

std::string serialize_certificate(const TargetArena& arena, const NwrCertificate& c) {
  json layers = json::array();
  for (const auto& layer : c.layers) layers.push_back(id_list(arena, layer));
  return dump({{"layers", layers}, {"path", id_list(arena, c.path)}, {"v", arena.id(c.v)}, {"W", id_list(arena, c.w)}});
}

std::string serialize_report(const ReductionReport& report) {
  auto percent = [](std::size_t before, std::size_t after) {
    return before == 0 ? 0.0 : 100.0 * static_cast<double>(before - after) / static_cast<double>(before);
  };
  json removed = json::array();
  for (const auto& e : report.removed) removed.push_back({{"edge", {e.from, e.to}}, {"W", e.dominated_by}});
  json classes = json::object();
  for (const auto& [v, c] : report.class_of) classes[v] = c;
  return dump({{"original", {{"vertices", report.original_vertices}, {"edges", report.original_edges}}},
               {"reduced", {{"vertices", report.reduced_vertices}, {"edges", report.reduced_edges}}},
               {"vertex_reduction_percent", percent(report.original_vertices, report.reduced_vertices)},
               {"edge_reduction_percent", percent(report.original_edges, report.reduced_edges)},
               {"class_of", classes},
               {"merged_classes", report.merged_classes()},
               {"dropped", report.dropped},
               {"removed_edges", removed},
               {"rounds", report.rounds}});
}

Digraph parse_graph(std::string_view text) {
  const json root = parse_json(text);
  require_keys(root, {"vertices", "edges"}, "graph");
  Digraph g;
  const json& vertices = member(root, "vertices", "graph");
  if (!vertices.is_array()) throw InputError("'vertices' must be a list of names");
  std::set<std::string> seen;
  for (const auto& name : vertices) {
    const std::string& s = as_string(name, "graph vertex");
    if (!seen.insert(s).second) throw InputError("duplicate graph vertex '" + s + "'");
    g.names.push_back(s);
  }
  g.succ.resize(g.names.size());
  if (auto it = root.find("edges"); it != root.end()) {
    if (!it->is_array()) throw InputError("'edges' must be a list");
    for (const auto& e : *it) {
      if (!e.is_array() || e.size() != 2) throw InputError("graph edge must be a pair of names");
      g.succ[g.find(as_string(e[0], "edge"))].push_back(g.find(as_string(e[1], "edge")));
    }
  }
  return g;
}

std::string serialize_graph(const Digraph& g) {
  json edges = json::array();
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v : g.succ[u]) edges.push_back({g.names[u], g.names[v]});
  }
  return dump({{"vertices", g.names}, {"edges", edges}});
}

std::string to_dot(const TargetArena& arena) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') out += '\\';
      out += ch;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "digraph arena {\n";
  for (Vertex v = 0; v < arena.size(); ++v) {
    out << "  " << quote(arena.id(v)) << " [shape=" << (arena.is_protagonist(v) ? "circle" : "box");
    if (arena.is_target(v)) out << ", peripheries=2";
    out << "];\n";
  }
  for (const auto& [from, to] : arena.edge_specs()) out << "  " << quote(from) << " -> " << quote(to) << ";\n";
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
}

}  // namespace nwr
