#include "nzc/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

namespace nzc {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError("at " + (path.empty() ? std::string("<root>") : path) + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing key \"") + key + "\"");
  return *it;
}

int as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::vector<VertexId> int_list(const Json& j, const std::string& path) {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < as_array(j, path).size(); ++i) {
    out.push_back(as_int(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

BigInt big_from(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (!j.is_string()) fail(path, "expected a decimal string");
  static const std::regex dec("-?[0-9]+");
  const std::string s = j.get<std::string>();
  if (!std::regex_match(s, dec)) fail(path, "not a signed decimal: \"" + s + "\"");
  return BigInt(s);
}

int key_id(const std::string& key, const std::string& path) {
  static const std::regex dec("-?[0-9]+");
  if (!std::regex_match(key, dec)) fail(path, "key \"" + key + "\" is not an integer id");
  try {
    return std::stoi(key);
  } catch (const std::out_of_range&) {
    fail(path, "key \"" + key + "\" out of range");
  }
}

Json id_lists(const std::vector<std::vector<VertexId>>& sets) {
  Json a = Json::array();
  for (const auto& s : sets) a.push_back(s);
  return a;
}

const char* kind_name(BagOrigin::Kind k) {
  switch (k) {
    case BagOrigin::Kind::PType: return "p";
    case BagOrigin::Kind::CType: return "c";
    case BagOrigin::Kind::Free: break;
  }
  return "free";
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json j;
  j["vertices"] = g.vertices();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"id", e.id}, {"u", e.u}, {"v", e.v},
                     {"tag", e.is_real() ? "real" : "virtual"}});
  }
  j["edges"] = std::move(edges);
  if (const auto& b = g.bipartition()) j["bipartition"] = {{"left", b->left}, {"right", b->right}};
  return j;
}

Graph graph_from_json(const Json& j) {
  Graph g;
  for (VertexId v : int_list(field(j, "vertices", ""), "vertices")) {
    if (g.has_vertex(v)) fail("vertices", "duplicate vertex " + std::to_string(v));
    g.add_vertex(v);
  }
  const Json& edges = as_array(field(j, "edges", ""), "edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string p = "edges[" + std::to_string(i) + "]";
    int id = as_int(field(edges[i], "id", p), p + ".id");
    int u = as_int(field(edges[i], "u", p), p + ".u");
    int v = as_int(field(edges[i], "v", p), p + ".v");
    EdgeTag tag = EdgeTag::Real;
    if (edges[i].contains("tag")) {
      const Json& t = edges[i]["tag"];
      if (t == "virtual") {
        tag = EdgeTag::Virtual;
      } else if (t != "real") {
        fail(p + ".tag", "expected \"real\" or \"virtual\"");
      }
    }
    if (!g.has_vertex(u) || !g.has_vertex(v)) fail(p, "endpoint not listed in vertices");
    try {
      g.add_edge(id, u, v, tag);
    } catch (const InvalidGraph& e) {
      fail(p, e.what());
    }
  }
  if (j.contains("bipartition")) {
    const Json& b = j["bipartition"];
    Bipartition bp{int_list(field(b, "left", "bipartition"), "bipartition.left"),
                   int_list(field(b, "right", "bipartition"), "bipartition.right")};
    try {
      g.set_bipartition(std::move(bp));
    } catch (const InvalidGraph& e) {
      fail("bipartition", e.what());
    }
  }
  try {
    g.validate();
  } catch (const InvalidGraph& e) {
    fail("", e.what());
  }
  return g;
}

Json weights_to_json(const WeightAssignment& w) {
  Json j = Json::object();
  for (const auto& [e, x] : w.entries()) j[std::to_string(e)] = x.str();
  return j;
}

WeightAssignment weights_from_json(const Json& j) {
  if (!j.is_object()) fail("", "expected an object of edge weights");
  WeightAssignment w;
  for (const auto& [k, v] : j.items()) w.set(key_id(k, k), big_from(v, k));
  return w;
}

Json edge_weights_to_json(const EdgeWeights& w) {
  Json j = Json::object();
  for (const auto& [e, x] : w) j[std::to_string(e)] = x.str();
  return j;
}

EdgeWeights edge_weights_from_json(const Json& j) {
  if (!j.is_object()) fail("", "expected an object of edge weights");
  EdgeWeights w;
  for (const auto& [k, v] : j.items()) w[key_id(k, k)] = big_from(v, k);
  return w;
}

Json treedec_to_json(const TreeDecomp& td) {
  Json j;
  j["root"] = td.root;
  std::vector<int> parent = td.bags.empty() ? std::vector<int>{} : td.parents();
  Json bags = Json::array();
  for (std::size_t b = 0; b < td.bags.size(); ++b) {
    const Bag& bag = td.bags[b];
    bags.push_back({{"id", b},
                    {"vertices", bag.vertices},
                    {"parent", parent[b]},
                    {"origin",
                     {{"kind", kind_name(bag.origin.kind)},
                      {"node", bag.origin.node},
                      {"local_bag", bag.origin.local_bag}}},
                    {"separating_sets", id_lists(bag.separating_sets)}});
  }
  j["bags"] = std::move(bags);
  Json edges = Json::array();
  for (auto [a, b] : td.edges) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  return j;
}

TreeDecomp treedec_from_json(const Json& j) {
  TreeDecomp td;
  td.root = as_int(field(j, "root", ""), "root");
  const Json& bags = as_array(field(j, "bags", ""), "bags");
  for (std::size_t i = 0; i < bags.size(); ++i) {
    const std::string p = "bags[" + std::to_string(i) + "]";
    Bag bag;
    bag.vertices = int_list(field(bags[i], "vertices", p), p + ".vertices");
    std::sort(bag.vertices.begin(), bag.vertices.end());
    if (bags[i].contains("origin")) {
      const Json& o = bags[i]["origin"];
      const std::string k = o.value("kind", "free");
      bag.origin.kind = k == "p" ? BagOrigin::Kind::PType
                        : k == "c" ? BagOrigin::Kind::CType
                                   : BagOrigin::Kind::Free;
      bag.origin.node = o.value("node", -1);
      bag.origin.local_bag = o.value("local_bag", -1);
    }
    if (bags[i].contains("separating_sets")) {
      const Json& ss = as_array(bags[i]["separating_sets"], p + ".separating_sets");
      for (std::size_t s = 0; s < ss.size(); ++s) {
        bag.separating_sets.push_back(
            int_list(ss[s], p + ".separating_sets[" + std::to_string(s) + "]"));
      }
    }
    td.bags.push_back(std::move(bag));
  }
  const Json& edges = as_array(field(j, "edges", ""), "edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto ab = int_list(edges[i], "edges[" + std::to_string(i) + "]");
    if (ab.size() != 2) fail("edges[" + std::to_string(i) + "]", "expected a pair");
    for (int x : ab) {
      if (x < 0 || x >= static_cast<int>(td.bags.size())) {
        fail("edges[" + std::to_string(i) + "]", "bag index out of range");
      }
    }
    td.edges.emplace_back(ab[0], ab[1]);
  }
  if (!td.bags.empty() && (td.root < 0 || td.root >= static_cast<int>(td.bags.size()))) {
    fail("root", "bag index out of range");
  }
  return td;
}

Json component_tree_to_json(const ComponentTree& t) {
  Json j;
  j["root"] = t.root;
  Json nodes = Json::array();
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const ComponentNode& n = t.nodes[i];
    Json node{{"id", i},
              {"kind", n.kind == NodeKind::PType ? "p" : "c"},
              {"beta", n.is_beta},
              {"width", n.width},
              {"graph", graph_to_json(n.graph)},
              {"separating_sets", id_lists(t.separating_sets(static_cast<int>(i)))}};
    if (n.decomposition) node["decomposition"] = treedec_to_json(*n.decomposition);
    nodes.push_back(std::move(node));
  }
  j["nodes"] = std::move(nodes);
  Json links = Json::array();
  for (const TreeLink& l : t.links) {
    auto sets = t.separating_sets(l.a);
    auto it = std::find(sets.begin(), sets.end(), l.sep);
    links.push_back({{"a", l.a}, {"b", l.b}, {"sep", l.sep},
                     {"sep_index", it == sets.end() ? -1 : it - sets.begin()}});
  }
  j["links"] = std::move(links);
  return j;
}

ComponentTree component_tree_from_json(const Json& j) {
  ComponentTree t;
  t.root = as_int(field(j, "root", ""), "root");
  const Json& nodes = as_array(field(j, "nodes", ""), "nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string p = "nodes[" + std::to_string(i) + "]";
    ComponentNode n;
    try {
      n.graph = graph_from_json(field(nodes[i], "graph", p));
    } catch (const ParseError& e) {
      fail(p + ".graph", e.what());
    }
    const Json& kind = field(nodes[i], "kind", p);
    if (kind == "p") {
      n.kind = NodeKind::PType;
    } else if (kind == "c") {
      n.kind = NodeKind::CType;
    } else {
      fail(p + ".kind", "expected \"p\" or \"c\"");
    }
    n.is_beta = nodes[i].value("beta", false);
    n.width = nodes[i].value("width", -1);
    if (nodes[i].contains("decomposition")) {
      try {
        n.decomposition = treedec_from_json(nodes[i]["decomposition"]);
      } catch (const ParseError& e) {
        fail(p + ".decomposition", e.what());
      }
    }
    t.nodes.push_back(std::move(n));
  }
  const Json& links = as_array(field(j, "links", ""), "links");
  for (std::size_t i = 0; i < links.size(); ++i) {
    const std::string p = "links[" + std::to_string(i) + "]";
    TreeLink l;
    l.a = as_int(field(links[i], "a", p), p + ".a");
    l.b = as_int(field(links[i], "b", p), p + ".b");
    for (int x : {l.a, l.b}) {
      if (x < 0 || x >= static_cast<int>(t.nodes.size())) fail(p, "node index out of range");
    }
    l.sep = int_list(field(links[i], "sep", p), p + ".sep");
    std::sort(l.sep.begin(), l.sep.end());
    t.links.push_back(std::move(l));
  }
  if (t.root < 0 || t.root >= static_cast<int>(t.nodes.size())) fail("root", "node index out of range");
  return t;
}

Json gadget_map_to_json(const GadgetMap& m) {
  Json paths = Json::object();
  for (const auto& [e, p] : m.paths) {
    Json a = Json::array();
    for (const DirectedEdge& d : p) a.push_back({{"edge", d.edge}, {"reversed", d.reversed}});
    paths[std::to_string(e)] = std::move(a);
  }
  Json origin = Json::object();
  for (const auto& [v, o] : m.origin) origin[std::to_string(v)] = o;
  return {{"paths", std::move(paths)}, {"origin", std::move(origin)}};
}

Json gprime_to_json(const GPrime& gp) {
  Json j = graph_to_json(gp.graph);
  Json prov = Json::object();
  for (const auto& [v, ob] : gp.provenance) {
    prov[std::to_string(v)] = {{"vertex", ob.first}, {"bag", ob.second}};
  }
  Json assoc = Json::object();
  for (const auto& [e, b] : gp.association) assoc[std::to_string(e)] = b;
  j["provenance"] = std::move(prov);
  j["association"] = std::move(assoc);
  j["copy_edges"] = gp.copy_edges;
  j["tprime"] = treedec_to_json(gp.tprime);
  return j;
}

Json aux_tree_to_json(const AuxTree& a) {
  Json bags = Json::object();
  for (std::size_t b = 0; b < a.parent.size(); ++b) {
    Json x{{"parent", a.parent[b]}, {"height", a.height[b]}, {"leaves", a.leaves[b]}};
    if (!a.attached_at[b].empty()) x["attached_at"] = a.attached_at[b];
    bags[std::to_string(b)] = std::move(x);
  }
  return {{"root", a.root}, {"bags", std::move(bags)}};
}

Json cycle_to_json(const Cycle& c) {
  Json a = Json::array();
  for (const DirectedEdge& d : c.edges) a.push_back({{"edge", d.edge}, {"reversed", d.reversed}});
  return a;
}

Json matching_to_json(const Matching& m) { return Json(m); }

Json manifest_to_json(const PipelineResult& r) {
  Json j;
  j["K"] = r.K.str();
  j["B_shift"] = r.B_shift.str();
  j["m"] = r.m;
  j["weights"] = weights_to_json(r.weights);
  j["max_bits"] = r.max_bits;
  Json prov = Json::array();
  for (const BlockRun& b : r.blocks) {
    prov.push_back({{"block", artifact_hash(graph_to_json(b.block))},
                    {"component_tree", artifact_hash(component_tree_to_json(b.decomposed))},
                    {"normalized", artifact_hash(component_tree_to_json(b.normalized))},
                    {"gadgets", artifact_hash(gadget_map_to_json(b.gadgets))},
                    {"tprime", artifact_hash(treedec_to_json(b.tprime))},
                    {"gprime", artifact_hash(gprime_to_json(b.gprime))},
                    {"aux_tree", artifact_hash(aux_tree_to_json(b.aux))},
                    {"K", b.wprime.params.K.str()},
                    {"B_shift", b.wprime.params.B_shift.str()}});
  }
  j["provenance"] = std::move(prov);
  return j;
}

void validate_manifest(const Json& j) {
  big_from(field(j, "K", ""), "K");
  big_from(field(j, "B_shift", ""), "B_shift");
  as_int(field(j, "m", ""), "m");
  if (!field(j, "max_bits", "").is_number_unsigned()) fail("max_bits", "expected a count");
  weights_from_json(field(j, "weights", ""));
  as_array(field(j, "provenance", ""), "provenance");
}

std::string artifact_hash(const Json& j) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError(path + ": cannot write");
  out << to_text(j);
}

std::string to_text(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace nzc
