#include "cli.hpp"

#include <CLI11.hpp>

#include "nzc/decomposer.hpp"
#include "nzc/dynamic.hpp"
#include "nzc/isolation.hpp"
#include "nzc/json_io.hpp"
#include "nzc/pullback.hpp"
#include "nzc/verify.hpp"

namespace nzc {

namespace {

struct Options {
  std::string graph, tree, weights, insert, out, tree_out, report;
  std::uint64_t seed = 0;
  int width = 3;
  std::size_t cap = kDefaultCycleCap;
  bool no_facial_repair = false;
  bool no_verify = false;
  bool isolation = false;
  bool maximum = false;
  bool undirected = false;
  int prime_bits = 0;
  InstanceParams gen;
};

void emit(const std::string& path, const Json& j, std::ostream& out) {
  if (path.empty()) {
    out << to_text(j);
  } else {
    write_json_file(path, j);
  }
}

/// A weight manifest or a bare edge -> weight object.
WeightAssignment load_weights(const std::string& path) {
  Json j = read_json_file(path);
  if (j.is_object() && j.contains("weights") && j["weights"].is_object()) j = j["weights"];
  try {
    return weights_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Graph load_graph(const std::string& path) {
  try {
    return graph_from_json(read_json_file(path));
  } catch (const ParseError& e) {
    if (std::string(e.what()).rfind(path, 0) == 0) throw;
    throw ParseError(path + ": " + e.what());
  }
}

ComponentTree load_tree(const std::string& path) {
  try {
    return component_tree_from_json(read_json_file(path));
  } catch (const ParseError& e) {
    if (std::string(e.what()).rfind(path, 0) == 0) throw;
    throw ParseError(path + ": " + e.what());
  }
}

int cmd_generate(const Options& o, std::ostream& out) {
  Instance inst = generate_instance(o.seed, o.gen);
  emit(o.out, graph_to_json(inst.graph), out);
  if (!o.tree_out.empty()) write_json_file(o.tree_out, component_tree_to_json(inst.tree));
  if (!o.out.empty()) {
    out << "generated seed " << o.seed << ": " << inst.graph.num_vertices() << " vertices, "
        << inst.graph.num_edges() << " edges, " << inst.tree.nodes.size() << " pieces\n";
  }
  return kExitPass;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  ComponentTree t = decompose(load_graph(o.graph), o.width);
  emit(o.out, component_tree_to_json(t), out);
  if (!o.out.empty()) out << "decomposed into " << t.nodes.size() << " components\n";
  return kExitPass;
}

int cmd_normalize(const Options& o, std::ostream& out) {
  GadgetResult r = normalize(load_tree(o.tree), !o.no_facial_repair);
  Json j{{"tree", component_tree_to_json(r.tree)}, {"gadgets", gadget_map_to_json(r.map)}};
  emit(o.out, j, out);
  if (!o.out.empty()) out << "normalized: " << r.tree.nodes.size() << " components\n";
  return kExitPass;
}

Json circulation_report(const Graph& g, const WeightAssignment& w, const Options& o,
                        std::size_t max_bits, bool& passed) {
  CirculationReport c = verify_nonzero_circulation(g, w, o.cap);
  Json j = Json::parse(report_json(c, nullptr, max_bits));
  passed = c.passed();
  if (o.isolation) {
    PmAudit a = audit_pm_isolation(g, matching_weights(g, w), o.cap);
    j["perfect_matchings"] = a.perfect_matchings;
    j["at_minimum"] = a.at_minimum;
    passed = passed && a.at_minimum <= 1;
  }
  j["passed"] = passed;
  return j;
}

void print_witness(const Json& report, std::ostream& err) {
  if (!report["zero_witnesses"].empty()) {
    err << "zero-circulation cycle: " << report["zero_witnesses"][0].dump() << "\n";
  }
}

int cmd_weigh(const Options& o, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(o.graph);
  PipelineOptions po;
  po.width = o.width;
  po.repair_facial = !o.no_facial_repair;
  if (!o.tree.empty()) po.tree = load_tree(o.tree);
  PipelineResult r = end_to_end(g, po);
  Json manifest = manifest_to_json(r);
  emit(o.out, manifest, out);
  out << "weighed " << g.num_edges() << " edges in " << r.blocks.size()
      << " blocks: K=" << r.K << " max_bits=" << r.max_bits << "\n";
  if (o.no_verify) return kExitPass;
  bool passed = false;
  Json rep = circulation_report(g, r.weights, o, r.max_bits, passed);
  if (!o.report.empty()) write_json_file(o.report, rep);
  out << "verify: " << rep["cycles_total"].get<std::size_t>() << " cycles, "
      << (passed ? "pass" : "FAIL") << "\n";
  if (!passed) print_witness(rep, err);
  return passed ? kExitPass : kExitVerification;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(o.graph);
  WeightAssignment w = load_weights(o.weights);
  if (!w.covers(g)) throw ParseError(o.weights + ": some edge of the graph has no weight");
  bool passed = false;
  Json rep = circulation_report(g, w, o, bit_length(w.max_abs()), passed);
  emit(o.out, rep, out);
  if (!o.out.empty()) {
    out << "verify: " << rep["cycles_total"].get<std::size_t>() << " cycles, "
        << (passed ? "pass" : "FAIL") << "\n";
  }
  if (!passed) print_witness(rep, err);
  return passed ? kExitPass : kExitVerification;
}

int cmd_match(const Options& o, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(o.graph);
  EdgeWeights mw = matching_weights(g, load_weights(o.weights));
  Json j;
  bool unique = true;
  if (o.maximum) {
    TieReport r = extract_min_max_matching(g, mw);
    j = {{"matching", matching_to_json(r.best)}, {"weight", r.weight.str()}, {"unique", r.unique}};
    if (!r.unique) j["tied_with"] = matching_to_json(r.other);
    unique = r.unique;
  } else {
    try {
      auto m = extract_min_pm(g, mw);
      j["matching"] = m ? matching_to_json(*m) : Json(nullptr);
      if (m) j["weight"] = matching_weight(*m, mw).str();
      j["unique"] = true;
    } catch (const VerificationFailure& e) {
      j = {{"matching", nullptr}, {"unique", false}, {"witness", Json::parse(e.witness())}};
      unique = false;
    }
  }
  emit(o.out, j, out);
  if (!unique) err << "minimum weight matching is not unique: " << j.dump() << "\n";
  return unique ? kExitPass : kExitVerification;
}

int cmd_paths(const Options& o, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(o.graph);
  WeightAssignment w = load_weights(o.weights);
  BigInt M = path_shift(g, w);
  PathReport r = unique_shortest_paths(g, w, M, o.cap);
  Json ties = Json::array();
  for (const PathTie& t : r.ties) {
    ties.push_back({{"s", t.s}, {"t", t.t},
                    {"first", cycle_to_json(Cycle{t.first})},
                    {"second", cycle_to_json(Cycle{t.second})}});
  }
  Json j{{"M", M.str()}, {"pairs", r.pairs}, {"paths", r.paths}, {"ties", ties},
         {"unique", r.unique()}};
  emit(o.out, j, out);
  if (!r.unique()) err << r.ties.size() << " ordered pairs with tied minimum paths\n";
  return r.unique() ? kExitPass : kExitVerification;
}

int cmd_dyn_update(const Options& o, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(o.graph);
  Json ins = read_json_file(o.insert);
  Json add = ins.is_array() ? ins : ins.value("insert", Json::array());
  Json del = ins.is_object() ? ins.value("delete", Json::array()) : Json::array();
  WeightAssignment w_old = load_weights(o.weights);

  std::set<EdgeId> removed;
  for (std::size_t i = 0; i < del.size(); ++i) {
    if (!del[i].is_number_integer() || !g.has_edge(del[i].get<int>())) {
      throw ParseError(o.insert + ": at delete[" + std::to_string(i) + "]: not an edge id");
    }
    removed.insert(del[i].get<int>());
  }
  Graph h;
  for (VertexId v : g.vertices()) h.add_vertex(v);
  for (const Edge& e : g.edges()) {
    if (!removed.count(e.id)) h.add_edge(e.id, e.u, e.v, e.tag);
  }
  std::vector<EdgeId> inserted;
  for (std::size_t i = 0; i < add.size(); ++i) {
    const std::string p = o.insert + ": at insert[" + std::to_string(i) + "]";
    if (!add[i].is_object() || !add[i].contains("u") || !add[i].contains("v")) {
      throw ParseError(p + ": expected {u, v} or {id, u, v}");
    }
    VertexId u = add[i]["u"].get<int>(), v = add[i]["v"].get<int>();
    EdgeId id = add[i].contains("id") ? add[i]["id"].get<int>() : h.next_edge_id();
    if (h.has_edge(id)) throw ParseError(p + ": edge id " + std::to_string(id) + " already used");
    try {
      h.add_edge(id, u, v);
    } catch (const InvalidGraph& e) {
      throw ParseError(p + ": " + e.what());
    }
    inserted.push_back(id);
  }
  if (g.bipartition()) h.set_bipartition(*g.bipartition());

  EdgePartition part = partition_edges(h, inserted);
  EdgeWeights old_und;
  if (o.undirected) {
    for (EdgeId e : part.fictitious) old_und[e] = w_old.forward(e);
  } else {
    old_und = old_matching_weights(h, part, w_old);
  }
  Json j;
  j["graph"] = graph_to_json(h);
  j["inserted"] = inserted;
  j["deleted"] = Json(std::vector<EdgeId>(removed.begin(), removed.end()));
  if (inserted.empty()) {
    j["family_size"] = 0;
    j["reweighted"] = false;
    j["weights"] = edge_weights_to_json(old_und);
    emit(o.out, j, out);
    if (!o.out.empty()) out << "deletion only: old weights reused\n";
    return kExitPass;
  }
  CandidateFamily fam(h, part, old_und, o.prime_bits);
  Selection s = select_isolating(fam, h);
  j["family_size"] = fam.size();
  j["stages"] = fam.stages();
  j["primes"] = fam.primes();
  j["reweighted"] = true;
  j["selected"] = {{"index", s.index},
                   {"examined", s.examined},
                   {"primes", s.candidate.primes},
                   {"B", s.candidate.B.str()},
                   {"B_final", s.candidate.B_final.str()}};
  j["weights"] = edge_weights_to_json(s.candidate.weights);
  emit(o.out, j, out);
  if (!o.out.empty()) {
    out << "selected candidate " << s.index << " of " << fam.size() << " after " << s.examined
        << " checks\n";
  }
  (void)err;
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nonzero circulation weights for clique-sums of planar and bounded treewidth graphs"};
  app.require_subcommand(1);
  Options o;

  auto graph_opt = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--graph", o.graph, "graph JSON")->check(CLI::ExistingFile);
    if (required) opt->required();
  };
  auto cap_opt = [&](CLI::App* c) {
    c->add_option("--cap", o.cap, "largest number of cycles/paths to enumerate");
  };

  auto* gen = app.add_subcommand("generate", "random clique-sum instance");
  gen->add_option("--seed", o.seed, "random seed");
  gen->add_option("--pieces", o.gen.pieces, "number of pieces");
  gen->add_option("--max-vertices", o.gen.max_vertices, "vertex budget");
  gen->add_flag("--bipartite", o.gen.bipartite, "bipartite pieces and sums");
  gen->add_option("--out", o.out, "graph output file");
  gen->add_option("--tree-out", o.tree_out, "ground-truth component tree output file");

  auto* dec = app.add_subcommand("decompose", "component tree of a biconnected graph");
  graph_opt(dec, true);
  dec->add_option("--width", o.width, "treewidth bound for c-type pieces");
  dec->add_option("--out", o.out, "component tree output file");

  auto* norm = app.add_subcommand("normalize", "apply the star gadgets to a component tree");
  norm->add_option("--tree", o.tree, "component tree JSON")->required()->check(CLI::ExistingFile);
  norm->add_flag("--no-facial-repair", o.no_facial_repair,
                 "fail on a non-facial virtual triangle instead of splitting there");
  norm->add_option("--out", o.out, "output file");

  auto* weigh = app.add_subcommand("weigh", "end-to-end weights with verification");
  graph_opt(weigh, true);
  weigh->add_option("--tree", o.tree, "use this component tree (biconnected input)")
      ->check(CLI::ExistingFile);
  weigh->add_option("--width", o.width, "treewidth bound for c-type pieces");
  weigh->add_flag("--no-facial-repair", o.no_facial_repair,
                  "fail on a non-facial virtual triangle instead of splitting there");
  weigh->add_flag("--no-verify", o.no_verify, "skip cycle enumeration");
  weigh->add_option("--out", o.out, "weight manifest output file");
  weigh->add_option("--report", o.report, "verification report output file");
  cap_opt(weigh);

  auto* ver = app.add_subcommand("verify", "exhaustive circulation check");
  graph_opt(ver, true);
  ver->add_option("--weights", o.weights, "weights or manifest JSON")
      ->required()
      ->check(CLI::ExistingFile);
  ver->add_flag("--isolation", o.isolation, "also audit perfect matching isolation");
  ver->add_option("--out", o.out, "report output file");
  cap_opt(ver);

  auto* match = app.add_subcommand("match", "minimum weight perfect matching");
  graph_opt(match, true);
  match->add_option("--weights", o.weights, "weights or manifest JSON")
      ->required()
      ->check(CLI::ExistingFile);
  match->add_flag("--maximum", o.maximum, "maximum matchings instead of perfect ones");
  match->add_option("--out", o.out, "output file");

  auto* paths = app.add_subcommand("paths", "unique minimum paths for all pairs");
  graph_opt(paths, true);
  paths->add_option("--weights", o.weights, "weights or manifest JSON")
      ->required()
      ->check(CLI::ExistingFile);
  paths->add_option("--out", o.out, "report output file");
  cap_opt(paths);

  auto* dyn = app.add_subcommand("dyn-update", "reweigh after edge insertions");
  graph_opt(dyn, true);
  dyn->add_option("--weights", o.weights, "old weights (skew-symmetric unless --undirected)")
      ->required()
      ->check(CLI::ExistingFile);
  dyn->add_option("--insert", o.insert, "inserted edges, or {insert, delete}")
      ->required()
      ->check(CLI::ExistingFile);
  dyn->add_flag("--undirected", o.undirected, "old weights are matching weights");
  dyn->add_option("--prime-bits", o.prime_bits, "prime bit budget (0 = default)");
  dyn->add_option("--out", o.out, "output file");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (name == "generate") return cmd_generate(o, out);
    if (name == "decompose") return cmd_decompose(o, out);
    if (name == "normalize") return cmd_normalize(o, out);
    if (name == "weigh") return cmd_weigh(o, out, err);
    if (name == "verify") return cmd_verify(o, out, err);
    if (name == "match") return cmd_match(o, out, err);
    if (name == "paths") return cmd_paths(o, out, err);
    return cmd_dyn_update(o, out, err);
  } catch (const VerificationFailure& e) {
    err << name << ": verification failed: " << e.what() << "\n";
    if (!e.witness().empty()) err << "witness: " << e.witness() << "\n";
    return kExitVerification;
  } catch (const StructuralError& e) {
    err << name << ": structural error: " << e.what() << "\n";
    if (!e.witness().empty()) err << "witness: " << e.witness() << "\n";
    return kExitStructural;
  } catch (const NotDecomposable& e) {
    err << name << ": not decomposable: " << e.what() << "\n";
    if (!e.witness().empty()) err << "witness: " << e.witness() << "\n";
    return kExitInput;
  } catch (const ParseError& e) {
    err << name << ": parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CapExceeded& e) {
    err << name << ": " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    err << name << ": precondition failed: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvalidGraph& e) {
    err << name << ": invalid graph: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    err << name << ": malformed input: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << name << ": internal error: " << e.what() << "\n";
    return kExitStructural;
  }
}

}  // namespace nzc
