#pragma once

#include <string>

#include "json.hpp"
#include "nzc/auxtree.hpp"
#include "nzc/component_tree.hpp"
#include "nzc/dynamic.hpp"
#include "nzc/gprime.hpp"
#include "nzc/isolation.hpp"
#include "nzc/normalizer.hpp"
#include "nzc/pullback.hpp"
#include "nzc/treedec.hpp"
#include "nzc/verify.hpp"

namespace nzc {

using Json = nlohmann::ordered_json;

// Readers throw ParseError naming the offending JSON path.

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// {"edge_id": "signed decimal"}, forward orientation.
Json weights_to_json(const WeightAssignment& w);
WeightAssignment weights_from_json(const Json& j);
Json edge_weights_to_json(const EdgeWeights& w);
EdgeWeights edge_weights_from_json(const Json& j);

Json treedec_to_json(const TreeDecomp& td);
TreeDecomp treedec_from_json(const Json& j);

Json component_tree_to_json(const ComponentTree& t);
ComponentTree component_tree_from_json(const Json& j);

Json gadget_map_to_json(const GadgetMap& m);
Json gprime_to_json(const GPrime& gp);
Json aux_tree_to_json(const AuxTree& a);
Json cycle_to_json(const Cycle& c);
Json matching_to_json(const Matching& m);

/// {K, B_shift, m, weights, max_bits, provenance: [per block artifact hashes]}.
Json manifest_to_json(const PipelineResult& r);

/// Checks the keys and value types of a weight manifest.
void validate_manifest(const Json& j);

/// FNV-1a of the compact dump, 16 hex digits.
std::string artifact_hash(const Json& j);

Json read_json_file(const std::string& path);
/// Two-space indented dump with a trailing newline.
void write_json_file(const std::string& path, const Json& j);
std::string to_text(const Json& j);

}  // namespace nzc
