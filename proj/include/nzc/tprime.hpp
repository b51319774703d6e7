#pragma once

#include "nzc/component_tree.hpp"
#include "nzc/treedec.hpp"

namespace nzc {

/// Hybrid decomposition of the glued graph: one bag per p-type node and the
/// decomposition bags of every c-type node. A link is realised by joining,
/// on each side, the p-type bag or the c-type bag holding the shared set
/// that is closest to that node's decomposition root. Rooted at the bag of
/// the tree's root node.
TreeDecomp build_tprime(const ComponentTree& t);

}  // namespace nzc
