#include "nzc/auxtree.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "nzc/errors.hpp"

namespace nzc {

std::vector<int> AuxTree::subtree(int b) const {
  std::vector<int> out{b};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int c : children[out[i]]) out.push_back(c);
  }
  return out;
}

bool AuxTree::is_ancestor(int a, int b) const {
  for (int x = b; x >= 0; x = parent[x]) {
    if (x == a) return true;
  }
  return false;
}

AuxTree build_aux_tree(const TreeDecomp& tprime) {
  const int n = static_cast<int>(tprime.bags.size());
  if (n == 0) throw PreconditionError("empty tree decomposition");
  auto adj = tprime.adjacency();
  AuxTree a;
  a.parent.assign(n, -1);
  a.children.assign(n, {});
  a.height.assign(n, 0);
  a.leaves.assign(n, 0);
  a.attached_at.assign(n, {});
  a.attach_bag.assign(n, -1);
  std::vector<char> removed(n, 0);

  auto component = [&](int s) {
    std::vector<int> comp{s};
    std::set<int> seen{s};
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (int y : adj[comp[i]]) {
        if (!removed[y] && seen.insert(y).second) comp.push_back(y);
      }
    }
    return comp;
  };
  auto centroid = [&](const std::vector<int>& comp) {
    std::set<int> in(comp.begin(), comp.end());
    int best = -1;
    std::size_t best_size = comp.size() + 1;
    for (int c : comp) {
      removed[c] = 1;
      std::size_t worst = 0;
      for (int y : adj[c]) {
        if (!removed[y]) worst = std::max(worst, component(y).size());
      }
      removed[c] = 0;
      if (worst < best_size || (worst == best_size && c < best)) {
        best = c;
        best_size = worst;
      }
    }
    return best;
  };

  std::function<int(int, int)> build = [&](int start, int up) {
    int c = centroid(component(start));
    a.parent[c] = up;
    removed[c] = 1;
    std::vector<int> nbrs = adj[c];
    std::sort(nbrs.begin(), nbrs.end());
    for (int y : nbrs) {
      if (removed[y]) continue;
      int child = build(y, c);
      a.children[c].push_back(child);
      a.attach_bag[child] = y;
      const auto& bc = tprime.bags[c].vertices;
      const auto& by = tprime.bags[y].vertices;
      std::set_intersection(bc.begin(), bc.end(), by.begin(), by.end(),
                            std::back_inserter(a.attached_at[child]));
    }
    return c;
  };
  a.root = build(tprime.root >= 0 ? tprime.root : 0, -1);

  std::function<int(int)> longest = [&](int b) {
    int best = 0;
    for (int c : a.children[b]) best = std::max(best, longest(c));
    return best + 1;
  };
  std::function<long long(int, int)> fill = [&](int b, int h) {
    a.height[b] = h;
    long long l = a.children[b].empty() ? 1 : 0;
    for (int c : a.children[b]) l += fill(c, h - 1);
    return a.leaves[b] = l;
  };
  fill(a.root, longest(a.root));
  return a;
}

std::pair<int, long long> subtree_stats(const AuxTree& a, int b) {
  if (b < 0 || b >= static_cast<int>(a.height.size())) {
    throw PreconditionError("unknown bag " + std::to_string(b));
  }
  return {a.height[b], a.leaves[b]};
}

std::string check_ancestor_property(const TreeDecomp& tprime, const AuxTree& a, int max_bags) {
  const int n = static_cast<int>(tprime.bags.size());
  if (n > max_bags) return "";
  auto adj = tprime.adjacency();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int first = __builtin_ctz(mask);
    unsigned seen = 1u << first;
    std::vector<int> stack{first};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x]) {
        if ((mask >> y & 1) && !(seen >> y & 1)) {
          seen |= 1u << y;
          stack.push_back(y);
        }
      }
    }
    if (seen != mask) continue;
    bool ok = false;
    for (int b = 0; b < n && !ok; ++b) {
      if (!(mask >> b & 1)) continue;
      ok = true;
      for (int c = 0; c < n && ok; ++c) {
        if ((mask >> c & 1) && !a.is_ancestor(b, c)) ok = false;
      }
    }
    if (!ok) return "connected bag set " + std::to_string(mask) + " has no common ancestor";
  }
  return "";
}

}  // namespace nzc
