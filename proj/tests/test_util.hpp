#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eccert/generators.hpp"
#include "eccert/graph.hpp"
#include "eccert/io.hpp"

namespace eccert::testing {

inline Graph edges(const std::string& text) { return parse_edge_list(text); }

inline Graph core(const Graph& g) { return restrict_to_core(g).graph; }

struct Instance {
  std::string label;
  Graph graph;
  bool chordal = false;
};

// Mixed corpus of small core-restricted graphs: ER, grids, trees,
// weighted digraph grids and chordal graphs.
inline std::vector<Instance> small_corpus(std::uint64_t seed, int per_family) {
  std::vector<Instance> out;
  const double probs[] = {0.05, 0.1, 0.3};
  for (int i = 0; i < per_family; ++i) {
    const std::uint64_t s = seed * 1000 + static_cast<std::uint64_t>(i);
    const NodeId n_er = 5 + static_cast<NodeId>((s * 7) % 56);
    out.push_back({"er" + std::to_string(i), core(gen_erdos_renyi(n_er, probs[i % 3], s))});
    const NodeId k = 2 + static_cast<NodeId>(i % 7);
    out.push_back({"grid" + std::to_string(i), core(gen_grid(k, (i % 2) * 0.15, s))});
    out.push_back({"tree" + std::to_string(i),
                   gen_random_tree(2 + static_cast<NodeId>((s * 13) % 199), s)});
    out.push_back({"wgrid" + std::to_string(i),
                   core(gen_weighted_directed_grid(2 + static_cast<NodeId>(i % 19), s))});
    Graph ch = (i % 2 == 0)
                   ? gen_ktree(4 + static_cast<NodeId>((s * 3) % 47), 1 + static_cast<NodeId>(i % 4), s)
                   : core(gen_interval(4 + static_cast<NodeId>((s * 5) % 47), 3.0, s));
    out.push_back({"chordal" + std::to_string(i), std::move(ch), true});
  }
  return out;
}

}  // namespace eccert::testing
