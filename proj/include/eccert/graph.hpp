#pragma once

// Immutable compressed-sparse-row graph with integer arc weights.
//
// Undirected graphs store every edge as two arcs (one per direction) and
// share the forward adjacency for backward traversal. Directed graphs keep a
// transposed copy so that "distance to x from every node" is one traversal.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace eccert {

using NodeId = std::uint32_t;
using Dist = std::int64_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

// Sentinel for "unbounded". Strictly larger than any sum of two distances
// in a graph that fits in memory, and still safe to add a distance to.
inline constexpr Dist kInfinity = std::numeric_limits<Dist>::max() / 4;

struct Arc {
  NodeId source = 0;
  NodeId target = 0;
  Dist weight = 1;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

class Graph {
 public:
  Graph() = default;

  // Builds a graph on nodes 0..n-1. For undirected graphs each input arc is
  // one edge and is stored in both directions (a self-loop is stored once).
  // Throws std::invalid_argument on out-of-range ids or negative weights.
  static Graph from_arcs(NodeId n, bool directed, std::vector<Arc> arcs);

  NodeId num_nodes() const { return n_; }
  // Number of stored arcs, i.e. the sum of all adjacency list lengths.
  std::size_t num_arcs() const { return targets_.size(); }
  bool directed() const { return directed_; }
  // True iff every stored weight is exactly 1 (BFS is then exact).
  bool unit_weights() const { return unit_weights_; }
  Dist max_weight() const { return max_weight_; }
  bool has_zero_weight() const { return has_zero_weight_; }

  std::span<const NodeId> out_neighbors(NodeId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::span<const Dist> out_weights(NodeId v) const {
    return {weights_.data() + offsets_[v], weights_.data() + offsets_[v + 1]};
  }
  std::span<const NodeId> in_neighbors(NodeId v) const {
    if (!directed_) return out_neighbors(v);
    return {rev_targets_.data() + rev_offsets_[v],
            rev_targets_.data() + rev_offsets_[v + 1]};
  }
  std::span<const Dist> in_weights(NodeId v) const {
    if (!directed_) return out_weights(v);
    return {rev_weights_.data() + rev_offsets_[v],
            rev_weights_.data() + rev_offsets_[v + 1]};
  }

  // Stored arcs in CSR order (sorted by source, target, weight).
  std::vector<Arc> arcs() const;

  // Lowercase hex SHA-256 over a canonical encoding of (n, directed, arcs).
  // Independent of input arc order.
  std::string content_hash() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  NodeId n_ = 0;
  bool directed_ = false;
  bool unit_weights_ = true;
  bool has_zero_weight_ = false;
  Dist max_weight_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> targets_;
  std::vector<Dist> weights_;
  std::vector<std::size_t> rev_offsets_;
  std::vector<NodeId> rev_targets_;
  std::vector<Dist> rev_weights_;
};

// Transposed graph. Undirected graphs are returned unchanged.
Graph reverse(const Graph& g);

struct CoreRestriction {
  Graph graph;
  // old id -> new id, kNoNode for dropped nodes.
  std::vector<NodeId> old_to_new;
  // new id -> old id.
  std::vector<NodeId> new_to_old;

  double kept_fraction() const {
    return old_to_new.empty()
               ? 1.0
               : static_cast<double>(new_to_old.size()) / old_to_new.size();
  }
};

// Largest connected (undirected) or strongly connected (directed) component.
// Ties between equally large components go to the one holding the smallest
// node id. New ids preserve the relative order of old ids.
// Throws std::invalid_argument on an empty graph.
CoreRestriction restrict_to_core(const Graph& g);

// All nodes, ordered so that a node comes after every node it reaches through
// zero-weight arcs alone, unless the two lie on a common zero-weight cycle.
// Ties go to the smaller id.
std::vector<NodeId> zero_arc_sink_order(const Graph& g);

// Node ranking used to break ties between equally distant nodes: the
// antipode of u is its furthest node of highest rank.
class Ranking {
 public:
  Ranking() = default;

  static Ranking identity(NodeId n);
  // Seeded uniformly random permutation (Fisher-Yates over mt19937_64).
  static Ranking random(NodeId n, std::uint64_t seed);
  // Throws std::invalid_argument unless rank is a permutation of 0..n-1.
  static Ranking from_ranks(std::vector<NodeId> rank);

  NodeId size() const { return static_cast<NodeId>(rank_.size()); }
  NodeId rank(NodeId v) const { return rank_[v]; }
  const std::vector<NodeId>& ranks() const { return rank_; }
  // "id", the decimal seed of a random ranking, or "custom".
  const std::string& label() const { return label_; }

 private:
  std::vector<NodeId> rank_;
  std::string label_ = "id";
};

}  // namespace eccert
