#pragma once

// One-to-all distance engine. Every solver touches the graph only through
// dist_from, and every call counts as one query.

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eccert/graph.hpp"

namespace eccert {

enum class Direction { kForward, kBackward };

// Thrown when a sweep leaves some node unreached: the graph was not
// restricted to its core.
class UnreachableError : public std::runtime_error {
 public:
  UnreachableError(NodeId source, NodeId node)
      : std::runtime_error("node " + std::to_string(node) + " unreachable from " +
                           std::to_string(source) + " (graph not core-restricted)"),
        source_(source),
        node_(node) {}
  NodeId source() const { return source_; }
  NodeId node() const { return node_; }

 private:
  NodeId source_;
  NodeId node_;
};

struct DistanceRow {
  NodeId source = kNoNode;
  Direction direction = Direction::kForward;
  // Forward: dist[v] = d(source, v). Backward: dist[v] = d(v, source).
  std::vector<Dist> dist;
  Dist ecc = 0;
  // Furthest node of highest rank.
  NodeId antipode = kNoNode;
};

inline Dist ecc_of(const DistanceRow& row) { return row.ecc; }
inline NodeId antipode_of(const DistanceRow& row) { return row.antipode; }

class QueryCounter {
 public:
  QueryCounter() = default;
  QueryCounter(const QueryCounter& other) : sweeps_(other.sweeps()) {}
  QueryCounter& operator=(const QueryCounter& other) {
    sweeps_.store(other.sweeps(), std::memory_order_relaxed);
    return *this;
  }

  void add(std::uint64_t k = 1) { sweeps_.fetch_add(k, std::memory_order_relaxed); }
  std::uint64_t sweeps() const { return sweeps_.load(std::memory_order_relaxed); }
  void reset() { sweeps_.store(0, std::memory_order_relaxed); }

 private:
  std::atomic<std::uint64_t> sweeps_{0};
};

// Reusable per-thread work space (heap and queue storage).
class SweepScratch {
 public:
  std::vector<std::pair<Dist, NodeId>> heap;
  std::vector<NodeId> queue;
  // Used by ball(): kInfinity everywhere between calls.
  std::vector<Dist> ball_dist;
};

// Raw single-source distances, kInfinity for unreached nodes. Not counted.
void shortest_distances(const Graph& g, NodeId source, Direction dir,
                        std::vector<Dist>& dist, SweepScratch& scratch);

// Counted sweep. Backward on an undirected graph is the forward sweep.
// Throws UnreachableError if some node is not reached and
// std::out_of_range on a bad source.
void dist_from(const Graph& g, NodeId source, Direction dir, const Ranking& ranking,
               QueryCounter& counter, DistanceRow& row, SweepScratch& scratch);
DistanceRow dist_from(const Graph& g, NodeId source, Direction dir,
                      const Ranking& ranking, QueryCounter& counter);

// Nodes v with d(center, v) <= radius (forward) or d(v, center) <= radius
// (backward), in increasing id order. Truncated traversal, not counted.
std::vector<NodeId> ball(const Graph& g, NodeId center, Dist radius, Direction dir,
                         SweepScratch& scratch);

// Bundles a graph, a ranking and a counter for the solvers.
class DistanceEngine {
 public:
  DistanceEngine(const Graph& g, const Ranking& ranking)
      : g_(&g), ranking_(&ranking) {
    if (ranking.size() != g.num_nodes()) {
      throw std::invalid_argument("ranking size does not match graph");
    }
  }

  const Graph& graph() const { return *g_; }
  const Ranking& ranking() const { return *ranking_; }
  QueryCounter& counter() { return counter_; }
  std::uint64_t sweeps() const { return counter_.sweeps(); }

  DistanceRow row(NodeId source, Direction dir) {
    DistanceRow r;
    dist_from(*g_, source, dir, *ranking_, counter_, r, scratch_);
    return r;
  }
  DistanceRow forward(NodeId source) { return row(source, Direction::kForward); }
  // Row of d(v, source); the forward row when the graph is undirected.
  DistanceRow backward(NodeId source) { return row(source, Direction::kBackward); }

 private:
  const Graph* g_;
  const Ranking* ranking_;
  QueryCounter counter_;
  SweepScratch scratch_;
};

}  // namespace eccert
