#include "eccert/traversal.hpp"

#include <algorithm>
#include <functional>

namespace eccert {
namespace {

template <typename Nbrs, typename Wts>
void run(const Graph& g, NodeId source, Dist limit, std::vector<Dist>& dist,
         SweepScratch& scratch, Nbrs nbrs, Wts wts) {
  const NodeId n = g.num_nodes();
  dist.assign(n, kInfinity);
  dist[source] = 0;
  if (g.unit_weights()) {
    auto& q = scratch.queue;
    q.clear();
    q.push_back(source);
    for (std::size_t head = 0; head < q.size(); ++head) {
      const NodeId u = q[head];
      const Dist du = dist[u] + 1;
      if (du > limit) continue;
      for (NodeId v : nbrs(u)) {
        if (dist[v] == kInfinity) {
          dist[v] = du;
          q.push_back(v);
        }
      }
    }
    return;
  }
  auto& heap = scratch.heap;
  heap.clear();
  const auto cmp = std::greater<std::pair<Dist, NodeId>>();
  heap.emplace_back(0, source);
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), cmp);
    const auto [du, u] = heap.back();
    heap.pop_back();
    if (du != dist[u]) continue;
    const auto vs = nbrs(u);
    const auto ws = wts(u);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const Dist dv = du + ws[i];
      if (dv > limit) continue;
      if (dv < dist[vs[i]]) {
        dist[vs[i]] = dv;
        heap.emplace_back(dv, vs[i]);
        std::push_heap(heap.begin(), heap.end(), cmp);
      }
    }
  }
}

void traverse(const Graph& g, NodeId source, Direction dir, Dist limit,
              std::vector<Dist>& dist, SweepScratch& scratch) {
  if (source >= g.num_nodes()) throw std::out_of_range("source node out of range");
  if (dir == Direction::kBackward && g.directed()) {
    run(g, source, limit, dist, scratch, [&g](NodeId u) { return g.in_neighbors(u); },
        [&g](NodeId u) { return g.in_weights(u); });
  } else {
    run(g, source, limit, dist, scratch, [&g](NodeId u) { return g.out_neighbors(u); },
        [&g](NodeId u) { return g.out_weights(u); });
  }
}

}  // namespace

void shortest_distances(const Graph& g, NodeId source, Direction dir,
                        std::vector<Dist>& dist, SweepScratch& scratch) {
  traverse(g, source, dir, kInfinity, dist, scratch);
}

void dist_from(const Graph& g, NodeId source, Direction dir, const Ranking& ranking,
               QueryCounter& counter, DistanceRow& row, SweepScratch& scratch) {
  traverse(g, source, dir, kInfinity, row.dist, scratch);
  counter.add();
  row.source = source;
  row.direction = g.directed() ? dir : Direction::kForward;
  row.ecc = 0;
  row.antipode = source;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const Dist d = row.dist[v];
    if (d == kInfinity) throw UnreachableError(source, v);
    if (d > row.ecc || (d == row.ecc && ranking.rank(v) > ranking.rank(row.antipode))) {
      row.ecc = d;
      row.antipode = v;
    }
  }
}

DistanceRow dist_from(const Graph& g, NodeId source, Direction dir,
                      const Ranking& ranking, QueryCounter& counter) {
  DistanceRow row;
  SweepScratch scratch;
  dist_from(g, source, dir, ranking, counter, row, scratch);
  return row;
}

std::vector<NodeId> ball(const Graph& g, NodeId center, Dist radius, Direction dir,
                         SweepScratch& scratch) {
  if (center >= g.num_nodes()) throw std::out_of_range("center node out of range");
  std::vector<NodeId> out;
  if (radius < 0) return out;
  auto& dist = scratch.ball_dist;
  if (dist.size() != g.num_nodes()) dist.assign(g.num_nodes(), kInfinity);
  const bool back = dir == Direction::kBackward && g.directed();
  auto& heap = scratch.heap;
  heap.clear();
  const auto cmp = std::greater<std::pair<Dist, NodeId>>();
  dist[center] = 0;
  out.push_back(center);
  heap.emplace_back(0, center);
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), cmp);
    const auto [du, u] = heap.back();
    heap.pop_back();
    if (du != dist[u]) continue;
    const auto vs = back ? g.in_neighbors(u) : g.out_neighbors(u);
    const auto ws = back ? g.in_weights(u) : g.out_weights(u);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const Dist dv = du + ws[i];
      if (dv > radius || dv >= dist[vs[i]]) continue;
      if (dist[vs[i]] == kInfinity) out.push_back(vs[i]);
      dist[vs[i]] = dv;
      heap.emplace_back(dv, vs[i]);
      std::push_heap(heap.begin(), heap.end(), cmp);
    }
  }
  for (NodeId v : out) dist[v] = kInfinity;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace eccert
