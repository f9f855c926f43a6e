#include "eccert/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <utility>

namespace eccert {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: zero bound");
  // Rejection sampling keeps the draw unbiased and implementation-independent.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

namespace {

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[uniform_below(rng, i)]);
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// Appends a path of `length` new nodes hanging from `from`; returns its tip.
NodeId add_path(std::vector<Arc>& arcs, NodeId& next, NodeId from, NodeId length) {
  NodeId prev = from;
  for (NodeId i = 0; i < length; ++i) {
    arcs.push_back({prev, next});
    prev = next++;
  }
  return prev;
}

// Joins `from` and `to` by a path with `internal` new nodes.
void add_bridge(std::vector<Arc>& arcs, NodeId& next, NodeId from, NodeId to,
                NodeId internal) {
  const NodeId last = add_path(arcs, next, from, internal);
  arcs.push_back({last, to});
}

std::vector<NodeId> tail_lengths(NodeId q) {
  const NodeId total = 6 * q + 2;
  std::vector<NodeId> len(5, total / 5);
  for (NodeId i = 0; i < total % 5; ++i) ++len[i];
  return len;
}

}  // namespace

Graph gen_path(NodeId n) {
  require(n >= 1, "path needs at least 1 node");
  std::vector<Arc> arcs;
  for (NodeId v = 1; v < n; ++v) arcs.push_back({v - 1, v});
  return Graph::from_arcs(n, false, std::move(arcs));
}

Graph gen_cycle(NodeId n) {
  require(n >= 3, "cycle needs at least 3 nodes");
  std::vector<Arc> arcs;
  for (NodeId v = 0; v < n; ++v) arcs.push_back({v, (v + 1) % n});
  return Graph::from_arcs(n, false, std::move(arcs));
}

Graph gen_star(NodeId k) {
  require(k >= 1, "star needs at least 1 leaf");
  std::vector<Arc> arcs;
  for (NodeId v = 1; v <= k; ++v) arcs.push_back({0, v});
  return Graph::from_arcs(k + 1, false, std::move(arcs));
}

Graph gen_complete(NodeId n) {
  require(n >= 1, "complete graph needs at least 1 node");
  std::vector<Arc> arcs;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) arcs.push_back({u, v});
  }
  return Graph::from_arcs(n, false, std::move(arcs));
}

namespace {

std::vector<Arc> grid_edges(NodeId k) {
  std::vector<Arc> arcs;
  for (NodeId r = 0; r < k; ++r) {
    for (NodeId c = 0; c < k; ++c) {
      const NodeId v = r * k + c;
      if (c + 1 < k) arcs.push_back({v, v + 1});
      if (r + 1 < k) arcs.push_back({v, v + k});
    }
  }
  return arcs;
}

}  // namespace

Graph gen_grid(NodeId k, double deletion_fraction, std::uint64_t seed) {
  require(k >= 2, "grid needs k >= 2");
  require(deletion_fraction >= 0 && deletion_fraction < 1, "deletion fraction must be in [0,1)");
  std::vector<Arc> arcs = grid_edges(k);
  const auto drop = static_cast<std::size_t>(std::llround(deletion_fraction * arcs.size()));
  if (drop > 0) {
    std::mt19937_64 rng(seed);
    shuffle(arcs, rng);
    arcs.erase(arcs.begin(), arcs.begin() + static_cast<std::ptrdiff_t>(drop));
    std::sort(arcs.begin(), arcs.end());
  }
  return Graph::from_arcs(k * k, false, std::move(arcs));
}

Graph gen_weighted_directed_grid(NodeId k, std::uint64_t seed) {
  require(k >= 2, "grid needs k >= 2");
  std::vector<Arc> arcs = grid_edges(k);
  std::mt19937_64 rng(seed);
  for (Arc& a : arcs) {
    if (uniform_below(rng, 2) == 1) std::swap(a.source, a.target);
    a.weight = static_cast<Dist>(uniform_below(rng, 10));
  }
  return Graph::from_arcs(k * k, true, std::move(arcs));
}

Graph gen_bowtie(NodeId p, NodeId q) {
  require(p >= 2, "bowtie needs p >= 2");
  require(q >= 6, "bowtie needs q >= 6");
  const std::uint64_t n64 = 2ULL * p * q + 10ULL * q + 2;
  require(n64 < kNoNode, "bowtie too large");
  std::vector<Arc> arcs;
  arcs.reserve(n64);
  const NodeId c = 0, a = 1, b = 2;
  NodeId next = 3;
  add_bridge(arcs, next, c, a, q);
  add_bridge(arcs, next, c, b, q);
  add_bridge(arcs, next, a, b, 2 * q - 3);
  for (NodeId len : tail_lengths(q)) add_path(arcs, next, c, len);
  for (NodeId i = 0; i < p; ++i) add_path(arcs, next, a, q);
  for (NodeId i = 0; i < p; ++i) add_path(arcs, next, b, q);
  return Graph::from_arcs(next, false, std::move(arcs));
}

BowtieLayout bowtie_layout(NodeId p, NodeId q) {
  require(p >= 2 && q >= 6, "bowtie needs p >= 2 and q >= 6");
  BowtieLayout out;
  NodeId next = 3 + q + q + (2 * q - 3);
  for (NodeId len : tail_lengths(q)) {
    next += len;
    out.tail_tips.push_back(next - 1);
  }
  for (NodeId i = 0; i < p; ++i) {
    next += q;
    out.tips_a.push_back(next - 1);
  }
  for (NodeId i = 0; i < p; ++i) {
    next += q;
    out.tips_b.push_back(next - 1);
  }
  return out;
}

Graph gen_powerlaw(NodeId n, double exponent, std::uint64_t seed) {
  require(n >= 10, "powerlaw needs n >= 10");
  require(exponent > 1, "powerlaw exponent must exceed 1");
  const auto kmax = std::max<NodeId>(1, static_cast<NodeId>(std::sqrt(static_cast<double>(n))));
  std::vector<double> cdf(kmax);
  double acc = 0;
  for (NodeId k = 1; k <= kmax; ++k) {
    acc += std::pow(static_cast<double>(k), -exponent);
    cdf[k - 1] = acc;
  }
  for (double& x : cdf) x /= acc;

  std::mt19937_64 rng(seed);
  std::vector<NodeId> degree(n);
  constexpr int kRetries = 64;
  for (int attempt = 0;; ++attempt) {
    std::uint64_t sum = 0;
    for (NodeId v = 0; v < n; ++v) {
      const double x = uniform01(rng);
      degree[v] = static_cast<NodeId>(std::lower_bound(cdf.begin(), cdf.end(), x) - cdf.begin()) + 1;
      degree[v] = std::min(degree[v], kmax);
      sum += degree[v];
    }
    if (sum % 2 == 0) break;
    if (attempt + 1 == kRetries) {
      throw std::runtime_error("powerlaw: no even degree sum after bounded retries");
    }
  }
  std::vector<NodeId> stubs;
  for (NodeId v = 0; v < n; ++v) stubs.insert(stubs.end(), degree[v], v);
  shuffle(stubs, rng);
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    NodeId u = stubs[i], v = stubs[i + 1];
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    arcs.push_back({u, v});
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return Graph::from_arcs(n, false, std::move(arcs));
}

Graph gen_udg(NodeId n, double target_avg_degree, std::uint64_t seed) {
  require(n >= 10, "udg needs n >= 10");
  require(target_avg_degree > 0, "udg target degree must be positive");
  const double side = std::sqrt(n * M_PI / target_avg_degree);
  std::mt19937_64 rng(seed);
  std::vector<double> x(n), y(n);
  for (NodeId v = 0; v < n; ++v) {
    x[v] = uniform01(rng) * side;
    y[v] = uniform01(rng) * side;
  }
  const auto cells = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(side)));
  std::vector<std::vector<NodeId>> bucket(static_cast<std::size_t>(cells * cells));
  const auto cell_of = [cells](double t) {
    return std::min<std::int64_t>(cells - 1, static_cast<std::int64_t>(t));
  };
  for (NodeId v = 0; v < n; ++v) bucket[cell_of(x[v]) * cells + cell_of(y[v])].push_back(v);
  std::vector<Arc> arcs;
  for (NodeId u = 0; u < n; ++u) {
    const std::int64_t cx = cell_of(x[u]), cy = cell_of(y[u]);
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        const std::int64_t bx = cx + dx, by = cy + dy;
        if (bx < 0 || by < 0 || bx >= cells || by >= cells) continue;
        for (NodeId v : bucket[bx * cells + by]) {
          if (v <= u) continue;
          const double ddx = x[u] - x[v], ddy = y[u] - y[v];
          if (ddx * ddx + ddy * ddy <= 1.0) arcs.push_back({u, v});
        }
      }
    }
  }
  std::sort(arcs.begin(), arcs.end());
  return Graph::from_arcs(n, false, std::move(arcs));
}

Graph gen_ktree(NodeId n, NodeId k, std::uint64_t seed) {
  require(k >= 1, "k-tree needs k >= 1");
  require(n >= k + 1, "k-tree needs n >= k + 1");
  std::vector<Arc> arcs;
  for (NodeId u = 0; u <= k; ++u) {
    for (NodeId v = u + 1; v <= k; ++v) arcs.push_back({u, v});
  }
  std::vector<std::vector<NodeId>> cliques;
  for (NodeId skip = 0; skip <= k; ++skip) {
    std::vector<NodeId> cl;
    for (NodeId u = 0; u <= k; ++u) {
      if (u != skip) cl.push_back(u);
    }
    cliques.push_back(std::move(cl));
  }
  std::mt19937_64 rng(seed);
  for (NodeId v = k + 1; v < n; ++v) {
    const std::vector<NodeId> base = cliques[uniform_below(rng, cliques.size())];
    for (NodeId u : base) arcs.push_back({u, v});
    for (std::size_t i = 0; i < base.size(); ++i) {
      std::vector<NodeId> cl = base;
      cl[i] = v;
      cliques.push_back(std::move(cl));
    }
  }
  return Graph::from_arcs(n, false, std::move(arcs));
}

Graph gen_interval(NodeId n, double max_length, std::uint64_t seed) {
  require(n >= 1, "interval graph needs n >= 1");
  require(max_length >= 0.5, "interval max length must be at least 0.5");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<double, double>> iv(n);
  for (NodeId v = 0; v < n; ++v) {
    const double left = uniform01(rng) * n;
    const double len = 0.5 + uniform01(rng) * (max_length - 0.5);
    iv[v] = {left, left + len};
  }
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::sort(order.begin(), order.end(), [&iv](NodeId a, NodeId b) {
    return iv[a].first < iv[b].first || (iv[a].first == iv[b].first && a < b);
  });
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < n; ++i) {
    const NodeId u = order[i];
    for (std::size_t j = i + 1; j < n && iv[order[j]].first <= iv[u].second; ++j) {
      const NodeId v = order[j];
      arcs.push_back({std::min(u, v), std::max(u, v)});
    }
  }
  std::sort(arcs.begin(), arcs.end());
  return Graph::from_arcs(n, false, std::move(arcs));
}

Graph gen_erdos_renyi(NodeId n, double p, std::uint64_t seed) {
  require(p >= 0 && p <= 1, "edge probability must be in [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<Arc> arcs;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (uniform01(rng) < p) arcs.push_back({u, v});
    }
  }
  return Graph::from_arcs(n, false, std::move(arcs));
}

Graph gen_random_tree(NodeId n, std::uint64_t seed) {
  require(n >= 1, "tree needs n >= 1");
  if (n == 1) return Graph::from_arcs(1, false, {});
  if (n == 2) return Graph::from_arcs(2, false, {{0, 1}});
  std::mt19937_64 rng(seed);
  std::vector<NodeId> code(n - 2);
  for (NodeId& x : code) x = static_cast<NodeId>(uniform_below(rng, n));
  std::vector<NodeId> degree(n, 1);
  for (NodeId x : code) ++degree[x];
  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> leaves;
  for (NodeId v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Arc> arcs;
  for (NodeId x : code) {
    const NodeId leaf = leaves.top();
    leaves.pop();
    arcs.push_back({std::min(leaf, x), std::max(leaf, x)});
    if (--degree[x] == 1) leaves.push(x);
  }
  const NodeId u = leaves.top();
  leaves.pop();
  const NodeId v = leaves.top();
  arcs.push_back({u, v});
  return Graph::from_arcs(n, false, std::move(arcs));
}

Graph gen_clique_staircase(NodeId k) {
  require(k >= 2, "staircase needs k >= 2");
  std::vector<Arc> arcs;
  for (NodeId i = 0; i < k; ++i) {
    for (NodeId j = i + 1; j < k; ++j) arcs.push_back({i, j});
    for (NodeId j = 0; j <= i; ++j) arcs.push_back({i, k + j});
  }
  return Graph::from_arcs(2 * k, false, std::move(arcs));
}

}  // namespace eccert
