#include "eccert/graph.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <memory>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>

namespace eccert {
namespace {

// CSR arrays sorted by (source, target, weight).
void build_csr(NodeId n, std::vector<Arc>& arcs, std::vector<std::size_t>& offsets,
               std::vector<NodeId>& targets, std::vector<Dist>& weights) {
  std::sort(arcs.begin(), arcs.end());
  offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Arc& a : arcs) ++offsets[a.source + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  targets.resize(arcs.size());
  weights.resize(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    targets[i] = arcs[i].target;
    weights[i] = arcs[i].weight;
  }
}

void append_u64(std::vector<unsigned char>& buf, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) buf.push_back(static_cast<unsigned char>(x >> (8 * i)));
}

}  // namespace

Graph Graph::from_arcs(NodeId n, bool directed, std::vector<Arc> arcs) {
  Graph g;
  g.n_ = n;
  g.directed_ = directed;
  for (const Arc& a : arcs) {
    if (a.source >= n || a.target >= n) {
      throw std::invalid_argument("arc endpoint out of range");
    }
    if (a.weight < 0) throw std::invalid_argument("negative arc weight");
  }
  if (!directed) {
    const std::size_t m = arcs.size();
    arcs.reserve(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
      const Arc a = arcs[i];
      if (a.source != a.target) arcs.push_back({a.target, a.source, a.weight});
    }
  }
  for (const Arc& a : arcs) {
    g.max_weight_ = std::max(g.max_weight_, a.weight);
    if (a.weight != 1) g.unit_weights_ = false;
    if (a.weight == 0) g.has_zero_weight_ = true;
  }
  if (directed) {
    std::vector<Arc> rev;
    rev.reserve(arcs.size());
    for (const Arc& a : arcs) rev.push_back({a.target, a.source, a.weight});
    build_csr(n, rev, g.rev_offsets_, g.rev_targets_, g.rev_weights_);
  }
  build_csr(n, arcs, g.offsets_, g.targets_, g.weights_);
  return g;
}

std::vector<Arc> Graph::arcs() const {
  std::vector<Arc> out;
  out.reserve(targets_.size());
  for (NodeId u = 0; u < n_; ++u) {
    for (std::size_t i = offsets_[u]; i < offsets_[u + 1]; ++i) {
      out.push_back({u, targets_[i], weights_[i]});
    }
  }
  return out;
}

std::string Graph::content_hash() const {
  std::vector<unsigned char> buf;
  buf.reserve(16 + 24 * targets_.size());
  append_u64(buf, n_);
  append_u64(buf, directed_ ? 1 : 0);
  for (NodeId u = 0; u < n_; ++u) {
    for (std::size_t i = offsets_[u]; i < offsets_[u + 1]; ++i) {
      append_u64(buf, u);
      append_u64(buf, targets_[i]);
      append_u64(buf, static_cast<std::uint64_t>(weights_[i]));
    }
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                              &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), buf.data(), buf.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), md.data(), &len) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    hex.push_back(kHex[md[i] >> 4]);
    hex.push_back(kHex[md[i] & 15]);
  }
  return hex;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && a.directed_ == b.directed_ && a.offsets_ == b.offsets_ &&
         a.targets_ == b.targets_ && a.weights_ == b.weights_;
}

Graph reverse(const Graph& g) {
  if (!g.directed()) return g;
  std::vector<Arc> arcs = g.arcs();
  for (Arc& a : arcs) std::swap(a.source, a.target);
  return Graph::from_arcs(g.num_nodes(), true, std::move(arcs));
}

namespace {

// Component label per node (labels are arbitrary but dense).
std::vector<NodeId> undirected_components(const Graph& g, NodeId& count) {
  const NodeId n = g.num_nodes();
  std::vector<NodeId> comp(n, kNoNode);
  std::vector<NodeId> stack;
  count = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (comp[s] != kNoNode) continue;
    comp[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : g.out_neighbors(u)) {
        if (comp[v] == kNoNode) {
          comp[v] = count;
          stack.push_back(v);
        }
      }
    }
    ++count;
  }
  return comp;
}

// Iterative Tarjan.
std::vector<NodeId> strong_components(const Graph& g, NodeId& count) {
  const NodeId n = g.num_nodes();
  std::vector<NodeId> index(n, kNoNode), low(n, 0), comp(n, kNoNode);
  std::vector<char> on_stack(n, 0);
  std::vector<NodeId> scc_stack;
  struct Frame {
    NodeId node;
    std::size_t next;
  };
  std::vector<Frame> call;
  NodeId next_index = 0;
  count = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (index[s] != kNoNode) continue;
    call.push_back({s, 0});
    index[s] = low[s] = next_index++;
    scc_stack.push_back(s);
    on_stack[s] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto nbrs = g.out_neighbors(f.node);
      if (f.next < nbrs.size()) {
        const NodeId v = nbrs[f.next++];
        if (index[v] == kNoNode) {
          index[v] = low[v] = next_index++;
          scc_stack.push_back(v);
          on_stack[v] = 1;
          call.push_back({v, 0});
        } else if (on_stack[v]) {
          low[f.node] = std::min(low[f.node], index[v]);
        }
        continue;
      }
      const NodeId u = f.node;
      call.pop_back();
      if (!call.empty()) {
        low[call.back().node] = std::min(low[call.back().node], low[u]);
      }
      if (low[u] == index[u]) {
        NodeId w;
        do {
          w = scc_stack.back();
          scc_stack.pop_back();
          on_stack[w] = 0;
          comp[w] = count;
        } while (w != u);
        ++count;
      }
    }
  }
  return comp;
}

}  // namespace

std::vector<NodeId> zero_arc_sink_order(const Graph& g) {
  const NodeId n = g.num_nodes();
  std::vector<Arc> zero;
  for (NodeId u = 0; u < n; ++u) {
    const auto nbrs = g.out_neighbors(u);
    const auto ws = g.out_weights(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (ws[i] == 0) zero.push_back({u, nbrs[i], 0});
    }
  }
  // Tarjan numbers components in reverse topological order, sinks first.
  NodeId count = 0;
  const std::vector<NodeId> comp =
      strong_components(Graph::from_arcs(n, true, std::move(zero)), count);
  std::vector<NodeId> order(n);
  for (NodeId v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&comp](NodeId a, NodeId b) { return comp[a] < comp[b]; });
  return order;
}

CoreRestriction restrict_to_core(const Graph& g) {
  const NodeId n = g.num_nodes();
  if (n == 0) throw std::invalid_argument("restrict_to_core: empty graph");
  NodeId count = 0;
  const std::vector<NodeId> comp =
      g.directed() ? strong_components(g, count) : undirected_components(g, count);

  std::vector<NodeId> size(count, 0);
  std::vector<NodeId> smallest(count, kNoNode);
  for (NodeId v = 0; v < n; ++v) {
    ++size[comp[v]];
    smallest[comp[v]] = std::min(smallest[comp[v]], v);
  }
  NodeId best = 0;
  for (NodeId c = 1; c < count; ++c) {
    if (size[c] > size[best] || (size[c] == size[best] && smallest[c] < smallest[best])) {
      best = c;
    }
  }

  CoreRestriction out;
  out.old_to_new.assign(n, kNoNode);
  for (NodeId v = 0; v < n; ++v) {
    if (comp[v] == best) {
      out.old_to_new[v] = static_cast<NodeId>(out.new_to_old.size());
      out.new_to_old.push_back(v);
    }
  }
  if (out.new_to_old.size() == n) {
    out.graph = g;
    return out;
  }
  std::vector<Arc> arcs;
  for (const Arc& a : g.arcs()) {
    const NodeId s = out.old_to_new[a.source];
    const NodeId t = out.old_to_new[a.target];
    if (s == kNoNode || t == kNoNode) continue;
    // Undirected arcs come in mirrored pairs; keep one of each.
    if (!g.directed() && s > t) continue;
    arcs.push_back({s, t, a.weight});
  }
  out.graph = Graph::from_arcs(static_cast<NodeId>(out.new_to_old.size()), g.directed(),
                               std::move(arcs));
  return out;
}

Ranking Ranking::identity(NodeId n) {
  Ranking r;
  r.rank_.resize(n);
  std::iota(r.rank_.begin(), r.rank_.end(), NodeId{0});
  r.label_ = "id";
  return r;
}

Ranking Ranking::random(NodeId n, std::uint64_t seed) {
  Ranking r = identity(n);
  std::mt19937_64 rng(seed);
  for (NodeId i = n; i > 1; --i) {
    const NodeId j = static_cast<NodeId>(rng() % i);
    std::swap(r.rank_[i - 1], r.rank_[j]);
  }
  r.label_ = std::to_string(seed);
  return r;
}

Ranking Ranking::from_ranks(std::vector<NodeId> rank) {
  std::vector<char> seen(rank.size(), 0);
  for (NodeId x : rank) {
    if (x >= rank.size() || seen[x]) {
      throw std::invalid_argument("ranking is not a permutation");
    }
    seen[x] = 1;
  }
  Ranking r;
  r.rank_ = std::move(rank);
  r.label_ = "custom";
  return r;
}

}  // namespace eccert
