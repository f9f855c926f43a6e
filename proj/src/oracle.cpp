#include "eccert/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <string>

namespace eccert::oracle {
namespace {

void require_small(NodeId n, NodeId limit, const char* what) {
  if (n > limit) {
    throw LimitExceeded(std::string(what) + ": " + std::to_string(n) + " nodes exceeds limit " +
                        std::to_string(limit));
  }
}

using Mask = std::uint32_t;

// Minimum number of sets (indexed by node) whose union is `full`.
// sets[x] is the mask covered by choosing x. Returns the chosen nodes in
// increasing order, or nullopt-like empty + ok=false when impossible.
class ExactCover {
 public:
  ExactCover(std::vector<Mask> sets, Mask full) : sets_(std::move(sets)), full_(full) {
    const std::size_t n = sets_.size();
    by_element_.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t e = 0; e < n; ++e) {
        if (sets_[x] >> e & 1U) by_element_[e].push_back(static_cast<NodeId>(x));
      }
    }
  }

  bool solve(std::vector<NodeId>& out) {
    Mask all = 0;
    for (Mask s : sets_) all |= s;
    if ((all & full_) != full_) return false;
    best_size_ = sets_.size() + 1;
    chosen_.clear();
    recurse(0);
    out = best_;
    std::sort(out.begin(), out.end());
    return true;
  }

 private:
  void recurse(Mask covered) {
    if ((covered & full_) == full_) {
      if (chosen_.size() < best_size_) {
        best_size_ = chosen_.size();
        best_ = chosen_;
      }
      return;
    }
    if (chosen_.size() + 1 >= best_size_) return;
    const int e = std::countr_zero(static_cast<Mask>(~covered & full_));
    for (NodeId x : by_element_[e]) {
      chosen_.push_back(x);
      recurse(covered | sets_[x]);
      chosen_.pop_back();
    }
  }

  std::vector<Mask> sets_;
  Mask full_;
  std::vector<std::vector<NodeId>> by_element_;
  std::size_t best_size_ = 0;
  std::vector<NodeId> chosen_;
  std::vector<NodeId> best_;
};

Mask full_mask(NodeId n) { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

NodeId resolve_center(const DistanceMatrix& m, const FamilySpec& spec) {
  if (spec.family != BallFamily::kCenterVariant) return kNoNode;
  if (spec.center != kNoNode) return spec.center;
  return m.centers().front();
}

}  // namespace

Dist DistanceMatrix::radius() const { return *std::min_element(ecc.begin(), ecc.end()); }
Dist DistanceMatrix::diameter() const { return *std::max_element(ecc.begin(), ecc.end()); }

std::vector<NodeId> DistanceMatrix::centers() const {
  std::vector<NodeId> out;
  const Dist r = radius();
  for (NodeId v = 0; v < n; ++v) {
    if (ecc[v] == r) out.push_back(v);
  }
  return out;
}

std::vector<NodeId> DistanceMatrix::diametral() const {
  std::vector<NodeId> out;
  const Dist D = diameter();
  for (NodeId v = 0; v < n; ++v) {
    if (ecc[v] == D) out.push_back(v);
  }
  return out;
}

DistanceMatrix apsp(const Graph& g) {
  const NodeId n = g.num_nodes();
  require_small(n, kApspLimit, "apsp");
  DistanceMatrix m;
  m.n = n;
  m.d.assign(static_cast<std::size_t>(n) * n, kInfinity);
  m.ecc.assign(n, 0);
  const std::vector<Arc> arcs = g.arcs();
  std::vector<std::vector<std::pair<NodeId, Dist>>> adj(n);
  for (const Arc& a : arcs) adj[a.source].emplace_back(a.target, a.weight);
  std::vector<char> queued(n, 0);
  std::deque<NodeId> queue;
  for (NodeId s = 0; s < n; ++s) {
    Dist* row = &m.d[static_cast<std::size_t>(s) * n];
    row[s] = 0;
    queue.push_back(s);
    queued[s] = 1;
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop_front();
      queued[u] = 0;
      for (const auto& [v, w] : adj[u]) {
        if (row[u] + w < row[v]) {
          row[v] = row[u] + w;
          if (!queued[v]) {
            queued[v] = 1;
            queue.push_back(v);
          }
        }
      }
    }
    m.ecc[s] = *std::max_element(row, row + n);
  }
  return m;
}

NodeId antipode(const DistanceMatrix& m, const Ranking& ranking, NodeId u) {
  NodeId best = u;
  for (NodeId v = 0; v < m.n; ++v) {
    const Dist d = m.at(u, v);
    const Dist bd = m.at(u, best);
    if (d > bd || (d == bd && ranking.rank(v) > ranking.rank(best))) best = v;
  }
  return best;
}

std::vector<NodeId> antipodes(const DistanceMatrix& m, const Ranking& ranking) {
  std::vector<char> mark(m.n, 0);
  for (NodeId u = 0; u < m.n; ++u) mark[antipode(m, ranking, u)] = 1;
  std::vector<NodeId> out;
  for (NodeId v = 0; v < m.n; ++v) {
    if (mark[v]) out.push_back(v);
  }
  return out;
}

std::vector<NodeId> furthest_nodes(const DistanceMatrix& m) {
  std::vector<char> mark(m.n, 0);
  for (NodeId u = 0; u < m.n; ++u) {
    for (NodeId v = 0; v < m.n; ++v) {
      if (m.at(u, v) == m.ecc[u]) mark[v] = 1;
    }
  }
  std::vector<NodeId> out;
  for (NodeId v = 0; v < m.n; ++v) {
    if (mark[v]) out.push_back(v);
  }
  return out;
}

std::vector<NodeId> preceq_maximals(const DistanceMatrix& m) {
  const NodeId n = m.n;
  const auto le = [&m](NodeId u, NodeId x) { return m.ecc[u] == m.at(u, x) + m.ecc[x]; };
  if (n <= 512) {
    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> rel(static_cast<std::size_t>(n) * words, 0);
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId x = 0; x < n; ++x) {
        if (le(u, x)) rel[u * words + x / 64] |= std::uint64_t{1} << (x % 64);
      }
    }
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId x = 0; x < n; ++x) {
        if (!(rel[u * words + x / 64] >> (x % 64) & 1)) continue;
        for (std::size_t w = 0; w < words; ++w) {
          if (rel[x * words + w] & ~rel[u * words + w]) {
            throw std::logic_error("preceq relation is not transitive");
          }
        }
      }
    }
  }
  std::vector<NodeId> out;
  for (NodeId u = 0; u < n; ++u) {
    bool maximal = true;
    bool representative = true;
    for (NodeId x = 0; x < n && maximal; ++x) {
      if (x == u || !le(u, x)) continue;
      if (le(x, u)) {
        if (x < u) representative = false;
      } else {
        maximal = false;
      }
    }
    if (maximal && representative) out.push_back(u);
  }
  return out;
}

std::vector<NodeId> min_radius_certificate_exact(const DistanceMatrix& m) {
  require_small(m.n, kExactLimit, "min_radius_certificate_exact");
  const Dist r = m.radius();
  std::vector<Mask> sets(m.n, 0);
  for (NodeId x = 0; x < m.n; ++x) {
    for (NodeId u = 0; u < m.n; ++u) {
      if (m.at(u, x) >= r) sets[x] |= Mask{1} << u;
    }
  }
  std::vector<NodeId> out;
  if (!ExactCover(sets, full_mask(m.n)).solve(out)) {
    throw std::logic_error("no radius certificate exists");
  }
  return out;
}

std::vector<NodeId> min_diameter_certificate_exact(const DistanceMatrix& m) {
  require_small(m.n, kExactLimit, "min_diameter_certificate_exact");
  const Dist D = m.diameter();
  std::vector<Mask> sets(m.n, 0);
  for (NodeId x = 0; x < m.n; ++x) {
    for (NodeId u = 0; u < m.n; ++u) {
      if (m.at(u, x) <= D - m.ecc[x]) sets[x] |= Mask{1} << u;
    }
  }
  std::vector<NodeId> out;
  if (!ExactCover(sets, full_mask(m.n)).solve(out)) {
    throw std::logic_error("no diameter certificate exists");
  }
  return out;
}

bool in_ball(const DistanceMatrix& m, const FamilySpec& spec, NodeId u, NodeId v) {
  const Dist slack = m.diameter() - m.ecc[u];
  const Dist d = m.at(v, u);
  switch (spec.family) {
    case BallFamily::kOpen:
      return spec.den * d < spec.num * slack;
    case BallFamily::kClosedOne:
      return d <= slack;
    case BallFamily::kCenterVariant:
      return u == resolve_center(m, spec) ? d < slack : 3 * d < slack;
  }
  return false;
}

bool is_packing(const DistanceMatrix& m, const FamilySpec& spec,
                const std::vector<NodeId>& set) {
  for (NodeId u = 0; u < m.n; ++u) {
    int hits = 0;
    for (NodeId v : set) hits += in_ball(m, spec, u, v) ? 1 : 0;
    if (hits > 1) return false;
  }
  return true;
}

namespace {

std::vector<Mask> ball_masks(const DistanceMatrix& m, FamilySpec spec) {
  spec.center = resolve_center(m, spec);
  std::vector<Mask> balls(m.n, 0);
  for (NodeId u = 0; u < m.n; ++u) {
    for (NodeId v = 0; v < m.n; ++v) {
      if (in_ball(m, spec, u, v)) balls[u] |= Mask{1} << v;
    }
  }
  return balls;
}

void max_independent(const std::vector<Mask>& conflict, Mask cand, std::size_t size,
                     std::size_t& best) {
  if (cand == 0) {
    best = std::max(best, size);
    return;
  }
  if (size + static_cast<std::size_t>(std::popcount(cand)) <= best) return;
  const int v = std::countr_zero(cand);
  const Mask bit = Mask{1} << v;
  max_independent(conflict, cand & ~bit & ~conflict[v], size + 1, best);
  max_independent(conflict, cand & ~bit, size, best);
}

}  // namespace

std::size_t min_cover_exact(const DistanceMatrix& m, const FamilySpec& spec) {
  require_small(m.n, kExactLimit, "min_cover_exact");
  std::vector<NodeId> out;
  if (!ExactCover(ball_masks(m, spec), full_mask(m.n)).solve(out)) {
    return std::numeric_limits<std::size_t>::max();
  }
  return out.size();
}

std::size_t max_packing_exact(const DistanceMatrix& m, const FamilySpec& spec) {
  require_small(m.n, kExactLimit, "max_packing_exact");
  const std::vector<Mask> balls = ball_masks(m, spec);
  std::vector<Mask> conflict(m.n, 0);
  for (Mask b : balls) {
    for (NodeId v = 0; v < m.n; ++v) {
      if (b >> v & 1U) conflict[v] |= b & ~(Mask{1} << v);
    }
  }
  std::size_t best = 0;
  max_independent(conflict, full_mask(m.n), 0, best);
  const std::size_t cover = min_cover_exact(m, spec);
  if (best > cover) {
    throw std::logic_error("weak duality violated: packing " + std::to_string(best) +
                           " > cover " + std::to_string(cover));
  }
  return best;
}

}  // namespace eccert::oracle
