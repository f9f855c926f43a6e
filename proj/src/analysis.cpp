#include "eccert/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <queue>
#include <stdexcept>
#include <thread>

#include "eccert/solvers.hpp"

namespace eccert {

unsigned worker_count() {
  unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ECC_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
  }
  return hw;
}

namespace {

// Runs visit(row) for every source on worker threads; each worker marks
// into its own vector, merged by union afterwards.
template <typename Visit>
std::vector<NodeId> mark_union(const Graph& g, const Ranking& ranking, QueryCounter* counter,
                               Visit visit) {
  const NodeId n = g.num_nodes();
  const unsigned workers = std::min<unsigned>(worker_count(), std::max<NodeId>(1, n));
  std::vector<std::vector<char>> marks(workers, std::vector<char>(n, 0));
  std::atomic<NodeId> next{0};
  QueryCounter local;
  const auto work = [&](unsigned w) {
    SweepScratch scratch;
    DistanceRow row;
    for (NodeId s = next.fetch_add(1); s < n; s = next.fetch_add(1)) {
      dist_from(g, s, Direction::kForward, ranking, local, row, scratch);
      visit(row, marks[w]);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (std::thread& t : pool) t.join();
  if (counter != nullptr) counter->add(local.sweeps());
  std::vector<NodeId> out;
  for (NodeId v = 0; v < n; ++v) {
    for (const auto& m : marks) {
      if (m[v]) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<NodeId> count_antipodes(const Graph& g, const Ranking& ranking,
                                    QueryCounter* counter) {
  return mark_union(g, ranking, counter, [](const DistanceRow& row, std::vector<char>& mark) {
    mark[row.antipode] = 1;
  });
}

std::vector<NodeId> count_furthest(const Graph& g, QueryCounter* counter) {
  const Ranking ranking = Ranking::identity(g.num_nodes());
  return mark_union(g, ranking, counter, [](const DistanceRow& row, std::vector<char>& mark) {
    for (std::size_t v = 0; v < row.dist.size(); ++v) {
      if (row.dist[v] == row.ecc) mark[v] = 1;
    }
  });
}

Dist reduced_radius(const std::vector<Dist>& ecc, Dist diam, Ratio beta, NodeId u,
                    NodeId special_center) {
  const Dist slack = diam - ecc[u];
  return u == special_center ? slack : beta.scale_floor(slack);
}

namespace {

void check_cover_args(const Graph& g, const std::vector<Dist>& ecc, Ratio beta) {
  if (beta.den <= 0 || beta.num <= 0 || beta.num > beta.den) {
    throw std::invalid_argument("beta must satisfy 0 < beta <= 1");
  }
  if (ecc.size() != g.num_nodes()) throw std::invalid_argument("eccentricity array size mismatch");
}

}  // namespace

std::vector<NodeId> greedy_ball_cover(const Graph& g, const std::vector<Dist>& ecc,
                                      Ratio beta, NodeId special_center) {
  check_cover_args(g, ecc, beta);
  const NodeId n = g.num_nodes();
  if (n == 0) return {};
  const Dist diam = *std::max_element(ecc.begin(), ecc.end());
  const Direction dir = Direction::kBackward;
  SweepScratch scratch;
  std::vector<char> covered(n, 0);
  NodeId remaining = n;

  // Max-heap on (gain, -id); gains are refreshed lazily.
  using Entry = std::pair<std::size_t, std::int64_t>;
  std::priority_queue<Entry> heap;
  for (NodeId u = 0; u < n; ++u) {
    const auto b = ball(g, u, reduced_radius(ecc, diam, beta, u, special_center), dir, scratch);
    heap.emplace(b.size(), -static_cast<std::int64_t>(u));
  }
  std::vector<NodeId> cover;
  while (remaining > 0 && !heap.empty()) {
    const auto [stored, neg_id] = heap.top();
    heap.pop();
    const auto u = static_cast<NodeId>(-neg_id);
    const auto b = ball(g, u, reduced_radius(ecc, diam, beta, u, special_center), dir, scratch);
    std::size_t gain = 0;
    for (NodeId v : b) gain += covered[v] ? 0 : 1;
    if (gain == 0) continue;
    if (gain < stored) {
      heap.emplace(gain, neg_id);
      continue;
    }
    cover.push_back(u);
    for (NodeId v : b) {
      if (!covered[v]) {
        covered[v] = 1;
        --remaining;
      }
    }
  }
  return cover;
}

bool ball_cover_covers(const Graph& g, const std::vector<Dist>& ecc, Ratio beta,
                       NodeId special_center, const std::vector<NodeId>& cover) {
  check_cover_args(g, ecc, beta);
  const NodeId n = g.num_nodes();
  if (n == 0) return true;
  const Dist diam = *std::max_element(ecc.begin(), ecc.end());
  SweepScratch scratch;
  std::vector<char> covered(n, 0);
  for (NodeId u : cover) {
    for (NodeId v : ball(g, u, reduced_radius(ecc, diam, beta, u, special_center),
                         Direction::kBackward, scratch)) {
      covered[v] = 1;
    }
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

Concentration center_concentration(const Graph& g, NodeId c, Dist diam, Dist rad) {
  const Ranking ranking = Ranking::identity(g.num_nodes());
  QueryCounter counter;
  const DistanceRow to_c = dist_from(g, c, Direction::kBackward, ranking, counter);
  Concentration out;
  out.n = g.num_nodes();
  for (Dist d : to_c.dist) out.count += d <= diam - rad ? 1 : 0;
  return out;
}

AuditVerdict antipode_closure_check(const Graph& g, const Ranking& ranking,
                                    const std::vector<NodeId>& queried, Dist r) {
  QueryCounter counter;
  std::vector<NodeId> set = queried;
  for (NodeId s : queried) {
    set.push_back(dist_from(g, s, Direction::kForward, ranking, counter).antipode);
  }
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  AuditVerdict v = verify_radius_certificate(g, set, r);
  v.sweeps += counter.sweeps();
  return v;
}

GraphProfile profile(const Graph& g, const Ranking& ranking, const ProfileOptions& opts) {
  GraphProfile p;
  p.type = opts.type;
  p.name = opts.name;
  p.n = g.num_nodes();
  p.arcs = g.num_arcs();
  p.directed = g.directed();
  p.weighted = !g.unit_weights();

  const RadiusResult rr = radius(g, ranking);
  p.radius = rr.radius;
  p.radius_cert = rr.lower.size();
  const DiameterResult dr = diameter(g, ranking, DiameterVariant::kCenterInitDelegate);
  p.diameter = dr.diameter;
  p.diameter_cert = dr.upper.size();
  if (!g.directed() && p.diameter > 2 * p.radius) {
    throw std::logic_error("profile: diameter exceeds twice the radius on an undirected graph");
  }
  const AllEccResult ae = all_eccentricities(g, ranking);
  p.cover_08 = greedy_ball_cover(g, ae.ecc, Ratio{4, 5}, rr.center).size();
  p.cover_13 = greedy_ball_cover(g, ae.ecc, Ratio{1, 3}, rr.center).size();
  p.concentration = center_concentration(g, rr.center, p.diameter, p.radius);
  if (opts.full) {
    p.antipodes = count_antipodes(g, ranking).size();
    p.furthest = count_furthest(g).size();
  }
  return p;
}

std::string profile_csv_header() {
  return "type,name,n,m/n,d,w,diam/rad,D,pi_c_0.8,pi_c_1/3,nc/n,R,A_ID,F";
}

std::string profile_csv_row(const GraphProfile& p) {
  char buf[64];
  std::string row = p.type + "," + p.name + "," + std::to_string(p.n) + ",";
  std::snprintf(buf, sizeof buf, "%.2f", p.n == 0 ? 0.0 : static_cast<double>(p.arcs) / p.n);
  row += buf;
  row += p.directed ? ",1" : ",0";
  row += p.weighted ? ",1," : ",0,";
  std::snprintf(buf, sizeof buf, "%.2f", p.ratio());
  row += buf;
  row += "," + std::to_string(p.diameter_cert) + "," + std::to_string(p.cover_08) + "," +
         std::to_string(p.cover_13) + ",";
  std::snprintf(buf, sizeof buf, "%.2f", p.concentration.ratio());
  row += buf;
  row += "," + std::to_string(p.radius_cert) + ",";
  row += p.antipodes ? std::to_string(*p.antipodes) : "-";
  row += ",";
  row += p.furthest ? std::to_string(*p.furthest) : "-";
  return row;
}

}  // namespace eccert
