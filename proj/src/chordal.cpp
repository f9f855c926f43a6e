#include "eccert/chordal.hpp"

#include <algorithm>
#include <chrono>

#include "eccert/certificates.hpp"
#include "eccert/min_ecc_select.hpp"
#include "eccert/oracle.hpp"
#include "eccert/traversal.hpp"

namespace eccert {
namespace {

void require_simple_undirected(const Graph& g) {
  if (g.directed() || !g.unit_weights()) {
    throw std::invalid_argument("chordal procedures need an undirected unweighted graph");
  }
}

void require_chordal(const Graph& g) {
  if (!is_chordal(g).perfect) throw NotChordal("graph is not chordal");
}

// Lex-BFS by partition refinement; returns the visit order.
std::vector<NodeId> lex_bfs(const Graph& g) {
  const NodeId n = g.num_nodes();
  struct Cell {
    NodeId begin;
    NodeId end;
    NodeId moved = 0;
  };
  std::vector<NodeId> perm(n), pos(n), cell_of(n, 0);
  for (NodeId v = 0; v < n; ++v) perm[v] = pos[v] = v;
  std::vector<Cell> cells{{0, n}};
  std::vector<char> visited(n, 0);
  std::vector<NodeId> stamp(n, kNoNode);
  std::vector<NodeId> touched;
  for (NodeId i = 0; i < n; ++i) {
    const NodeId v = perm[i];
    visited[v] = 1;
    ++cells[cell_of[v]].begin;
    touched.clear();
    for (NodeId w : g.out_neighbors(v)) {
      if (visited[w] || stamp[w] == i) continue;
      stamp[w] = i;
      const NodeId c = cell_of[w];
      Cell& cell = cells[c];
      if (cell.moved == 0) touched.push_back(c);
      const NodeId target = cell.begin + cell.moved;
      const NodeId other = perm[target];
      std::swap(perm[pos[w]], perm[target]);
      pos[other] = pos[w];
      pos[w] = target;
      ++cell.moved;
    }
    for (NodeId c : touched) {
      const NodeId k = cells[c].moved;
      cells[c].moved = 0;
      if (k == cells[c].end - cells[c].begin) continue;
      const NodeId begin = cells[c].begin;
      const auto nc = static_cast<NodeId>(cells.size());
      cells.push_back({begin, begin + k});
      cells[c].begin = begin + k;
      for (NodeId p = begin; p < begin + k; ++p) cell_of[perm[p]] = nc;
    }
  }
  return perm;
}

bool adjacent(const Graph& g, NodeId u, NodeId v) {
  const auto nb = g.out_neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

}  // namespace

EliminationOrder is_chordal(const Graph& g) {
  require_simple_undirected(g);
  const NodeId n = g.num_nodes();
  EliminationOrder out;
  out.order = lex_bfs(g);
  std::reverse(out.order.begin(), out.order.end());
  std::vector<NodeId> index(n);
  for (NodeId i = 0; i < n; ++i) index[out.order[i]] = i;
  // Each node's later neighbours, minus the earliest of them (its parent),
  // must be adjacent to that parent.
  for (NodeId v : out.order) {
    NodeId parent = kNoNode;
    for (NodeId w : g.out_neighbors(v)) {
      if (index[w] > index[v] && (parent == kNoNode || index[w] < index[parent])) parent = w;
    }
    if (parent == kNoNode) continue;
    for (NodeId w : g.out_neighbors(v)) {
      if (w != parent && index[w] > index[v] && !adjacent(g, parent, w)) return out;
    }
  }
  out.perfect = true;
  return out;
}

ChordalDiameterResult chordal_diameter(const Graph& g, const Ranking& ranking,
                                       const SolverOptions& opts) {
  require_simple_undirected(g);
  require_chordal(g);
  const auto start = std::chrono::steady_clock::now();
  const RadiusResult rr = radius(g, ranking);
  DistanceEngine engine(g, ranking);
  BoundState bounds(g.num_nodes());
  ChordalDiameterResult out;
  out.radius_sweeps = rr.report.sweeps;

  const DistanceRow from_c = engine.forward(rr.center);
  for (NodeId x = 0; x < g.num_nodes(); ++x) {
    if (from_c.dist[x] > 3) continue;
    const DistanceRow row = x == rr.center ? from_c : engine.forward(x);
    bounds.upper_update(x, row.ecc, row);
    out.upper.push_back({x, row.ecc});
  }
  out.ball_size = out.upper.size();

  std::vector<NodeId> candidates(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) candidates[v] = v;
  std::stable_sort(candidates.begin(), candidates.end(), [&bounds](NodeId a, NodeId b) {
    return bounds.upper(a) > bounds.upper(b);
  });
  const Dist claimed = bounds.upper(candidates.front());
  for (NodeId p : candidates) {
    if (bounds.upper(p) != claimed) break;
    const Dist e = bounds.in_upper(p)
                       ? bounds.upper(p)
                       : engine.forward(p).ecc;
    if (e == claimed) {
      out.witness = p;
      break;
    }
    ++out.divergences;
  }
  if (out.witness == kNoNode) {
    throw std::logic_error("chordal_diameter: no node attains max e^{C_3}");
  }
  out.diameter = claimed;
  out.report.sweeps = rr.report.sweeps + engine.sweeps();
  out.report.upper_size = out.upper.size();
  out.bundle.kind = CertificateKind::kDiameter;
  out.bundle.fingerprint = GraphFingerprint::of(g);
  out.bundle.ranking = ranking.label();
  out.bundle.value = out.diameter;
  out.bundle.upper = out.upper;
  out.bundle.witness = out.witness;
  out.report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (opts.self_check) {
    const AuditVerdict v = verify_bundle(g, out.bundle);
    if (!v.accepted) throw SelfCheckFailure("chordal diameter certificate rejected: " + v.reason);
  }
  return out;
}

ChordalAllEccResult chordal_all_ecc(const Graph& g, const Ranking& ranking,
                                    const ChordalAllEccOptions& opts) {
  require_simple_undirected(g);
  require_chordal(g);
  const auto start = std::chrono::steady_clock::now();
  const RadiusResult rr = radius(g, ranking);
  DistanceEngine engine(g, ranking);
  BoundState bounds(g.num_nodes());
  ChordalAllEccResult out;
  out.radius_sweeps = rr.report.sweeps;

  const DistanceRow from_c = engine.forward(rr.center);
  for (NodeId x = 0; x < g.num_nodes(); ++x) {
    if (from_c.dist[x] > 5) continue;
    const DistanceRow row = x == rr.center ? from_c : engine.forward(x);
    bounds.upper_update(x, row.ecc, row);
    out.upper.push_back({x, row.ecc});
  }
  out.ball_size = out.upper.size();
  out.ball_sweeps = engine.sweeps();
  out.ecc = bounds.upper_bounds();

  if (opts.complete_lower_certificate) {
    const std::vector<Dist>& ecc = out.ecc;
    const Selection sel = arg_min_ecc(engine, bounds, [&ecc](NodeId v, Dist l) {
      return l < ecc[v] ? l : kInfinity;
    });
    if (sel.node != kNoNode) throw std::logic_error("chordal_all_ecc: lower bounds not tight");
    out.lower = bounds.lower_nodes();
  }
  out.lower_sweeps = engine.sweeps() - out.ball_sweeps;
  out.report.sweeps = rr.report.sweeps + engine.sweeps();
  out.report.lower_size = out.lower.size();
  out.report.upper_size = out.upper.size();
  out.bundle.kind = CertificateKind::kAllEcc;
  out.bundle.fingerprint = GraphFingerprint::of(g);
  out.bundle.ranking = ranking.label();
  out.bundle.ecc = out.ecc;
  out.bundle.lower = out.lower;
  out.bundle.upper = out.upper;
  out.report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (opts.self_check) {
    const AuditVerdict v = verify_bundle(g, out.bundle);
    if (!v.accepted) throw SelfCheckFailure("chordal all-ecc certificate rejected: " + v.reason);
  }
  return out;
}

ChordalCheckReport chordal_certificate_checks(const Graph& g) {
  require_simple_undirected(g);
  require_chordal(g);
  const oracle::DistanceMatrix m = oracle::apsp(g);
  ChordalCheckReport rep;
  rep.radius = m.radius();
  rep.diameter = m.diameter();
  rep.centers = m.centers();
  rep.diametral = m.diametral();

  std::vector<UpperEntry> upper;
  for (NodeId c : rep.centers) upper.push_back({c, m.ecc[c]});
  const AuditVerdict dv =
      verify_diameter_certificate(g, upper, rep.diameter, rep.diametral.front());
  rep.center_certifies_diameter = dv.accepted;
  if (!dv.accepted) rep.failure = "center set: " + dv.reason;

  const AuditVerdict rv =
      verify_radius_certificate(g, rep.diametral, rep.radius, rep.centers.front());
  rep.diametral_certifies_radius = rv.accepted;
  if (!rv.accepted && rep.failure.empty()) rep.failure = "diametral set: " + rv.reason;

  rep.diameter_bound = rep.diameter >= 2 * rep.radius - 2;
  if (!rep.diameter_bound && rep.failure.empty()) rep.failure = "diam < 2 rad - 2";

  rep.pair_applicable = rep.diameter >= 2 * rep.radius - 1;
  if (rep.pair_applicable) {
    rep.radius_formula = rep.radius == (rep.diameter + 1) / 2;
    if (!rep.radius_formula && rep.failure.empty()) rep.failure = "rad != floor((diam+1)/2)";
    // Every diametral pair must certify the radius on its own.
    for (NodeId x : rep.diametral) {
      for (NodeId y : rep.diametral) {
        if (y <= x || m.at(x, y) != rep.diameter || !rep.pair_certifies_radius) continue;
        const AuditVerdict pv = verify_radius_certificate(g, {x, y}, rep.radius);
        if (!pv.accepted) {
          rep.pair_certifies_radius = false;
          if (rep.failure.empty()) {
            rep.failure = "pair {" + std::to_string(x) + "," + std::to_string(y) +
                          "}: " + pv.reason;
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace eccert
