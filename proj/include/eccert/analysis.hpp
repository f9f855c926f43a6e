#pragma once

// Structural measurements: antipodes, furthest nodes, greedy ball covers,
// center concentration, and one-row graph profiles.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eccert/certificates.hpp"
#include "eccert/graph.hpp"
#include "eccert/ratio.hpp"
#include "eccert/traversal.hpp"

namespace eccert {

// Worker threads for the quadratic counters: hardware concurrency, capped
// by the ECC_THREADS environment variable when set.
unsigned worker_count();

// antipode(V) in increasing id order; n sweeps (added to `counter` if given).
std::vector<NodeId> count_antipodes(const Graph& g, const Ranking& ranking,
                                    QueryCounter* counter = nullptr);

// Union of the furthest-node sets of all nodes; n sweeps.
std::vector<NodeId> count_furthest(const Graph& g, QueryCounter* counter = nullptr);

// Radius of the reduced ball around u: floor(beta (diam - e(u))), with
// factor 1 at special_center.
Dist reduced_radius(const std::vector<Dist>& ecc, Dist diam, Ratio beta, NodeId u,
                    NodeId special_center);

// Greedy maximum-coverage cover of V by closed balls
// B[u, reduced_radius(u)] (in-balls when directed). Picks the ball covering
// the most uncovered nodes, ties to the smallest center. Returns the chosen
// centers in pick order. Throws std::invalid_argument unless 0 < beta <= 1.
std::vector<NodeId> greedy_ball_cover(const Graph& g, const std::vector<Dist>& ecc,
                                      Ratio beta, NodeId special_center = kNoNode);

// True iff the balls around `cover` cover every node.
bool ball_cover_covers(const Graph& g, const std::vector<Dist>& ecc, Ratio beta,
                       NodeId special_center, const std::vector<NodeId>& cover);

struct Concentration {
  std::size_t count = 0;
  NodeId n = 0;
  double ratio() const { return n == 0 ? 0.0 : static_cast<double>(count) / n; }
};

// Nodes u with d(u, c) <= diam - rad; one sweep.
Concentration center_concentration(const Graph& g, NodeId c, Dist diam, Dist rad);

// verify_radius_certificate(S + antipodes(S), r), with |S| extra sweeps.
AuditVerdict antipode_closure_check(const Graph& g, const Ranking& ranking,
                                    const std::vector<NodeId>& queried, Dist r);

struct ProfileOptions {
  // Also run the two quadratic counters.
  bool full = false;
  std::string type = "-";
  std::string name = "-";
};

struct GraphProfile {
  std::string type;
  std::string name;
  NodeId n = 0;
  std::uint64_t arcs = 0;
  bool directed = false;
  bool weighted = false;
  Dist diameter = 0;
  Dist radius = 0;
  // Diameter certificate size from the center-initialized delegate solver.
  std::size_t diameter_cert = 0;
  std::size_t cover_08 = 0;
  std::size_t cover_13 = 0;
  Concentration concentration;
  // Radius certificate size.
  std::size_t radius_cert = 0;
  std::optional<std::size_t> antipodes;
  std::optional<std::size_t> furthest;

  double ratio() const {
    return radius == 0 ? 0.0 : static_cast<double>(diameter) / static_cast<double>(radius);
  }
};

// Expects a core-restricted graph.
GraphProfile profile(const Graph& g, const Ranking& ranking, const ProfileOptions& opts = {});

// type,name,n,m/n,d,w,diam/rad,D,pi_c_0.8,pi_c_1/3,nc/n,R,A_ID,F
std::string profile_csv_header();
std::string profile_csv_row(const GraphProfile& p);

}  // namespace eccert
