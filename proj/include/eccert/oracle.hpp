#pragma once

// Brute-force references for small graphs. Nothing here shares code with
// the traversal engine.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "eccert/graph.hpp"

namespace eccert::oracle {

class LimitExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr NodeId kApspLimit = 5000;
inline constexpr NodeId kExactLimit = 24;

struct DistanceMatrix {
  NodeId n = 0;
  // Row-major; kInfinity where unreachable.
  std::vector<Dist> d;
  // Forward eccentricities, kInfinity if some node is unreachable.
  std::vector<Dist> ecc;

  Dist at(NodeId u, NodeId v) const { return d[static_cast<std::size_t>(u) * n + v]; }
  Dist radius() const;
  Dist diameter() const;
  // Nodes of eccentricity rad (resp. diam), increasing id.
  std::vector<NodeId> centers() const;
  std::vector<NodeId> diametral() const;
};

// Label-correcting shortest paths from every source. Throws LimitExceeded
// above kApspLimit nodes.
DistanceMatrix apsp(const Graph& g);

// Antipode of u: furthest node of highest rank.
NodeId antipode(const DistanceMatrix& m, const Ranking& ranking, NodeId u);
// antipode(V) as an increasing id list.
std::vector<NodeId> antipodes(const DistanceMatrix& m, const Ranking& ranking);
// Union of all furthest-node sets, increasing id.
std::vector<NodeId> furthest_nodes(const DistanceMatrix& m);

// Maximal elements of u <= x iff e(u) = d(u, x) + e(x). Nodes joined by
// zero-weight cycles are equivalent; each maximal class contributes its
// smallest id. Throws std::logic_error if the relation is not transitive.
std::vector<NodeId> preceq_maximals(const DistanceMatrix& m);

// Minimum node sets by exhaustive search (smallest size first). Throw
// LimitExceeded above kExactLimit nodes.
std::vector<NodeId> min_radius_certificate_exact(const DistanceMatrix& m);
std::vector<NodeId> min_diameter_certificate_exact(const DistanceMatrix& m);

enum class BallFamily {
  // Open balls B(u, alpha (diam - e(u))).
  kOpen,
  // Closed balls B[u, diam - e(u)].
  kClosedOne,
  // Open balls with factor 1/3, except factor 1 at `center`.
  kCenterVariant,
};

struct FamilySpec {
  BallFamily family = BallFamily::kOpen;
  std::int64_t num = 1;
  std::int64_t den = 3;
  // For kCenterVariant; kNoNode picks the smallest-id center.
  NodeId center = kNoNode;
};

// Membership of v in the ball of u: d(v, u) is used, so directed balls are
// in-balls.
bool in_ball(const DistanceMatrix& m, const FamilySpec& spec, NodeId u, NodeId v);

// True iff every ball of the family holds at most one node of `set`.
bool is_packing(const DistanceMatrix& m, const FamilySpec& spec,
                const std::vector<NodeId>& set);

// Exact maximum packing size; asserts weak duality against the exact
// minimum covering (when the family covers V) and throws std::logic_error
// if it fails. Throws LimitExceeded above kExactLimit nodes.
std::size_t max_packing_exact(const DistanceMatrix& m, const FamilySpec& spec);

// Exact minimum covering size, or SIZE_MAX if the family does not cover V.
std::size_t min_cover_exact(const DistanceMatrix& m, const FamilySpec& spec);

}  // namespace eccert::oracle
