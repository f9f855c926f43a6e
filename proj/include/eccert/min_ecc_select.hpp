#pragma once

// Minimum eccentricity selection: find u minimizing f(u, e(u)) without
// computing every eccentricity. Lower bounds e_L stand in for e until the
// chosen node's bound is tight; otherwise its antipode joins L.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eccert/certificates.hpp"
#include "eccert/traversal.hpp"

namespace eccert {

// f(v, l) with kInfinity standing for infinity. Must be non-decreasing in l.
using SelectionObjective = std::function<Dist(NodeId, Dist)>;

struct Selection {
  // kNoNode when the minimum is infinite.
  NodeId node = kNoNode;
  // f(node, e(node)), or kInfinity.
  Dist value = kInfinity;
  // e(node); meaningful only when node != kNoNode.
  Dist ecc = 0;
  // Forward row of node, so callers need not sweep it again.
  DistanceRow row;
  // Antipodes added to L during this call, in order.
  std::vector<NodeId> added_lower;
  std::uint64_t sweeps = 0;
};

class MonotonicityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Ties in argmin_v f(v, e_L(v)) go to the smallest id, or to the node
// listed first in scan_order (a permutation of the nodes) when given.
// Returns at once, without sweeping, when that minimum is infinite. Throws
// MonotonicityViolation if an untight node's antipode is already in L.
Selection arg_min_ecc(DistanceEngine& engine, BoundState& bounds,
                      const SelectionObjective& f,
                      const std::vector<NodeId>* scan_order = nullptr);

// Value counterpart of arg_min_ecc.
Dist min_ecc(DistanceEngine& engine, BoundState& bounds, const SelectionObjective& f);

}  // namespace eccert
