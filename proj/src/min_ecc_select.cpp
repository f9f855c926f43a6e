#include "eccert/min_ecc_select.hpp"

namespace eccert {

Selection arg_min_ecc(DistanceEngine& engine, BoundState& bounds,
                      const SelectionObjective& f,
                      const std::vector<NodeId>* scan_order) {
  const NodeId n = engine.graph().num_nodes();
  if (bounds.size() != n) throw std::invalid_argument("bound state size mismatch");
  if (scan_order != nullptr && scan_order->size() != n) {
    throw std::invalid_argument("scan order size mismatch");
  }
  Selection out;
  const std::uint64_t start = engine.sweeps();
  while (true) {
    NodeId u = kNoNode;
    Dist best = kInfinity;
    for (NodeId i = 0; i < n; ++i) {
      const NodeId v = scan_order != nullptr ? (*scan_order)[i] : i;
      const Dist val = f(v, bounds.lower(v));
      if (val < best) {
        best = val;
        u = v;
      }
    }
    if (u == kNoNode) {
      // f(v, e_L(v)) is infinite everywhere, hence so is f(v, e(v)).
      out.sweeps = engine.sweeps() - start;
      return out;
    }
    out.row = engine.forward(u);
    if (out.row.ecc == bounds.lower(u)) {
      out.node = u;
      out.ecc = out.row.ecc;
      out.value = best;
      out.sweeps = engine.sweeps() - start;
      return out;
    }
    const NodeId a = out.row.antipode;
    if (bounds.in_lower(a)) {
      throw MonotonicityViolation("antipode " + std::to_string(a) + " of node " +
                                  std::to_string(u) +
                                  " already in L although its bound is not tight");
    }
    bounds.lower_update(a, engine.backward(a));
    out.added_lower.push_back(a);
  }
}

Dist min_ecc(DistanceEngine& engine, BoundState& bounds, const SelectionObjective& f) {
  return arg_min_ecc(engine, bounds, f).value;
}

}  // namespace eccert
