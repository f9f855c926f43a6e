#include "eccert/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "eccert/min_ecc_select.hpp"

namespace eccert {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

CertificateBundle make_bundle(CertificateKind kind, const Graph& g, const Ranking& ranking) {
  CertificateBundle b;
  b.kind = kind;
  b.fingerprint = GraphFingerprint::of(g);
  b.ranking = ranking.label();
  return b;
}

void self_check(const Graph& g, const CertificateBundle& bundle, const SolverOptions& opts) {
  if (!opts.self_check) return;
  const AuditVerdict v = verify_bundle(g, bundle);
  if (!v.accepted) {
    throw SelfCheckFailure(std::string(to_string(bundle.kind)) +
                           " certificate rejected by self-check: " + v.reason);
  }
}

// Row of d(v, x) for every v; reuses the forward row when undirected.
DistanceRow to_row(DistanceEngine& engine, NodeId x, const DistanceRow& forward_of_x) {
  return engine.graph().directed() ? engine.backward(x) : forward_of_x;
}

NodeId argmax_upper(const BoundState& bounds) {
  NodeId best = 0;
  for (NodeId v = 1; v < bounds.size(); ++v) {
    if (bounds.upper(v) > bounds.upper(best)) best = v;
  }
  return best;
}

Dist max_upper(const BoundState& bounds) { return bounds.upper(argmax_upper(bounds)); }

Dist min_lower(const BoundState& bounds) {
  Dist best = kInfinity;
  for (NodeId v = 0; v < bounds.size(); ++v) best = std::min(best, bounds.lower(v));
  return best;
}

struct RadiusRun {
  Dist radius = 0;
  NodeId center = kNoNode;
  bool finished = false;
  std::size_t iterations = 0;
  std::vector<NodeId> packing;
  std::vector<NodeId> queried;
  std::vector<TraceStep> trace;
};

void note_query(std::vector<NodeId>& queried, std::vector<char>& seen, NodeId v) {
  if (!seen[v]) {
    seen[v] = 1;
    queried.push_back(v);
  }
}

// Radius loop; stops after max_iters iterations when max_iters > 0.
RadiusRun run_radius(DistanceEngine& engine, BoundState& bounds, std::size_t max_iters) {
  const NodeId n = engine.graph().num_nodes();
  RadiusRun run;
  std::vector<char> seen(n, 0);
  Dist best_k = kInfinity;
  do {
    NodeId u = 0;
    for (NodeId v = 1; v < n; ++v) {
      if (bounds.lower(v) < bounds.lower(u)) u = v;
    }
    ++run.iterations;
    const DistanceRow from_u = engine.forward(u);
    note_query(run.queried, seen, u);
    TraceStep step{u, bounds.lower(u), from_u.ecc, kNoNode, kNoNode};
    if (from_u.ecc == bounds.lower(u)) {
      run.trace.push_back(step);
      run.radius = from_u.ecc;
      run.center = u;
      run.finished = true;
      return run;
    }
    const NodeId a = from_u.antipode;
    if (bounds.in_lower(a)) {
      throw std::logic_error("radius: antipode " + std::to_string(a) + " repeated");
    }
    bounds.lower_update(a, engine.backward(a));
    note_query(run.queried, seen, a);
    run.packing.push_back(u);
    if (from_u.ecc < best_k) {
      best_k = from_u.ecc;
      run.center = u;
    }
    step.antipode = a;
    run.trace.push_back(step);
    if (max_iters > 0 && run.iterations >= max_iters) {
      run.radius = best_k;
      return run;
    }
  } while (min_lower(bounds) < best_k);
  run.radius = best_k;
  run.finished = true;
  return run;
}

void check_nonempty(const Graph& g) {
  if (g.num_nodes() == 0) throw std::invalid_argument("empty graph");
}

}  // namespace

const char* to_string(DiameterVariant v) {
  switch (v) {
    case DiameterVariant::kBasic:
      return "basic";
    case DiameterVariant::kCenterInit:
      return "center_init";
    case DiameterVariant::kDelegate:
      return "delegate";
    case DiameterVariant::kCenterInitDelegate:
      return "center_init_delegate";
  }
  return "?";
}

DiameterVariant parse_diameter_variant(const std::string& name) {
  for (DiameterVariant v : {DiameterVariant::kBasic, DiameterVariant::kCenterInit,
                            DiameterVariant::kDelegate,
                            DiameterVariant::kCenterInitDelegate}) {
    if (name == to_string(v)) return v;
  }
  throw std::invalid_argument("unknown diameter variant '" + name + "'");
}

Alpha parse_alpha(const std::string& text) {
  const Alpha a = parse_ratio(text);
  if (a.num <= 0 || a.num >= a.den) {
    throw std::invalid_argument("alpha must satisfy 0 < alpha < 1");
  }
  return a;
}

RadiusResult radius(const Graph& g, const Ranking& ranking, const SolverOptions& opts) {
  check_nonempty(g);
  const auto start = Clock::now();
  DistanceEngine engine(g, ranking);
  BoundState bounds(g.num_nodes(), opts.lower_rule);
  RadiusRun run = run_radius(engine, bounds, 0);

  RadiusResult out;
  out.radius = run.radius;
  out.center = run.center;
  out.lower = bounds.lower_nodes();
  out.queried = std::move(run.queried);
  out.report.sweeps = engine.sweeps();
  out.report.lower_size = out.lower.size();
  out.report.packing = std::move(run.packing);
  out.report.trace = std::move(run.trace);
  out.bundle = make_bundle(CertificateKind::kRadius, g, ranking);
  out.bundle.value = out.radius;
  out.bundle.lower = out.lower;
  out.bundle.witness = out.center;
  out.report.seconds = seconds_since(start);
  self_check(g, out.bundle, opts);
  return out;
}

DiameterResult diameter(const Graph& g, const Ranking& ranking, DiameterVariant variant,
                        const SolverOptions& opts) {
  check_nonempty(g);
  const auto start = Clock::now();
  DistanceEngine engine(g, ranking);
  BoundState bounds(g.num_nodes(), opts.lower_rule);
  DiameterResult out;
  const bool center_init = variant == DiameterVariant::kCenterInit ||
                           variant == DiameterVariant::kCenterInitDelegate;
  const bool delegate = variant == DiameterVariant::kDelegate ||
                        variant == DiameterVariant::kCenterInitDelegate;

  if (center_init) {
    const RadiusRun rr = run_radius(engine, bounds, 0);
    out.radius_sweeps = engine.sweeps();
    const DistanceRow to_c = engine.backward(rr.center);
    bounds.upper_update(rr.center, rr.radius, to_c);
    out.upper.push_back({rr.center, rr.radius});
  }

  Dist best = -1;
  do {
    const NodeId u = argmax_upper(bounds);
    const Dist bound = bounds.upper(u);
    const DistanceRow from_u = engine.forward(u);
    out.report.packing.push_back(u);
    if (from_u.ecc > best) {
      best = from_u.ecc;
      out.witness = u;
    }
    NodeId x = u;
    Dist e_x = from_u.ecc;
    DistanceRow to_x;
    if (delegate) {
      const Dist e_u = from_u.ecc;
      Selection sel = arg_min_ecc(engine, bounds, [&](NodeId v, Dist l) {
        return from_u.dist[v] + l <= e_u ? l : kInfinity;
      });
      x = sel.node;
      e_x = sel.ecc;
      if (!bounds.in_upper(x)) to_x = to_row(engine, x, sel.row);
    } else if (bound == from_u.ecc) {
      // Some member of U is already a tight upper certificate for u.
      const auto& nodes = bounds.upper_nodes();
      const auto& eccs = bounds.upper_eccs();
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (from_u.dist[nodes[i]] + eccs[i] == from_u.ecc) {
          x = nodes[i];
          break;
        }
      }
    } else {
      to_x = to_row(engine, u, from_u);
    }
    if (!bounds.in_upper(x) && bounds.upper_update(x, e_x, to_x)) out.upper.push_back({x, e_x});
    out.report.trace.push_back({u, bound, from_u.ecc, kNoNode, x});
  } while (best < max_upper(bounds));

  out.diameter = best;
  out.report.sweeps = engine.sweeps();
  out.report.lower_size = bounds.lower_nodes().size();
  out.report.upper_size = out.upper.size();
  out.bundle = make_bundle(CertificateKind::kDiameter, g, ranking);
  out.bundle.value = out.diameter;
  out.bundle.upper = out.upper;
  out.bundle.witness = out.witness;
  out.report.seconds = seconds_since(start);
  self_check(g, out.bundle, opts);
  return out;
}

AllEccResult all_eccentricities(const Graph& g, const Ranking& ranking,
                                const SolverOptions& opts) {
  check_nonempty(g);
  const auto start = Clock::now();
  DistanceEngine engine(g, ranking);
  BoundState bounds(g.num_nodes(), opts.lower_rule);
  AllEccResult out;
  const SelectionObjective ecc_untight = [&bounds](NodeId v, Dist l) {
    return l < bounds.upper(v) ? l : kInfinity;
  };
  // A zero-weight path lets u <= x with e(x) = e(u), so x ties with u and
  // must be scanned first for u to be maximal.
  std::vector<NodeId> order;
  if (g.directed() && g.has_zero_weight()) order = zero_arc_sink_order(g);
  while (true) {
    Selection sel = arg_min_ecc(engine, bounds, ecc_untight, order.empty() ? nullptr : &order);
    if (sel.node == kNoNode) break;
    const NodeId u = sel.node;
    const DistanceRow to_u = to_row(engine, u, sel.row);
    const Dist bound = bounds.upper(u);
    bounds.upper_update(u, sel.ecc, to_u, &sel.row);
    out.upper.push_back({u, sel.ecc});
    out.report.trace.push_back(
        {u, bound, sel.ecc, sel.added_lower.empty() ? kNoNode : sel.added_lower.back(), u});
  }
  out.ecc = bounds.upper_bounds();
  out.lower = bounds.lower_nodes();
  out.report.sweeps = engine.sweeps();
  out.report.lower_size = out.lower.size();
  out.report.upper_size = out.upper.size();
  out.bundle = make_bundle(CertificateKind::kAllEcc, g, ranking);
  out.bundle.ecc = out.ecc;
  out.bundle.lower = out.lower;
  out.bundle.upper = out.upper;
  out.report.seconds = seconds_since(start);
  self_check(g, out.bundle, opts);
  return out;
}

DiameterResult diameter_doubling(const Graph& g, const Ranking& ranking, Alpha alpha,
                                 const SolverOptions& opts) {
  if (alpha.num <= 0 || alpha.den <= 0 || alpha.num >= alpha.den) {
    throw std::invalid_argument("alpha must satisfy 0 < alpha < 1");
  }
  check_nonempty(g);
  const auto start = Clock::now();
  DistanceEngine engine(g, ranking);
  BoundState bounds(g.num_nodes(), opts.lower_rule);
  DiameterResult out;
  // Largest verified eccentricity over K and U.
  Dist best = -1;
  const auto note = [&](NodeId v, Dist e) {
    if (e > best || (e == best && v < out.witness)) {
      best = e;
      out.witness = v;
    }
  };
  const auto add_upper = [&](NodeId v, Dist e, const DistanceRow& from_v) {
    if (bounds.upper_update(v, e, to_row(engine, v, from_v), &from_v)) {
      out.upper.push_back({v, e});
    }
    note(v, e);
  };

  while (best < max_upper(bounds)) {
    const NodeId u = argmax_upper(bounds);
    const Dist bound = bounds.upper(u);
    const DistanceRow from_u = engine.forward(u);
    out.report.packing.push_back(u);
    add_upper(u, from_u.ecc, from_u);
    out.report.trace.push_back({u, bound, from_u.ecc, kNoNode, u});
    // e^U(v) - l > (1 - alpha) / (2 alpha) * d(u, v), in integers.
    const SelectionObjective ecc_slack = [&](NodeId v, Dist l) -> Dist {
      const Dist eu = bounds.upper(v);
      const Dist d = from_u.dist[v];
      const bool slack =
          eu >= kInfinity || 2 * alpha.num * (eu - l) > (alpha.den - alpha.num) * d;
      return slack ? -d : kInfinity;
    };
    while (true) {
      Selection sel = arg_min_ecc(engine, bounds, ecc_slack);
      if (sel.node == kNoNode) break;
      const Dist vb = bounds.upper(sel.node);
      add_upper(sel.node, sel.ecc, sel.row);
      out.report.trace.push_back({sel.node, vb, sel.ecc,
                                  sel.added_lower.empty() ? kNoNode : sel.added_lower.back(),
                                  sel.node});
    }
  }

  out.diameter = best;
  out.report.sweeps = engine.sweeps();
  out.report.lower_size = bounds.lower_nodes().size();
  out.report.upper_size = out.upper.size();
  out.bundle = make_bundle(CertificateKind::kDiameter, g, ranking);
  out.bundle.value = out.diameter;
  out.bundle.upper = out.upper;
  out.bundle.witness = out.witness;
  out.report.seconds = seconds_since(start);
  self_check(g, out.bundle, opts);
  return out;
}

namespace {

void check_approx_args(double epsilon, std::size_t budget) {
  if (budget < 1) throw std::invalid_argument("iteration budget must be at least 1");
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
}

}  // namespace

ApproxResult radius_approx(const Graph& g, const Ranking& ranking, double epsilon,
                           std::size_t budget) {
  check_approx_args(epsilon, budget);
  check_nonempty(g);
  const auto start = Clock::now();
  DistanceEngine engine(g, ranking);
  BoundState bounds(g.num_nodes());
  RadiusRun run = run_radius(engine, bounds, budget);
  ApproxResult out;
  out.node = run.center;
  out.ecc = run.radius;
  out.iterations = run.iterations;
  out.exact = run.finished;
  out.report.sweeps = engine.sweeps();
  out.report.lower_size = bounds.lower_nodes().size();
  out.report.packing = std::move(run.packing);
  out.report.trace = std::move(run.trace);
  out.report.seconds = seconds_since(start);
  return out;
}

ApproxResult diameter_approx(const Graph& g, const Ranking& ranking, double epsilon,
                             std::size_t budget) {
  check_approx_args(epsilon, budget);
  check_nonempty(g);
  const auto start = Clock::now();
  DistanceEngine engine(g, ranking);
  BoundState bounds(g.num_nodes());
  ApproxResult out;
  Dist best = -1;
  do {
    const NodeId u = argmax_upper(bounds);
    const Dist bound = bounds.upper(u);
    const DistanceRow from_u = engine.forward(u);
    out.report.packing.push_back(u);
    if (from_u.ecc > best) {
      best = from_u.ecc;
      out.node = u;
    }
    bounds.upper_update(u, from_u.ecc, to_row(engine, u, from_u));
    out.report.trace.push_back({u, bound, from_u.ecc, kNoNode, u});
    ++out.iterations;
    if (out.iterations >= budget) break;
  } while (best < max_upper(bounds));
  out.ecc = best;
  out.exact = best >= max_upper(bounds);
  out.report.sweeps = engine.sweeps();
  out.report.upper_size = bounds.upper_nodes().size();
  out.report.seconds = seconds_since(start);
  return out;
}

}  // namespace eccert
