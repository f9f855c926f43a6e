#pragma once

// Exact radius, diameter and all-eccentricity solvers built on lower/upper
// certificates, plus early-stopped approximation modes.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "eccert/certificates.hpp"
#include "eccert/graph.hpp"
#include "eccert/ratio.hpp"
#include "eccert/traversal.hpp"

namespace eccert {

struct TraceStep {
  NodeId selected = kNoNode;
  // e_L(selected) for radius-like loops, e^U(selected) for diameter loops.
  Dist bound = 0;
  Dist ecc = 0;
  // Antipode added to L in this step, kNoNode if none.
  NodeId antipode = kNoNode;
  // Node added to U in this step, kNoNode if none.
  NodeId delegate = kNoNode;
};

struct RunReport {
  std::uint64_t sweeps = 0;
  std::size_t lower_size = 0;
  std::size_t upper_size = 0;
  // K: the packing built by the outer loop.
  std::vector<NodeId> packing;
  std::vector<TraceStep> trace;
  double seconds = 0;
};

struct RadiusResult {
  Dist radius = 0;
  NodeId center = kNoNode;
  std::vector<NodeId> lower;
  // Every sweep source, in order of first use.
  std::vector<NodeId> queried;
  CertificateBundle bundle;
  RunReport report;
};

struct DiameterResult {
  Dist diameter = 0;
  NodeId witness = kNoNode;
  std::vector<UpperEntry> upper;
  CertificateBundle bundle;
  RunReport report;
  // Radius sub-run of the center-initialized variants.
  std::uint64_t radius_sweeps = 0;
};

struct AllEccResult {
  std::vector<Dist> ecc;
  std::vector<NodeId> lower;
  std::vector<UpperEntry> upper;
  CertificateBundle bundle;
  RunReport report;
};

enum class DiameterVariant { kBasic, kCenterInit, kDelegate, kCenterInitDelegate };

const char* to_string(DiameterVariant v);
// Accepts "basic", "center_init", "delegate", "center_init_delegate".
// Throws std::invalid_argument.
DiameterVariant parse_diameter_variant(const std::string& name);

struct SolverOptions {
  LowerBoundRule lower_rule = LowerBoundRule::kOneSided;
  // Re-verify the returned bundle; throws SelfCheckFailure on rejection.
  bool self_check = false;
};

class SelfCheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameter of the doubling diameter solver, 0 < alpha < 1.
using Alpha = Ratio;

// Throws std::invalid_argument unless 0 < alpha < 1.
Alpha parse_alpha(const std::string& text);

// All solvers expect a (strongly) connected graph and throw
// UnreachableError otherwise.
RadiusResult radius(const Graph& g, const Ranking& ranking, const SolverOptions& opts = {});

DiameterResult diameter(const Graph& g, const Ranking& ranking,
                        DiameterVariant variant = DiameterVariant::kCenterInitDelegate,
                        const SolverOptions& opts = {});

AllEccResult all_eccentricities(const Graph& g, const Ranking& ranking,
                                const SolverOptions& opts = {});

// Throws std::invalid_argument unless 0 < alpha < 1.
DiameterResult diameter_doubling(const Graph& g, const Ranking& ranking, Alpha alpha,
                                 const SolverOptions& opts = {});

struct ApproxResult {
  NodeId node = kNoNode;
  Dist ecc = 0;
  std::size_t iterations = 0;
  // True when the loop ended on its own, so ecc is exact.
  bool exact = false;
  RunReport report;
};

// The radius (resp. basic diameter) loop stopped after `budget` iterations;
// returns the node of K with least (resp. largest) eccentricity. Throws
// std::invalid_argument if budget < 1 or epsilon <= 0.
ApproxResult radius_approx(const Graph& g, const Ranking& ranking, double epsilon,
                           std::size_t budget);
ApproxResult diameter_approx(const Graph& g, const Ranking& ranking, double epsilon,
                             std::size_t budget);

}  // namespace eccert
