#pragma once

// Chordal graphs: recognition and center-ball eccentricity procedures.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "eccert/graph.hpp"
#include "eccert/solvers.hpp"

namespace eccert {

class NotChordal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EliminationOrder {
  // order[i] is the i-th eliminated node.
  std::vector<NodeId> order;
  bool perfect = false;
};

// Lex-BFS followed by the perfect elimination check. Throws
// std::invalid_argument on directed or weighted input.
EliminationOrder is_chordal(const Graph& g);

struct ChordalDiameterResult : DiameterResult {
  // |C_3|, the nodes within distance 3 of the center.
  std::size_t ball_size = 0;
  // Extra candidate sweeps needed because argmax e^{C_3} was not diametral.
  std::size_t divergences = 0;
};

// Center c from the radius solver, U = C_3 = {x : d(x, c) <= 3}, diameter
// max e^U, witnessed by a node whose sweep confirms it. Throws NotChordal.
ChordalDiameterResult chordal_diameter(const Graph& g, const Ranking& ranking,
                                       const SolverOptions& opts = {});

struct ChordalAllEccOptions {
  // Also build a tight lower certificate so the bundle can be audited.
  bool complete_lower_certificate = true;
  bool self_check = false;
};

struct ChordalAllEccResult : AllEccResult {
  // |C_5|, the nodes within distance 5 of the center.
  std::size_t ball_size = 0;
  std::uint64_t radius_sweeps = 0;
  std::uint64_t ball_sweeps = 0;
  std::uint64_t lower_sweeps = 0;
};

// e(v) = min_{x in C_5} d(v, x) + e(x). Throws NotChordal.
ChordalAllEccResult chordal_all_ecc(const Graph& g, const Ranking& ranking,
                                    const ChordalAllEccOptions& opts = {});

struct ChordalCheckReport {
  Dist radius = 0;
  Dist diameter = 0;
  std::vector<NodeId> centers;
  std::vector<NodeId> diametral;
  bool center_certifies_diameter = false;
  bool diametral_certifies_radius = false;
  bool diameter_bound = false;
  // diam >= 2 rad - 1, so the pair checks below apply.
  bool pair_applicable = false;
  bool pair_certifies_radius = true;
  bool radius_formula = true;
  std::string failure;

  bool ok() const {
    return center_certifies_diameter && diametral_certifies_radius && diameter_bound &&
           pair_certifies_radius && radius_formula;
  }
};

// Checks the chordal certificate properties against the brute-force oracle.
// Intended for n <= 200. Throws NotChordal.
ChordalCheckReport chordal_certificate_checks(const Graph& g);

}  // namespace eccert
