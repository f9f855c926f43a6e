#pragma once

// Synthetic graph families. Every generator is a pure function of its
// parameters and seed; random choices use mt19937_64 with portable
// sampling so outputs match across standard libraries.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "eccert/graph.hpp"

namespace eccert {

// Uniform integer in [0, bound), bound > 0.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
// Uniform double in [0, 1).
double uniform01(std::mt19937_64& rng);

// Path on n nodes 0-1-...-(n-1); n >= 1.
Graph gen_path(NodeId n);
// Cycle on n >= 3 nodes.
Graph gen_cycle(NodeId n);
// Star with center 0 and k >= 1 leaves.
Graph gen_star(NodeId k);
// Complete graph on n >= 1 nodes.
Graph gen_complete(NodeId n);

// k x k grid, node r * k + c, with exactly round(fraction * edges) edges
// removed uniformly at random. k >= 2, 0 <= fraction < 1.
Graph gen_grid(NodeId k, double deletion_fraction = 0.0, std::uint64_t seed = 0);

// k x k grid whose edges are oriented at random and weighted uniformly in
// 0..9. k >= 2.
Graph gen_weighted_directed_grid(NodeId k, std::uint64_t seed);

// Bow-tie with parameters p >= 2 and q >= 6, on 2pq + 10q + 2 nodes.
//
// Node 0 is the center c; nodes 1 and 2 are the hubs a and b. A cycle of
// length 4q runs c ~ a (q + 1 edges), a ~ b (2q - 2 edges), b ~ c (q + 1
// edges). Each hub carries p pendant paths of length q, and c carries five
// pendant paths whose lengths share 6q + 2 as evenly as possible.
// diam = 4q - 2 (between tips at a and tips at b), rad = 2q + 1 (at c),
// {a, b, c} is a diameter certificate.
Graph gen_bowtie(NodeId p, NodeId q);

// Bow-tie landmarks, for tests.
struct BowtieLayout {
  NodeId center = 0;
  NodeId hub_a = 1;
  NodeId hub_b = 2;
  std::vector<NodeId> tips_a;
  std::vector<NodeId> tips_b;
  // Tips of the pendant paths at the center, longest first.
  std::vector<NodeId> tail_tips;
};
BowtieLayout bowtie_layout(NodeId p, NodeId q);

// Configuration model with P(degree = k) proportional to k^-exponent for
// 1 <= k <= sqrt(n), simplified (self-loops and repeated edges dropped).
// n >= 10, exponent > 1.
Graph gen_powerlaw(NodeId n, double exponent, std::uint64_t seed);

// n uniform points in a square of side sqrt(n pi / target), joined when at
// Euclidean distance <= 1. n >= 10, target > 0.
Graph gen_udg(NodeId n, double target_avg_degree, std::uint64_t seed);

// k-tree on n >= k + 1 nodes: a (k+1)-clique, then each new node joins a
// uniformly chosen existing k-clique.
Graph gen_ktree(NodeId n, NodeId k, std::uint64_t seed);

// Interval graph: interval i starts uniformly in [0, n) with length uniform
// in [0.5, max_length]; intervals that overlap are adjacent. May be
// disconnected.
Graph gen_interval(NodeId n, double max_length, std::uint64_t seed);

// G(n, p) random graph.
Graph gen_erdos_renyi(NodeId n, double p, std::uint64_t seed);

// Uniform random labelled tree (Pruefer decoding). n >= 1.
Graph gen_random_tree(NodeId n, std::uint64_t seed);

// Chordal example with cliques X = {x_1..x_k} (ids 0..k-1) and independent
// Y = {y_1..y_k} (ids k..2k-1), x_i adjacent to y_j for j <= i.
Graph gen_clique_staircase(NodeId k);

}  // namespace eccert
