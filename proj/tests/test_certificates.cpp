#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "eccert/certificates.hpp"
#include "eccert/oracle.hpp"
#include "test_util.hpp"

namespace eccert {
namespace {

using testing::core;

DistanceRow row(const Graph& g, NodeId s, Direction d = Direction::kForward) {
  QueryCounter c;
  return dist_from(g, s, d, Ranking::identity(g.num_nodes()), c);
}

TEST(LowerUpdate, PathExamples) {
  const Graph g = gen_path(5);
  BoundState b(5);
  EXPECT_TRUE(b.lower_update(4, row(g, 4)));
  EXPECT_EQ(b.lower_bounds(), (std::vector<Dist>{4, 3, 2, 1, 0}));
  EXPECT_TRUE(b.lower_update(0, row(g, 0)));
  EXPECT_EQ(b.lower_bounds(), (std::vector<Dist>{4, 3, 2, 3, 4}));
  EXPECT_FALSE(b.lower_update(0, row(g, 0)));
  EXPECT_EQ(b.lower_nodes(), (std::vector<NodeId>{4, 0}));
}

TEST(LowerUpdate, Cycle) {
  const Graph g = gen_cycle(6);
  BoundState b(6);
  b.lower_update(0, row(g, 0));
  EXPECT_EQ(b.lower_bounds(), (std::vector<Dist>{0, 1, 2, 3, 2, 1}));
}

TEST(UpperUpdate, Examples) {
  {
    const Graph g = gen_path(5);
    BoundState b(5);
    EXPECT_EQ(b.upper(0), kInfinity);
    b.upper_update(2, 2, row(g, 2));
    EXPECT_EQ(b.upper_bounds(), (std::vector<Dist>{4, 3, 2, 3, 4}));
  }
  {
    const Graph g = gen_star(4);
    BoundState b(5);
    b.upper_update(0, 1, row(g, 0));
    EXPECT_EQ(b.upper_bounds(), (std::vector<Dist>{1, 2, 2, 2, 2}));
  }
  {
    const Graph g = gen_cycle(6);
    BoundState b(6);
    b.upper_update(0, 3, row(g, 0));
    EXPECT_EQ(b.upper_bounds(), (std::vector<Dist>{3, 4, 5, 6, 5, 4}));
    EXPECT_FALSE(b.upper_update(0, 3, row(g, 0)));
  }
}

TEST(UpperUpdate, InconsistentEccentricityThrows) {
  const Graph g = gen_path(5);
  BoundState b(5);
  const DistanceRow r = row(g, 2);
  EXPECT_THROW(b.upper_update(2, 3, r, &r), std::logic_error);
  EXPECT_THROW(b.upper_update(2, 3, r), std::logic_error);
}

TEST(TwoSidedRule, UndirectedOnly) {
  const Graph g = gen_path(5);
  BoundState b(5, LowerBoundRule::kTwoSided);
  b.lower_update(2, row(g, 2));
  // max(d, e(2) - d) with e(2) = 2.
  EXPECT_EQ(b.lower_bounds(), (std::vector<Dist>{2, 1, 2, 1, 2}));
  const Graph d = core(gen_weighted_directed_grid(4, 1));
  BoundState bd(d.num_nodes(), LowerBoundRule::kTwoSided);
  EXPECT_THROW(bd.lower_update(0, row(d, 0, Direction::kBackward)), std::invalid_argument);
}

// Property: e_L <= e <= e^U after every update, with monotone bounds.
TEST(BoundState, SandwichInvariant) {
  for (const auto& inst : testing::small_corpus(3, 6)) {
    const Graph& g = inst.graph;
    if (g.num_nodes() > 60) continue;
    const auto m = oracle::apsp(g);
    std::mt19937_64 rng(g.num_nodes());
    for (LowerBoundRule rule : {LowerBoundRule::kOneSided, LowerBoundRule::kTwoSided}) {
      if (rule == LowerBoundRule::kTwoSided && g.directed()) continue;
      BoundState b(g.num_nodes(), rule);
      std::vector<Dist> prev_lo = b.lower_bounds(), prev_hi = b.upper_bounds();
      for (int step = 0; step < 8; ++step) {
        const NodeId x = static_cast<NodeId>(uniform_below(rng, g.num_nodes()));
        const DistanceRow to_x = row(g, x, Direction::kBackward);
        if (step % 2 == 0) {
          b.lower_update(x, to_x);
        } else {
          b.upper_update(x, m.ecc[x], to_x);
        }
        for (NodeId v = 0; v < g.num_nodes(); ++v) {
          ASSERT_LE(b.lower(v), m.ecc[v]) << inst.label;
          ASSERT_GE(b.upper(v), m.ecc[v]) << inst.label;
          ASSERT_GE(b.lower(v), prev_lo[v]);
          ASSERT_LE(b.upper(v), prev_hi[v]);
        }
        prev_lo = b.lower_bounds();
        prev_hi = b.upper_bounds();
      }
    }
  }
}

TEST(VerifyRadius, Examples) {
  EXPECT_TRUE(verify_radius_certificate(gen_path(5), {0, 4}, 2).accepted);
  const AuditVerdict c8 = verify_radius_certificate(gen_cycle(8), {0}, 4);
  EXPECT_FALSE(c8.accepted);
  // Node 0 is the first uncovered node; node 1 (max distance 3) is too.
  EXPECT_EQ(c8.failed_node, 0u);
  EXPECT_FALSE(verify_radius_certificate(gen_cycle(8), {0, 4}, 4).accepted);
  const AuditVerdict grid = verify_radius_certificate(gen_grid(5), {0, 4, 20, 24}, 4, 12);
  EXPECT_TRUE(grid.accepted);
  EXPECT_EQ(grid.sweeps, 5u);
}

TEST(VerifyRadius, RejectsBadInput) {
  const Graph g = gen_path(5);
  EXPECT_FALSE(verify_radius_certificate(g, {0, 4}, -1).accepted);
  EXPECT_FALSE(verify_radius_certificate(g, {0, 9}, 2).accepted);
  // Covering holds but the center claim fails.
  EXPECT_FALSE(verify_radius_certificate(g, {0, 4}, 2, 1).accepted);
  EXPECT_FALSE(verify_radius_certificate(g, {0, 4}, 3).accepted);
}

TEST(VerifyRadius, AuditListsWitnesses) {
  const AuditVerdict v = verify_radius_certificate(gen_path(5), {0, 4}, 2);
  ASSERT_EQ(v.witness_of.size(), 5u);
  EXPECT_EQ(v.witness_of[0], 4u);
  EXPECT_EQ(v.witness_of[4], 0u);
}

TEST(VerifyDiameter, Examples) {
  EXPECT_TRUE(verify_diameter_certificate(gen_path(5), {{2, 2}}, 4).accepted);
  for (NodeId k : {3u, 5u, 7u}) {
    const NodeId c = (k * k) / 2;
    EXPECT_TRUE(verify_diameter_certificate(gen_grid(k), {{c, k - 1}}, 2 * (k - 1), 0).accepted);
  }
  const AuditVerdict c6 = verify_diameter_certificate(gen_cycle(6), {{0, 3}}, 3);
  EXPECT_FALSE(c6.accepted);
  EXPECT_EQ(c6.failed_node, 1u);
}

TEST(VerifyDiameter, StaleEccentricityRejected) {
  const AuditVerdict v = verify_diameter_certificate(gen_path(5), {{2, 1}}, 3);
  EXPECT_FALSE(v.accepted);
  EXPECT_EQ(v.failed_node, 2u);
  // Witness must realize D.
  EXPECT_FALSE(verify_diameter_certificate(gen_path(5), {{2, 2}}, 4, 1).accepted);
  EXPECT_TRUE(verify_diameter_certificate(gen_path(5), {{2, 2}}, 4, 4).accepted);
}

CertificateBundle all_ecc_bundle(const Graph& g, std::vector<NodeId> lower,
                                 std::vector<UpperEntry> upper, std::vector<Dist> ecc) {
  CertificateBundle b;
  b.kind = CertificateKind::kAllEcc;
  b.fingerprint = GraphFingerprint::of(g);
  b.lower = std::move(lower);
  b.upper = std::move(upper);
  b.ecc = std::move(ecc);
  return b;
}

TEST(VerifyAllEcc, Examples) {
  const Graph p5 = gen_path(5);
  EXPECT_TRUE(verify_all_ecc_certificate(p5, all_ecc_bundle(p5, {0, 4}, {{2, 2}}, {4, 3, 2, 3, 4}))
                  .accepted);
  const Graph c6 = gen_cycle(6);
  std::vector<UpperEntry> all;
  for (NodeId v = 0; v < 6; ++v) all.push_back({v, 3});
  EXPECT_TRUE(verify_all_ecc_certificate(c6, all_ecc_bundle(c6, {0, 1, 2, 3, 4, 5}, all,
                                                            std::vector<Dist>(6, 3)))
                  .accepted);
  const AuditVerdict bad =
      verify_all_ecc_certificate(p5, all_ecc_bundle(p5, {0}, {{2, 2}}, {4, 3, 2, 3, 4}));
  EXPECT_FALSE(bad.accepted);
  EXPECT_EQ(bad.mismatches, (std::vector<NodeId>{0, 1}));
}

TEST(Bundle, JsonRoundTripAndFieldOrder) {
  const Graph g = gen_path(5);
  CertificateBundle b;
  b.kind = CertificateKind::kDiameter;
  b.fingerprint = GraphFingerprint::of(g);
  b.ranking = "17";
  b.value = 4;
  b.upper = {{2, 2}};
  b.witness = 0;
  const std::string json = b.to_json();
  const char* order[] = {"\"kind\"", "\"n\"", "\"arc_count\"", "\"graph_sha256\"",
                         "\"ranking\"", "\"D\"", "\"L\"", "\"U\"", "\"witness\""};
  std::size_t pos = 0;
  for (const char* key : order) {
    const std::size_t at = json.find(key);
    ASSERT_NE(at, std::string::npos) << key;
    EXPECT_GE(at, pos) << key;
    pos = at;
  }
  EXPECT_NE(json.find("\"ranking\": 17"), std::string::npos);
  const CertificateBundle back = CertificateBundle::from_json(json);
  EXPECT_EQ(back.to_json(), json);
  EXPECT_TRUE(verify_bundle(g, back).accepted);
}

TEST(Bundle, MalformedJson) {
  EXPECT_THROW(CertificateBundle::from_json("{"), BundleFormatError);
  EXPECT_THROW(CertificateBundle::from_json("{\"kind\":\"radius\"}"), BundleFormatError);
  EXPECT_THROW(CertificateBundle::from_json("[]"), BundleFormatError);
}

TEST(Bundle, FingerprintMismatch) {
  CertificateBundle b;
  b.fingerprint = GraphFingerprint::of(gen_path(5));
  b.lower = {0, 4};
  b.value = 2;
  b.witness = 2;
  EXPECT_TRUE(verify_bundle(gen_path(5), b).accepted);
  EXPECT_THROW(verify_bundle(gen_path(6), b), FingerprintMismatch);
  b.witness = kNoNode;
  EXPECT_FALSE(verify_bundle(gen_path(5), b).accepted);
}

// Property: set semantics, acceptance is invariant under permutation.
TEST(Verifiers, PermutationInvariant) {
  const Graph g = gen_grid(5);
  std::vector<NodeId> lower{24, 0, 20, 4};
  std::vector<UpperEntry> upper{{0, 8}, {12, 4}, {24, 8}};
  std::mt19937_64 rng(1);
  for (int i = 0; i < 5; ++i) {
    std::shuffle(lower.begin(), lower.end(), rng);
    std::shuffle(upper.begin(), upper.end(), rng);
    EXPECT_TRUE(verify_radius_certificate(g, lower, 4, 12).accepted);
    EXPECT_TRUE(verify_diameter_certificate(g, upper, 8, 0).accepted);
  }
}

TEST(Verifiers, DirectedSemantics) {
  // 0 -> 1 -> 2 -> 0 with weights 1, 2, 3.
  const Graph g = testing::edges("n 3 directed 1\n0 1 1\n1 2 2\n2 0 3\n");
  const auto m = oracle::apsp(g);
  EXPECT_EQ(m.ecc, (std::vector<Dist>{3, 5, 4}));
  EXPECT_TRUE(verify_radius_certificate(g, {2, 0}, 3, 0).accepted);
  // d(1, 0) = 5 > D - e(0): in-balls, not out-balls.
  EXPECT_FALSE(verify_diameter_certificate(g, {{0, 3}}, 5, 1).accepted);
  std::vector<UpperEntry> all{{0, 3}, {1, 5}, {2, 4}};
  EXPECT_TRUE(verify_diameter_certificate(g, all, 5, 1).accepted);
}

}  // namespace
}  // namespace eccert
