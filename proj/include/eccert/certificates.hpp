#pragma once

// Lower/upper eccentricity bounds and certificate audits.
//
// e_L(v) = max_{x in L} d(v, x) and e^U(v) = min_{x in U} d(v, x) + e(x)
// sandwich the eccentricity: e_L(v) <= e(v) <= e^U(v).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eccert/graph.hpp"
#include "eccert/traversal.hpp"

namespace eccert {

enum class LowerBoundRule {
  // e_L(v) = max_{x in L} d(v, x).
  kOneSided,
  // max_{x in L} max(d(v, x), e(x) - d(v, x)); undirected graphs only.
  kTwoSided,
};

class BoundState {
 public:
  BoundState() = default;
  explicit BoundState(NodeId n, LowerBoundRule rule = LowerBoundRule::kOneSided);

  NodeId size() const { return static_cast<NodeId>(lower_.size()); }
  LowerBoundRule rule() const { return rule_; }

  const std::vector<NodeId>& lower_nodes() const { return lower_nodes_; }
  const std::vector<NodeId>& upper_nodes() const { return upper_nodes_; }
  // True eccentricities of upper_nodes(), index-aligned.
  const std::vector<Dist>& upper_eccs() const { return upper_eccs_; }

  Dist lower(NodeId v) const { return lower_[v]; }
  // kInfinity while U is empty.
  Dist upper(NodeId v) const { return upper_[v]; }
  const std::vector<Dist>& lower_bounds() const { return lower_; }
  const std::vector<Dist>& upper_bounds() const { return upper_; }

  bool in_lower(NodeId v) const { return in_lower_[v] != 0; }
  bool in_upper(NodeId v) const { return in_upper_[v] != 0; }

  // Adds a to L. to_a.dist[v] must be d(v, a): a backward row from a, or
  // the forward row on an undirected graph. Returns false and changes
  // nothing when a is already in L.
  bool lower_update(NodeId a, const DistanceRow& to_a);

  // Adds x to U with true eccentricity e_x. to_x.dist[v] must be d(v, x).
  // from_x, when given, is the forward row of x and must have eccentricity
  // e_x. Returns false and changes nothing when x is already in U.
  // Throws std::logic_error on an inconsistent eccentricity.
  bool upper_update(NodeId x, Dist e_x, const DistanceRow& to_x,
                    const DistanceRow* from_x = nullptr);

 private:
  LowerBoundRule rule_ = LowerBoundRule::kOneSided;
  std::vector<Dist> lower_;
  std::vector<Dist> upper_;
  std::vector<char> in_lower_;
  std::vector<char> in_upper_;
  std::vector<NodeId> lower_nodes_;
  std::vector<NodeId> upper_nodes_;
  std::vector<Dist> upper_eccs_;
};

enum class CertificateKind { kRadius, kDiameter, kAllEcc };

const char* to_string(CertificateKind kind);

struct UpperEntry {
  NodeId node = 0;
  Dist ecc = 0;

  friend bool operator==(const UpperEntry&, const UpperEntry&) = default;
};

struct GraphFingerprint {
  NodeId n = 0;
  std::uint64_t arc_count = 0;
  std::string sha256;

  static GraphFingerprint of(const Graph& g);
  friend bool operator==(const GraphFingerprint&, const GraphFingerprint&) = default;
};

class BundleFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CertificateBundle {
  CertificateKind kind = CertificateKind::kRadius;
  GraphFingerprint fingerprint;
  // Ranking label: "id", a decimal seed, or "custom".
  std::string ranking = "id";
  // r for radius bundles, D for diameter bundles.
  Dist value = 0;
  // Claimed eccentricities for all-ecc bundles.
  std::vector<Dist> ecc;
  std::vector<NodeId> lower;
  std::vector<UpperEntry> upper;
  // Center (radius) or diametral node (diameter); kNoNode if absent.
  NodeId witness = kNoNode;

  // Fields in the order kind, n, arc_count, graph_sha256, ranking,
  // r|D|ecc, L, U, witness.
  std::string to_json() const;
  // Throws BundleFormatError.
  static CertificateBundle from_json(std::string_view text);
};

struct AuditVerdict {
  bool accepted = false;
  std::string reason;
  // First node violating the claim, kNoNode if none.
  NodeId failed_node = kNoNode;
  // All nodes where the claim fails (all-ecc audits).
  std::vector<NodeId> mismatches;
  // Per node, a certificate member witnessing its bound (kNoNode if none).
  std::vector<NodeId> witness_of;
  std::uint64_t sweeps = 0;
};

// Accepts iff max_{x in L} d(u, x) >= r for every u (|L| sweeps). With a
// center c, additionally requires e(c) = r (one more sweep), which certifies
// rad(G) = r.
AuditVerdict verify_radius_certificate(const Graph& g, const std::vector<NodeId>& lower,
                                       Dist r, NodeId center = kNoNode);

// Re-derives every stored eccentricity, then accepts iff every u has some
// x in U with d(u, x) <= D - e(x). With a witness b, additionally requires
// e(b) = D, which certifies diam(G) = D.
AuditVerdict verify_diameter_certificate(const Graph& g,
                                         const std::vector<UpperEntry>& upper, Dist D,
                                         NodeId witness = kNoNode);

// Accepts iff e_L(v) = e^U(v) = ecc[v] for every v.
AuditVerdict verify_all_ecc_certificate(const Graph& g, const CertificateBundle& bundle);

class FingerprintMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dispatches on bundle.kind. Radius and diameter bundles must carry their
// witness. Throws FingerprintMismatch when the bundle was made for another
// graph.
AuditVerdict verify_bundle(const Graph& g, const CertificateBundle& bundle);

}  // namespace eccert
