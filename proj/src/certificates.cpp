#include "eccert/certificates.hpp"

#include <algorithm>
#include <cctype>

#include "json.hpp"

namespace eccert {

BoundState::BoundState(NodeId n, LowerBoundRule rule)
    : rule_(rule),
      lower_(n, 0),
      upper_(n, kInfinity),
      in_lower_(n, 0),
      in_upper_(n, 0) {}

bool BoundState::lower_update(NodeId a, const DistanceRow& to_a) {
  if (a >= size()) throw std::out_of_range("lower_update: node out of range");
  if (to_a.source != a || to_a.dist.size() != size()) {
    throw std::invalid_argument("lower_update: row does not belong to node");
  }
  if (rule_ == LowerBoundRule::kTwoSided && to_a.direction == Direction::kBackward) {
    throw std::invalid_argument("two-sided lower bounds need an undirected graph");
  }
  if (in_lower_[a]) return false;
  in_lower_[a] = 1;
  lower_nodes_.push_back(a);
  const NodeId n = size();
  if (rule_ == LowerBoundRule::kTwoSided) {
    // The forward row of an undirected graph carries e(a).
    const Dist ea = to_a.ecc;
    for (NodeId v = 0; v < n; ++v) {
      const Dist d = to_a.dist[v];
      lower_[v] = std::max({lower_[v], d, ea - d});
    }
    return true;
  }
  for (NodeId v = 0; v < n; ++v) lower_[v] = std::max(lower_[v], to_a.dist[v]);
  return true;
}

bool BoundState::upper_update(NodeId x, Dist e_x, const DistanceRow& to_x,
                              const DistanceRow* from_x) {
  if (x >= size()) throw std::out_of_range("upper_update: node out of range");
  if (to_x.source != x || to_x.dist.size() != size()) {
    throw std::invalid_argument("upper_update: row does not belong to node");
  }
  if (from_x != nullptr && (from_x->source != x || from_x->ecc != e_x)) {
    throw std::logic_error("upper_update: eccentricity of node " + std::to_string(x) +
                           " inconsistent with its forward row");
  }
  if (to_x.direction == Direction::kForward && to_x.ecc != e_x) {
    // A forward row is only valid here on undirected graphs, where it also
    // gives e(x).
    throw std::logic_error("upper_update: eccentricity of node " + std::to_string(x) +
                           " inconsistent with its row");
  }
  if (in_upper_[x]) return false;
  in_upper_[x] = 1;
  upper_nodes_.push_back(x);
  upper_eccs_.push_back(e_x);
  const NodeId n = size();
  for (NodeId v = 0; v < n; ++v) upper_[v] = std::min(upper_[v], to_x.dist[v] + e_x);
  return true;
}

const char* to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::kRadius:
      return "radius";
    case CertificateKind::kDiameter:
      return "diameter";
    case CertificateKind::kAllEcc:
      return "all-ecc";
  }
  return "?";
}

GraphFingerprint GraphFingerprint::of(const Graph& g) {
  return {g.num_nodes(), g.num_arcs(), g.content_hash()};
}

namespace {

using Json = nlohmann::ordered_json;

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](unsigned char c) { return std::isdigit(c) != 0; });
}

template <typename T>
T get_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw BundleFormatError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw BundleFormatError(std::string("bad field '") + key + "': " + e.what());
  }
}

}  // namespace

std::string CertificateBundle::to_json() const {
  Json j;
  j["kind"] = to_string(kind);
  j["n"] = fingerprint.n;
  j["arc_count"] = fingerprint.arc_count;
  j["graph_sha256"] = fingerprint.sha256;
  if (all_digits(ranking)) {
    j["ranking"] = std::stoull(ranking);
  } else {
    j["ranking"] = ranking;
  }
  switch (kind) {
    case CertificateKind::kRadius:
      j["r"] = value;
      break;
    case CertificateKind::kDiameter:
      j["D"] = value;
      break;
    case CertificateKind::kAllEcc:
      j["ecc"] = ecc;
      break;
  }
  j["L"] = lower;
  Json u = Json::array();
  for (const UpperEntry& e : upper) {
    Json entry;
    entry["node"] = e.node;
    entry["ecc"] = e.ecc;
    u.push_back(std::move(entry));
  }
  j["U"] = std::move(u);
  if (witness != kNoNode) j["witness"] = witness;
  return j.dump(2) + "\n";
}

CertificateBundle CertificateBundle::from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw BundleFormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw BundleFormatError("bundle must be a JSON object");
  CertificateBundle b;
  const std::string kind = get_field<std::string>(j, "kind");
  if (kind == "radius") {
    b.kind = CertificateKind::kRadius;
    b.value = get_field<Dist>(j, "r");
  } else if (kind == "diameter") {
    b.kind = CertificateKind::kDiameter;
    b.value = get_field<Dist>(j, "D");
  } else if (kind == "all-ecc") {
    b.kind = CertificateKind::kAllEcc;
    b.ecc = get_field<std::vector<Dist>>(j, "ecc");
  } else {
    throw BundleFormatError("unknown kind '" + kind + "'");
  }
  b.fingerprint.n = get_field<NodeId>(j, "n");
  b.fingerprint.arc_count = get_field<std::uint64_t>(j, "arc_count");
  b.fingerprint.sha256 = get_field<std::string>(j, "graph_sha256");
  if (!j.contains("ranking")) throw BundleFormatError("missing field 'ranking'");
  const Json& r = j.at("ranking");
  if (r.is_string()) {
    b.ranking = r.get<std::string>();
  } else if (r.is_number_unsigned()) {
    b.ranking = std::to_string(r.get<std::uint64_t>());
  } else {
    throw BundleFormatError("bad field 'ranking'");
  }
  b.lower = get_field<std::vector<NodeId>>(j, "L");
  if (!j.contains("U") || !j.at("U").is_array()) throw BundleFormatError("bad field 'U'");
  for (const Json& e : j.at("U")) {
    if (!e.is_object()) throw BundleFormatError("bad entry in 'U'");
    b.upper.push_back({get_field<NodeId>(e, "node"), get_field<Dist>(e, "ecc")});
  }
  if (j.contains("witness")) b.witness = get_field<NodeId>(j, "witness");
  return b;
}

namespace {

AuditVerdict reject(AuditVerdict v, std::string reason, NodeId node = kNoNode) {
  v.accepted = false;
  v.reason = std::move(reason);
  v.failed_node = node;
  return v;
}

std::string first_bad_id(const std::vector<NodeId>& ids, NodeId n) {
  for (NodeId x : ids) {
    if (x >= n) return std::to_string(x);
  }
  return {};
}

}  // namespace

AuditVerdict verify_radius_certificate(const Graph& g, const std::vector<NodeId>& lower,
                                       Dist r, NodeId center) {
  const NodeId n = g.num_nodes();
  const Ranking ranking = Ranking::identity(n);
  DistanceEngine engine(g, ranking);
  AuditVerdict v;
  if (r < 0) return reject(v, "negative radius claim");
  if (const auto bad = first_bad_id(lower, n); !bad.empty()) {
    return reject(v, "certificate node " + bad + " out of range");
  }
  if (center != kNoNode && center >= n) return reject(v, "center out of range");

  std::vector<Dist> best(n, 0);
  v.witness_of.assign(n, kNoNode);
  for (NodeId x : lower) {
    const DistanceRow row = engine.backward(x);
    for (NodeId u = 0; u < n; ++u) {
      if (v.witness_of[u] == kNoNode || row.dist[u] > best[u]) {
        best[u] = row.dist[u];
        v.witness_of[u] = x;
      }
    }
  }
  for (NodeId u = 0; u < n; ++u) {
    if (best[u] < r) {
      v.sweeps = engine.sweeps();
      return reject(v,
                    "node " + std::to_string(u) + " has max distance " +
                        std::to_string(best[u]) + " < " + std::to_string(r) +
                        " to the certificate",
                    u);
    }
  }
  if (center != kNoNode) {
    const DistanceRow row = engine.forward(center);
    if (row.ecc != r) {
      v.sweeps = engine.sweeps();
      return reject(v,
                    "center " + std::to_string(center) + " has eccentricity " +
                        std::to_string(row.ecc) + ", not " + std::to_string(r),
                    center);
    }
  }
  v.sweeps = engine.sweeps();
  v.accepted = true;
  return v;
}

AuditVerdict verify_diameter_certificate(const Graph& g,
                                         const std::vector<UpperEntry>& upper, Dist D,
                                         NodeId witness) {
  const NodeId n = g.num_nodes();
  const Ranking ranking = Ranking::identity(n);
  DistanceEngine engine(g, ranking);
  AuditVerdict v;
  if (D < 0) return reject(v, "negative diameter claim");
  for (const UpperEntry& e : upper) {
    if (e.node >= n) return reject(v, "certificate node " + std::to_string(e.node) + " out of range");
  }
  if (witness != kNoNode && witness >= n) return reject(v, "witness out of range");

  std::vector<char> covered(n, 0);
  v.witness_of.assign(n, kNoNode);
  Dist witness_ecc = -1;
  for (const UpperEntry& e : upper) {
    const DistanceRow from = engine.forward(e.node);
    if (from.ecc != e.ecc) {
      v.sweeps = engine.sweeps();
      return reject(v,
                    "stored eccentricity " + std::to_string(e.ecc) + " of node " +
                        std::to_string(e.node) + " is stale (actual " +
                        std::to_string(from.ecc) + ")",
                    e.node);
    }
    if (e.node == witness) witness_ecc = from.ecc;
    const DistanceRow to = g.directed() ? engine.backward(e.node) : from;
    for (NodeId u = 0; u < n; ++u) {
      if (!covered[u] && to.dist[u] <= D - e.ecc) {
        covered[u] = 1;
        v.witness_of[u] = e.node;
      }
    }
  }
  for (NodeId u = 0; u < n; ++u) {
    if (!covered[u]) {
      v.sweeps = engine.sweeps();
      return reject(v, "node " + std::to_string(u) + " is not covered by any ball", u);
    }
  }
  if (witness != kNoNode) {
    if (witness_ecc < 0) witness_ecc = engine.forward(witness).ecc;
    if (witness_ecc != D) {
      v.sweeps = engine.sweeps();
      return reject(v,
                    "witness " + std::to_string(witness) + " has eccentricity " +
                        std::to_string(witness_ecc) + ", not " + std::to_string(D),
                    witness);
    }
  }
  v.sweeps = engine.sweeps();
  v.accepted = true;
  return v;
}

AuditVerdict verify_all_ecc_certificate(const Graph& g, const CertificateBundle& bundle) {
  const NodeId n = g.num_nodes();
  AuditVerdict v;
  if (bundle.kind != CertificateKind::kAllEcc) return reject(v, "not an all-ecc bundle");
  if (bundle.ecc.size() != n) return reject(v, "eccentricity array has wrong length");
  if (const auto bad = first_bad_id(bundle.lower, n); !bad.empty()) {
    return reject(v, "certificate node " + bad + " out of range");
  }
  for (const UpperEntry& e : bundle.upper) {
    if (e.node >= n) return reject(v, "certificate node " + std::to_string(e.node) + " out of range");
  }
  const Ranking ranking = Ranking::identity(n);
  DistanceEngine engine(g, ranking);
  BoundState bounds(n);
  for (NodeId x : bundle.lower) bounds.lower_update(x, engine.backward(x));
  for (const UpperEntry& e : bundle.upper) {
    if (bounds.in_upper(e.node)) continue;
    const DistanceRow from = engine.forward(e.node);
    if (from.ecc != e.ecc) {
      v.sweeps = engine.sweeps();
      return reject(v,
                    "stored eccentricity " + std::to_string(e.ecc) + " of node " +
                        std::to_string(e.node) + " is stale (actual " +
                        std::to_string(from.ecc) + ")",
                    e.node);
    }
    if (g.directed()) {
      bounds.upper_update(e.node, e.ecc, engine.backward(e.node), &from);
    } else {
      bounds.upper_update(e.node, e.ecc, from);
    }
  }
  v.sweeps = engine.sweeps();
  for (NodeId u = 0; u < n; ++u) {
    if (bounds.lower(u) != bundle.ecc[u] || bounds.upper(u) != bundle.ecc[u]) {
      v.mismatches.push_back(u);
    }
  }
  if (!v.mismatches.empty()) {
    const NodeId u = v.mismatches.front();
    const auto show = [](Dist d) { return d >= kInfinity ? std::string("inf") : std::to_string(d); };
    return reject(v,
                  std::to_string(v.mismatches.size()) + " node(s) not pinned; first is " +
                      std::to_string(u) + " with e_L=" + show(bounds.lower(u)) +
                      " e^U=" + show(bounds.upper(u)) + " claimed " +
                      std::to_string(bundle.ecc[u]),
                  u);
  }
  v.accepted = true;
  return v;
}

AuditVerdict verify_bundle(const Graph& g, const CertificateBundle& bundle) {
  if (!(bundle.fingerprint == GraphFingerprint::of(g))) {
    throw FingerprintMismatch("bundle was made for a different graph");
  }
  switch (bundle.kind) {
    case CertificateKind::kRadius:
      if (bundle.witness == kNoNode) return reject({}, "radius bundle lacks a center");
      return verify_radius_certificate(g, bundle.lower, bundle.value, bundle.witness);
    case CertificateKind::kDiameter:
      if (bundle.witness == kNoNode) return reject({}, "diameter bundle lacks a witness");
      return verify_diameter_certificate(g, bundle.upper, bundle.value, bundle.witness);
    case CertificateKind::kAllEcc:
      return verify_all_ecc_certificate(g, bundle);
  }
  return reject({}, "unknown bundle kind");
}

}  // namespace eccert
