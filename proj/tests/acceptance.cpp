// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eccert/analysis.hpp"
#include "eccert/chordal.hpp"
#include "eccert/certificates.hpp"
#include "eccert/generators.hpp"
#include "eccert/min_ecc_select.hpp"
#include "eccert/oracle.hpp"
#include "eccert/solvers.hpp"
#include "test_util.hpp"

namespace eccert {
namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects failures of one criterion; only the first few are printed.
struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (notes.size() < 5) notes.push_back(what);
  }
  bool ok() const { return failures == 0 && checks > 0; }
};

struct Run {
  std::string label;
  const Graph* graph = nullptr;
  const Ranking* ranking = nullptr;
  const oracle::DistanceMatrix* m = nullptr;
};

struct Emitted {
  Run run;
  CertificateBundle bundle;
};

struct RadiusRun {
  Run run;
  std::vector<NodeId> queried;
  Dist radius = 0;
};

int report(int id, const Tally& t, const std::string& detail) {
  std::printf("%s criterion %d: %s (%zu checks, %zu failures)\n", t.ok() ? "PASS" : "FAIL", id,
              detail.c_str(), t.checks, t.failures);
  for (const std::string& n : t.notes) std::printf("    %s\n", n.c_str());
  std::fflush(stdout);
  return t.ok() ? 0 : 1;
}

int report_error(int id, const std::exception& e) {
  std::printf("FAIL criterion %d: exception: %s\n", id, e.what());
  std::fflush(stdout);
  return 1;
}

// Class representative of x under mutual <=: smallest y with x <= y <= x.
NodeId class_rep(const oracle::DistanceMatrix& m, NodeId x) {
  for (NodeId y = 0; y < m.n; ++y) {
    if (m.ecc[x] == m.at(x, y) + m.ecc[y] && m.ecc[y] == m.at(y, x) + m.ecc[x]) return y;
  }
  return x;
}

bool hits_all_coballs(const oracle::DistanceMatrix& m, const std::vector<NodeId>& lower,
                      Dist r) {
  for (NodeId u = 0; u < m.n; ++u) {
    Dist best = 0;
    for (NodeId x : lower) best = std::max(best, m.at(u, x));
    if (best < r) return false;
  }
  return true;
}

bool covers_with_balls(const oracle::DistanceMatrix& m, const std::vector<UpperEntry>& upper,
                       Dist D) {
  for (NodeId u = 0; u < m.n; ++u) {
    bool hit = false;
    for (const UpperEntry& x : upper) hit = hit || m.at(u, x.node) <= D - m.ecc[x.node];
    if (!hit) return false;
  }
  return true;
}

bool tight_all_ecc(const oracle::DistanceMatrix& m, const std::vector<NodeId>& lower,
                   const std::vector<UpperEntry>& upper) {
  for (NodeId u = 0; u < m.n; ++u) {
    Dist lo = 0;
    Dist hi = kInfinity;
    for (NodeId x : lower) lo = std::max(lo, m.at(u, x));
    for (const UpperEntry& x : upper) hi = std::min(hi, m.at(u, x.node) + m.ecc[x.node]);
    if (lo != m.ecc[u] || hi != m.ecc[u]) return false;
  }
  return true;
}

// Mutations that must be rejected: value + 1, and each single removal that
// breaks the certificate according to the distance matrix.
std::vector<CertificateBundle> mutations(const Emitted& e) {
  const auto& m = *e.run.m;
  const CertificateBundle& b = e.bundle;
  std::vector<CertificateBundle> out;
  CertificateBundle bumped = b;
  if (b.kind == CertificateKind::kAllEcc) {
    bumped.ecc[bumped.ecc.size() / 2] += 1;
  } else {
    bumped.value += 1;
  }
  out.push_back(bumped);
  for (std::size_t i = 0; i < b.lower.size(); ++i) {
    CertificateBundle c = b;
    c.lower.erase(c.lower.begin() + static_cast<std::ptrdiff_t>(i));
    const bool broken = b.kind == CertificateKind::kRadius ? !hits_all_coballs(m, c.lower, b.value)
                        : b.kind == CertificateKind::kAllEcc ? !tight_all_ecc(m, c.lower, c.upper)
                                                             : false;
    if (broken) out.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < b.upper.size(); ++i) {
    CertificateBundle c = b;
    c.upper.erase(c.upper.begin() + static_cast<std::ptrdiff_t>(i));
    const bool broken = b.kind == CertificateKind::kDiameter ? !covers_with_balls(m, c.upper, b.value)
                        : b.kind == CertificateKind::kAllEcc ? !tight_all_ecc(m, c.lower, c.upper)
                                                             : false;
    if (broken) out.push_back(std::move(c));
  }
  return out;
}

struct Corpus {
  std::vector<testing::Instance> instances;
  std::vector<Ranking> rankings;
  std::vector<oracle::DistanceMatrix> matrices;
};

Corpus build_corpus() {
  Corpus c;
  c.instances = testing::small_corpus(7, 44);
  for (std::size_t i = 0; i < c.instances.size(); ++i) {
    const Graph& g = c.instances[i].graph;
    c.rankings.push_back(i % 3 == 2 ? Ranking::random(g.num_nodes(), 100 + i)
                                    : Ranking::identity(g.num_nodes()));
  }
  for (const auto& inst : c.instances) c.matrices.push_back(oracle::apsp(inst.graph));
  return c;
}

std::string label_of(const testing::Instance& inst, const Ranking& r) {
  return inst.label + "[" + r.label() + "]";
}

// Criterion 1 runs everything once and records what criteria 2, 3, 4 and 8
// need.
struct Oracle1 {
  std::vector<Emitted> bundles;
  std::vector<RadiusRun> radius_runs;
  Tally budgets;
  Tally maximals;
  double seconds = 0;
  std::size_t instances = 0;
};

void min_ecc_budget(const Graph& g, const Ranking& ranking, const oracle::DistanceMatrix& m,
                    const std::string& label, Tally& t) {
  const NodeId n = g.num_nodes();
  std::vector<SelectionObjective> fs = {
      [](NodeId, Dist l) { return l; },
      [n](NodeId v, Dist l) { return v < n / 2 + 1 ? l : kInfinity; },
      [](NodeId v, Dist l) { return l + static_cast<Dist>(v % 3); },
      [n](NodeId v, Dist l) { return v >= n / 2 ? 2 * l : kInfinity; },
  };
  DistanceEngine engine(g, ranking);
  BoundState bounds(n);
  std::size_t k = 0;
  std::size_t added = 0;
  for (const auto& f : fs) {
    const Selection s = arg_min_ecc(engine, bounds, f);
    ++k;
    added += s.added_lower.size();
    Dist best = kInfinity;
    for (NodeId v = 0; v < n; ++v) best = std::min(best, f(v, m.ecc[v]));
    t.expect(s.value == best, label + ": min-ecc-select value");
  }
  t.expect(engine.sweeps() <= k + 2 * added,
           label + ": min-ecc-select sweeps " + std::to_string(engine.sweeps()) + " > k+2|L'| = " +
               std::to_string(k + 2 * added));
}

int criterion1(Corpus& c, Oracle1& o) {
  Tally t;
  const auto t0 = Clock::now();
  c = build_corpus();
  const Alpha alphas[] = {{1, 4}, {1, 3}, {1, 2}, {3, 4}};
  const DiameterVariant variants[] = {DiameterVariant::kBasic, DiameterVariant::kCenterInit,
                                      DiameterVariant::kDelegate,
                                      DiameterVariant::kCenterInitDelegate};
  for (std::size_t i = 0; i < c.instances.size(); ++i) {
    const auto& inst = c.instances[i];
    const Graph& g = inst.graph;
    const Ranking& ranking = c.rankings[i];
    const auto& m = c.matrices[i];
    const std::string label = label_of(inst, ranking);
    const Run run{label, &g, &ranking, &m};
    const Dist rad = m.radius();
    const Dist diam = m.diameter();
    ++o.instances;

    const RadiusResult r = radius(g, ranking);
    t.expect(r.radius == rad && m.ecc[r.center] == rad, label + ": radius");
    o.budgets.expect(r.report.sweeps <= 2 * r.lower.size() + 1,
                     label + ": radius sweeps " + std::to_string(r.report.sweeps) +
                         " > 2|L|+1");
    o.bundles.push_back({run, r.bundle});
    o.radius_runs.push_back({run, r.queried, r.radius});

    for (DiameterVariant v : variants) {
      const DiameterResult d = diameter(g, ranking, v);
      t.expect(d.diameter == diam && m.ecc[d.witness] == diam,
               label + ": diameter " + to_string(v));
      o.bundles.push_back({run, d.bundle});
    }
    for (const Alpha& a : alphas) {
      const DiameterResult d = diameter_doubling(g, ranking, a);
      t.expect(d.diameter == diam, label + ": doubling alpha=" + to_string(a));
      o.bundles.push_back({run, d.bundle});
    }

    const AllEccResult all = all_eccentricities(g, ranking);
    t.expect(all.ecc == m.ecc, label + ": all eccentricities");
    o.bundles.push_back({run, all.bundle});
    const auto maximals = oracle::preceq_maximals(m);
    // Directed runs pay a forward and a backward sweep per member of U.
    const std::size_t per_upper = g.directed() ? 2 : 1;
    o.budgets.expect(all.report.sweeps <= per_upper * maximals.size() + 2 * all.lower.size(),
                     label + ": all-ecc sweeps " + std::to_string(all.report.sweeps) +
                         " over budget");
    std::set<NodeId> reps;
    for (const UpperEntry& x : all.upper) reps.insert(class_rep(m, x.node));
    o.maximals.expect(all.upper.size() == maximals.size() &&
                          std::vector<NodeId>(reps.begin(), reps.end()) == maximals,
                      label + ": U differs from the maximal elements");

    min_ecc_budget(g, ranking, m, label, o.budgets);

    if (inst.chordal) {
      const ChordalDiameterResult cd = chordal_diameter(g, ranking);
      t.expect(cd.diameter == diam, label + ": chordal diameter");
      o.bundles.push_back({run, cd.bundle});
      const ChordalAllEccResult ca = chordal_all_ecc(g, ranking);
      t.expect(ca.ecc == m.ecc, label + ": chordal all eccentricities");
      o.bundles.push_back({run, ca.bundle});
    }
  }
  o.seconds = since(t0);
  t.expect(o.seconds < 120.0, "runtime " + std::to_string(o.seconds) + " s");
  std::ostringstream detail;
  detail << "oracle equivalence on " << o.instances << " instances, " << o.bundles.size()
         << " bundles, " << static_cast<int>(o.seconds * 1000) / 1000.0 << " s";
  return report(1, t, detail.str());
}

int criterion2(const Oracle1& o) {
  Tally t;
  std::size_t mutated = 0;
  for (const Emitted& e : o.bundles) {
    const Graph& g = *e.run.graph;
    const AuditVerdict v = verify_bundle(g, e.bundle);
    t.expect(v.accepted, e.run.label + ": " + to_string(e.bundle.kind) +
                             " bundle rejected: " + v.reason);
    // Round trip through JSON as a file would.
    const CertificateBundle back = CertificateBundle::from_json(e.bundle.to_json());
    t.expect(verify_bundle(g, back).accepted, e.run.label + ": JSON round trip");
    for (const CertificateBundle& bad : mutations(e)) {
      ++mutated;
      t.expect(!verify_bundle(g, bad).accepted,
               e.run.label + ": mutated " + to_string(bad.kind) + " bundle accepted");
    }
  }
  t.expect(mutated >= 100, "fewer than 100 mutations");
  return report(2, t, std::to_string(o.bundles.size()) + " bundles verified, " +
                          std::to_string(mutated) + " mutations all rejected");
}

int criterion3(const Oracle1& o) {
  return report(3, o.budgets,
                "radius <= 2|L|+1, all-ecc <= |U|+2|L| (2|U|+2|L| on digraphs), "
                "min-ecc-select <= k+2|L'|");
}

int criterion4(const Oracle1& o) {
  return report(4, o.maximals, "all-ecc U equals the maximal elements of the tight order");
}

int criterion5(std::vector<RadiusRun>& runs, std::vector<Graph>& keep,
               std::vector<Ranking>& keep_rankings) {
  Tally t;
  const NodeId ps[] = {2, 5, 20};
  const NodeId qs[] = {6, 10, 20};
  std::uint64_t max_sweeps = 0;
  std::uint64_t plain_max = 0;
  for (NodeId q : qs) {
    std::uint64_t basic_p2 = 0;
    std::uint64_t basic_p20 = 0;
    for (NodeId p : ps) {
      const Graph g = gen_bowtie(p, q);
      const Ranking ranking = Ranking::identity(g.num_nodes());
      const std::string label = "bowtie(" + std::to_string(p) + "," + std::to_string(q) + ")";
      const auto m = oracle::apsp(g);
      t.expect(m.diameter() == 4 * static_cast<Dist>(q) - 2, label + ": diam");
      t.expect(m.radius() == 2 * static_cast<Dist>(q) + 1, label + ": rad");
      const RadiusResult r = radius(g, ranking);
      // Center seeding with delegate certificates; plain center seeding is
      // only reported, since the family is built to make it slow.
      const DiameterResult d = diameter(g, ranking, DiameterVariant::kCenterInitDelegate);
      const DiameterResult plain = diameter(g, ranking, DiameterVariant::kCenterInit);
      plain_max = std::max(plain_max, plain.report.sweeps);
      const DiameterResult b = diameter(g, ranking, DiameterVariant::kBasic);
      t.expect(r.radius == m.radius() && d.diameter == m.diameter() && b.diameter == m.diameter(),
               label + ": solver values");
      t.expect(r.report.sweeps <= 30, label + ": radius sweeps " + std::to_string(r.report.sweeps));
      t.expect(d.report.sweeps <= 30,
               label + ": center_init_delegate sweeps " + std::to_string(d.report.sweeps));
      max_sweeps = std::max({max_sweeps, r.report.sweeps, d.report.sweeps});
      if (p == 2) basic_p2 = b.report.sweeps;
      if (p == 20) basic_p20 = b.report.sweeps;
      keep.push_back(g);
      keep_rankings.push_back(ranking);
      runs.push_back({{label, nullptr, nullptr, nullptr}, r.queried, r.radius});
    }
    t.expect(basic_p20 > basic_p2, "q=" + std::to_string(q) + ": basic sweeps " +
                                       std::to_string(basic_p2) + " at p=2, " +
                                       std::to_string(basic_p20) + " at p=20");
  }

  const auto t0 = Clock::now();
  const Graph big = gen_bowtie(500, 500);
  t.expect(big.num_nodes() == 505002, "BT500 has " + std::to_string(big.num_nodes()) + " nodes");
  const Ranking ranking = Ranking::identity(big.num_nodes());
  const auto t1 = Clock::now();
  const RadiusResult r = radius(big, ranking);
  const DiameterResult d = diameter(big, ranking, DiameterVariant::kCenterInitDelegate);
  const double solve = since(t1);
  t.expect(r.radius == 1001 && d.diameter == 1998, "BT500 values");
  t.expect(solve < 60.0, "BT500 solvers took " + std::to_string(solve) + " s");
  keep.push_back(big);
  keep_rankings.push_back(ranking);
  runs.push_back({{"bowtie(500,500)", nullptr, nullptr, nullptr}, r.queried, r.radius});
  std::ostringstream detail;
  detail << "bow-ties: radius and center_init_delegate at most " << max_sweeps
         << " sweeps (center_init up to " << plain_max << "); BT500 n=" << big.num_nodes()
         << " solved in " << static_cast<int>(solve * 100) / 100.0 << " s (build "
         << static_cast<int>((since(t0) - solve) * 100) / 100.0 << " s)";
  return report(5, t, detail.str());
}

int criterion6(const Graph& bt500) {
  Tally t;
  const Ranking ranking = Ranking::identity(bt500.num_nodes());
  const RadiusResult r = radius(bt500, ranking);
  const DiameterResult d = diameter(bt500, ranking, DiameterVariant::kCenterInitDelegate);
  t.expect(r.lower.size() <= 10, "bowtie500 R=" + std::to_string(r.lower.size()));
  t.expect(d.upper.size() <= 6, "bowtie500 D=" + std::to_string(d.upper.size()));

  const Graph grid = testing::core(gen_grid(101, 0.10, 1));
  const GraphProfile p =
      profile(grid, Ranking::identity(grid.num_nodes()), {false, "grid", "grid101-10"});
  t.expect(p.diameter_cert <= 3, "grid101-10 D=" + std::to_string(p.diameter_cert));
  t.expect(std::fabs(p.ratio() - 2.0) <= 0.05,
           "grid101-10 ratio " + std::to_string(p.ratio()));
  char buf[160];
  std::snprintf(buf, sizeof buf, "bowtie500 R=%zu D=%zu; grid101-10 D=%zu ratio=%.3f (n=%u)",
                r.lower.size(), d.upper.size(), p.diameter_cert, p.ratio(), p.n);
  return report(6, t, buf);
}

int criterion7() {
  Tally t;
  std::size_t max_lower = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const NodeId n = 2 + static_cast<NodeId>((s * 37 + 11) % 199);
    const Graph g = gen_random_tree(n, 5000 + s);
    const Ranking ranking = Ranking::identity(n);
    const auto m = oracle::apsp(g);
    const RadiusResult r = radius(g, ranking);
    const std::string label = "tree n=" + std::to_string(n) + " seed=" + std::to_string(5000 + s);
    t.expect(!r.lower.empty() && m.ecc[r.lower.front()] == m.diameter(),
             label + ": first antipode pair misses the diameter");
    t.expect(r.lower.size() <= 2, label + ": |L|=" + std::to_string(r.lower.size()));
    t.expect(r.radius == m.radius(), label + ": radius");
    max_lower = std::max(max_lower, r.lower.size());
  }
  return report(7, t, "100 trees, first antipode pair diametral, max |L|=" +
                          std::to_string(max_lower));
}

int criterion8(const std::vector<RadiusRun>& runs) {
  Tally t;
  std::size_t undirected = 0;
  for (const RadiusRun& r : runs) {
    const Graph& g = *r.run.graph;
    if (g.directed()) continue;
    ++undirected;
    const AuditVerdict v = antipode_closure_check(g, *r.run.ranking, r.queried, r.radius);
    t.expect(v.accepted, r.run.label + ": " + v.reason);
  }
  return report(8, t, "antipode closure certifies rad on " + std::to_string(undirected) +
                          " undirected radius runs");
}

int criterion9() {
  Tally t;
  std::size_t pair_cases = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    Graph g;
    std::string label;
    if (s % 4 == 3) {
      const NodeId k = 2 + static_cast<NodeId>(s % 9);
      g = gen_clique_staircase(k);
      label = "staircase k=" + std::to_string(k);
    } else if (s % 2 == 0) {
      const NodeId n = 5 + static_cast<NodeId>((s * 17) % 80);
      const NodeId k = 1 + static_cast<NodeId>(s % 3);
      g = gen_ktree(n, k, 9000 + s);
      label = "ktree n=" + std::to_string(n) + " k=" + std::to_string(k);
    } else {
      const NodeId n = 10 + static_cast<NodeId>((s * 13) % 90);
      g = testing::core(gen_interval(n, 2.0 + static_cast<double>(s % 5), 9000 + s));
      label = "interval n=" + std::to_string(n);
    }
    label += " seed=" + std::to_string(9000 + s);
    const ChordalCheckReport rep = chordal_certificate_checks(g);
    t.expect(rep.ok(), label + ": " + rep.failure);
    if (rep.pair_applicable) ++pair_cases;
  }
  return report(9, t, "100 chordal graphs, pair rule exercised on " +
                          std::to_string(pair_cases));
}

int criterion10() {
  Tally t;
  double worst_r = 0;
  double worst_d = 2;
  for (NodeId k = 9; k <= 15; ++k) {
    const Graph g = gen_grid(k);
    const auto m = oracle::apsp(g);
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const Ranking ranking = seed == 0 ? Ranking::identity(g.num_nodes())
                                        : Ranking::random(g.num_nodes(), seed);
      const std::string label = "grid " + std::to_string(k) + " ranking " + ranking.label();
      const ApproxResult r = radius_approx(g, ranking, 0.25, 16);
      const ApproxResult d = diameter_approx(g, ranking, 0.25, 16);
      t.expect(r.ecc == m.ecc[r.node] && d.ecc == m.ecc[d.node], label + ": reported ecc");
      t.expect(4 * r.ecc <= 5 * m.radius(), label + ": radius_approx e=" + std::to_string(r.ecc));
      t.expect(4 * d.ecc >= 3 * m.diameter(),
               label + ": diameter_approx e=" + std::to_string(d.ecc));
      worst_r = std::max(worst_r, static_cast<double>(r.ecc) / m.radius());
      worst_d = std::min(worst_d, static_cast<double>(d.ecc) / m.diameter());
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "grids 9..15, worst e/rad=%.3f, worst e/diam=%.3f", worst_r,
                worst_d);
  return report(10, t, buf);
}

}  // namespace
}  // namespace eccert

int main() {
  using namespace eccert;
  int failed = 0;
  Corpus corpus;
  Oracle1 o;
  try {
    failed += criterion1(corpus, o);
  } catch (const std::exception& e) {
    failed += report_error(1, e);
  }
  try {
    failed += criterion2(o);
  } catch (const std::exception& e) {
    failed += report_error(2, e);
  }
  failed += criterion3(o);
  failed += criterion4(o);

  std::vector<RadiusRun> bowtie_runs;
  std::vector<Graph> bowties;
  std::vector<Ranking> bowtie_rankings;
  try {
    bowties.reserve(16);
    bowtie_rankings.reserve(16);
    failed += criterion5(bowtie_runs, bowties, bowtie_rankings);
  } catch (const std::exception& e) {
    failed += report_error(5, e);
  }
  try {
    if (bowties.empty()) throw std::runtime_error("bow-tie runs missing");
    failed += criterion6(bowties.back());
  } catch (const std::exception& e) {
    failed += report_error(6, e);
  }
  try {
    failed += criterion7();
  } catch (const std::exception& e) {
    failed += report_error(7, e);
  }
  try {
    std::vector<RadiusRun> runs = o.radius_runs;
    for (std::size_t i = 0; i < bowtie_runs.size(); ++i) {
      bowtie_runs[i].run.graph = &bowties[i];
      bowtie_runs[i].run.ranking = &bowtie_rankings[i];
      runs.push_back(bowtie_runs[i]);
    }
    failed += criterion8(runs);
  } catch (const std::exception& e) {
    failed += report_error(8, e);
  }
  try {
    failed += criterion9();
  } catch (const std::exception& e) {
    failed += report_error(9, e);
  }
  try {
    failed += criterion10();
  } catch (const std::exception& e) {
    failed += report_error(10, e);
  }
  std::printf("%d of 10 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
