#include "eccert/cli.hpp"

#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

#include <CLI11.hpp>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "eccert/analysis.hpp"
#include "eccert/certificates.hpp"
#include "eccert/chordal.hpp"
#include "eccert/generators.hpp"
#include "eccert/io.hpp"
#include "eccert/solvers.hpp"

namespace eccert {
namespace {

// Input errors that map to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string path;
  std::string format = "auto";
  std::string ranking = "id";
};

struct LoadedGraph {
  CoreRestriction core;
  Ranking ranking;
};

InputFormat parse_format(const std::string& s) {
  if (s == "auto") return InputFormat::kAuto;
  if (s == "el") return InputFormat::kEdgeList;
  if (s == "gr") return InputFormat::kDimacs;
  throw UsageError("unknown format '" + s + "' (expected el, gr or auto)");
}

Ranking parse_ranking(const std::string& s, NodeId n) {
  if (s == "id") return Ranking::identity(n);
  const std::string prefix = "random:";
  if (s.rfind(prefix, 0) == 0) {
    const std::string digits = s.substr(prefix.size());
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
      try {
        return Ranking::random(n, std::stoull(digits));
      } catch (const std::out_of_range&) {
      }
    }
  }
  throw UsageError("unknown ranking '" + s + "' (expected id or random:SEED)");
}

LoadedGraph load(const InputOptions& in, std::ostream& err) {
  std::vector<std::string> warnings;
  Graph g;
  try {
    g = load_graph(in.path, parse_format(in.format), &warnings);
  } catch (const ParseError&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  for (const std::string& w : warnings) err << "warning: " << w << '\n';
  if (g.num_nodes() == 0) throw UsageError("input graph is empty");
  LoadedGraph out{restrict_to_core(g), {}};
  if (out.core.new_to_old.size() != g.num_nodes()) {
    err << "core: kept " << out.core.new_to_old.size() << " of " << g.num_nodes()
        << " nodes (" << out.core.kept_fraction() << "); node ids below refer to the core\n";
  }
  out.ranking = parse_ranking(in.ranking, out.core.graph.num_nodes());
  return out;
}

void add_input_flags(CLI::App* cmd, InputOptions& in, bool with_ranking) {
  cmd->add_option("--input", in.path, "graph file, '-' for stdin")->required();
  cmd->add_option("--format", in.format, "el, gr or auto");
  if (with_ranking) cmd->add_option("--ranking", in.ranking, "id or random:SEED");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
  if (!f) throw std::runtime_error("write failed for " + path);
}

// Appends in a single write(2) on an O_APPEND descriptor so concurrent
// profilers never interleave rows.
void append_csv(const std::string& path, const std::string& header, const std::string& row) {
  const int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
  if (fd < 0) throw std::runtime_error("cannot open " + path + ": " + std::strerror(errno));
  struct stat st {};
  std::string text = row + "\n";
  if (::fstat(fd, &st) == 0 && st.st_size == 0) text = header + "\n" + text;
  const ssize_t wrote = ::write(fd, text.data(), text.size());
  ::close(fd);
  if (wrote != static_cast<ssize_t>(text.size())) throw std::runtime_error("short write to " + path);
}

std::string base_name(const std::string& path) {
  std::string s = path.substr(path.find_last_of('/') + 1);
  for (const char* ext : {".gz", ".el", ".gr", ".txt"}) {
    const std::string e = ext;
    if (s.size() > e.size() && s.compare(s.size() - e.size(), e.size(), e) == 0) {
      s.resize(s.size() - e.size());
    }
  }
  return s;
}

struct SolveOptions {
  InputOptions in;
  std::string variant;
  std::string alpha = "1/2";
  std::string cert_out;
  std::string ecc_out;
  bool no_self_check = false;
};

void finish_bundle(const SolveOptions& o, const CertificateBundle& bundle) {
  if (!o.cert_out.empty()) write_file(o.cert_out, bundle.to_json());
}

int cmd_radius(const SolveOptions& o, std::ostream& out, std::ostream& err) {
  if (!o.variant.empty() && o.variant != "default") {
    throw UsageError("radius has no variant '" + o.variant + "'");
  }
  const LoadedGraph lg = load(o.in, err);
  const RadiusResult r = radius(lg.core.graph, lg.ranking, {LowerBoundRule::kOneSided, !o.no_self_check});
  out << "radius=" << r.radius << " center=" << r.center << " sweeps=" << r.report.sweeps
      << " |L|=" << r.lower.size() << '\n';
  finish_bundle(o, r.bundle);
  return kExitOk;
}

int cmd_diameter(const SolveOptions& o, std::ostream& out, std::ostream& err) {
  const LoadedGraph lg = load(o.in, err);
  const Graph& g = lg.core.graph;
  const SolverOptions opts{LowerBoundRule::kOneSided, !o.no_self_check};
  const std::string variant = o.variant.empty() ? "center_init_delegate" : o.variant;
  DiameterResult r;
  if (variant == "doubling") {
    Alpha alpha;
    try {
      alpha = parse_alpha(o.alpha);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    r = diameter_doubling(g, lg.ranking, alpha, opts);
  } else if (variant == "chordal") {
    r = chordal_diameter(g, lg.ranking, opts);
  } else {
    DiameterVariant v;
    try {
      v = parse_diameter_variant(variant);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    r = diameter(g, lg.ranking, v, opts);
  }
  out << "diameter=" << r.diameter << " witness=" << r.witness << " sweeps=" << r.report.sweeps
      << " |U|=" << r.upper.size() << '\n';
  finish_bundle(o, r.bundle);
  return kExitOk;
}

int cmd_ecc_all(const SolveOptions& o, std::ostream& out, std::ostream& err) {
  const LoadedGraph lg = load(o.in, err);
  const Graph& g = lg.core.graph;
  AllEccResult r;
  if (o.variant == "chordal") {
    r = chordal_all_ecc(g, lg.ranking, {true, !o.no_self_check});
  } else if (o.variant.empty() || o.variant == "default") {
    r = all_eccentricities(g, lg.ranking, {LowerBoundRule::kOneSided, !o.no_self_check});
  } else {
    throw UsageError("ecc-all has no variant '" + o.variant + "'");
  }
  Dist rad = kInfinity;
  Dist diam = 0;
  for (Dist e : r.ecc) {
    rad = std::min(rad, e);
    diam = std::max(diam, e);
  }
  out << "radius=" << rad << " diameter=" << diam << " sweeps=" << r.report.sweeps
      << " |U|=" << r.upper.size() << " |L|=" << r.lower.size() << '\n';
  if (!o.ecc_out.empty()) {
    std::string text;
    for (NodeId v = 0; v < r.ecc.size(); ++v) {
      text += std::to_string(v) + ' ' + std::to_string(r.ecc[v]) + '\n';
    }
    write_file(o.ecc_out, text);
  }
  finish_bundle(o, r.bundle);
  return kExitOk;
}

struct VerifyOptions {
  InputOptions in;
  std::string cert;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  const LoadedGraph lg = load(o.in, err);
  CertificateBundle bundle;
  try {
    bundle = CertificateBundle::from_json(read_input(o.cert));
  } catch (const BundleFormatError& e) {
    throw UsageError(std::string("bad certificate: ") + e.what());
  }
  AuditVerdict v;
  try {
    v = verify_bundle(lg.core.graph, bundle);
  } catch (const FingerprintMismatch& e) {
    out << "verdict=mismatch reason=\"" << e.what() << "\"\n";
    return kExitFingerprint;
  }
  out << "kind=" << to_string(bundle.kind);
  if (bundle.kind != CertificateKind::kAllEcc) out << " value=" << bundle.value;
  out << " |L|=" << bundle.lower.size() << " |U|=" << bundle.upper.size()
      << " sweeps=" << v.sweeps << '\n';
  if (!v.accepted) {
    out << "verdict=reject reason=\"" << v.reason << "\"";
    if (v.failed_node != kNoNode) out << " first_node=" << v.failed_node;
    if (!v.mismatches.empty()) out << " mismatches=" << v.mismatches.size();
    out << '\n';
    return kExitVerify;
  }
  // Audit listing: how many nodes each certificate member vouches for.
  std::map<NodeId, std::size_t> load_of;
  for (NodeId w : v.witness_of) {
    if (w != kNoNode) ++load_of[w];
  }
  for (const auto& [node, count] : load_of) out << "member " << node << " covers " << count << '\n';
  out << "verdict=accept\n";
  return kExitOk;
}

struct ProfileCliOptions {
  InputOptions in;
  bool full = false;
  std::string csv_out;
  std::string type = "-";
  std::string name;
};

int cmd_profile(const ProfileCliOptions& o, std::ostream& out, std::ostream& err) {
  const LoadedGraph lg = load(o.in, err);
  ProfileOptions po;
  po.full = o.full;
  po.type = o.type;
  po.name = o.name.empty() ? base_name(o.in.path) : o.name;
  const GraphProfile p = profile(lg.core.graph, lg.ranking, po);
  const std::string row = profile_csv_row(p);
  out << profile_csv_header() << '\n' << row << '\n';
  out << "diameter=" << p.diameter << " radius=" << p.radius << '\n';
  if (!o.csv_out.empty()) append_csv(o.csv_out, profile_csv_header(), row);
  return kExitOk;
}

struct GenerateOptions {
  std::string family;
  std::uint64_t p = 0, q = 0, k = 0, n = 0;
  double fraction = 0.0;
  double exponent = 2.5;
  double degree = 10.0;
  double length = 4.0;
  double prob = 0.1;
  std::uint64_t seed = 0;
  std::string out;
};

NodeId need(std::uint64_t v, const char* flag) {
  if (v == 0) throw UsageError(std::string("family needs ") + flag);
  if (v >= kNoNode) throw UsageError(std::string(flag) + " too large");
  return static_cast<NodeId>(v);
}

int cmd_generate(const GenerateOptions& o, std::ostream& out) {
  const std::string& f = o.family;
  std::ostringstream spec;
  spec << "family=" << f;
  Graph g;
  try {
    if (f == "path") {
      g = gen_path(need(o.n, "--n"));
      spec << " n=" << o.n;
    } else if (f == "cycle") {
      g = gen_cycle(need(o.n, "--n"));
      spec << " n=" << o.n;
    } else if (f == "star") {
      g = gen_star(need(o.k, "--k"));
      spec << " k=" << o.k;
    } else if (f == "complete") {
      g = gen_complete(need(o.n, "--n"));
      spec << " n=" << o.n;
    } else if (f == "grid") {
      g = gen_grid(need(o.k, "--k"), o.fraction, o.seed);
      spec << " k=" << o.k << " fraction=" << o.fraction << " seed=" << o.seed;
    } else if (f == "wgrid") {
      g = gen_weighted_directed_grid(need(o.k, "--k"), o.seed);
      spec << " k=" << o.k << " seed=" << o.seed;
    } else if (f == "bowtie") {
      g = gen_bowtie(need(o.p, "--p"), need(o.q, "--q"));
      spec << " p=" << o.p << " q=" << o.q;
    } else if (f == "powerlaw") {
      g = gen_powerlaw(need(o.n, "--n"), o.exponent, o.seed);
      spec << " n=" << o.n << " exponent=" << o.exponent << " seed=" << o.seed;
    } else if (f == "udg") {
      g = gen_udg(need(o.n, "--n"), o.degree, o.seed);
      spec << " n=" << o.n << " degree=" << o.degree << " seed=" << o.seed;
    } else if (f == "ktree") {
      g = gen_ktree(need(o.n, "--n"), need(o.k, "--k"), o.seed);
      spec << " n=" << o.n << " k=" << o.k << " seed=" << o.seed;
    } else if (f == "interval") {
      g = gen_interval(need(o.n, "--n"), o.length, o.seed);
      spec << " n=" << o.n << " length=" << o.length << " seed=" << o.seed;
    } else if (f == "er") {
      g = gen_erdos_renyi(need(o.n, "--n"), o.prob, o.seed);
      spec << " n=" << o.n << " prob=" << o.prob << " seed=" << o.seed;
    } else if (f == "tree") {
      g = gen_random_tree(need(o.n, "--n"), o.seed);
      spec << " n=" << o.n << " seed=" << o.seed;
    } else if (f == "staircase") {
      g = gen_clique_staircase(need(o.k, "--k"));
      spec << " k=" << o.k;
    } else {
      throw UsageError("unknown family '" + f + "'");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::vector<std::string> comment{"eccert generate " + spec.str()};
  if (o.out.empty() || o.out == "-") {
    write_edge_list(out, g, comment);
  } else {
    std::ofstream f_out(o.out, std::ios::binary);
    if (!f_out) throw std::runtime_error("cannot write " + o.out);
    write_edge_list(f_out, g, comment);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact radius, diameter and eccentricities with certificates", "eccert"};
  app.require_subcommand(1, 1);

  SolveOptions solve;
  auto* c_radius = app.add_subcommand("radius", "radius with a lower certificate");
  auto* c_diameter = app.add_subcommand("diameter", "diameter with an upper certificate");
  auto* c_ecc = app.add_subcommand("ecc-all", "all eccentricities with tight certificates");
  for (CLI::App* c : {c_radius, c_diameter, c_ecc}) {
    add_input_flags(c, solve.in, true);
    c->add_option("--variant", solve.variant, "solver variant");
    c->add_option("--cert-out", solve.cert_out, "write the certificate bundle (JSON)");
    c->add_flag("--no-self-check", solve.no_self_check, "skip re-verifying the bundle");
  }
  c_diameter->add_option("--alpha", solve.alpha, "doubling parameter in (0,1)");
  c_ecc->add_option("--ecc-out", solve.ecc_out, "write 'node ecc' lines");

  VerifyOptions verify;
  auto* c_verify = app.add_subcommand("verify", "audit a certificate bundle");
  add_input_flags(c_verify, verify.in, false);
  c_verify->add_option("--cert", verify.cert, "bundle JSON")->required();

  ProfileCliOptions prof;
  auto* c_profile = app.add_subcommand("profile", "structural profile as a CSV row");
  add_input_flags(c_profile, prof.in, true);
  c_profile->add_flag("--full", prof.full, "also count antipodes and furthest nodes (n sweeps)");
  c_profile->add_option("--csv-out", prof.csv_out, "append the row to this CSV");
  c_profile->add_option("--type", prof.type, "type column");
  c_profile->add_option("--name", prof.name, "name column (default: input file name)");

  GenerateOptions gen;
  auto* c_gen = app.add_subcommand("generate", "write a synthetic graph");
  c_gen->add_option("--family", gen.family,
                    "path cycle star complete grid wgrid bowtie powerlaw udg ktree interval er "
                    "tree staircase")
      ->required();
  c_gen->add_option("--p", gen.p);
  c_gen->add_option("--q", gen.q);
  c_gen->add_option("--k", gen.k);
  c_gen->add_option("--n", gen.n);
  c_gen->add_option("--fraction", gen.fraction, "grid edge deletion fraction");
  c_gen->add_option("--exponent", gen.exponent, "power-law exponent");
  c_gen->add_option("--degree", gen.degree, "unit-disk target average degree");
  c_gen->add_option("--length", gen.length, "interval maximum length");
  c_gen->add_option("--prob", gen.prob, "edge probability");
  c_gen->add_option("--seed", gen.seed);
  c_gen->add_option("--out", gen.out, "output path (default stdout)");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }

  try {
    if (c_radius->parsed()) return cmd_radius(solve, out, err);
    if (c_diameter->parsed()) return cmd_diameter(solve, out, err);
    if (c_ecc->parsed()) return cmd_ecc_all(solve, out, err);
    if (c_verify->parsed()) return cmd_verify(verify, out, err);
    if (c_profile->parsed()) return cmd_profile(prof, out, err);
    if (c_gen->parsed()) return cmd_generate(gen, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const NotChordal& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const SelfCheckFailure& e) {
    err << "self-check failed: " << e.what() << '\n';
    return kExitVerify;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitParse;
}

}  // namespace eccert
