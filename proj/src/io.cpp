#include "eccert/io.hpp"

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace eccert {
namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool next(std::string_view& line) {
    if (pos_ >= text_.size()) return false;
    std::size_t end = text_.find('\n', pos_);
    if (end == std::string_view::npos) end = text_.size();
    line = text_.substr(pos_, end - pos_);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos_ = end + 1;
    ++line_no_;
    return true;
  }
  std::size_t line_no() const { return line_no_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view field, std::size_t line_no, const char* what) {
  if (!field.empty() && field.front() == '-') {
    throw ParseError(line_no, std::string("negative ") + what);
  }
  T value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line_no, std::string("malformed ") + what + " '" +
                                  std::string(field) + "'");
  }
  return value;
}

std::string slurp(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  std::vector<Arc> arcs;
  bool have_header = false;
  bool directed = false;
  std::uint64_t declared_n = 0;
  std::uint64_t max_id = 0;
  bool any_arc = false;

  while (reader.next(line)) {
    const auto fields = split_fields(line);
    if (fields.empty() || fields[0].front() == '#' || fields[0].front() == '%') continue;
    if (fields[0] == "n") {
      if (have_header || any_arc) throw ParseError(reader.line_no(), "misplaced header");
      if (fields.size() != 4 || fields[2] != "directed") {
        throw ParseError(reader.line_no(), "header must be 'n <count> directed <0|1>'");
      }
      declared_n = parse_number<std::uint64_t>(fields[1], reader.line_no(), "node count");
      const auto d = parse_number<unsigned>(fields[3], reader.line_no(), "directed flag");
      if (d > 1) throw ParseError(reader.line_no(), "directed flag must be 0 or 1");
      if (declared_n >= kNoNode) throw ParseError(reader.line_no(), "node count too large");
      directed = d == 1;
      have_header = true;
      continue;
    }
    if (fields.size() != 2 && fields.size() != 3) {
      throw ParseError(reader.line_no(), "expected 'u v' or 'u v w'");
    }
    const auto u = parse_number<std::uint64_t>(fields[0], reader.line_no(), "node id");
    const auto v = parse_number<std::uint64_t>(fields[1], reader.line_no(), "node id");
    Dist w = 1;
    if (fields.size() == 3) w = parse_number<Dist>(fields[2], reader.line_no(), "weight");
    if (have_header && (u >= declared_n || v >= declared_n)) {
      throw ParseError(reader.line_no(), "node id exceeds declared n");
    }
    if (u >= kNoNode - 1 || v >= kNoNode - 1) {
      throw ParseError(reader.line_no(), "node id too large");
    }
    max_id = std::max({max_id, u, v});
    any_arc = true;
    arcs.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), w});
  }
  const NodeId n = have_header ? static_cast<NodeId>(declared_n)
                               : (any_arc ? static_cast<NodeId>(max_id + 1) : 0);
  return Graph::from_arcs(n, directed, std::move(arcs));
}

Graph parse_edge_list(std::istream& in) { return parse_edge_list(slurp(in)); }

Graph parse_dimacs_gr(std::string_view text, std::vector<std::string>* warnings) {
  LineReader reader(text);
  std::string_view line;
  std::vector<Arc> arcs;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;

  while (reader.next(line)) {
    const auto fields = split_fields(line);
    if (fields.empty() || fields[0] == "c") continue;
    if (fields[0] == "p") {
      if (have_header) throw ParseError(reader.line_no(), "duplicate header");
      if (fields.size() != 4 || fields[1] != "sp") {
        throw ParseError(reader.line_no(), "header must be 'p sp <n> <m>'");
      }
      n = parse_number<std::uint64_t>(fields[2], reader.line_no(), "node count");
      m = parse_number<std::uint64_t>(fields[3], reader.line_no(), "arc count");
      if (n >= kNoNode) throw ParseError(reader.line_no(), "node count too large");
      have_header = true;
      arcs.reserve(m);
      continue;
    }
    if (fields[0] == "a") {
      if (!have_header) throw ParseError(reader.line_no(), "arc before 'p sp' header");
      if (fields.size() != 4) throw ParseError(reader.line_no(), "expected 'a u v w'");
      const auto u = parse_number<std::uint64_t>(fields[1], reader.line_no(), "node id");
      const auto v = parse_number<std::uint64_t>(fields[2], reader.line_no(), "node id");
      const auto w = parse_number<Dist>(fields[3], reader.line_no(), "weight");
      if (u == 0 || v == 0 || u > n || v > n) {
        throw ParseError(reader.line_no(), "node id outside 1..n");
      }
      arcs.push_back({static_cast<NodeId>(u - 1), static_cast<NodeId>(v - 1), w});
      continue;
    }
    throw ParseError(reader.line_no(), "unknown line type '" + std::string(fields[0]) + "'");
  }
  if (!have_header) throw ParseError(reader.line_no(), "missing 'p sp' header");
  if (arcs.size() != m && warnings != nullptr) {
    warnings->push_back("header declares " + std::to_string(m) + " arcs, found " +
                        std::to_string(arcs.size()));
  }
  return Graph::from_arcs(static_cast<NodeId>(n), true, std::move(arcs));
}

Graph parse_dimacs_gr(std::istream& in, std::vector<std::string>* warnings) {
  return parse_dimacs_gr(slurp(in), warnings);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ios::sync_with_stdio(false);
    return slurp(std::cin);
  }
  if (ends_with(path, ".gz")) {
    gzFile f = gzopen(path.c_str(), "rb");
    if (f == nullptr) throw std::runtime_error("cannot open " + path);
    std::string out;
    char buf[1 << 16];
    int got;
    while ((got = gzread(f, buf, sizeof buf)) > 0) out.append(buf, static_cast<std::size_t>(got));
    int errnum = Z_OK;
    const char* msg = got < 0 ? gzerror(f, &errnum) : nullptr;
    const std::string err = msg != nullptr ? msg : "";
    gzclose(f);
    if (got < 0) throw std::runtime_error("gzip read failed for " + path + ": " + err);
    return out;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return slurp(in);
}

Graph load_graph(const std::string& path, InputFormat format,
                 std::vector<std::string>* warnings) {
  if (format == InputFormat::kAuto) {
    format = ends_with(path, ".gr") || ends_with(path, ".gr.gz") ? InputFormat::kDimacs
                                                                 : InputFormat::kEdgeList;
  }
  const std::string text = read_input(path);
  return format == InputFormat::kDimacs ? parse_dimacs_gr(text, warnings)
                                        : parse_edge_list(text);
}

void write_edge_list(std::ostream& out, const Graph& g,
                     const std::vector<std::string>& comment) {
  for (const std::string& c : comment) out << "# " << c << '\n';
  out << "n " << g.num_nodes() << " directed " << (g.directed() ? 1 : 0) << '\n';
  const bool weighted = !g.unit_weights();
  std::string buf;
  char tmp[64];
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    const auto nbrs = g.out_neighbors(u);
    const auto ws = g.out_weights(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (!g.directed() && nbrs[i] < u) continue;
      const int len =
          weighted ? std::snprintf(tmp, sizeof tmp, "%u %u %lld\n", u, nbrs[i],
                                   static_cast<long long>(ws[i]))
                   : std::snprintf(tmp, sizeof tmp, "%u %u\n", u, nbrs[i]);
      buf.append(tmp, static_cast<std::size_t>(len));
    }
    if (buf.size() > (1 << 20)) {
      out << buf;
      buf.clear();
    }
  }
  out << buf;
}

}  // namespace eccert
