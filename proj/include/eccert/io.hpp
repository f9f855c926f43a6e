#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eccert/graph.hpp"

namespace eccert {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Edge list: "u v" or "u v w" per line, '#' comments, optional header line
// "n <count> directed <0|1>". Without a header the graph is undirected on
// 1 + max id nodes.
Graph parse_edge_list(std::string_view text);
Graph parse_edge_list(std::istream& in);

// DIMACS shortest-path format: "p sp n m" header, "a u v w" arcs (1-based),
// "c" comments. Always directed. An arc count that disagrees with the header
// is reported through `warnings` and is not fatal.
Graph parse_dimacs_gr(std::string_view text,
                      std::vector<std::string>* warnings = nullptr);
Graph parse_dimacs_gr(std::istream& in,
                      std::vector<std::string>* warnings = nullptr);

enum class InputFormat { kAuto, kEdgeList, kDimacs };

// Reads a whole file ("-" for standard input), inflating it when the path
// ends in ".gz". Throws std::runtime_error on I/O failure.
std::string read_input(const std::string& path);

// kAuto picks DIMACS for "*.gr" / "*.gr.gz" and the edge list otherwise.
Graph load_graph(const std::string& path, InputFormat format = InputFormat::kAuto,
                 std::vector<std::string>* warnings = nullptr);

// Writes the edge-list format with a header line. Undirected edges are
// written once; weights are written unless the graph has unit weights.
// `comment` lines (without the leading '#') are emitted first.
void write_edge_list(std::ostream& out, const Graph& g,
                     const std::vector<std::string>& comment = {});

}  // namespace eccert
