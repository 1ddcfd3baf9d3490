#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "forest/graph.hpp"

namespace forest {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Text format, 1-based ids:
//   c <comment>
//   p forest <n> <m>
//   e <u> <v>
//   r <v> <n1> <n2> ...   clockwise neighbours of v
//   f <v1> <v2> ...       walk of the outer face
Graph parse_graph(std::istream& in);
Graph parse_graph_text(const std::string& text);
Graph read_graph_file(const std::string& path);

// Canonical form: edges sorted, each rotation starting at its smallest
// neighbour, outer walk starting at its smallest dart.
std::string emit_graph(const Graph& g, const std::string& comment = {});
void write_graph_file(const Graph& g, const std::string& path, const std::string& comment = {});

}  // namespace forest
