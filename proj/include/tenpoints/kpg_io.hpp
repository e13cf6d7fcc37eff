#pragma once

// KPG text format, one graph per file:
//
//   p kpg <n> <m> <k>
//   q <s1> ... <sk>          (sizes sum to n; parts are consecutive id ranges)
//   e <u> <v>                (exactly m lines, 0-based, u < v)
//
// Lines starting with "c " are comments. Gzip-compressed files are read
// transparently.

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>

#include "tenpoints/kpartite_graph.hpp"

namespace tenpoints {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

KPartiteGraph parse_graph(std::istream& in);
KPartiteGraph parse_graph(const std::string& text);
/// Reads plain or gzip-compressed KPG.
KPartiteGraph read_graph_file(const std::filesystem::path& path);

void write_graph(std::ostream& out, const KPartiteGraph& g);
std::string write_graph(const KPartiteGraph& g);
/// Writes KPG; the output is gzip-compressed when the path ends in ".gz".
void write_graph_file(const std::filesystem::path& path, const KPartiteGraph& g);

}  // namespace tenpoints
