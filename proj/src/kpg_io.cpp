#include "tenpoints/kpg_io.hpp"

#include <zlib.h>

#include <charconv>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <string_view>
#include <vector>

namespace tenpoints {
namespace {

using LineSource = std::function<bool(std::string&)>;

class Tokens {
 public:
  Tokens(std::string_view line, std::size_t lineno) : rest_(line), lineno_(lineno) {}

  std::string_view word() {
    skip_space();
    std::size_t end = 0;
    while (end < rest_.size() && !is_space(rest_[end])) ++end;
    std::string_view w = rest_.substr(0, end);
    rest_.remove_prefix(end);
    return w;
  }

  std::size_t number(const char* what) {
    std::string_view w = word();
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
    if (w.empty() || ec != std::errc{} || ptr != w.data() + w.size())
      throw ParseError(lineno_, std::string("expected ") + what + ", got '" + std::string(w) + "'");
    return value;
  }

  bool at_end() {
    skip_space();
    return rest_.empty();
  }

 private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }
  void skip_space() {
    while (!rest_.empty() && is_space(rest_.front())) rest_.remove_prefix(1);
  }

  std::string_view rest_;
  std::size_t lineno_;
};

KPartiteGraph parse_lines(const LineSource& next_line) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::size_t> n, m, k;
  std::optional<KPartiteGraphBuilder> builder;
  std::size_t edges_seen = 0;

  while (next_line(line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\n') line.pop_back();
    Tokens tok(line, lineno);
    if (tok.at_end()) continue;
    const std::string_view tag = tok.word();
    if (tag == "c") continue;

    if (tag == "p") {
      if (n) throw ParseError(lineno, "duplicate 'p' line");
      if (tok.word() != "kpg") throw ParseError(lineno, "header must read 'p kpg <n> <m> <k>'");
      n = tok.number("vertex count");
      m = tok.number("edge count");
      k = tok.number("part count");
    } else if (tag == "q") {
      if (!n) throw ParseError(lineno, "'q' line before 'p' header");
      if (builder) throw ParseError(lineno, "duplicate 'q' line");
      std::vector<std::size_t> sizes;
      sizes.reserve(*k);
      std::size_t total = 0;
      for (std::size_t i = 0; i < *k; ++i) {
        sizes.push_back(tok.number("part size"));
        total += sizes.back();
      }
      if (!tok.at_end()) throw ParseError(lineno, "more than k part sizes");
      if (total != *n)
        throw ParseError(lineno, "part sizes sum to " + std::to_string(total) + " but header says n = " +
                                     std::to_string(*n));
      builder.emplace(sizes);
    } else if (tag == "e") {
      if (!builder) throw ParseError(lineno, "edge line before 'p' and 'q' lines");
      const std::size_t u = tok.number("vertex id");
      const std::size_t v = tok.number("vertex id");
      if (!tok.at_end()) throw ParseError(lineno, "trailing tokens after edge");
      if (++edges_seen > *m) throw ParseError(lineno, "more edge lines than the header's m");
      if (u >= *n || v >= *n) throw ParseError(lineno, "vertex id out of range");
      try {
        builder->add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
      } catch (const GraphError& err) {
        throw ParseError(lineno, err.what());
      }
    } else {
      throw ParseError(lineno, "unknown line tag '" + std::string(tag) + "'");
    }
  }
  if (!n) throw ParseError(lineno, "missing 'p kpg' header");
  if (!builder) throw ParseError(lineno, "missing 'q' line");
  if (edges_seen != *m)
    throw ParseError(lineno, "header announces " + std::to_string(*m) + " edges, found " +
                                 std::to_string(edges_seen));
  return std::move(*builder).finish();
}

struct GzCloser {
  void operator()(gzFile f) const { gzclose(f); }
};
using GzHandle = std::unique_ptr<std::remove_pointer_t<gzFile>, GzCloser>;

bool has_gz_suffix(const std::filesystem::path& path) { return path.extension() == ".gz"; }

}  // namespace

KPartiteGraph parse_graph(std::istream& in) {
  return parse_lines([&in](std::string& line) { return static_cast<bool>(std::getline(in, line)); });
}

KPartiteGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

KPartiteGraph read_graph_file(const std::filesystem::path& path) {
  GzHandle file(gzopen(path.c_str(), "rb"));
  if (!file) throw std::runtime_error("cannot open " + path.string());
  gzbuffer(file.get(), 1 << 17);
  std::vector<char> buf(1 << 12);
  return parse_lines([&](std::string& line) {
    line.clear();
    while (true) {
      if (gzgets(file.get(), buf.data(), static_cast<int>(buf.size())) == nullptr) return !line.empty();
      line.append(buf.data());
      if (!line.empty() && line.back() == '\n') return true;
    }
  });
}

void write_graph(std::ostream& out, const KPartiteGraph& g) {
  out << "p kpg " << g.vertex_count() << ' ' << g.edge_count() << ' ' << g.part_count() << '\n';
  out << 'q';
  for (std::size_t p = 0; p < g.part_count(); ++p) out << ' ' << g.part_size(p);
  out << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

std::string write_graph(const KPartiteGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return std::move(out).str();
}

void write_graph_file(const std::filesystem::path& path, const KPartiteGraph& g) {
  if (!has_gz_suffix(path)) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    write_graph(out, g);
    return;
  }
  GzHandle file(gzopen(path.c_str(), "wb6"));
  if (!file) throw std::runtime_error("cannot write " + path.string());
  std::string chunk;
  auto flush = [&] {
    if (!chunk.empty() && gzwrite(file.get(), chunk.data(), static_cast<unsigned>(chunk.size())) == 0)
      throw std::runtime_error("gzip write failed for " + path.string());
    chunk.clear();
  };
  chunk = "p kpg " + std::to_string(g.vertex_count()) + ' ' + std::to_string(g.edge_count()) + ' ' +
          std::to_string(g.part_count()) + "\nq";
  for (std::size_t p = 0; p < g.part_count(); ++p) chunk += ' ' + std::to_string(g.part_size(p));
  chunk += '\n';
  for (const Edge& e : g.edges()) {
    chunk += "e ";
    chunk += std::to_string(e.u);
    chunk += ' ';
    chunk += std::to_string(e.v);
    chunk += '\n';
    if (chunk.size() > (1 << 16)) flush();
  }
  flush();
}

}  // namespace tenpoints
