#include "tenpoints/chirotope_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "tenpoints/kpg_io.hpp"

namespace tenpoints {

namespace {

bool skip_line(const std::string& line) {
  const auto p = line.find_first_not_of(" \t\r");
  return p == std::string::npos || line[p] == '#';
}

std::ifstream open_or_throw(const std::filesystem::path& path, std::ios::openmode mode = std::ios::in) {
  std::ifstream in(path, mode);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

}  // namespace

Chirotope parse_chirotope(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  int n = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip_line(line)) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag >> n;
    if (tag != "chi" || !ls) throw ParseError(lineno, "expected 'chi <n>'");
    break;
  }
  if (n < 0) throw ParseError(lineno, "missing 'chi <n>' header");
  if (n > Chirotope::kMaxElements) throw ParseError(lineno, "at most 16 elements are supported");
  const std::size_t want = static_cast<std::size_t>(n) * (n - 1) * (n - 2) / 6;
  std::vector<std::int8_t> signs;
  signs.reserve(want);
  while (std::getline(in, line)) {
    ++lineno;
    if (skip_line(line)) continue;
    for (char ch : line) {
      switch (ch) {
        case '+': signs.push_back(1); break;
        case '-': signs.push_back(-1); break;
        case '0': signs.push_back(0); break;
        case ' ': case '\t': case '\r': break;
        default: throw ParseError(lineno, std::string("unexpected character '") + ch + "'");
      }
    }
  }
  if (signs.size() != want)
    throw ParseError(lineno, "expected " + std::to_string(want) + " signs, got " + std::to_string(signs.size()));
  return Chirotope::from_lex_signs(n, signs);
}

Chirotope read_chirotope_file(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse_chirotope(in);
}

void write_chirotope(std::ostream& out, const Chirotope& chi) {
  out << "chi " << chi.size() << '\n';
  for (auto s : chi.lex_signs()) out << (s > 0 ? '+' : s < 0 ? '-' : '0');
  out << '\n';
}

std::string write_chirotope(const Chirotope& chi) {
  std::ostringstream os;
  write_chirotope(os, chi);
  return os.str();
}

std::vector<Point> parse_points(std::istream& in) {
  std::vector<Point> pts;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip_line(line)) continue;
    std::istringstream ls(line);
    Point p;
    std::string rest;
    if (!(ls >> p.x >> p.y) || (ls >> rest)) throw ParseError(lineno, "expected 'x y'");
    pts.push_back(p);
  }
  return pts;
}

std::vector<Point> read_points_file(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse_points(in);
}

void write_points(std::ostream& out, const std::vector<Point>& pts) {
  for (const auto& p : pts) out << p.x << ' ' << p.y << '\n';
}

OrderTypeFile::OrderTypeFile(const std::filesystem::path& path) : path_(path) {
  const auto bytes = std::filesystem::file_size(path);
  if (bytes % kRecordBytes != 0)
    throw std::runtime_error(path.string() + ": size is not a multiple of 40 bytes");
  records_ = bytes / kRecordBytes;
  if (records_ == 0) throw std::runtime_error(path.string() + ": empty order-type file");
  if (!in_convex_position(chirotope(0)))
    throw std::runtime_error(path.string() + ": record 0 is not in convex position");
}

std::array<Point, OrderTypeFile::kPoints> OrderTypeFile::points(std::size_t index) const {
  if (index >= records_) throw std::out_of_range("order-type index out of range");
  auto in = open_or_throw(path_, std::ios::binary);
  in.seekg(static_cast<std::streamoff>(index * kRecordBytes));
  unsigned char buf[kRecordBytes];
  if (!in.read(reinterpret_cast<char*>(buf), kRecordBytes))
    throw std::runtime_error(path_.string() + ": short read");
  std::array<Point, kPoints> pts;
  for (int i = 0; i < kPoints; ++i) {
    const unsigned char* r = buf + 4 * i;
    pts[i].x = r[0] | (r[1] << 8);
    pts[i].y = r[2] | (r[3] << 8);
  }
  return pts;
}

Chirotope OrderTypeFile::chirotope(std::size_t index) const {
  const auto pts = points(index);
  return Chirotope::from_points(pts);
}

}  // namespace tenpoints
