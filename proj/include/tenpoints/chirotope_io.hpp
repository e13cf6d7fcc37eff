#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "tenpoints/chirotope.hpp"
#include "tenpoints/kpg_io.hpp"

namespace tenpoints {

/// Text chirotope: a header line "chi <n>" followed by C(n, 3) characters
/// from "+-0" giving the sorted triples in lexicographic order. Whitespace
/// inside the sign string and '#' comment lines are ignored.
Chirotope parse_chirotope(std::istream& in);
Chirotope read_chirotope_file(const std::filesystem::path& path);
void write_chirotope(std::ostream& out, const Chirotope& chi);
std::string write_chirotope(const Chirotope& chi);

/// Point list: one "x y" integer pair per line; '#' comments allowed.
std::vector<Point> parse_points(std::istream& in);
std::vector<Point> read_points_file(const std::filesystem::path& path);
void write_points(std::ostream& out, const std::vector<Point>& pts);

/// Order-type database of 10-point sets: fixed 40-byte records, each ten
/// little-endian (x, y) pairs of uint16 coordinates. The file is only
/// accepted when record 0 is in convex position.
class OrderTypeFile {
 public:
  static constexpr int kPoints = 10;
  static constexpr std::size_t kRecordBytes = kPoints * 4;

  explicit OrderTypeFile(const std::filesystem::path& path);

  std::size_t size() const { return records_; }
  std::array<Point, kPoints> points(std::size_t index) const;
  Chirotope chirotope(std::size_t index) const;

 private:
  std::filesystem::path path_;
  std::size_t records_ = 0;
};

}  // namespace tenpoints
