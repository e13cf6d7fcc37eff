#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tenpoints/clique.hpp"

namespace tenpoints::cli {

enum ExitCode : int { kOk = 0, kNoClique = 1, kUsage = 2, kTimeout = 3 };

/// "1000s", "500ms", "2m", "1h"; a bare number means seconds.
/// Throws std::invalid_argument.
std::chrono::milliseconds parse_duration(std::string_view text);

/// "A..B" (inclusive) or a single number. Throws std::invalid_argument.
std::pair<std::uint64_t, std::uint64_t> parse_range(std::string_view text);

enum class Mode { first, all, any };
enum class Outcome { first_found, none, timeout };
std::string_view to_string(Mode m);
std::string_view to_string(Outcome o);

struct SearchRun {
  Outcome outcome = Outcome::none;
  double millis = 0;           // search only
  std::size_t cliques = 0;     // cliques seen, complete only in Mode::all without timeout
  std::vector<Clique> found;   // first clique, or all of them in Mode::all when kept
};

/// Runs one search. In Mode::all the cliques are collected only when
/// keep_all is set; otherwise they are just counted.
SearchRun run_search(const KPartiteGraph& g, Algorithm alg, Mode mode,
                     std::optional<std::chrono::milliseconds> timeout, bool keep_all = false);

struct BenchRecord {
  std::string label;
  std::string family;
  std::string params;   // key=value pairs separated by ';'
  std::string algorithm;
  std::string mode;
  std::string outcome;
  std::optional<double> millis;        // nullopt on timeout
  std::optional<std::size_t> cliques;  // Mode::all only
};

inline constexpr std::string_view kBenchHeader = "label,family,params,algorithm,mode,outcome,millis,cliques";
std::string to_csv(const BenchRecord& r);

/// Runs a JSON benchmark suite (see README). Records come out in suite
/// order: rows, then seeds, then algorithms. Throws std::invalid_argument
/// on a malformed suite.
std::vector<BenchRecord> run_bench(std::string_view suite_json, unsigned jobs = 1);

/// Whole command line without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tenpoints::cli
