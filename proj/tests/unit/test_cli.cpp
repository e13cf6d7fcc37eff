#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "tenpoints/cli.hpp"
#include "tenpoints/kpg_io.hpp"
#include "tenpoints/tverberg.hpp"

using namespace tenpoints;
namespace fs = std::filesystem;

namespace {

const fs::path kData = TENPOINTS_EXAMPLES_DIR;

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / "tenpoints_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("durations and ranges") {
  using std::chrono::milliseconds;
  CHECK(cli::parse_duration("1000s") == milliseconds(1'000'000));
  CHECK(cli::parse_duration("500ms") == milliseconds(500));
  CHECK(cli::parse_duration("2m") == milliseconds(120'000));
  CHECK(cli::parse_duration("3") == milliseconds(3000));
  CHECK(cli::parse_duration("0.5s") == milliseconds(500));
  CHECK_THROWS_AS(cli::parse_duration("fast"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_duration("5parsecs"), std::invalid_argument);
  CHECK(cli::parse_range("0..19") == std::pair<std::uint64_t, std::uint64_t>{0, 19});
  CHECK(cli::parse_range("7") == std::pair<std::uint64_t, std::uint64_t>{7, 7});
  CHECK_THROWS_AS(cli::parse_range("5..2"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_range("a..b"), std::invalid_argument);
}

TEST_CASE("solve on the complete 2,2,2 graph") {
  const auto file = (kData / "complete222.kpg").string();
  const auto first = run({"solve", "--alg", "kpkc", "--first", file});
  CHECK(first.code == 0);
  CHECK(first.out == "clique 0 2 4\n");
  for (const char* alg : {"kpkc", "findclique", "brute"}) {
    const auto all = run({"solve", "--alg", alg, "--all", file});
    CHECK(all.code == 0);
    CHECK(all.out.find("count 8\n") != std::string::npos);
  }
  CHECK(run({"solve", "--alg", "findclique", "--any", file}).code == 0);
}

TEST_CASE("solve exit codes") {
  const auto dir = scratch_dir();
  const auto empty = (dir / "no_edges.kpg").string();
  write_graph_file(empty, build_graph(std::vector<std::size_t>{2, 2}, std::vector<Edge>{}));
  const auto none = run({"solve", "--alg", "kpkc", "--any", empty});
  CHECK(none.code == 1);
  CHECK(none.out == "none\n");
  CHECK(run({"solve", "--alg", "kpkc", "--all", empty}).code == 1);

  const auto g0 = (dir / "graph0.kpg").string();
  write_graph_file(g0, build_H(Chirotope::convex(10)).graph);
  const auto slow = run({"solve", "--alg", "findclique", "--any", "--timeout", "200ms", g0});
  CHECK(slow.code == 3);
  CHECK(slow.out == "timeout\n");

  CHECK(run({"solve", "--alg", "kpkc", "--any", "--bogus", empty}).code == 2);
  CHECK(run({"solve", "--alg", "quick", "--any", empty}).code == 2);
  CHECK(run({"solve", "--alg", "kpkc", empty}).code == 2);
  CHECK(run({"solve", "--alg", "kpkc", "--any", "--first", empty}).code == 2);
  CHECK(run({"solve", "--alg", "kpkc", "--any", "--timeout", "soon", empty}).code == 2);
  CHECK(run({"solve", "--alg", "kpkc", "--any", (dir / "missing.kpg").string()}).code == 2);
  const auto broken = dir / "broken.kpg";
  std::ofstream(broken) << "p kpg 4 1 2\nq 2 2\ne 0 1\n";
  const auto bad = run({"solve", "--alg", "kpkc", "--any", broken.string()});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 3") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("gen writes reproducible graphs") {
  const auto dir = scratch_dir();
  const auto a = (dir / "a.kpg").string(), b = (dir / "b.kpg.gz").string();
  CHECK(run({"gen", "grunert", "--k", "4", "--min-part", "2", "--max-part", "5", "-a", "0.3", "-b", "0.7", "--seed", "9",
             "-o", a}).code == 0);
  CHECK(run({"gen", "grunert", "--k", "4", "--min-part", "2", "--max-part", "5", "-a", "0.3", "-b", "0.7", "--seed", "9",
             "-o", b}).code == 0);
  CHECK(read_graph_file(a) == read_graph_file(b));
  const auto rare = run({"gen", "rare", "--k", "5", "--max-part", "4", "-a", "0.2", "-o", a});
  CHECK(rare.code == 0);
  CHECK(rare.out.rfind("parts=5 ", 0) == 0);
  CHECK(run({"gen", "rare", "--k", "5", "-o", a}).code == 2);
}

TEST_CASE("bench CSV") {
  const auto dir = scratch_dir();
  const auto csv = dir / "bench.csv";
  CHECK(run({"bench", "--suite", (kData / "bench_smoke.json").string(), "--csv", csv.string(), "--jobs", "2"}).code == 0);
  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == cli::kBenchHeader);
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  REQUIRE(rows.size() == 8);
  CHECK(rows[0].rfind("grunert-small,grunert,k=5;min_part=3;max_part=6;a=0.4;b=0.9;seed=0,kpkc,all,", 0) == 0);
  // Identical clique counts for all three engines on one graph.
  const auto count = [](const std::string& row) { return row.substr(row.rfind(',') + 1); };
  CHECK(count(rows[0]) == count(rows[1]));
  CHECK(count(rows[0]) == count(rows[2]));
  CHECK(rows[6].find(",rare,") != std::string::npos);
  CHECK(count(rows[6]).empty());

  const auto unknown = dir / "unknown.json";
  std::ofstream(unknown) << R"({"rows": [{"family": "zipf", "k": 3}]})";
  CHECK(run({"bench", "--suite", unknown.string()}).code == 2);
  CHECK(run({"bench", "--suite", (dir / "nope.json").string()}).code == 2);
  CHECK_THROWS_AS(cli::run_bench("{}"), std::invalid_argument);
}

TEST_CASE("timeouts print nan") {
  const cli::BenchRecord r{"x", "rare", "k=1", "kpkc", "any", "timeout", std::nullopt, std::nullopt};
  CHECK(cli::to_csv(r) == "x,rare,k=1,kpkc,any,timeout,nan,");
  const auto suite = R"({"timeout": "0ms", "rows": [{"family": "grunert", "k": 30, "min_part": 30, "max_part": 30,
                          "a": 0.75, "b": 0.75, "algorithms": ["findclique"], "mode": "all"}]})";
  const auto records = cli::run_bench(suite);
  REQUIRE(records.size() == 1);
  CHECK(records[0].outcome == "timeout");
  CHECK_FALSE(records[0].millis);
}

TEST_CASE("tverberg subcommands") {
  const auto dir = scratch_dir();
  const auto dump = (dir / "h.kpg.gz").string();
  const auto built = run({"tverberg", "build", "--convex10", "--dump", dump});
  CHECK(built.code == 0);
  CHECK(built.out == "parts=71 vertices=10785 edges=6630275\n");
  CHECK(read_graph_file(dump).edge_count() == 6630275);

  const auto pts = run({"tverberg", "verify", "--points", (kData / "nine_plus_one.pts").string(), "--alg", "kpkc"});
  CHECK(pts.code == 0);
  CHECK(pts.out.find(" verified ") != std::string::npos);

  const auto chi = run({"tverberg", "verify", "--chirotope", (kData / "convex10.chi").string(), "--alg", "findclique",
                        "--timeout", "100ms"});
  CHECK(chi.code == 3);
  CHECK(chi.out.find(" timeout 71 10785 6630275 ") != std::string::npos);
  CHECK(chi.out.find("parts=71 vertices=10785 edges=6630275\n") != std::string::npos);

  CHECK(run({"tverberg", "verify"}).code == 2);
  CHECK(run({"tverberg", "verify", "--convex10", "--points", (kData / "nine_plus_one.pts").string()}).code == 2);
  CHECK(run({"tverberg", "verify", "--b16", (dir / "none.b16").string(), "--index", "0"}).code == 2);
  CHECK(run({"tverberg", "verify", "--chirotope", (kData / "complete222.kpg").string()}).code == 2);
}

TEST_CASE("oracle and chirotope subcommands") {
  const auto cross = run({"oracle", "crosscheck", "--seeds", "0..1"});
  CHECK(cross.code == 0);
  CHECK(cross.out == "seed 0 ok\nseed 1 ok\n");
  CHECK(run({"oracle", "crosscheck", "--seeds", "x"}).code == 2);

  const auto ok = run({"chirotope", "check", (kData / "convex10.chi").string()});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("axioms ok") != std::string::npos);
  const auto dir = scratch_dir();
  const auto zero = dir / "zero.chi";
  std::ofstream(zero) << "chi 4\n0000\n";
  const auto bad = run({"chirotope", "check", zero.string()});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("axioms fail") != std::string::npos);
}
