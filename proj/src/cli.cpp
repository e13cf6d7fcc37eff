#include "tenpoints/cli.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "tenpoints/chirotope_io.hpp"
#include "tenpoints/geomoracle.hpp"
#include "tenpoints/kpg_io.hpp"
#include "tenpoints/randgen.hpp"
#include "tenpoints/tverberg.hpp"

namespace tenpoints::cli {

namespace {

using Millis = std::chrono::milliseconds;
using Json = nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty())
    throw std::invalid_argument(fmt::format("not a non-negative integer: '{}'", s));
  return v;
}

double elapsed_ms(SteadyClock::time_point since) {
  return std::chrono::duration<double, std::milli>(SteadyClock::now() - since).count();
}

// Runs fn(0..n-1) on up to `jobs` threads.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_lock;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_lock);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::string clique_line(const Clique& c) {
  return fmt::format("clique {}", fmt::join(c.vertices, " "));
}

Algorithm algorithm_arg(const std::string& name) {
  const auto a = parse_algorithm(name);
  if (!a) throw UsageError(fmt::format("unknown algorithm '{}'", name));
  return *a;
}

std::optional<Millis> timeout_arg(const std::string& text) {
  if (text.empty()) return std::nullopt;
  try {
    return parse_duration(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string mask_str(PointMask m) { return fmt::format("{{{}}}", fmt::join(mask_members(m), ",")); }

std::string color_str(const ColorPartition& cp) {
  std::vector<std::string> parts;
  for (PointMask c : cp.classes) parts.push_back(mask_str(c));
  return fmt::format("{}", fmt::join(parts, "|"));
}

// ---- bench -----------------------------------------------------------------

struct BenchRow {
  std::string label;
  std::string family;
  Json params;
  std::vector<std::uint64_t> seeds;
  std::vector<Algorithm> algorithms;
  Mode mode = Mode::any;
};

Mode parse_mode(const std::string& s) {
  if (s == "first") return Mode::first;
  if (s == "all") return Mode::all;
  if (s == "any") return Mode::any;
  throw std::invalid_argument(fmt::format("unknown mode '{}'", s));
}

std::string params_str(const BenchRow& row, std::uint64_t seed) {
  std::vector<std::string> kv;
  for (const char* key : {"k", "min_part", "max_part", "a", "b", "file"})
    if (row.params.contains(key)) {
      const auto& v = row.params[key];
      kv.push_back(fmt::format("{}={}", key, v.is_string() ? v.get<std::string>() : v.dump()));
    }
  if (row.family != "kpg") kv.push_back(fmt::format("seed={}", seed));
  return fmt::format("{}", fmt::join(kv, ";"));
}

KPartiteGraph bench_graph(const BenchRow& row, std::uint64_t seed) {
  const auto& p = row.params;
  if (row.family == "grunert")
    return gen_grunert({p.at("k").get<std::size_t>(), p.at("min_part").get<std::size_t>(),
                        p.at("max_part").get<std::size_t>(), p.at("a").get<double>(), p.at("b").get<double>(), seed});
  if (row.family == "rare")
    return gen_rare({p.at("k").get<std::size_t>(), p.at("max_part").get<std::size_t>(), p.at("a").get<double>(), seed});
  return read_graph_file(p.at("file").get<std::string>());
}

// ---- input for tverberg ----------------------------------------------------

struct TverbergInput {
  std::string points, chirotope, b16, range;
  std::optional<std::uint64_t> index;
  bool convex10 = false;
};

struct Instance {
  std::string name;
  Chirotope chi;
};

Chirotope checked(Chirotope chi, const std::string& what) {
  if (chi.size() != kTenPoints) throw UsageError(fmt::format("{}: need 10 elements, got {}", what, chi.size()));
  if (!chi.is_uniform()) throw UsageError(fmt::format("{}: chirotope is not uniform", what));
  const auto axioms = check_axioms(chi);
  if (!axioms.ok) throw UsageError(fmt::format("{}: not a chirotope: {}", what, axioms.message));
  if (!is_acyclic(chi)) throw UsageError(fmt::format("{}: chirotope is not acyclic", what));
  return chi;
}

std::vector<Instance> load_instances(const TverbergInput& in) {
  const int given = !in.points.empty() + !in.chirotope.empty() + !in.b16.empty() + in.convex10;
  if (given != 1) throw UsageError("give exactly one of --points, --chirotope, --b16, --convex10");
  if (in.convex10) return {{"convex10", Chirotope::convex(kTenPoints)}};
  if (!in.points.empty()) {
    const auto pts = read_points_file(in.points);
    if (pts.size() != static_cast<std::size_t>(kTenPoints))
      throw UsageError(fmt::format("{}: need 10 points, got {}", in.points, pts.size()));
    return {{in.points, checked(Chirotope::from_points(pts), in.points)}};
  }
  if (!in.chirotope.empty()) return {{in.chirotope, checked(read_chirotope_file(in.chirotope), in.chirotope)}};
  if (in.index.has_value() == !in.range.empty()) throw UsageError("--b16 needs exactly one of --index, --range");
  const OrderTypeFile file(in.b16);
  std::uint64_t lo = 0, hi = 0;
  if (in.index) {
    lo = hi = *in.index;
  } else {
    try {
      std::tie(lo, hi) = parse_range(in.range);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (hi >= file.size()) throw UsageError(fmt::format("{}: index {} out of range, file has {}", in.b16, hi, file.size()));
  std::vector<Instance> out;
  for (std::uint64_t i = lo; i <= hi; ++i) out.push_back({std::to_string(i), file.chirotope(i)});
  return out;
}

void add_input_flags(CLI::App* cmd, TverbergInput& in) {
  cmd->add_option("--points", in.points, "Ten points, one 'x y' per line");
  cmd->add_option("--chirotope", in.chirotope, "Chirotope text file");
  cmd->add_option("--b16", in.b16, "Order-type database");
  cmd->add_option("--index", in.index, "Record of the database");
  cmd->add_option("--range", in.range, "Records A..B of the database");
  cmd->add_flag("--convex10", in.convex10, "Ten points in convex position");
}

std::string stats_line(std::size_t parts, std::size_t vertices, std::size_t edges) {
  return fmt::format("parts={} vertices={} edges={}", parts, vertices, edges);
}

}  // namespace

std::chrono::milliseconds parse_duration(std::string_view text) {
  std::size_t digits = 0;
  while (digits < text.size() && (std::isdigit(static_cast<unsigned char>(text[digits])) || text[digits] == '.')) ++digits;
  const std::string_view number = text.substr(0, digits), unit = text.substr(digits);
  double value = 0;
  const auto [end, ec] = std::from_chars(number.data(), number.data() + number.size(), value);
  if (number.empty() || ec != std::errc() || end != number.data() + number.size())
    throw std::invalid_argument(fmt::format("bad duration '{}'", text));
  double scale = 0;
  if (unit.empty() || unit == "s") scale = 1000;
  else if (unit == "ms") scale = 1;
  else if (unit == "m" || unit == "min") scale = 60'000;
  else if (unit == "h") scale = 3'600'000;
  else throw std::invalid_argument(fmt::format("bad duration unit in '{}'", text));
  return Millis(static_cast<Millis::rep>(value * scale));
}

std::pair<std::uint64_t, std::uint64_t> parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const auto v = parse_u64(text);
    return {v, v};
  }
  const auto lo = parse_u64(text.substr(0, dots)), hi = parse_u64(text.substr(dots + 2));
  if (lo > hi) throw std::invalid_argument(fmt::format("empty range '{}'", text));
  return {lo, hi};
}

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::first: return "first";
    case Mode::all: return "all";
    case Mode::any: return "any";
  }
  return "?";
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::first_found: return "first-found";
    case Outcome::none: return "none";
    case Outcome::timeout: return "timeout";
  }
  return "?";
}

SearchRun run_search(const KPartiteGraph& g, Algorithm alg, Mode mode, std::optional<Millis> timeout, bool keep_all) {
  SearchRun run;
  const auto start = SteadyClock::now();
  Deadline deadline;
  if (timeout) deadline = start + *timeout;

  if (mode == Mode::any) {
    const auto answer = has_kclique(g, alg, timeout);
    run.millis = elapsed_ms(start);
    if (const auto* f = std::get_if<CliqueFound>(&answer)) {
      run.outcome = Outcome::first_found;
      run.cliques = 1;
      run.found.push_back(f->witness);
    } else {
      run.outcome = std::holds_alternative<SearchTimeout>(answer) ? Outcome::timeout : Outcome::none;
    }
    return run;
  }

  const auto drain = [&](auto& it) {
    while (it.next()) {
      ++run.cliques;
      if (mode == Mode::first || keep_all) run.found.push_back(it.current());
      if (mode == Mode::first) break;
    }
    if (it.timed_out()) run.outcome = Outcome::timeout;
  };
  switch (alg) {
    case Algorithm::kpkc: {
      KpkcIterator it(g, 5, deadline);
      drain(it);
      break;
    }
    case Algorithm::findclique: {
      FindCliqueIterator it(g, deadline);
      drain(it);
      break;
    }
    case Algorithm::brute: {
      auto all = brute_cliques(g);
      run.cliques = mode == Mode::first ? std::min<std::size_t>(1, all.size()) : all.size();
      if (mode == Mode::first && !all.empty()) run.found.push_back(all.front());
      if (keep_all) run.found = std::move(all);
      break;
    }
  }
  run.millis = elapsed_ms(start);
  if (run.outcome != Outcome::timeout) run.outcome = run.cliques ? Outcome::first_found : Outcome::none;
  return run;
}

std::string to_csv(const BenchRecord& r) {
  return fmt::format("{},{},{},{},{},{},{},{}", r.label, r.family, r.params, r.algorithm, r.mode, r.outcome,
                     r.millis ? fmt::format("{:.3f}", *r.millis) : std::string("nan"),
                     r.cliques ? std::to_string(*r.cliques) : std::string());
}

std::vector<BenchRecord> run_bench(std::string_view suite_json, unsigned jobs) {
  Json suite;
  try {
    suite = Json::parse(suite_json);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(fmt::format("suite is not JSON: {}", e.what()));
  }
  if (!suite.is_object() || !suite.contains("rows") || !suite["rows"].is_array())
    throw std::invalid_argument("suite needs a \"rows\" array");
  const std::optional<Millis> timeout =
      suite.contains("timeout") ? std::optional(parse_duration(suite["timeout"].get<std::string>())) : std::nullopt;

  std::vector<BenchRow> rows;
  try {
    for (const auto& r : suite["rows"]) {
      BenchRow row;
      row.family = r.at("family").get<std::string>();
      if (row.family != "grunert" && row.family != "rare" && row.family != "kpg")
        throw std::invalid_argument(fmt::format("unknown family '{}'", row.family));
      row.label = r.value("label", row.family);
      row.params = r;
      row.seeds = r.value("seeds", std::vector<std::uint64_t>{0});
      if (row.family == "kpg") row.seeds = {0};
      for (const auto& a : r.value("algorithms", std::vector<std::string>{"kpkc", "findclique"})) {
        const auto alg = parse_algorithm(a);
        if (!alg) throw std::invalid_argument(fmt::format("unknown algorithm '{}'", a));
        row.algorithms.push_back(*alg);
      }
      row.mode = parse_mode(r.value("mode", std::string("any")));
      // Fail on missing parameters before any search starts.
      if (row.family == "grunert")
        for (const char* key : {"k", "min_part", "max_part", "a", "b"}) (void)r.at(key).get<double>();
      if (row.family == "rare")
        for (const char* key : {"k", "max_part", "a"}) (void)r.at(key).get<double>();
      if (row.family == "kpg") (void)r.at("file").get<std::string>();
      rows.push_back(std::move(row));
    }
  } catch (const Json::exception& e) {
    throw std::invalid_argument(fmt::format("bad suite row: {}", e.what()));
  }

  std::vector<std::pair<std::size_t, std::uint64_t>> tasks;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (auto seed : rows[r].seeds) tasks.emplace_back(r, seed);
  std::vector<std::vector<BenchRecord>> results(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t t) {
    const auto& row = rows[tasks[t].first];
    const auto seed = tasks[t].second;
    const auto g = bench_graph(row, seed);
    for (Algorithm alg : row.algorithms) {
      const auto run = run_search(g, alg, row.mode, timeout);
      BenchRecord rec{row.label, row.family, params_str(row, seed), std::string(to_string(alg)),
                      std::string(to_string(row.mode)), std::string(to_string(run.outcome)), run.millis, std::nullopt};
      if (run.outcome == Outcome::timeout) rec.millis.reset();
      else if (row.mode == Mode::all) rec.cliques = run.cliques;
      results[t].push_back(std::move(rec));
    }
  });
  std::vector<BenchRecord> out;
  for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-partite clique search and colored Tverberg verification", "tenpoints"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Timing details on standard error");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random k-partite graph");
  gen->require_subcommand(1);
  GrunertParams gp;
  RareAttractionParams rp;
  std::string gen_out;
  auto* gen_g = gen->add_subcommand("grunert", "Uniform part sizes, per-vertex edge probability");
  gen_g->add_option("--k", gp.k, "Number of parts")->required();
  gen_g->add_option("--min-part", gp.min_part)->required();
  gen_g->add_option("--max-part", gp.max_part)->required();
  gen_g->add_option("-a", gp.a)->required();
  gen_g->add_option("-b", gp.b)->required();
  gen_g->add_option("--seed", gp.seed);
  gen_g->add_option("-o,--output", gen_out, "KPG file (.gz for gzip)")->required();
  auto* gen_r = gen->add_subcommand("rare", "Growing parts, sparse between big parts");
  gen_r->add_option("--k", rp.k, "Number of parts")->required();
  gen_r->add_option("--max-part", rp.max_part)->required();
  gen_r->add_option("-a", rp.a)->required();
  gen_r->add_option("--seed", rp.seed);
  gen_r->add_option("-o,--output", gen_out, "KPG file (.gz for gzip)")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "Search a KPG graph for k-cliques");
  std::string solve_alg = "kpkc", solve_timeout, solve_file;
  bool want_first = false, want_all = false, want_any = false;
  solve->add_option("--alg", solve_alg, "kpkc, findclique or brute");
  auto* f1 = solve->add_flag("--first", want_first, "Print the first clique found");
  auto* f2 = solve->add_flag("--all", want_all, "Print every clique");
  auto* f3 = solve->add_flag("--any", want_any, "Only decide whether a clique exists");
  f1->excludes(f2)->excludes(f3);
  f2->excludes(f3);
  solve->add_option("--timeout", solve_timeout, "Search budget, e.g. 1000s or 500ms");
  solve->add_option("file", solve_file, "KPG graph")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
  std::string bench_suite, bench_csv;
  unsigned bench_jobs = 1;
  bench->add_option("--suite", bench_suite, "JSON suite")->required();
  bench->add_option("--jobs", bench_jobs, "Graphs searched in parallel");
  bench->add_option("--csv", bench_csv, "Write CSV here instead of standard output");

  // tverberg
  auto* tv = app.add_subcommand("tverberg", "Build or verify the Tverberg graph of a chirotope");
  tv->require_subcommand(1);
  TverbergInput tin;
  std::string tv_alg = "kpkc", tv_timeout, tv_dump;
  unsigned tv_jobs = 1;
  auto* tv_build = tv->add_subcommand("build", "Build H and print its size");
  auto* tv_verify = tv->add_subcommand("verify", "Search H for a clique hitting every part");
  for (auto* cmd : {tv_build, tv_verify}) {
    add_input_flags(cmd, tin);
    cmd->add_option("--dump", tv_dump, "Write H as KPG (single input only)");
  }
  tv_verify->add_option("--alg", tv_alg, "kpkc, findclique or brute");
  tv_verify->add_option("--timeout", tv_timeout, "Search budget per chirotope");
  tv_verify->add_option("--jobs", tv_jobs, "Chirotopes verified in parallel");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exact-geometry checks");
  oracle->require_subcommand(1);
  auto* cross = oracle->add_subcommand("crosscheck", "Chirotope pipeline against exact geometry");
  std::string seeds;
  unsigned oracle_jobs = 1;
  bool with_theorem = false;
  cross->add_option("--seeds", seeds, "Seed range A..B")->required();
  cross->add_option("--jobs", oracle_jobs, "Seeds checked in parallel");
  cross->add_flag("--theorem", with_theorem, "Also check every colouring for a rainbow partition");

  // chirotope
  auto* chi_cmd = app.add_subcommand("chirotope", "Chirotope utilities");
  chi_cmd->require_subcommand(1);
  auto* chi_check = chi_cmd->add_subcommand("check", "Check the chirotope axioms");
  std::string chi_file;
  bool chi_points = false;
  chi_check->add_option("file", chi_file, "Chirotope text file")->required();
  chi_check->add_flag("--points", chi_points, "The file holds points instead");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen_g || *gen_r) {
      const auto g = *gen_g ? gen_grunert(gp) : gen_rare(rp);
      write_graph_file(gen_out, g);
      fmt::print(out, "{}\n", stats_line(g.part_count(), g.vertex_count(), g.edge_count()));
      return kOk;
    }

    if (*solve) {
      const Algorithm alg = algorithm_arg(solve_alg);
      const auto timeout = timeout_arg(solve_timeout);
      if (!want_first && !want_all && !want_any) throw UsageError("solve needs one of --first, --all, --any");
      const Mode mode = want_all ? Mode::all : want_any ? Mode::any : Mode::first;
      const auto load_start = SteadyClock::now();
      const auto g = read_graph_file(solve_file);
      const double load_ms = elapsed_ms(load_start);
      const auto r = run_search(g, alg, mode, timeout, true);
      for (const auto& c : r.found) fmt::print(out, "{}\n", clique_line(c));
      if (mode == Mode::all && r.outcome != Outcome::timeout) fmt::print(out, "count {}\n", r.cliques);
      if (r.outcome == Outcome::none) fmt::print(out, "none\n");
      if (r.outcome == Outcome::timeout) fmt::print(out, "timeout\n");
      if (verbose) fmt::print(err, "load_ms={:.3f} search_ms={:.3f}\n", load_ms, r.millis);
      switch (r.outcome) {
        case Outcome::first_found: return kOk;
        case Outcome::none: return kNoClique;
        case Outcome::timeout: return kTimeout;
      }
    }

    if (*bench) {
      std::ifstream in(bench_suite);
      if (!in) throw UsageError(fmt::format("cannot open suite '{}'", bench_suite));
      std::stringstream text;
      text << in.rdbuf();
      std::vector<BenchRecord> records;
      try {
        records = run_bench(text.str(), bench_jobs);
      } catch (const std::invalid_argument& e) {
        throw UsageError(fmt::format("{}: {}", bench_suite, e.what()));
      }
      std::ofstream csv_file;
      if (!bench_csv.empty()) {
        csv_file.open(bench_csv);
        if (!csv_file) throw UsageError(fmt::format("cannot write '{}'", bench_csv));
      }
      std::ostream& csv = bench_csv.empty() ? out : csv_file;
      fmt::print(csv, "{}\n", kBenchHeader);
      for (const auto& r : records) fmt::print(csv, "{}\n", to_csv(r));
      return kOk;
    }

    if (*tv_build || *tv_verify) {
      const auto instances = load_instances(tin);
      if (!tv_dump.empty() && instances.size() != 1) throw UsageError("--dump needs a single input");
      if (*tv_build) {
        const auto start = SteadyClock::now();
        const auto h = build_H(instances.front().chi);
        if (verbose) fmt::print(err, "build_ms={:.3f}\n", elapsed_ms(start));
        if (!tv_dump.empty()) write_graph_file(tv_dump, h.graph);
        fmt::print(out, "{}\n", stats_line(h.graph.part_count(), h.graph.vertex_count(), h.graph.edge_count()));
        if (!h.empty_parts.empty()) fmt::print(out, "empty_parts={}\n", h.empty_parts.size());
        return kOk;
      }
      const Algorithm alg = algorithm_arg(tv_alg);
      const auto timeout = timeout_arg(tv_timeout);
      std::vector<VerifyResult> results(instances.size());
      std::vector<std::optional<ColorPartition>> witness(instances.size());
      parallel_for(instances.size(), tv_jobs, [&](std::size_t i) {
        TverbergGraph h;
        results[i] = verify_chirotope(instances[i].chi, alg, timeout, &h);
        if (results[i].clique) witness[i] = h.color(results[i].clique->vertices.back());
        if (!tv_dump.empty()) write_graph_file(tv_dump, h.graph);
      });
      int code = kOk;
      for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto& r = results[i];
        fmt::print(out, "{} {} {} {} {} {:.3f}\n", instances[i].name, to_string(r.status), r.parts, r.vertices, r.edges,
                   r.search_ms);
        if (witness[i]) fmt::print(out, "coloring {}\n", color_str(*witness[i]));
        if (verbose) fmt::print(err, "{} build_ms={:.3f} empty_parts={}\n", instances[i].name, r.build_ms, r.empty_parts);
        if (r.status == VerifyStatus::timeout) code = std::max(code, static_cast<int>(kTimeout));
        if (r.status == VerifyStatus::counterexample && code == kOk) code = kNoClique;
      }
      if (instances.size() == 1) fmt::print(out, "{}\n", stats_line(results[0].parts, results[0].vertices, results[0].edges));
      return code;
    }

    if (*cross) {
      std::uint64_t lo = 0, hi = 0;
      try {
        std::tie(lo, hi) = parse_range(seeds);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const std::size_t n = hi - lo + 1;
      std::vector<SoundnessReport> reports(n);
      std::vector<TheoremCheck> theorem(n);
      parallel_for(n, oracle_jobs, [&](std::size_t i) {
        const auto pts = sample_config(lo + i);
        reports[i] = check_soundness(pts);
        if (with_theorem) theorem[i] = check_theorem_for_config(pts);
      });
      bool all_ok = true;
      for (std::size_t i = 0; i < n; ++i) {
        const bool ok = reports[i].ok() && theorem[i].ok;
        all_ok = all_ok && ok;
        if (ok) {
          fmt::print(out, "seed {} ok\n", lo + i);
        } else {
          std::string why = reports[i].ok() ? std::string("no rainbow partition for ") + color_str(*theorem[i].counterexample)
                                            : reports[i].detail;
          fmt::print(out, "seed {} FAIL {}\n", lo + i, why);
        }
      }
      return all_ok ? kOk : kNoClique;
    }

    if (*chi_check) {
      const Chirotope chi = chi_points ? Chirotope::from_points(read_points_file(chi_file)) : read_chirotope_file(chi_file);
      const auto report = check_axioms(chi);
      fmt::print(out, "elements {}\n", chi.size());
      fmt::print(out, "axioms {}\n", report.ok ? "ok" : "fail " + report.message);
      fmt::print(out, "acyclic {}\n", is_acyclic(chi) ? "yes" : "no");
      fmt::print(out, "uniform {}\n", chi.is_uniform() ? "yes" : "no");
      return report.ok ? kOk : kNoClique;
    }
  } catch (const std::runtime_error& e) {  // usage errors, malformed files, I/O
    fmt::print(err, "error: {}\n", e.what());
    return kUsage;
  } catch (const std::invalid_argument& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kUsage;
  } catch (const std::length_error& e) {  // brute force on a graph too large for it
    fmt::print(err, "error: {}\n", e.what());
    return kUsage;
  }
  return kUsage;
}

}  // namespace tenpoints::cli
