// hcolor: command-line front end.
//
// Exit codes: 0 success, 1 algorithmic failure (e.g. a colorer ran out of
// restarts, a verification criterion failed), 2 usage or input error.
// Primary output goes to stdout; a one-line JSON run manifest goes to stderr.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hcolor/bounds.hpp"
#include "hcolor/chains.hpp"
#include "hcolor/colorers.hpp"
#include "hcolor/exact.hpp"
#include "hcolor/io.hpp"
#include "hcolor/verify.hpp"

namespace {

using namespace hcolor;

constexpr const char* kVersion = "0.1.0";
constexpr std::uint64_t kDefaultSeed = 20190101;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("HCOLOR_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("HCOLOR_SEED is not an unsigned integer");
    }
  }
  return kDefaultSeed;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Hypergraph load_instance(const std::string& path) {
  if (path == "-") return read_hypergraph(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open instance file " + path);
  return read_hypergraph(in);
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto r = std::stoll(text);
      return {r, r};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("bad r range \"" + text + "\" (expected R or A..B)");
  }
}

struct Outcome {
  std::string out;
  int code = 0;
  Json params = Json::object();
};

struct GenArgs {
  std::string kind = "fano";
  int n = 3;
  std::size_t v = 0;
  std::size_t m = 0;
};

void run_gen(const GenArgs& a, std::uint64_t seed, Outcome& o) {
  o.params = {{"kind", a.kind}, {"n", a.n}, {"v", a.v}, {"m", a.m}};
  if (a.kind == "fano") {
    o.out = dump(to_json(fano()));
  } else if (a.kind == "complete") {
    o.out = dump(to_json(complete(a.n, a.v)));
  } else if (a.kind == "random") {
    o.out = dump(to_json(random_uniform(a.n, a.v, a.m, seed)));
  } else {
    throw UsageError("unknown generator " + a.kind);
  }
}

struct ExactArgs {
  std::string input = "-";
  int r = 0;
  std::uint64_t max_nodes = SolveBudget{}.max_nodes;
  std::int64_t max_millis = SolveBudget{}.max_millis.count();
  bool independent_set = false;
};

void run_exact(const ExactArgs& a, Outcome& o) {
  o.params = {{"input", a.input}, {"r", a.r}, {"independent_set", a.independent_set}};
  const Hypergraph h = load_instance(a.input);
  const SolveBudget budget{a.max_nodes, std::chrono::milliseconds(a.max_millis)};
  Json doc;
  if (a.r > 0) {
    const auto res = is_r_colorable(h, a.r, budget);
    doc["r"] = a.r;
    doc["nodes"] = res.nodes;
    switch (res.verdict) {
      case Verdict::yes:
        doc["colorable"] = true;
        doc["verdict"] = std::to_string(a.r) + "-colorable";
        doc["coloring"] = to_json(*res.witness);
        break;
      case Verdict::no:
        doc["colorable"] = false;
        doc["verdict"] = "not " + std::to_string(a.r) + "-colorable";
        break;
      case Verdict::budget_exceeded:
        doc["colorable"] = nullptr;
        doc["verdict"] = "budget exceeded";
        o.code = 1;
        break;
    }
  } else {
    const auto chi = chromatic_number(h, budget);
    if (chi) {
      doc["chromatic_number"] = chi->value;
      doc["coloring"] = to_json(chi->witness);
    } else {
      doc["chromatic_number"] = nullptr;
      doc["verdict"] = "budget exceeded";
      o.code = 1;
    }
  }
  if (a.independent_set) {
    const auto best = max_degree_sum_independent_set(h);
    doc["independent_set"] = {{"vertices", best.vertices}, {"degree_sum", best.degree_sum}};
  }
  o.out = dump(doc);
}

struct ColorArgs {
  std::string input = "-";
  std::string alg = "alon";
  int r = 0;
  int a = 0;
  int max_restarts = 1000;
};

void run_color(const ColorArgs& args, std::uint64_t seed, Outcome& o) {
  o.params = {{"input", args.input}, {"alg", args.alg}, {"r", args.r}, {"max_restarts", args.max_restarts}};
  if (args.r < 1) throw UsageError("--r must be at least 1");
  const Hypergraph h = load_instance(args.input);
  const RandomizedRunConfig config{seed, args.max_restarts};
  std::optional<Coloring> coloring;
  Json stats;

  if (args.alg == "alon") {
    std::optional<int> split;
    if (args.a > 0) split = args.a;
    const auto run = alon_recolor(h, args.r, split, config);
    coloring = run.coloring;
    stats = {{"attempts", run.attempts},
             {"base_colors", run.base_colors},
             {"recolored", run.recolored},
             {"condition_holds", h.num_edges() == 0 ||
                                     alon_condition(h.num_edges(), h.uniformity(), args.r,
                                                    run.base_colors)},
             {"monochromatic_per_attempt", run.monochromatic_per_attempt}};
  } else if (args.alg == "peel") {
    const auto run = peel_color(h, args.r, PeelConfig{config, std::nullopt});
    coloring = run.coloring;
    Json steps = Json::array();
    for (const auto& s : run.steps) {
      steps.push_back({{"color", s.color},
                       {"high_degree", s.high_degree},
                       {"edges_before", s.edges_before},
                       {"removed_vertices", s.removed_vertices},
                       {"removed_edges", s.removed_edges},
                       {"sampler_restarts", s.sampler_restarts}});
    }
    stats = {{"steps", std::move(steps)}};
    if (!run.failure.empty()) stats["failure"] = run.failure;
  } else if (args.alg == "pluhar") {
    int attempts = 0;
    for (; attempts < args.max_restarts && !coloring; ++attempts) {
      const auto order = random_order(h.num_vertices(), seed + static_cast<std::uint64_t>(attempts));
      auto res = pluhar_color(h, order, args.r);
      if (auto* c = std::get_if<Coloring>(&res)) coloring = std::move(*c);
    }
    stats = {{"attempts", attempts}};
  } else if (args.alg == "exact") {
    const auto res = is_r_colorable(h, args.r);
    coloring = res.witness;
    stats = {{"nodes", res.nodes},
             {"verdict", res.verdict == Verdict::no ? "no"
                         : res.verdict == Verdict::yes ? "yes" : "budget_exceeded"}};
  } else {
    throw UsageError("unknown algorithm " + args.alg);
  }

  Json doc{{"algorithm", args.alg}, {"r", args.r}, {"stats", std::move(stats)}};
  if (coloring) {
    doc["coloring"] = to_json(*coloring);
    doc["proper"] = is_proper(h, *coloring).proper;
  } else {
    doc["coloring"] = nullptr;
    o.code = 1;
  }
  o.out = dump(doc);
}

struct ChainArgs {
  std::string input = "-";
  std::string order = "natural";
  std::vector<int> explicit_order;
  int r = 0;
  std::uint64_t trials = 0;
  bool certificate = false;
};

void run_chains(const ChainArgs& a, std::uint64_t seed, Outcome& o) {
  o.params = {{"input", a.input}, {"order", a.order}, {"r", a.r}, {"trials", a.trials}};
  const Hypergraph h = load_instance(a.input);
  std::optional<VertexOrder> order;
  if (a.order == "natural") {
    order = VertexOrder::natural(h.num_vertices());
  } else if (a.order == "random") {
    order = random_order(h.num_vertices(), seed);
  } else if (a.order == "explicit") {
    order = VertexOrder(std::vector<Vertex>(a.explicit_order.begin(), a.explicit_order.end()));
  } else {
    throw UsageError("unknown order kind " + a.order);
  }
  if (order->size() != h.num_vertices()) throw UsageError("order does not cover the instance");

  const auto longest = longest_ordered_chain(h, *order);
  Json doc{{"order", to_json(*order)}, {"longest_ordered_chain", longest.length}};
  if (a.certificate) doc["certificate"] = to_json(longest.certificate);
  if (a.r > 0) {
    const auto res = pluhar_color(h, *order, a.r);
    if (const auto* c = std::get_if<Coloring>(&res)) {
      doc["rank_coloring"] = to_json(*c);
    } else {
      doc["ordered_chain"] = to_json(std::get<ChainCertificate>(res));
    }
    if (a.r >= 2) {
      doc["chain_probability"] = to_json(ordered_chain_probability(h.uniformity(), a.r));
    }
    if (a.trials > 0) doc["monte_carlo"] = to_json(monte_carlo_order(h, a.r, a.trials, seed));
  } else if (a.trials > 0) {
    throw UsageError("--trials needs --r");
  }
  o.out = dump(doc);
}

struct BoundsArgs {
  int n = 3;
  std::size_t n_max = EngineParams{}.n_max;
  std::size_t M = 0;
  bool scan = false;
  std::string r_range = "3..20";
  bool csv = false;
  bool json = false;
  std::string emit_table;
  std::string window = "strict";
};

void run_bounds(const BoundsArgs& a, Outcome& o) {
  o.params = {{"n", a.n}, {"N_max", a.n_max}, {"M", a.M}, {"scan_M", a.scan},
              {"r", a.r_range}, {"window", a.window}};
  if (a.M > 0 && a.scan) throw UsageError("--M and --scan-M are exclusive");
  if (a.n < 2) throw UsageError("--n must be at least 2");
  const auto [r_from, r_to] = parse_range(a.r_range);
  if (r_from < 1 || r_to < r_from) throw UsageError("bad r range " + a.r_range);
  EngineParams params;
  params.n_max = a.n_max;
  if (a.M > 0) params.M = a.M;
  if (a.window == "published") {
    params.rule = WindowRule::published;
  } else if (a.window != "strict") {
    throw UsageError("--window must be published or strict");
  }

  const BoundTable table = build_table(a.n, a.n_max);
  const BoundReport report = bound_report(table, r_from, r_to, params);
  if (!a.emit_table.empty()) {
    std::ofstream out(a.emit_table);
    if (!out) throw UsageError("cannot write " + a.emit_table);
    out << dump(to_json(table));
  }

  std::string text;
  if (a.csv) {
    if (report.window) {
      const auto& w = *report.window;
      std::ostringstream head;
      head << "# n=" << report.n << " N_max=" << table.n_max() << " window=" << to_string(w.rule)
           << " M=" << w.M << " c_lower=" << to_string(w.c_lower) << " (" << to_double(w.c_lower)
           << ") r0=" << w.r0 << '\n';
      text += head.str();
    } else {
      text += "# window constant unavailable: " + report.window_note + "\n";
    }
    text += report_csv(report);
  }
  if (a.json || !a.csv) text += dump(to_json(report));
  o.out = text;
}

struct VerifyArgs {
  std::vector<std::string> only;
  bool corrupt = false;
  bool json = false;
};

void run_verify(const VerifyArgs& a, std::uint64_t seed, Outcome& o) {
  o.params = {{"only", a.only}, {"corrupt_seed_table", a.corrupt}};
  VerifyOptions options;
  options.seed = seed;
  options.only = a.only;
  options.corrupt_seed_table = a.corrupt;
  const auto results = run_verification(options);
  o.out = a.json ? dump(to_json(results)) : format_report(results);
  o.code = all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  const auto start = std::chrono::steady_clock::now();
  CLI::App app{"hcolor: hypergraph coloring algorithms and certified bounds on m(n, r)"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::uint64_t seed = kDefaultSeed;
  bool seed_given = false;
  app.add_option_function<std::uint64_t>(
         "--seed", [&](const std::uint64_t& s) { seed = s, seed_given = true; },
         "RNG seed (default: $HCOLOR_SEED or 20190101)")
      ->trigger_on_parse();

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("kind", gen.kind, "fano | complete | random")->required();
  gen_cmd->add_option("--n", gen.n, "Uniformity");
  gen_cmd->add_option("--v", gen.v, "Vertex count");
  gen_cmd->add_option("--m", gen.m, "Edge count (random)");

  ExactArgs exact;
  auto* exact_cmd = app.add_subcommand("exact", "Exact colorability / chromatic number");
  exact_cmd->add_option("--input,-i", exact.input, "Instance JSON path, - for stdin");
  exact_cmd->add_option("--r", exact.r, "Decide r-colorability (omit for chromatic number)");
  exact_cmd->add_option("--max-nodes", exact.max_nodes, "Search node budget");
  exact_cmd->add_option("--max-millis", exact.max_millis, "Wall-clock budget in ms");
  exact_cmd->add_flag("--independent-set", exact.independent_set,
                      "Also report the max degree-sum independent set");

  ColorArgs color;
  auto* color_cmd = app.add_subcommand("color", "Run a colorer");
  color_cmd->add_option("--input,-i", color.input, "Instance JSON path, - for stdin");
  color_cmd->add_option("--alg", color.alg, "alon | pluhar | peel | exact")
      ->check(CLI::IsMember({"alon", "pluhar", "peel", "exact"}));
  color_cmd->add_option("--r", color.r, "Palette size")->required();
  color_cmd->add_option("--a", color.a, "Base colors for alon (default floor((n-1)r/n))");
  color_cmd->add_option("--max-restarts", color.max_restarts, "Restart cap")
      ->check(CLI::PositiveNumber);

  ChainArgs chains;
  auto* chains_cmd = app.add_subcommand("chains", "Ordered chains under a vertex order");
  chains_cmd->add_option("--input,-i", chains.input, "Instance JSON path, - for stdin");
  chains_cmd->add_option("--order", chains.order, "natural | random | explicit");
  chains_cmd->add_option("--order-list", chains.explicit_order, "Vertices, smallest first")
      ->delimiter(',');
  chains_cmd->add_option("--r", chains.r, "Chain length for the rank coloring");
  chains_cmd->add_option("--trials", chains.trials, "Monte Carlo random orders");
  chains_cmd->add_flag("--certificate", chains.certificate, "Emit the longest chain");

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Certified bounds on f(N) and m(n, r)");
  bounds_cmd->add_option("--n", bounds.n, "Uniformity");
  bounds_cmd->add_option("--N-max", bounds.n_max, "Table extent")->capture_default_str();
  bounds_cmd->add_option("--M", bounds.M, "Window start");
  bounds_cmd->add_flag("--scan-M", bounds.scan, "Scan M for the best constant (default)");
  bounds_cmd->add_option("--r", bounds.r_range, "r or A..B");
  bounds_cmd->add_flag("--csv", bounds.csv, "CSV rows on stdout");
  bounds_cmd->add_flag("--json", bounds.json, "JSON report on stdout (default)");
  bounds_cmd->add_option("--emit-table", bounds.emit_table, "Write the bound table as JSON");
  bounds_cmd->add_option("--window", bounds.window, "strict (certified) | published")->capture_default_str();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance battery");
  verify_cmd->add_option("--only", verify.only, "Restrict to groups")
      ->check(CLI::IsMember(verification_groups()));
  verify_cmd->add_flag("--corrupt-seed-table", verify.corrupt, "Negative control");
  verify_cmd->add_flag("--json", verify.json, "JSON instead of text lines");

  auto emit_manifest = [&](const std::string& command, const Outcome& outcome,
                           const std::string& error) {
    const auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    std::ostringstream digest;
    digest << std::hex << fnv1a(outcome.out);
    Json manifest{{"command", command},      {"params", outcome.params},
                  {"seed", seed},            {"version", kVersion},
                  {"wall_ms", wall.count()}, {"digest", "fnv1a64:" + digest.str()},
                  {"exit", outcome.code}};
    if (!error.empty()) manifest["error"] = error;
    std::cerr << manifest.dump() << '\n';
    return outcome.code;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    Outcome failed;
    failed.code = 2;
    return emit_manifest("", failed, e.what());
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Outcome outcome;
  std::string error;
  try {
    if (!seed_given) seed = default_seed();
    if (command == "gen") run_gen(gen, seed, outcome);
    else if (command == "exact") run_exact(exact, outcome);
    else if (command == "color") run_color(color, seed, outcome);
    else if (command == "chains") run_chains(chains, seed, outcome);
    else if (command == "bounds") run_bounds(bounds, outcome);
    else run_verify(verify, seed, outcome);
  } catch (const UsageError& e) {
    error = e.what();
    outcome.code = 2;
  } catch (const FormatError& e) {
    error = e.what();
    outcome.code = 2;
  } catch (const std::invalid_argument& e) {  // includes InvalidInstance
    error = e.what();
    outcome.code = 2;
  } catch (const std::exception& e) {
    error = e.what();
    outcome.code = 1;
  }

  if (!error.empty()) {
    outcome.out.clear();
    std::cerr << "error: " << error << '\n';
  }
  std::cout << outcome.out << std::flush;
  return emit_manifest(command, outcome, error);
}
