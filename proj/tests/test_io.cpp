#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "hcolor/io.hpp"
#include "hcolor/verify.hpp"

using namespace hcolor;

TEST_CASE("hypergraph JSON round trip") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Hypergraph h = random_uniform(3, 10, 15, seed);
    std::istringstream in(dump(to_json(h)));
    CHECK(read_hypergraph(in) == h);
  }
  std::istringstream f(R"({"n": 3, "num_vertices": 3, "edges": [[0, 1, 2]]})");
  CHECK(read_hypergraph(f).num_edges() == 1);
}

TEST_CASE("malformed instances") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_hypergraph(in);
  };
  CHECK_THROWS_AS(parse("{"), FormatError);
  CHECK_THROWS_AS(parse(R"({"n": 3, "edges": []})"), FormatError);
  CHECK_THROWS_AS(parse(R"({"n": 3, "num_vertices": 3, "edges": [[0, 1, "x"]]})"), FormatError);
  CHECK_THROWS_AS(parse(R"({"n": 3, "num_vertices": 3, "edges": [[0, 1, 1]]})"), InvalidInstance);
  CHECK_THROWS_AS(parse(R"({"n": 3, "num_vertices": 3, "edges": [[2, 1, 0]]})"), InvalidInstance);
  CHECK_THROWS_AS(parse(R"({"n": 1, "num_vertices": 3, "edges": []})"), InvalidInstance);
  CHECK_THROWS_AS(parse(R"([1, 2])"), FormatError);
}

TEST_CASE("coloring and order JSON") {
  const Coloring c{{1, 2, 3, 1}, 3};
  CHECK(coloring_from_json(to_json(c)) == c);
  CHECK_THROWS_AS(coloring_from_json(Json{{"palette", 2}, {"colors", {1, 3}}}), FormatError);
  const VertexOrder o({3, 1, 0, 2});
  CHECK(order_from_json(to_json(o)) == o);
  CHECK_THROWS_AS(order_from_json(Json{0, 0}), FormatError);
}

TEST_CASE("numbers") {
  CHECK(to_json(BigInt(42)) == Json(42));
  CHECK(to_json(power(BigInt(10), 30)) == Json("1000000000000000000000000000000"));
  CHECK(to_json(Rational(11, 27)) == Json("11/27"));
  CHECK(to_json(Rational(4, 2)) == Json("2"));
}

TEST_CASE("bound report serialization") {
  const auto rep = bound_report(3, 10, 12, EngineParams{1000, 11, WindowRule::published});
  const Json doc = to_json(rep);
  CHECK(doc["window"]["c_lower"] == "11/27");
  CHECK(doc["rows"].size() == 3);
  const std::string csv = report_csv(rep);
  CHECK(csv.rfind("r,window_lb,table_lb,alon_lb,pluhar_lb,erdos_ub,consistent\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  CHECK(dump(doc) == dump(to_json(bound_report(3, 10, 12, EngineParams{1000, 11, WindowRule::published}))));

  const auto table = build_table(3, 30);
  const Json t = to_json(table);
  CHECK(t["F"][27] == 4);
  CHECK(t["provenance"][27] == "lemma1");
  CHECK(t["provenance"][0] == "exact");
}

TEST_CASE("verification report is reproducible") {
  VerifyOptions opts;
  opts.only = {"chains"};
  const auto a = run_verification(opts);
  const auto b = run_verification(opts);
  CHECK(format_report(a) == format_report(b));
  CHECK(all_passed(a));
  CHECK(to_json(a).size() == a.size());

  VerifyOptions broken;
  broken.only = {"bounds"};
  broken.corrupt_seed_table = true;
  CHECK_FALSE(all_passed(run_verification(broken)));
}
