#include <doctest.h>

#include <cmath>

#include "hcolor/colorers.hpp"
#include "hcolor/exact.hpp"
#include "oracles.hpp"

using namespace hcolor;

TEST_CASE("alon split and condition") {
  CHECK(default_alon_split(3, 3) == 2);
  CHECK(default_alon_split(3, 6) == 4);
  CHECK(default_alon_split(2, 5) == 2);
  CHECK(alon_condition(7, 3, 3, 2));   // 7 < 4 * 1 * 2
  CHECK_FALSE(alon_condition(8, 3, 3, 2));
}

TEST_CASE("alon_recolor") {
  const auto run = alon_recolor(fano(), 3, 2, {});
  REQUIRE(run.coloring);
  CHECK(is_proper(fano(), *run.coloring).proper);
  CHECK(run.coloring->palette == 3);
  CHECK(run.base_colors == 2);
  CHECK(run.monochromatic_per_attempt.size() == static_cast<std::size_t>(run.attempts));

  const auto edgeless = alon_recolor(Hypergraph(3, 5, {}), 4, std::nullopt, {});
  REQUIRE(edgeless.coloring);
  CHECK(edgeless.attempts <= 1);

  CHECK_THROWS_AS(alon_recolor(fano(), 3, 3, {}), std::invalid_argument);
  CHECK_THROWS_AS(alon_recolor(fano(), 3, 0, {}), std::invalid_argument);

  // a = 1 makes all 7 lines monochromatic; two recolored vertices reach at
  // most 6 of them, so every attempt fails
  const auto tight = alon_recolor(fano(), 2, 1, RandomizedRunConfig{1, 2});
  CHECK_FALSE(tight.coloring);
  CHECK(tight.attempts == 2);
}

TEST_CASE("alon_recolor battery") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int r = 3 + static_cast<int>(seed % 4);
    const int a = default_alon_split(3, r);
    const std::size_t cap = static_cast<std::size_t>(a * a * (r - a) * 2) - 1;
    const Hypergraph h = random_uniform(3, 12 + seed % 8, 1 + seed % cap, seed);
    REQUIRE(alon_condition(h.num_edges(), 3, r, a));
    const auto run = alon_recolor(h, r, std::nullopt, RandomizedRunConfig{seed, 200});
    REQUIRE(run.coloring);
    CHECK(is_proper(h, *run.coloring).proper);
    // no spare color is used more than n - 1 times
    std::vector<int> uses(static_cast<std::size_t>(r) + 1, 0);
    for (int c : run.coloring->colors) ++uses[static_cast<std::size_t>(c)];
    for (int c = a + 1; c <= r; ++c) CHECK(uses[static_cast<std::size_t>(c)] <= 2);
  }
}

TEST_CASE("random base coloring: monochromatic edge count has mean |E| a^(1-n)") {
  const Hypergraph h = random_uniform(3, 15, 40, 3);
  const int a = 3;
  const int trials = 10000;
  Rng rng(99);
  double sum = 0, sum_sq = 0;
  for (int t = 0; t < trials; ++t) {
    const Coloring c = random_base_coloring(h.num_vertices(), a, rng);
    const double mono = static_cast<double>(is_proper(h, c).monochromatic.size());
    sum += mono;
    sum_sq += mono * mono;
  }
  const double mean = sum / trials;
  const double var = sum_sq / trials - mean * mean;
  const double expected = 40.0 / 9.0;
  CHECK(std::abs(mean - expected) <= 3 * std::sqrt(var / trials));
}

TEST_CASE("independent_set_bound") {
  const auto edge = independent_set_bound(Hypergraph(3, 3, {{0, 1, 2}}));
  CHECK(edge.value == doctest::Approx(2.0));
  CHECK(edge.ceiling == 2);
  CHECK(edge.rational);

  const auto tri = independent_set_bound(complete(2, 3));
  CHECK(tri.value == doctest::Approx(1.5));
  CHECK(tri.ceiling == 2);

  // complete(3,5) has degree 6 everywhere and sqrt(6) is irrational
  const auto k5 = independent_set_bound(complete(3, 5));
  CHECK_FALSE(k5.rational);
  CHECK(k5.ceiling == static_cast<std::uint64_t>(std::ceil(2.0 / 3 * 5 * std::sqrt(6.0))));

  const auto none = independent_set_bound(Hypergraph(3, 4, {}));
  CHECK(none.value == 0.0);
  CHECK(none.ceiling == 0);
}

TEST_CASE("weighted_independent_set examples") {
  const Hypergraph edge(3, 3, {{0, 1, 2}});
  const auto e = weighted_independent_set(edge, {});
  CHECK(e.degree_sum == 2);
  CHECK(e.vertices.size() == 2);

  const auto none = weighted_independent_set(Hypergraph(3, 4, {}), {});
  CHECK(none.vertices == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(none.degree_sum == 0);

  const auto tri = weighted_independent_set(complete(2, 3), {});
  CHECK(tri.vertices.size() == 1);
  CHECK(tri.degree_sum == 2);
}

TEST_CASE("weighted_independent_set against the optimum") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 2 + static_cast<int>(seed % 2);
    const std::size_t nv = 5 + seed % 16;
    const std::size_t cap = std::min<std::size_t>(static_cast<std::size_t>(binomial(nv, n)), 10);
    const Hypergraph h = random_uniform(n, nv, 1 + seed % cap, seed);
    const auto res = weighted_independent_set(h, RandomizedRunConfig{seed, 1000});
    CHECK(res.degree_sum >= independent_set_bound(h).ceiling);
    CHECK(res.degree_sum <= oracle::degree_sum_optimum(h));
    // independent, and degree sum as claimed
    std::vector<bool> in(h.num_vertices(), false);
    for (Vertex v : res.vertices) in[v] = true;
    for (const Edge& ed : h.edges()) {
      bool all = true;
      for (Vertex v : ed) all = all && in[v];
      CHECK_FALSE(all);
    }
    const auto d = degrees(h);
    std::uint64_t sum = 0;
    for (Vertex v : res.vertices) sum += d[v];
    CHECK(sum == res.degree_sum);
  }
}

TEST_CASE("peel_color") {
  const auto f = peel_color(fano(), 6, {});
  REQUIRE(f.coloring);
  CHECK(f.coloring->palette == 6);
  CHECK(is_proper(fano(), *f.coloring).proper);
  CHECK(f.failure.empty());

  const Hypergraph edge(3, 3, {{0, 1, 2}});
  const auto e = peel_color(edge, 3, {});
  REQUIRE(e.coloring);
  CHECK(is_proper(edge, *e.coloring).proper);

  CHECK_THROWS_AS(peel_color(fano(), 5, {}), std::invalid_argument);  // 7 > (5/3)^3
  CHECK_THROWS_AS(peel_color(edge, 3, PeelConfig{{}, Rational(1, 2)}), std::invalid_argument);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Hypergraph h = random_uniform(3, 30, 9, seed);
    const auto run = peel_color(h, 7, PeelConfig{RandomizedRunConfig{seed, 1000}, std::nullopt});
    REQUIRE(run.coloring);
    CHECK(run.coloring->palette <= 7);
    CHECK(is_proper(h, *run.coloring).proper);
  }
}

TEST_CASE("peel_color with a smaller c") {
  // c = 1/54 allows |E| <= 64/54 at r = 4, i.e. one edge
  const Hypergraph edge(3, 3, {{0, 1, 2}});
  const auto run = peel_color(edge, 4, PeelConfig{{}, Rational(1, 54)});
  REQUIRE(run.coloring);
  CHECK(is_proper(edge, *run.coloring).proper);
  CHECK_THROWS(peel_color(Hypergraph(3, 4, {{0, 1, 2}, {1, 2, 3}}), 4, PeelConfig{{}, Rational(1, 54)}));
}
