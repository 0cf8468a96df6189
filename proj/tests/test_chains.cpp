#include <doctest.h>

#include <numeric>

#include "hcolor/chains.hpp"
#include "hcolor/exact.hpp"
#include "hcolor/random.hpp"
#include "oracles.hpp"

using namespace hcolor;

namespace {

std::vector<std::size_t> positions(const VertexOrder& o) {
  std::vector<std::size_t> pos(o.size());
  for (std::size_t i = 0; i < o.size(); ++i) pos[o.at(i)] = i;
  return pos;
}

Hypergraph small_random(std::uint64_t seed) {
  Rng rng(seed);
  const int n = 2 + static_cast<int>(uniform_below(rng, 2));
  const std::size_t nv = 4 + uniform_below(rng, 9);
  const auto max_edges = std::min<std::size_t>(static_cast<std::size_t>(binomial(nv, n)), 8);
  return random_uniform(n, nv, 1 + uniform_below(rng, max_edges), seed);
}

}  // namespace

TEST_CASE("is_ordered_chain") {
  const Hypergraph single(3, 3, {{0, 1, 2}});
  const std::vector<std::size_t> one{0};
  CHECK(is_ordered_chain(single, VertexOrder::natural(3), one));
  CHECK_FALSE(is_ordered_chain(single, VertexOrder::natural(3), std::vector<std::size_t>{}));

  const Hypergraph path(2, 3, {{0, 1}, {1, 2}});
  const std::vector<std::size_t> both{0, 1};
  CHECK(is_ordered_chain(path, VertexOrder::natural(3), both));
  CHECK_FALSE(is_ordered_chain(path, VertexOrder({2, 1, 0}), both));

  // {0,1,2} then {2,3,6}
  const Hypergraph f = fano();
  std::size_t a = 99, b = 99;
  for (std::size_t i = 0; i < f.num_edges(); ++i) {
    if (f.edge(i) == Edge{0, 1, 2}) a = i;
    if (f.edge(i) == Edge{2, 3, 6}) b = i;
  }
  REQUIRE(a < 7);
  REQUIRE(b < 7);
  const std::vector<std::size_t> ab{a, b};
  CHECK(is_ordered_chain(f, VertexOrder::natural(7), ab));
  CHECK_THROWS(is_ordered_chain(f, VertexOrder::natural(7), std::vector<std::size_t>{7}));
}

TEST_CASE("longest_ordered_chain examples") {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    std::vector<Vertex> seq(7);
    std::iota(seq.begin(), seq.end(), 0);
    fisher_yates(rng, std::span<Vertex>(seq));
    CHECK(longest_ordered_chain(fano(), VertexOrder(seq)).length <= 2);
  }
  const Hypergraph path(2, 4, {{0, 1}, {1, 2}, {2, 3}});
  const auto lc = longest_ordered_chain(path, VertexOrder::natural(4));
  CHECK(lc.length == 3);
  CHECK(is_ordered_chain(path, lc.certificate.order, lc.certificate.edges));
  CHECK(longest_ordered_chain(Hypergraph(3, 5, {}), VertexOrder::natural(5)).length == 0);
}

TEST_CASE("DP agrees with the definition") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Hypergraph h = small_random(seed);
    const VertexOrder order = random_order(h.num_vertices(), seed * 7 + 1);
    const auto lc = longest_ordered_chain(h, order);
    CHECK(lc.length == oracle::longest_chain(h, positions(order)));
    CHECK(lc.certificate.edges.size() == lc.length);
    if (lc.length > 0) CHECK(is_ordered_chain(h, order, lc.certificate.edges));
    CHECK(enumerate_ordered_chains(h, order, lc.length + 1) == 0);
    if (lc.length > 0) CHECK(enumerate_ordered_chains(h, order, lc.length) > 0);
  }
}

TEST_CASE("pluhar_color") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto res = pluhar_color(fano(), random_order(7, seed), 3);
    REQUIRE(std::holds_alternative<Coloring>(res));
    const auto& c = std::get<Coloring>(res);
    CHECK(c.palette == 3);
    CHECK(is_proper(fano(), c).proper);
  }
  auto two = pluhar_color(fano(), VertexOrder::natural(7), 2);
  REQUIRE(std::holds_alternative<ChainCertificate>(two));
  const auto& cert = std::get<ChainCertificate>(two);
  CHECK(cert.edges.size() == 2);
  CHECK(is_ordered_chain(fano(), cert.order, cert.edges));

  auto edgeless = pluhar_color(Hypergraph(3, 4, {}), VertexOrder::natural(4), 1);
  REQUIRE(std::holds_alternative<Coloring>(edgeless));
  CHECK(std::get<Coloring>(edgeless).colors == std::vector<int>(4, 1));
}

TEST_CASE("rank colorings are proper and certificates verify") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Hypergraph h = small_random(seed + 5000);
    const VertexOrder order = random_order(h.num_vertices(), seed);
    const auto len = longest_ordered_chain(h, order).length;
    for (int r = 1; r <= 5; ++r) {
      auto res = pluhar_color(h, order, r);
      if (len <= static_cast<std::size_t>(r) - 1) {
        REQUIRE(std::holds_alternative<Coloring>(res));
        const auto& c = std::get<Coloring>(res);
        CHECK(c.palette <= r);
        CHECK(is_proper(h, c).proper);
      } else {
        REQUIRE(std::holds_alternative<ChainCertificate>(res));
        const auto& cert = std::get<ChainCertificate>(res);
        CHECK(cert.edges.size() == static_cast<std::size_t>(r));
        CHECK(is_ordered_chain(h, cert.order, cert.edges));
      }
    }
  }
}

TEST_CASE("order_from_coloring") {
  const auto chi = chromatic_number(fano());
  REQUIRE(chi);
  CHECK(longest_ordered_chain(fano(), order_from_coloring(fano(), chi->witness)).length <= 2);

  const Hypergraph edge(2, 2, {{0, 1}});
  CHECK(longest_ordered_chain(edge, order_from_coloring(edge, Coloring{{1, 2}, 2})).length == 1);

  const Hypergraph path(2, 3, {{0, 1}, {1, 2}});
  const auto o = order_from_coloring(path, Coloring{{1, 2, 1}, 2});
  CHECK(o.sequence() == std::vector<Vertex>{0, 2, 1});
  CHECK(longest_ordered_chain(path, o).length == 1);

  CHECK_THROWS_AS(order_from_coloring(path, Coloring{{1, 1, 2}, 2}), std::invalid_argument);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Hypergraph h = small_random(seed + 9000);
    const auto c = chromatic_number(h);
    REQUIRE(c);
    const auto o2 = order_from_coloring(h, c->witness);
    CHECK(longest_ordered_chain(h, o2).length <= static_cast<std::size_t>(c->value) - 1);
  }
}

TEST_CASE("ordered_chain_probability") {
  CHECK(ordered_chain_probability(2, 2) == Rational(1, 6));
  CHECK(ordered_chain_probability(3, 2) == Rational(1, 30));
  CHECK(ordered_chain_probability(3, 3) == Rational(1, 1260));
  for (int n = 2; n <= 7; ++n) {
    for (int r = 2; (n - 1) * r + 1 <= 8; ++r) {
      CAPTURE(n);
      CAPTURE(r);
      CHECK(ordered_chain_probability(n, r) == oracle::chain_probability(n, r));
    }
  }
  CHECK_THROWS(ordered_chain_probability(1, 2));
  CHECK_THROWS(ordered_chain_probability(3, 1));
}

TEST_CASE("monte_carlo_order") {
  const auto fail = monte_carlo_order(fano(), 2, 200, 11);
  CHECK(fail.chain_free_count == 0);
  const auto pass = monte_carlo_order(fano(), 3, 200, 11);
  CHECK(pass.chain_free_count == 200);
  CHECK(pass.fraction == 1.0);

  // the closed form is for the fixed sequence (e0, e1); the reverse sequence
  // is a disjoint event of the same probability
  const Hypergraph chain(3, 5, {{0, 1, 2}, {2, 3, 4}});
  const std::vector<std::size_t> forward{0, 1};
  const std::uint64_t trials = 100000;
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < trials; ++t) hits += is_ordered_chain(chain, random_order(5, 77 + t), forward);
  const double p = 1.0 / 30;
  const double se = std::sqrt(p * (1 - p) / trials);
  CHECK(std::abs(static_cast<double>(hits) / trials - p) <= 3 * se);

  const auto stats = monte_carlo_order(chain, 2, trials, 20190101);
  const double any = static_cast<double>(trials - stats.chain_free_count) / trials;
  CHECK(std::abs(any - 2 * p) <= 3 * std::sqrt(2 * p * (1 - 2 * p) / trials));

  const auto again = monte_carlo_order(chain, 2, 1000, 3);
  CHECK(again.chain_free_count == monte_carlo_order(chain, 2, 1000, 3).chain_free_count);
}
