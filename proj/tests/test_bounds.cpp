#include <doctest.h>

#include <cmath>

#include "hcolor/bounds.hpp"
#include "hcolor/exact.hpp"
#include "oracles.hpp"

using namespace hcolor;

namespace {

std::int64_t seed_oracle(int n, std::size_t N) {
  for (std::int64_t r = 1;; ++r) {
    BigInt best = 0;
    for (std::int64_t a = 1; a < r; ++a) {
      BigInt v = power(a, n - 1) * (r - a) * (n - 1);
      if (v > best) best = v;
    }
    if (BigInt(N) < best) return r;
  }
}

}  // namespace

TEST_CASE("seed table") {
  const auto t = seed_table(3, 40);
  CHECK(t.F[0] == 1);
  CHECK(t.F[1] == 2);
  CHECK(t.F[6] == 2);
  CHECK(t.F[7] == 3);
  CHECK(t.F[26] == 3);
  for (std::size_t N = 0; N <= 26; ++N) CHECK(t.provenance[N] == Provenance::exact);
  for (std::size_t N = 27; N <= 40; ++N) {
    CHECK(t.provenance[N] == Provenance::closed_form_seed);
    CHECK(t.F[N] == seed_oracle(3, N));
  }
  CHECK(closed_form_seed(3, 7) == 3);
  CHECK(closed_form_seed(3, 8) == 4);
  CHECK(closed_form_seed(3, 1) == 2);
  for (int n = 2; n <= 5; ++n)
    for (std::size_t N = 0; N < 300; N += 7) CHECK(closed_form_seed(n, N) == seed_oracle(n, N));

  const auto t4 = seed_table(4, 10);
  CHECK(t4.F[0] == 1);
  CHECK(t4.provenance[0] == Provenance::exact);
  CHECK(t4.F[5] == seed_oracle(4, 5));
}

TEST_CASE("composition DP against brute force") {
  const std::vector<std::int64_t> g{1, 2, 2, 1, 3, 3, 2, 4, 4, 4, 5, 3, 5, 6, 6, 6, 7, 7, 5, 8, 8};
  CompositionDp dp;
  for (auto x : g) dp.push(x);
  for (int p = 1; p <= 4; ++p)
    for (std::size_t b = 0; b <= 20; ++b) {
      CAPTURE(p);
      CAPTURE(b);
      CHECK(dp.max_sum(static_cast<std::size_t>(p), b) == oracle::max_composition(g, p, b));
    }
  CHECK(dp.envelope(3) == 2);

  const auto exact = exact_values_n3();
  CompositionDp dp3;
  for (auto x : exact) dp3.push(x);
  for (int p = 1; p <= 4; ++p)
    for (std::size_t b = 0; b <= 20; ++b)
      CHECK(dp3.max_sum(static_cast<std::size_t>(p), b) == oracle::max_composition(exact, p, b));
  CHECK(dp3.max_sum(2, 6) == 4);
  CHECK(dp3.max_sum(2, 7) == 4);
}

TEST_CASE("composition extension") {
  const auto t = build_table(3, 200);
  CHECK(t.F[26] == 3);
  CHECK(t.F[27] == 4);
  CHECK(t.F[28] == 4);
  CHECK(t.provenance[27] == Provenance::lemma1);
  for (std::size_t N = 1; N <= 200; ++N) CHECK(t.F[N - 1] <= t.F[N]);
  CHECK(table_lower_bound(t, 3) == 27);
  CHECK(table_lower_bound(t, 2) == 7);
  CHECK(table_lower_bound(t, 1000) == 201);

  // Independent recomputation of each new entry from the definition.
  std::vector<std::int64_t> F(exact_values_n3());
  for (std::size_t N = 27; N <= 200; ++N) {
    std::int64_t best = seed_oracle(3, N);
    for (std::size_t p = 2;; ++p) {
      const std::size_t B = N / (p * p);
      best = std::min(best, oracle::max_composition(F, static_cast<int>(p), B));
      if (B == 0) break;
    }
    F.push_back(best);
  }
  for (std::size_t N = 200; N-- > 0;) F[N] = std::min(F[N], F[N + 1]);
  CHECK(t.F == F);
}

TEST_CASE("extension is monotone in its input") {
  auto high = seed_table(3, 26);
  auto low = high;
  for (std::size_t N = 7; N <= 26; ++N) low.F[N] = 2;
  low.F[3] = 1;
  const auto a = lemma1_extend(high, 400);
  const auto b = lemma1_extend(low, 400);
  for (std::size_t N = 0; N <= 400; ++N) CHECK(b.F[N] <= a.F[N]);
}

TEST_CASE("table soundness on solved instances") {
  const auto t3 = build_table(3, 200);
  CHECK(chromatic_number(fano())->value <= t3.F[7]);
  CHECK(chromatic_number(complete(3, 5))->value <= t3.F[10]);
  CHECK(chromatic_number(complete(3, 7))->value <= t3.F[35]);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Hypergraph h = random_uniform(3, 8, 10 + seed, seed);
    CHECK(oracle::chromatic_number(h) <= t3.F[h.num_edges()]);
  }
  const auto t2 = build_table(2, 100);
  for (std::size_t v = 2; v <= 9; ++v) {
    const Hypergraph k = complete(2, v);
    CHECK(static_cast<std::int64_t>(v) <= t2.F[k.num_edges()]);
  }
}

TEST_CASE("window factor") {
  CHECK(window_factor(3) == Rational(64, 27));
  CHECK(window_factor(4) == Rational(8 * 8 * 8 * 8, 7 * 7 * 7 * 7));
  CHECK_THROWS_AS(window_factor(2), std::invalid_argument);
  CHECK(window_end(3, 11, WindowRule::published) == 27);
  CHECK(window_end(3, 27, WindowRule::published) == 64);
  const double strict = std::pow(1 - std::pow(2.0, -2.0 / 3), -3);
  for (std::size_t M : {1u, 11u, 100u, 999u})
    CHECK(static_cast<double>(window_end(3, M, WindowRule::strict)) >= strict * M);
}

TEST_CASE("window constant at M = 11") {
  const auto t = build_table(3, 28);
  const auto w = lemma2_constant(t, 11, WindowRule::published);
  CHECK(w.window_end == 27);
  CHECK(w.argmax == 11);
  CHECK(w.f_at_argmax == 3);
  CHECK(w.c_lower == Rational(11, 27));
  CHECK(w.r0 == 3);
  CHECK(w.lambda == doctest::Approx(3 / std::cbrt(11.0)));
  CHECK(*window_lower_bound(w, 3) == 12);
  CHECK_FALSE(window_lower_bound(w, 2));

  CHECK_THROWS_AS(lemma2_constant(t, 12, WindowRule::published), std::invalid_argument);
  CHECK_THROWS_AS(lemma2_constant(t, 0), std::invalid_argument);
  CHECK_THROWS_AS(lemma2_constant(build_table(2, 100), 5, WindowRule::published), std::invalid_argument);
  CHECK(lemma2_constant(build_table(2, 100), 5, WindowRule::strict).window_end <= 100);
}

TEST_CASE("exact argmax matches floating argmax") {
  const auto t = build_table(3, 5000);
  for (std::size_t M = 1; M < 2000; M += 37) {
    for (auto rule : {WindowRule::published, WindowRule::strict}) {
      if (window_end(3, M, rule) > t.n_max()) continue;
      const auto w = lemma2_constant(t, M, rule);
      long double best = 0;
      for (std::size_t a = M; a <= w.window_end; ++a) {
        const long double x = t.F[a] / std::cbrt(static_cast<long double>(a));
        best = std::max(best, x);
      }
      CHECK(static_cast<double>(best) == doctest::Approx(w.lambda).epsilon(1e-12));
      // the exact minimum of a / F(a)^3 over the window
      Rational low = Rational(w.window_end, 1);
      for (std::size_t a = M; a <= w.window_end; ++a) {
        const Rational q(static_cast<std::int64_t>(a), t.F[a] * t.F[a] * t.F[a]);
        if (q < low) low = q;
      }
      CHECK(w.c_lower == low);
    }
  }
}

TEST_CASE("best window constant") {
  const auto t = build_table(3, 10000);
  const auto best = best_window_constant(t, WindowRule::published);
  CHECK(best.c_lower >= Rational(324, 1000));
  CHECK(best.c_lower >= Rational(11, 27));
  // brute force over all M
  Rational top = 0;
  for (std::size_t M = 1; window_end(3, M, WindowRule::published) <= t.n_max(); ++M) {
    const auto w = lemma2_constant(t, M, WindowRule::published);
    if (w.c_lower > top) top = w.c_lower;
  }
  CHECK(best.c_lower == top);

  const auto strict = best_window_constant(t, WindowRule::strict);
  CHECK(strict.c_lower <= best.c_lower);
  CHECK(strict.c_lower > Rational(3, 10));
}

TEST_CASE("pluhar threshold") {
  CHECK(pluhar_threshold(3, 3) == 15);
  CHECK(pluhar_threshold(2, 2) == 2);
  for (int r = 2; r <= 8; ++r) CHECK(pluhar_threshold(3, r + 1) > pluhar_threshold(3, r));
  // against the definition with the enumerated probability
  for (auto [n, r] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}, {2, 5}, {4, 2}}) {
    const Rational p = oracle::chain_probability(n, r);
    std::int64_t e = 0;
    while (2 * Rational(power(e + 1, r)) / Rational(factorial(r)) * p < 1) ++e;
    CHECK(pluhar_threshold(n, r) == e);
  }
  CHECK(oracle::chromatic_number(complete(2, 3)) == 3);
}

TEST_CASE("closed forms") {
  const auto c33 = closed_form_bounds(3, 3);
  CHECK(c33.alon_lb == 8);
  CHECK(c33.erdos_ub == 35);
  CHECK(closed_form_bounds(2, 2).erdos_ub == 3);
  CHECK(closed_form_bounds(3, 1).erdos_ub == 1);
  CHECK(closed_form_bounds(5, 1).erdos_ub == 1);
  // complete hypergraph on (n-1)r+1 vertices is not r-colorable
  CHECK(oracle::chromatic_number(complete(3, 7)) == 4);
  CHECK(oracle::chromatic_number(complete(2, 4)) == 4);
}

TEST_CASE("bound report") {
  const auto rep = bound_report(3, 1, 40, EngineParams{100000, std::nullopt, WindowRule::strict});
  REQUIRE(rep.window);
  CHECK(rep.rows.size() == 40);
  for (const auto& row : rep.rows) {
    CAPTURE(row.r);
    CHECK(row.consistent);
    CHECK(row.best_lower() <= row.erdos_ub);
    CHECK(BigInt(row.table_lb) >= row.alon_lb);
    CHECK(BigInt(row.table_lb) <= row.erdos_ub);
    // a sound window bound never beats the recursion it was derived from
    if (row.window_lb && row.table_lb <= 100000) CHECK(*row.window_lb <= BigInt(row.table_lb));
  }
  const auto& r3 = rep.rows[2];
  CHECK(r3.r == 3);
  CHECK(r3.best_lower() <= 27);
  CHECK(rep.rows[0].pluhar_lb == 1);

  const auto fixed = bound_report(3, 10, 12, EngineParams{100, 11, WindowRule::published});
  REQUIRE(fixed.window);
  CHECK(fixed.window->c_lower == Rational(11, 27));

  const auto two = bound_report(2, 2, 4, EngineParams{200, std::nullopt, WindowRule::published});
  CHECK_FALSE(two.window);
  CHECK_FALSE(two.window_note.empty());
  const auto two_strict = bound_report(2, 2, 4, EngineParams{200, std::nullopt, WindowRule::strict});
  CHECK(two_strict.window);
}

TEST_CASE("published window claims more than the table certifies") {
  const auto rep = bound_report(3, 10, 10, EngineParams{10000, std::nullopt, WindowRule::published});
  REQUIRE(rep.window);
  CHECK(rep.window->c_lower == Rational(27, 64));
  const auto& row = rep.rows.front();
  CHECK(row.table_lb == 414);
  CHECK(*row.window_lb == 422);
}

TEST_CASE("certified constant on the default engine table") {
  const EngineParams defaults;
  CHECK(defaults.rule == WindowRule::strict);
  const auto w = best_window_constant(build_table(3, defaults.n_max), WindowRule::strict);
  CHECK(w.c_lower >= Rational(324, 1000));
  CHECK(w.c_lower == Rational(57664, 177147));
}
