#include "hcolor/colorers.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace hcolor {

namespace {

std::optional<BigInt> exact_root(const BigInt& value, unsigned k) {
  if (k == 1) return value;
  const double estimate = std::pow(value.convert_to<double>(), 1.0 / k);
  const auto guess = static_cast<long long>(std::llround(estimate));
  for (long long c = std::max(0LL, guess - 2); c <= guess + 2; ++c) {
    if (power(BigInt(c), k) == value) return BigInt(c);
  }
  return std::nullopt;
}

struct Sample {
  std::vector<Vertex> vertices;
  std::uint64_t degree_sum = 0;
};

Sample sample_independent_set(const Hypergraph& h, const std::vector<std::size_t>& deg,
                              Rng& rng) {
  const double exponent = -1.0 / static_cast<double>(h.uniformity() - 1);
  std::vector<bool> picked(h.num_vertices());
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    // Always draw, so the stream position does not depend on degrees.
    const double u = uniform_unit(rng);
    picked[v] = deg[v] == 0 || u < std::pow(static_cast<double>(deg[v]), exponent);
  }
  std::vector<bool> dropped(h.num_vertices(), false);
  for (const Edge& e : h.edges()) {
    const bool full = std::all_of(e.begin(), e.end(),
                                  [&](Vertex v) { return picked[static_cast<std::size_t>(v)]; });
    if (!full) continue;
    // Edges are sorted, so the first minimum is the lowest index.
    Vertex victim = e.front();
    for (Vertex v : e) {
      if (deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(victim)]) victim = v;
    }
    dropped[static_cast<std::size_t>(victim)] = true;
  }
  Sample out;
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    if (picked[v] && !dropped[v]) {
      out.vertices.push_back(static_cast<Vertex>(v));
      out.degree_sum += deg[v];
    }
  }
  return out;
}

}  // namespace

int default_alon_split(int n, int r) { return (n - 1) * r / n; }

bool alon_condition(std::size_t num_edges, int n, int r, int a) {
  if (a < 1 || a >= r) return false;
  const BigInt capacity =
      power(BigInt(a), static_cast<unsigned>(n - 1)) * (r - a) * (n - 1);
  return BigInt(num_edges) < capacity;
}

Coloring random_base_coloring(std::size_t num_vertices, int a, Rng& rng) {
  Coloring c{std::vector<int>(num_vertices), a};
  for (auto& color : c.colors) {
    color = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(a)));
  }
  return c;
}

AlonRun alon_recolor(const Hypergraph& h, int r, std::optional<int> a,
                     const RandomizedRunConfig& config) {
  if (r < 1) throw std::invalid_argument("alon_recolor: r must be at least 1");
  if (config.max_restarts < 1) throw std::invalid_argument("alon_recolor: max_restarts < 1");
  AlonRun run;
  if (h.num_edges() == 0) {
    run.coloring = Coloring{std::vector<int>(h.num_vertices(), 1), r};
    return run;
  }
  const int n = h.uniformity();
  const int base = a.value_or(default_alon_split(n, r));
  if (base < 1 || base >= r) {
    throw std::invalid_argument("alon_recolor: need 1 <= a < r, got a = " + std::to_string(base) +
                                ", r = " + std::to_string(r));
  }
  run.base_colors = base;

  for (int attempt = 0; attempt < config.max_restarts; ++attempt) {
    ++run.attempts;
    Rng rng(config.seed + static_cast<std::uint64_t>(attempt));
    Coloring c = random_base_coloring(h.num_vertices(), base, rng);
    c.palette = r;
    run.monochromatic_per_attempt.push_back(is_proper(h, c).monochromatic.size());

    int spare = base + 1;
    int used_in_spare = 0;
    std::size_t recolored = 0;
    bool ok = true;
    for (const Edge& e : h.edges()) {
      const int first = c.colors[static_cast<std::size_t>(e.front())];
      const bool mono = std::all_of(e.begin(), e.end(), [&](Vertex v) {
        return c.colors[static_cast<std::size_t>(v)] == first;
      });
      if (!mono) continue;
      // A spare color holds at most n-1 vertices, so it never fills an edge.
      assert(first <= base);
      if (used_in_spare == n - 1) {
        ++spare;
        used_in_spare = 0;
      }
      if (spare > r) {
        ok = false;
        break;
      }
      c.colors[static_cast<std::size_t>(e.front())] = spare;
      ++used_in_spare;
      ++recolored;
    }
    if (ok) {
      run.recolored = recolored;
      run.coloring = std::move(c);
      return run;
    }
  }
  return run;
}

DegreeSumBound independent_set_bound(const Hypergraph& h) {
  const int n = h.uniformity();
  DegreeSumBound out;
  BigInt integral = 0;
  long double total = 0;
  for (std::size_t d : degrees(h)) {
    if (d == 0) continue;
    if (n == 2) {
      integral += 1;
      total += 1;
      continue;
    }
    const auto root = exact_root(power(BigInt(d), static_cast<unsigned>(n - 2)),
                                 static_cast<unsigned>(n - 1));
    if (root) {
      integral += *root;
    } else {
      out.rational = false;
    }
    total += std::pow(static_cast<long double>(d),
                      static_cast<long double>(n - 2) / static_cast<long double>(n - 1));
  }
  const long double value = total * (n - 1) / n;
  out.value = static_cast<double>(value);
  if (out.rational) {
    out.ceiling = ceil_div(integral * (n - 1), BigInt(n)).convert_to<std::uint64_t>();
  } else {
    // A positive sum of real radicals of integers is rational only when every
    // radical is, so here the bound is irrational and never an integer.
    out.ceiling = static_cast<std::uint64_t>(std::floor(value)) + 1;
  }
  return out;
}

IndependentSetResult weighted_independent_set(const Hypergraph& h,
                                              const RandomizedRunConfig& config) {
  if (h.uniformity() < 2) throw std::invalid_argument("weighted_independent_set: n < 2");
  if (config.max_restarts < 1) {
    throw std::invalid_argument("weighted_independent_set: max_restarts < 1");
  }
  const auto deg = degrees(h);
  const auto target = independent_set_bound(h).ceiling;
  for (int attempt = 0; attempt < config.max_restarts; ++attempt) {
    Rng rng(config.seed + static_cast<std::uint64_t>(attempt));
    Sample s = sample_independent_set(h, deg, rng);
    if (s.degree_sum >= target) return {std::move(s.vertices), s.degree_sum, attempt + 1};
  }
  throw RestartsExhausted("weighted_independent_set: degree sum " + std::to_string(target) +
                              " not reached in " + std::to_string(config.max_restarts) +
                              " attempts",
                          config.max_restarts);
}

PeelRun peel_color(const Hypergraph& h, int r, const PeelConfig& config) {
  const int n = h.uniformity();
  if (r < 1) throw std::invalid_argument("peel_color: r must be at least 1");
  const Rational extreme(BigInt(1), power(BigInt(n), static_cast<unsigned>(n)));
  const Rational c = config.c.value_or(extreme);
  if (c <= 0 || c > extreme) {
    throw std::invalid_argument("peel_color: c must lie in (0, n^-n]");
  }
  auto fits = [&](std::size_t edges, int colors) {
    return Rational(BigInt(edges)) <= c * power(BigInt(colors), static_cast<unsigned>(n));
  };
  if (!fits(h.num_edges(), r)) {
    throw std::invalid_argument("peel_color: " + std::to_string(h.num_edges()) +
                                " edges exceed c r^n for r = " + std::to_string(r));
  }

  PeelRun run;
  std::vector<int> colors(h.num_vertices(), 0);
  std::vector<Vertex> alive(h.num_vertices());
  for (std::size_t v = 0; v < alive.size(); ++v) alive[v] = static_cast<Vertex>(v);

  int colors_left = r;
  for (std::uint64_t stage = 0;; ++stage) {
    auto current = induced(h, alive);
    const Hypergraph& g = current.graph;
    if (g.num_edges() == 0) break;
    if (colors_left < 1 || !fits(g.num_edges(), colors_left)) {
      run.failure = "edge budget invariant broken with " + std::to_string(colors_left) +
                    " colors left";
      return run;
    }

    PeelStep step;
    step.color = colors_left;
    step.edges_before = g.num_edges();
    std::vector<Vertex> chosen;
    const auto deg = degrees(g);
    const auto top = std::max_element(deg.begin(), deg.end());
    const Rational threshold =
        c * n * power(BigInt(colors_left), static_cast<unsigned>(n - 1));
    if (Rational(BigInt(*top)) >= threshold) {
      step.high_degree = true;
      chosen.push_back(static_cast<Vertex>(top - deg.begin()));
    } else {
      RandomizedRunConfig sub = config.run;
      sub.seed += stage * static_cast<std::uint64_t>(config.run.max_restarts);
      try {
        auto found = weighted_independent_set(g, sub);
        step.sampler_restarts = found.restarts;
        chosen = std::move(found.vertices);
      } catch (const RestartsExhausted& ex) {
        run.failure = ex.what();
        run.steps.push_back(step);
        return run;
      }
    }

    std::vector<bool> remove(g.num_vertices(), false);
    for (Vertex v : chosen) {
      remove[static_cast<std::size_t>(v)] = true;
      colors[static_cast<std::size_t>(current.original[static_cast<std::size_t>(v)])] =
          colors_left;
    }
    for (const Edge& e : g.edges()) {
      if (std::any_of(e.begin(), e.end(),
                      [&](Vertex v) { return remove[static_cast<std::size_t>(v)]; })) {
        ++step.removed_edges;
      }
    }
    step.removed_vertices = chosen.size();
    run.steps.push_back(step);

    std::vector<Vertex> next;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      if (!remove[v]) next.push_back(current.original[v]);
    }
    alive = std::move(next);
    --colors_left;
  }

  for (auto& color : colors) {
    if (color == 0) color = 1;
  }
  run.coloring = Coloring{std::move(colors), r};
  return run;
}

}  // namespace hcolor
