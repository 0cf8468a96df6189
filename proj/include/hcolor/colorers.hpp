#pragma once

// Las Vegas colorers built from alteration arguments: sample, repair the
// defects, restart on the rare bad sample. Restart k of a call with seed s
// draws from Rng(s + k).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hcolor/hypergraph.hpp"
#include "hcolor/numeric.hpp"
#include "hcolor/random.hpp"

namespace hcolor {

struct RandomizedRunConfig {
  std::uint64_t seed = 20190101;
  int max_restarts = 1000;
};

class RestartsExhausted : public std::runtime_error {
 public:
  RestartsExhausted(const std::string& what, int attempts)
      : std::runtime_error(what), attempts_(attempts) {}
  int attempts() const { return attempts_; }

 private:
  int attempts_;
};

// Recoloring from a random base palette.

/// floor((n-1) r / n).
int default_alon_split(int n, int r);

/// |E| < a^(n-1) (r-a) (n-1): the expected number of monochromatic edges of a
/// uniform a-coloring is below the repair capacity of the spare colors.
bool alon_condition(std::size_t num_edges, int n, int r, int a);

/// Uniform coloring with colors 1..a; palette is set to a.
Coloring random_base_coloring(std::size_t num_vertices, int a, Rng& rng);

struct AlonRun {
  std::optional<Coloring> coloring;
  int attempts = 0;
  int base_colors = 0;
  std::vector<std::size_t> monochromatic_per_attempt;  // before repair
  std::size_t recolored = 0;                           // in the successful attempt
};

/// Colors with 1..a, then walks edges in index order and moves the first
/// vertex of each still-monochromatic edge into the current spare color
/// (a+1..r), at most n-1 vertices per spare color. An attempt fails when the
/// spares run out. `a` defaults to default_alon_split(n, r); requires
/// 1 <= a < r unless the instance is edgeless.
AlonRun alon_recolor(const Hypergraph& h, int r, std::optional<int> a,
                     const RandomizedRunConfig& config);

// Degree-weighted independent sets.

struct DegreeSumBound {
  double value = 0.0;         // ((n-1)/n) * sum_v d_v^((n-2)/(n-1)) over d_v > 0
  std::uint64_t ceiling = 0;  // smallest integer >= value
  bool rational = true;       // every summand was an integer
};

DegreeSumBound independent_set_bound(const Hypergraph& h);

struct IndependentSetResult {
  std::vector<Vertex> vertices;
  std::uint64_t degree_sum = 0;
  int restarts = 0;  // attempts used, including the successful one
};

/// Picks each vertex with probability d_v^(-1/(n-1)) (degree-0 vertices
/// always), then drops the minimum-degree vertex (lowest index on ties) of
/// every fully picked edge. Repeats until the degree sum reaches
/// independent_set_bound().ceiling, which the expectation guarantees is
/// possible. Throws RestartsExhausted.
IndependentSetResult weighted_independent_set(const Hypergraph& h,
                                              const RandomizedRunConfig& config);

// Peeling.

struct PeelConfig {
  RandomizedRunConfig run;
  std::optional<Rational> c;  // defaults to n^-n; must lie in (0, n^-n]
};

struct PeelStep {
  int color = 0;
  bool high_degree = false;  // single vertex of degree >= c n r'^(n-1)
  std::size_t edges_before = 0;
  std::size_t removed_vertices = 0;
  std::size_t removed_edges = 0;
  int sampler_restarts = 0;
};

struct PeelRun {
  std::optional<Coloring> coloring;
  std::vector<PeelStep> steps;
  std::string failure;
};

/// Requires |E| <= c r^n. Each round with r' colors left removes either a
/// vertex of degree >= c n r'^(n-1) or a weighted independent set, giving it
/// color r', which keeps |E| <= c (r'-1)^n for the next round. Leftover
/// vertices get color 1. Throws std::invalid_argument on a violated
/// precondition; sampler exhaustion is reported through `failure`.
PeelRun peel_color(const Hypergraph& h, int r, const PeelConfig& config);

}  // namespace hcolor
