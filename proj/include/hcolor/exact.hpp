#pragma once

// Exhaustive oracles for small instances. Everything here is exponential and
// intended to validate the polynomial machinery elsewhere.

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "hcolor/hypergraph.hpp"

namespace hcolor {

struct SolveBudget {
  std::uint64_t max_nodes = 200'000'000;
  std::chrono::milliseconds max_millis{60'000};
};

enum class Verdict { yes, no, budget_exceeded };

struct ColorabilityResult {
  Verdict verdict = Verdict::budget_exceeded;
  std::optional<Coloring> witness;  // set iff verdict == yes
  std::uint64_t nodes = 0;
};

/// Backtracking decision procedure for chi(H) <= r. A `no` is only returned
/// when the search space was exhausted.
ColorabilityResult is_r_colorable(const Hypergraph& h, int r, const SolveBudget& budget = {});

struct ChromaticResult {
  int value = 1;
  Coloring witness;
};

/// nullopt when some decision call ran out of budget.
std::optional<ChromaticResult> chromatic_number(const Hypergraph& h,
                                                const SolveBudget& budget = {});

/// Number of edge sequences (a_1..a_k) forming an ordered k-chain under
/// `order`. Plain DFS over sequences with every pair rechecked.
std::uint64_t enumerate_ordered_chains(const Hypergraph& h, const VertexOrder& order,
                                       std::size_t k);

struct DegreeSumIndependentSet {
  std::vector<Vertex> vertices;
  std::uint64_t degree_sum = 0;
};

inline constexpr std::size_t kMaxIndependentSetVertices = 24;

/// Independent set maximizing the sum of vertex degrees, by enumerating all
/// subsets. Throws std::length_error above kMaxIndependentSetVertices.
DegreeSumIndependentSet max_degree_sum_independent_set(const Hypergraph& h);

}  // namespace hcolor
