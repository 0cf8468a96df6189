#pragma once

// Ordered chains. A sequence of edges a_1..a_k is a k-chain when consecutive
// edges share exactly one vertex and all other pairs are disjoint; it is
// ordered under a vertex order when every vertex of a_i precedes or equals
// every vertex of a_j for i < j. A hypergraph is r-colorable iff some vertex
// order has no ordered r-chain. This header makes both directions of that
// equivalence constructive.

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "hcolor/hypergraph.hpp"
#include "hcolor/numeric.hpp"

namespace hcolor {

struct ChainCertificate {
  std::vector<std::size_t> edges;  // edge indices a_1..a_k
  VertexOrder order;
};

/// False for an empty sequence. Throws std::out_of_range on a bad edge index.
bool is_ordered_chain(const Hypergraph& h, const VertexOrder& order,
                      std::span<const std::size_t> edge_seq);

struct LongestChain {
  std::size_t length = 0;
  ChainCertificate certificate;
};

/// Exact longest ordered chain in O(|E| log |E| + n|E|).
///
/// In an ordered chain consecutive edges meet exactly at the order-maximum of
/// the earlier edge, which is also the order-minimum of the later one. So the
/// chain ending at e has length L(e) = 1 + max{L(e') : max(e') = min(e)}, and
/// processing edges by increasing order-maximum sees every predecessor first.
/// Conversely any DP chain is an ordered chain: consecutive edges meet in a
/// single vertex by construction, and max(a_i) = min(a_{i+1}) < max(a_{i+1})
/// makes non-consecutive edges strictly separated.
LongestChain longest_ordered_chain(const Hypergraph& h, const VertexOrder& order);

/// Rank coloring: color(v) = 1 + length of the longest ordered chain whose
/// last edge has v as its order-maximum. When the longest chain is shorter
/// than r this uses at most r colors and is proper: an edge whose vertices all
/// had rank k would extend a k-chain ending at its minimum into a (k+1)-chain
/// ending at its maximum. Otherwise returns an ordered r-chain.
std::variant<Coloring, ChainCertificate> pluhar_color(const Hypergraph& h,
                                                      const VertexOrder& order, int r);

/// Vertices sorted by color, ties by index. Along an ordered chain the color
/// strictly increases at every shared vertex, so a proper coloring with
/// palette r leaves no ordered r-chain. Throws std::invalid_argument if `c` is
/// not proper.
VertexOrder order_from_coloring(const Hypergraph& h, const Coloring& c);

/// Probability that a fixed r-chain of n-edges is ordered under a uniformly
/// random order of its (n-1)r+1 vertices:
/// ((n-1)!)^2 ((n-2)!)^(r-2) / ((n-1)r+1)!.
/// Throws std::invalid_argument unless n >= 2 and r >= 2.
Rational ordered_chain_probability(int n, int r);

VertexOrder random_order(std::size_t num_vertices, std::uint64_t seed);

struct OrderStats {
  std::uint64_t trials = 0;
  std::uint64_t chain_free_count = 0;  // orders whose longest ordered chain is < r
  double fraction = 0.0;
  std::uint64_t seed = 0;
};

/// Trial t uses random_order(num_vertices, seed + t).
OrderStats monte_carlo_order(const Hypergraph& h, int r, std::uint64_t trials,
                             std::uint64_t seed);

}  // namespace hcolor
