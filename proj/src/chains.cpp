#include "hcolor/chains.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "hcolor/random.hpp"

namespace hcolor {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct Span {
  std::size_t lo;
  std::size_t hi;
};

std::vector<Span> edge_spans(const Hypergraph& h, const VertexOrder& order) {
  if (order.size() != h.num_vertices()) {
    throw std::invalid_argument("vertex order covers " + std::to_string(order.size()) +
                                " vertices, instance has " + std::to_string(h.num_vertices()));
  }
  std::vector<Span> spans;
  spans.reserve(h.num_edges());
  for (const Edge& e : h.edges()) {
    Span s{order.position(e.front()), order.position(e.front())};
    for (Vertex v : e) {
      s.lo = std::min(s.lo, order.position(v));
      s.hi = std::max(s.hi, order.position(v));
    }
    spans.push_back(s);
  }
  return spans;
}

struct ChainDp {
  std::vector<std::size_t> length;       // per edge
  std::vector<std::size_t> predecessor;  // per edge, kNone at a chain start
  std::vector<std::size_t> rank;         // per position: best length of a chain ending there
  std::size_t best_edge = kNone;
};

ChainDp run_dp(const Hypergraph& h, const VertexOrder& order) {
  const auto spans = edge_spans(h, order);
  ChainDp dp;
  dp.length.assign(h.num_edges(), 0);
  dp.predecessor.assign(h.num_edges(), kNone);
  dp.rank.assign(h.num_vertices(), 0);
  std::vector<std::size_t> rank_edge(h.num_vertices(), kNone);

  std::vector<std::size_t> by_max(h.num_edges());
  std::iota(by_max.begin(), by_max.end(), 0);
  std::stable_sort(by_max.begin(), by_max.end(),
                   [&](std::size_t a, std::size_t b) { return spans[a].hi < spans[b].hi; });

  for (std::size_t e : by_max) {
    const std::size_t start = spans[e].lo;
    dp.length[e] = 1 + dp.rank[start];
    dp.predecessor[e] = rank_edge[start];
    const std::size_t end = spans[e].hi;
    if (dp.length[e] > dp.rank[end]) {
      dp.rank[end] = dp.length[e];
      rank_edge[end] = e;
    }
    if (dp.best_edge == kNone || dp.length[e] > dp.length[dp.best_edge]) dp.best_edge = e;
  }
  return dp;
}

std::vector<std::size_t> trace(const ChainDp& dp, std::size_t last) {
  std::vector<std::size_t> chain;
  for (std::size_t e = last; e != kNone; e = dp.predecessor[e]) chain.push_back(e);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

std::size_t shared_vertices(const Edge& a, const Edge& b) {
  std::size_t count = 0;
  for (Vertex v : a) count += std::binary_search(b.begin(), b.end(), v) ? 1 : 0;
  return count;
}

}  // namespace

bool is_ordered_chain(const Hypergraph& h, const VertexOrder& order,
                      std::span<const std::size_t> edge_seq) {
  if (edge_seq.empty()) return false;
  for (std::size_t e : edge_seq) {
    if (e >= h.num_edges()) throw std::out_of_range("edge index " + std::to_string(e));
  }
  const auto spans = edge_spans(h, order);
  for (std::size_t i = 0; i < edge_seq.size(); ++i) {
    for (std::size_t j = i + 1; j < edge_seq.size(); ++j) {
      const Edge& a = h.edge(edge_seq[i]);
      const Edge& b = h.edge(edge_seq[j]);
      const std::size_t want = j == i + 1 ? 1 : 0;
      if (shared_vertices(a, b) != want) return false;
      if (spans[edge_seq[i]].hi > spans[edge_seq[j]].lo) return false;
    }
  }
  return true;
}

LongestChain longest_ordered_chain(const Hypergraph& h, const VertexOrder& order) {
  if (h.uniformity() < 2) throw std::invalid_argument("longest_ordered_chain: n must be >= 2");
  const ChainDp dp = run_dp(h, order);
  LongestChain out{0, ChainCertificate{{}, order}};
  if (dp.best_edge == kNone) return out;
  out.length = dp.length[dp.best_edge];
  out.certificate.edges = trace(dp, dp.best_edge);
  return out;
}

std::variant<Coloring, ChainCertificate> pluhar_color(const Hypergraph& h,
                                                      const VertexOrder& order, int r) {
  if (r < 1) throw std::invalid_argument("pluhar_color: r must be at least 1");
  const ChainDp dp = run_dp(h, order);
  if (dp.best_edge != kNone && dp.length[dp.best_edge] >= static_cast<std::size_t>(r)) {
    auto chain = trace(dp, dp.best_edge);
    chain.resize(static_cast<std::size_t>(r));  // a prefix of an ordered chain is one too
    return ChainCertificate{std::move(chain), order};
  }
  Coloring c{std::vector<int>(h.num_vertices(), 1), r};
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    c.colors[v] = static_cast<int>(dp.rank[order.position(static_cast<Vertex>(v))]) + 1;
  }
  return c;
}

VertexOrder order_from_coloring(const Hypergraph& h, const Coloring& c) {
  if (!is_proper(h, c).proper) {
    throw std::invalid_argument("order_from_coloring: coloring is not proper");
  }
  std::vector<Vertex> seq(h.num_vertices());
  std::iota(seq.begin(), seq.end(), 0);
  std::stable_sort(seq.begin(), seq.end(), [&](Vertex a, Vertex b) {
    return c.colors[static_cast<std::size_t>(a)] < c.colors[static_cast<std::size_t>(b)];
  });
  return VertexOrder(std::move(seq));
}

Rational ordered_chain_probability(int n, int r) {
  if (n < 2 || r < 2) {
    throw std::invalid_argument("ordered_chain_probability: need n >= 2 and r >= 2");
  }
  const auto un = static_cast<unsigned>(n);
  const auto ur = static_cast<unsigned>(r);
  const BigInt end_pieces = power(factorial(un - 1), 2);
  const BigInt middle_pieces = power(factorial(un - 2), ur - 2);
  const BigInt all_orders = factorial((un - 1) * ur + 1);
  return Rational(end_pieces * middle_pieces, all_orders);
}

VertexOrder random_order(std::size_t num_vertices, std::uint64_t seed) {
  std::vector<Vertex> seq(num_vertices);
  std::iota(seq.begin(), seq.end(), 0);
  Rng rng(seed);
  fisher_yates(rng, std::span<Vertex>(seq));
  return VertexOrder(std::move(seq));
}

OrderStats monte_carlo_order(const Hypergraph& h, int r, std::uint64_t trials,
                             std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("monte_carlo_order: trials must be positive");
  if (r < 1) throw std::invalid_argument("monte_carlo_order: r must be at least 1");
  OrderStats stats;
  stats.trials = trials;
  stats.seed = seed;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto order = random_order(h.num_vertices(), seed + t);
    if (longest_ordered_chain(h, order).length < static_cast<std::size_t>(r)) {
      ++stats.chain_free_count;
    }
  }
  stats.fraction = static_cast<double>(stats.chain_free_count) / static_cast<double>(trials);
  return stats;
}

}  // namespace hcolor
