#include "hcolor/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hcolor/numeric.hpp"
#include "hcolor/random.hpp"

namespace hcolor {

namespace {

std::string describe(const Edge& e) {
  std::string out = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(e[i]);
  }
  return out + "}";
}

std::string join_violations(const std::vector<Violation>& violations) {
  std::string out = "invalid hypergraph:";
  for (const auto& v : violations) out += " " + v.message + ";";
  return out;
}

}  // namespace

std::vector<Violation> validate(int n, std::int64_t num_vertices,
                                std::span<const Edge> edges) {
  std::vector<Violation> out;
  if (n < 2) {
    out.push_back({Violation::Kind::bad_uniformity, 0,
                   "uniformity " + std::to_string(n) + " is below 2"});
  }
  if (num_vertices < 0) {
    out.push_back({Violation::Kind::bad_vertex_count, 0,
                   "negative vertex count " + std::to_string(num_vertices)});
  }

  std::map<Edge, std::size_t> first_seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    const std::string where = "edge " + std::to_string(i) + " " + describe(e);
    if (static_cast<int>(e.size()) != n) {
      out.push_back({Violation::Kind::bad_arity, i,
                     where + " has " + std::to_string(e.size()) + " vertices"});
    }
    if (std::any_of(e.begin(), e.end(),
                    [&](Vertex v) { return v < 0 || v >= num_vertices; })) {
      out.push_back({Violation::Kind::out_of_range, i, where + " has an out-of-range vertex"});
    }
    Edge sorted = e;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      out.push_back({Violation::Kind::repeated_vertex, i, where + " has a repeated vertex"});
      continue;
    }
    if (sorted != e) {
      out.push_back({Violation::Kind::unsorted_edge, i, where + " is not strictly increasing"});
    }
    auto [it, fresh] = first_seen.emplace(std::move(sorted), i);
    if (!fresh) {
      out.push_back({Violation::Kind::duplicate_edge, i,
                     where + " duplicates edge " + std::to_string(it->second)});
    }
  }
  return out;
}

std::vector<Violation> validate(const Hypergraph& h) {
  return validate(h.uniformity(), static_cast<std::int64_t>(h.num_vertices()), h.edges());
}

InvalidInstance::InvalidInstance(std::vector<Violation> violations)
    : std::invalid_argument(join_violations(violations)), violations_(std::move(violations)) {}

Hypergraph::Hypergraph(int n, std::size_t num_vertices, std::vector<Edge> edges)
    : n_(n), num_vertices_(num_vertices), edges_(std::move(edges)) {
  auto violations = validate(n_, static_cast<std::int64_t>(num_vertices_), edges_);
  if (!violations.empty()) throw InvalidInstance(std::move(violations));
  std::sort(edges_.begin(), edges_.end());
}

ProperCheck is_proper(const Hypergraph& h, const Coloring& c) {
  if (c.colors.size() != h.num_vertices()) {
    throw std::invalid_argument("coloring has " + std::to_string(c.colors.size()) +
                                " entries for " + std::to_string(h.num_vertices()) +
                                " vertices");
  }
  for (int color : c.colors) {
    if (color < 1 || color > c.palette) {
      throw std::invalid_argument("color " + std::to_string(color) + " outside palette 1.." +
                                  std::to_string(c.palette));
    }
  }
  ProperCheck out;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const Edge& e = h.edge(i);
    const int first = c.colors[static_cast<std::size_t>(e.front())];
    const bool mono = std::all_of(e.begin(), e.end(), [&](Vertex v) {
      return c.colors[static_cast<std::size_t>(v)] == first;
    });
    if (mono) out.monochromatic.push_back(i);
  }
  out.proper = out.monochromatic.empty();
  return out;
}

VertexOrder::VertexOrder(std::vector<Vertex> sequence)
    : sequence_(std::move(sequence)), position_(sequence_.size(), sequence_.size()) {
  for (std::size_t i = 0; i < sequence_.size(); ++i) {
    const Vertex v = sequence_[i];
    if (v < 0 || static_cast<std::size_t>(v) >= sequence_.size() ||
        position_[static_cast<std::size_t>(v)] != sequence_.size()) {
      throw std::invalid_argument("vertex order is not a permutation");
    }
    position_[static_cast<std::size_t>(v)] = i;
  }
}

VertexOrder VertexOrder::natural(std::size_t num_vertices) {
  std::vector<Vertex> seq(num_vertices);
  std::iota(seq.begin(), seq.end(), 0);
  return VertexOrder(std::move(seq));
}

InducedHypergraph induced(const Hypergraph& h, std::span<const Vertex> subset) {
  std::vector<Vertex> members(subset.begin(), subset.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!members.empty() &&
      (members.front() < 0 || static_cast<std::size_t>(members.back()) >= h.num_vertices())) {
    throw std::out_of_range("induced: vertex outside 0.." + std::to_string(h.num_vertices()));
  }

  std::vector<Vertex> renumber(h.num_vertices(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) {
    renumber[static_cast<std::size_t>(members[i])] = static_cast<Vertex>(i);
  }
  std::vector<Edge> kept;
  for (const Edge& e : h.edges()) {
    Edge mapped;
    mapped.reserve(e.size());
    for (Vertex v : e) {
      const Vertex w = renumber[static_cast<std::size_t>(v)];
      if (w < 0) break;
      mapped.push_back(w);
    }
    if (mapped.size() == e.size()) kept.push_back(std::move(mapped));
  }
  return {Hypergraph(h.uniformity(), members.size(), std::move(kept)), std::move(members)};
}

std::vector<std::size_t> degrees(const Hypergraph& h) {
  std::vector<std::size_t> d(h.num_vertices(), 0);
  for (const Edge& e : h.edges()) {
    for (Vertex v : e) ++d[static_cast<std::size_t>(v)];
  }
  return d;
}

Hypergraph fano() {
  return Hypergraph(3, 7,
                    {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

Hypergraph complete(int n, std::size_t num_vertices) {
  if (n < 2) throw std::invalid_argument("complete: uniformity must be at least 2");
  std::vector<Edge> edges;
  if (static_cast<std::size_t>(n) <= num_vertices) {
    // Walk n-subsets in lexicographic order via a selection mask.
    std::vector<bool> pick(num_vertices, false);
    std::fill(pick.begin(), pick.begin() + n, true);
    do {
      Edge e;
      for (std::size_t v = 0; v < num_vertices; ++v) {
        if (pick[v]) e.push_back(static_cast<Vertex>(v));
      }
      edges.push_back(std::move(e));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return Hypergraph(n, num_vertices, std::move(edges));
}

Hypergraph random_uniform(int n, std::size_t num_vertices, std::size_t num_edges,
                          std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random: uniformity must be at least 2");
  const BigInt available = binomial(num_vertices, static_cast<std::uint64_t>(n));
  if (BigInt(num_edges) > available) {
    throw std::invalid_argument("random: " + std::to_string(num_edges) + " edges requested but only " +
                                available.str() + " distinct " + std::to_string(n) +
                                "-subsets exist");
  }

  Rng rng(seed);
  std::vector<Edge> edges;
  if (BigInt(2 * num_edges) > available) {
    // Dense request: shuffle the full list and keep a prefix.
    edges = complete(n, num_vertices).edges();
    fisher_yates(rng, std::span<Edge>(edges));
    edges.resize(num_edges);
  } else {
    std::set<Edge> seen;
    std::vector<Vertex> pool(num_vertices);
    while (edges.size() < num_edges) {
      std::iota(pool.begin(), pool.end(), 0);
      // Partial Fisher-Yates: the first n slots become a uniform n-subset.
      for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
        const std::size_t j = i + uniform_below(rng, num_vertices - i);
        std::swap(pool[i], pool[j]);
      }
      Edge e(pool.begin(), pool.begin() + n);
      std::sort(e.begin(), e.end());
      if (seen.insert(e).second) edges.push_back(std::move(e));
    }
  }
  return Hypergraph(n, num_vertices, std::move(edges));
}

}  // namespace hcolor
