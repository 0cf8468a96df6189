#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hcolor {

using Vertex = std::int32_t;
using Edge = std::vector<Vertex>;

struct Violation {
  enum class Kind {
    bad_uniformity,
    bad_vertex_count,
    bad_arity,
    out_of_range,
    repeated_vertex,
    unsorted_edge,
    duplicate_edge,
  };
  Kind kind;
  std::size_t edge = 0;  // index into the submitted edge list; 0 for instance-level kinds
  std::string message;
};

/// Every invariant violation of a prospective instance. An empty result means
/// the parts can be turned into a Hypergraph.
std::vector<Violation> validate(int n, std::int64_t num_vertices,
                                std::span<const Edge> edges);

class InvalidInstance : public std::invalid_argument {
 public:
  explicit InvalidInstance(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// An n-uniform hypergraph with dense 0-based vertices. Edges are strictly
/// increasing vertex lists kept in lexicographic order, so two instances with
/// the same edge set compare (and serialize) equal. Immutable once built.
class Hypergraph {
 public:
  /// Throws InvalidInstance listing every violation.
  Hypergraph(int n, std::size_t num_vertices, std::vector<Edge> edges);

  int uniformity() const { return n_; }
  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  bool operator==(const Hypergraph&) const = default;

 private:
  int n_;
  std::size_t num_vertices_;
  std::vector<Edge> edges_;
};

std::vector<Violation> validate(const Hypergraph& h);

struct Coloring {
  std::vector<int> colors;  // colors[v] in 1..palette
  int palette = 1;

  bool operator==(const Coloring&) const = default;
};

struct ProperCheck {
  bool proper = true;
  std::vector<std::size_t> monochromatic;  // edge indices, ascending
};

/// Throws std::invalid_argument on a length mismatch or an out-of-palette entry.
ProperCheck is_proper(const Hypergraph& h, const Coloring& c);

/// A linear order on the vertices: position i holds the i-th smallest vertex.
class VertexOrder {
 public:
  /// Throws std::invalid_argument unless `sequence` is a permutation of 0..size-1.
  explicit VertexOrder(std::vector<Vertex> sequence);
  static VertexOrder natural(std::size_t num_vertices);

  std::size_t size() const { return sequence_.size(); }
  Vertex at(std::size_t position) const { return sequence_[position]; }
  std::size_t position(Vertex v) const { return position_[static_cast<std::size_t>(v)]; }
  const std::vector<Vertex>& sequence() const { return sequence_; }

  bool operator==(const VertexOrder& other) const { return sequence_ == other.sequence_; }

 private:
  std::vector<Vertex> sequence_;
  std::vector<std::size_t> position_;
};

struct InducedHypergraph {
  Hypergraph graph;              // vertices renumbered 0..|S|-1
  std::vector<Vertex> original;  // original[new vertex] = vertex of the parent
};

/// Keeps exactly the edges contained in `subset`. Duplicates in `subset` are
/// ignored; new vertex i is the i-th smallest member. Throws std::out_of_range.
InducedHypergraph induced(const Hypergraph& h, std::span<const Vertex> subset);

std::vector<std::size_t> degrees(const Hypergraph& h);

// Generators.

/// The Fano plane: 7 points, 7 lines, any two lines meet in exactly one point.
Hypergraph fano();
/// All n-subsets of `num_vertices` vertices.
Hypergraph complete(int n, std::size_t num_vertices);
/// `num_edges` distinct n-subsets drawn uniformly; deterministic in `seed`.
/// Throws std::invalid_argument when num_edges > C(num_vertices, n).
Hypergraph random_uniform(int n, std::size_t num_vertices, std::size_t num_edges,
                          std::uint64_t seed);

}  // namespace hcolor
