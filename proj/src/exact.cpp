#include "hcolor/exact.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace hcolor {

namespace {

class Backtracker {
 public:
  Backtracker(const Hypergraph& h, int r, const SolveBudget& budget)
      : h_(h), r_(r), budget_(budget), colors_(h.num_vertices(), 0),
        incident_(h.num_vertices()), start_(std::chrono::steady_clock::now()) {
    for (std::size_t i = 0; i < h.num_edges(); ++i) {
      for (Vertex v : h.edge(i)) incident_[static_cast<std::size_t>(v)].push_back(i);
    }
    // High-degree vertices first: conflicts surface near the root.
    order_.resize(h.num_vertices());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return incident_[static_cast<std::size_t>(a)].size() >
             incident_[static_cast<std::size_t>(b)].size();
    });
  }

  ColorabilityResult run() {
    ColorabilityResult out;
    const bool found = descend(0, 0);
    out.nodes = nodes_;
    if (found) {
      out.verdict = Verdict::yes;
      out.witness = Coloring{colors_, r_};
    } else {
      out.verdict = exceeded_ ? Verdict::budget_exceeded : Verdict::no;
    }
    return out;
  }

 private:
  // Assigning `color` to `v` closes a monochromatic edge iff some incident
  // edge has all other vertices already at `color`.
  bool admissible(Vertex v, int color) const {
    for (std::size_t ei : incident_[static_cast<std::size_t>(v)]) {
      const Edge& e = h_.edge(ei);
      const bool closes = std::all_of(e.begin(), e.end(), [&](Vertex u) {
        return u == v || colors_[static_cast<std::size_t>(u)] == color;
      });
      if (closes) return false;
    }
    return true;
  }

  bool out_of_budget() {
    if (nodes_ >= budget_.max_nodes) return true;
    if ((nodes_ & 0xfff) == 0 &&
        std::chrono::steady_clock::now() - start_ > budget_.max_millis) {
      return true;
    }
    return false;
  }

  bool descend(std::size_t depth, int max_used) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    // Colors are interchangeable: only try one fresh color.
    const int limit = std::min(r_, max_used + 1);
    for (int color = 1; color <= limit; ++color) {
      if (exceeded_) return false;
      ++nodes_;
      if (out_of_budget()) {
        exceeded_ = true;
        return false;
      }
      if (!admissible(v, color)) continue;
      colors_[static_cast<std::size_t>(v)] = color;
      if (descend(depth + 1, std::max(max_used, color))) return true;
      colors_[static_cast<std::size_t>(v)] = 0;
    }
    return false;
  }

  const Hypergraph& h_;
  int r_;
  SolveBudget budget_;
  std::vector<int> colors_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<Vertex> order_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
};

std::size_t intersection_size(const Edge& a, const Edge& b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace

ColorabilityResult is_r_colorable(const Hypergraph& h, int r, const SolveBudget& budget) {
  if (r < 1) throw std::invalid_argument("is_r_colorable: r must be at least 1");
  if (budget.max_nodes == 0 || budget.max_millis.count() <= 0) {
    throw std::invalid_argument("is_r_colorable: budget limits must be positive");
  }
  return Backtracker(h, r, budget).run();
}

std::optional<ChromaticResult> chromatic_number(const Hypergraph& h, const SolveBudget& budget) {
  if (h.num_edges() == 0) {
    return ChromaticResult{1, Coloring{std::vector<int>(h.num_vertices(), 1), 1}};
  }
  // Giving every vertex its own color is always proper, so the loop ends.
  for (int r = 2;; ++r) {
    auto result = is_r_colorable(h, r, budget);
    if (result.verdict == Verdict::budget_exceeded) return std::nullopt;
    if (result.verdict == Verdict::yes) return ChromaticResult{r, std::move(*result.witness)};
  }
}

std::uint64_t enumerate_ordered_chains(const Hypergraph& h, const VertexOrder& order,
                                       std::size_t k) {
  if (k < 1) throw std::invalid_argument("enumerate_ordered_chains: k must be at least 1");
  if (order.size() != h.num_vertices()) {
    throw std::invalid_argument("enumerate_ordered_chains: order size mismatch");
  }
  std::vector<std::size_t> lo(h.num_edges());
  std::vector<std::size_t> hi(h.num_edges());
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    lo[i] = hi[i] = order.position(h.edge(i).front());
    for (Vertex v : h.edge(i)) {
      lo[i] = std::min(lo[i], order.position(v));
      hi[i] = std::max(hi[i], order.position(v));
    }
  }

  std::vector<std::size_t> seq;
  std::uint64_t count = 0;
  auto extend = [&](auto&& self) -> void {
    if (seq.size() == k) {
      ++count;
      return;
    }
    for (std::size_t cand = 0; cand < h.num_edges(); ++cand) {
      bool ok = true;
      for (std::size_t j = 0; j < seq.size() && ok; ++j) {
        const std::size_t shared = intersection_size(h.edge(seq[j]), h.edge(cand));
        const bool adjacent = j + 1 == seq.size();
        ok = (adjacent ? shared == 1 : shared == 0) && hi[seq[j]] <= lo[cand];
      }
      if (!ok) continue;
      seq.push_back(cand);
      self(self);
      seq.pop_back();
    }
  };
  extend(extend);
  return count;
}

DegreeSumIndependentSet max_degree_sum_independent_set(const Hypergraph& h) {
  const std::size_t nv = h.num_vertices();
  if (nv > kMaxIndependentSetVertices) {
    throw std::length_error("max_degree_sum_independent_set: " + std::to_string(nv) +
                            " vertices exceeds the enumeration limit of " +
                            std::to_string(kMaxIndependentSetVertices));
  }
  const auto deg = degrees(h);
  std::vector<std::uint32_t> masks;
  for (const Edge& e : h.edges()) {
    std::uint32_t m = 0;
    for (Vertex v : e) m |= 1u << v;
    masks.push_back(m);
  }

  std::uint32_t best_mask = 0;
  std::uint64_t best_sum = 0;
  bool have = false;
  const std::uint64_t total = std::uint64_t{1} << nv;
  for (std::uint64_t s = 0; s < total; ++s) {
    const auto subset = static_cast<std::uint32_t>(s);
    const bool independent = std::none_of(masks.begin(), masks.end(), [&](std::uint32_t m) {
      return (m & subset) == m;
    });
    if (!independent) continue;
    std::uint64_t sum = 0;
    for (std::uint32_t rest = subset; rest; rest &= rest - 1) {
      sum += deg[static_cast<std::size_t>(std::countr_zero(rest))];
    }
    // Ties keep the last mask, so edgeless input yields I = V.
    if (!have || sum >= best_sum) {
      best_sum = sum;
      best_mask = subset;
      have = true;
    }
  }

  DegreeSumIndependentSet out;
  out.degree_sum = best_sum;
  for (std::size_t v = 0; v < nv; ++v) {
    if (best_mask >> v & 1u) out.vertices.push_back(static_cast<Vertex>(v));
  }
  return out;
}

}  // namespace hcolor
