#pragma once

// Certified upper bounds F(N) >= f(N), where f(N) is the largest chromatic
// number of an n-uniform hypergraph with N edges, and the lower bounds on
// m(n, r) = min{N : f(N) > r} that follow from them. Every comparison that
// feeds a certified number is done in integer or rational arithmetic.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcolor/numeric.hpp"

namespace hcolor {

enum class Provenance { exact, closed_form_seed, lemma1 };

std::string to_string(Provenance p);

struct BoundTable {
  int n = 3;
  std::vector<std::int64_t> F;  // F[N] for N = 0..n_max()
  std::vector<Provenance> provenance;

  std::size_t n_max() const { return F.size() - 1; }
};

/// Known values of f for 3-uniform hypergraphs: f(0) = 1, f(1..6) = 2,
/// f(7..26) = 3.
const std::vector<std::int64_t>& exact_values_n3();

/// Smallest r such that N < max_{0<a<r} a^(n-1) (r-a) (n-1): below that edge
/// count a random a-coloring plus spare colors always succeeds.
std::int64_t closed_form_seed(int n, std::size_t N);

/// F(0) = 1; for n = 3 the exact block 0..26 is hard-coded; every other entry
/// comes from closed_form_seed.
BoundTable seed_table(int n, std::size_t n_max);

/// Max-plus composition over the monotone envelope of a table that grows one
/// entry at a time. max_sum(p, B) is the largest sum of F~(a_1)+...+F~(a_p)
/// over nonnegative a_i with sum <= B, where F~(b) = max_{a<=b} F(a).
///
/// Since F~ is a nondecreasing step function, each part may as well sit at the
/// first index of one of its steps, so stage k costs O(B * steps).
class CompositionDp {
 public:
  void push(std::int64_t value);
  std::size_t size() const { return envelope_.size(); }
  std::int64_t envelope(std::size_t b) const { return envelope_.at(b); }
  /// Requires parts >= 1 and budget < size().
  std::int64_t max_sum(std::size_t parts, std::size_t budget);

 private:
  void fill(std::size_t parts, std::size_t budget);

  std::vector<std::int64_t> envelope_;
  std::vector<std::pair<std::size_t, std::int64_t>> steps_;  // (first index, value)
  std::vector<std::vector<std::int64_t>> stages_;            // stages_[k-2][b] for k >= 2
};

/// Extends the table to `n_max_new` entries. A new entry is the minimum of
/// its closed-form seed and, over p >= 2, max_sum(p, floor(N / p^(n-1))):
/// splitting the vertices into p random classes leaves on average N/p^(n-1)
/// edges inside the classes, and the classes can be colored with disjoint
/// palettes. Finishes with a downward pass F(N-1) = min(F(N-1), F(N)), valid
/// because f is nondecreasing.
BoundTable lemma1_extend(const BoundTable& table, std::size_t n_max_new);

/// seed_table over the exact block (0..26 for n = 3, just F(0) otherwise)
/// followed by lemma1_extend to n_max.
BoundTable build_table(int n, std::size_t n_max);

/// Smallest N with F(N) > r, or n_max() + 1 when no entry exceeds r. Either
/// way a lower bound on m(n, r).
std::size_t table_lower_bound(const BoundTable& table, std::int64_t r);

// Window constants. With lambda = max F(a) a^(-1/n) over a window [M, W],
// f(N) <= lambda N^(1/n) for every N >= M, which turns into
// m(n, r) > (r / lambda)^n once r >= lambda M^(1/n).

enum class WindowRule {
  /// W = ceil(c_n M) with c_n = (1 - 2^(1-n))^(-n), the factor as usually
  /// printed. Undefined for n = 2. Too short: the split step with one part
  /// below M needs N >= (1 - 2^((1-n)/n))^(-n) M, and on n = 3 tables this
  /// rule claims m lower bounds above what the table itself certifies.
  /// Kept for comparison only.
  published,
  /// W = ceil(c'_n M) + 1 with c'_n = (1 - 2^((1-n)/n))^(-n). A part below M
  /// contributes at most F(M) <= lambda M^(1/n), and
  /// (N / 2^(n-1))^(1/n) + M^(1/n) <= N^(1/n) once N >= c'_n M.
  strict,
};

std::string to_string(WindowRule rule);

/// (1 - 2^(1-n))^(-n) = (2^(n-1) / (2^(n-1) - 1))^n. Throws for n < 3.
Rational window_factor(int n);

/// Last index of the window starting at M.
std::size_t window_end(int n, std::size_t M, WindowRule rule);

struct WindowConstant {
  int n = 3;
  std::size_t M = 1;
  std::size_t window_end = 1;
  WindowRule rule = WindowRule::strict;
  std::size_t argmax = 1;      // a attaining lambda
  std::int64_t f_at_argmax = 1;
  double lambda = 1.0;         // F(a*) a*^(-1/n), for display
  Rational c_lower;            // lambda^-n = a* / F(a*)^n
  std::int64_t r0 = 1;         // smallest r with r^n a* >= F(a*)^n M
};

/// Throws std::invalid_argument when M < 1 or the table stops before the
/// window end.
WindowConstant lemma2_constant(const BoundTable& table, std::size_t M,
                               WindowRule rule = WindowRule::strict);

/// Best c_lower over every M whose window fits in the table; ties keep the
/// smaller M. Throws when no window fits.
WindowConstant best_window_constant(const BoundTable& table,
                                    WindowRule rule = WindowRule::strict);

/// floor(r^n a* / F(a*)^n) + 1 for r >= r0, nullopt below r0.
std::optional<BigInt> window_lower_bound(const WindowConstant& w, std::int64_t r);

// Closed forms.

/// Largest E with 2 E^r / r! * P(n, r) < 1, P the ordered-chain probability.
/// m(n, r) >= threshold + 1.
BigInt pluhar_threshold(int n, int r);

struct ClosedFormBounds {
  BigInt alon_lb;   // (n-1) ceil(r/n) floor((n-1)r/n)^(n-1)
  BigInt erdos_ub;  // C((n-1)r+1, n): the complete hypergraph on (n-1)r+1 vertices
};

ClosedFormBounds closed_form_bounds(int n, int r);

// Reports.

struct EngineParams {
  std::size_t n_max = 1'000'000;
  std::optional<std::size_t> M;  // nullopt: scan every M that fits
  WindowRule rule = WindowRule::strict;
};

struct ReportRow {
  std::int64_t r = 0;
  std::optional<BigInt> window_lb;
  std::size_t table_lb = 0;
  BigInt alon_lb;
  BigInt pluhar_lb;
  BigInt erdos_ub;
  bool consistent = true;  // every lower bound <= erdos_ub

  BigInt best_lower() const;
};

struct BoundReport {
  int n = 3;
  EngineParams params;
  std::optional<WindowConstant> window;  // absent when the rule is undefined for n
  std::string window_note;
  std::vector<ReportRow> rows;
};

BoundReport bound_report(const BoundTable& table, std::int64_t r_from, std::int64_t r_to,
                         const EngineParams& params);
BoundReport bound_report(int n, std::int64_t r_from, std::int64_t r_to,
                         const EngineParams& params);

}  // namespace hcolor
