#include "hcolor/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "hcolor/chains.hpp"

namespace hcolor {

namespace {

// G(r) = max_{0<a<r} a^(n-1) (r-a) (n-1), nondecreasing in r, cached.
class SeedCurve {
 public:
  explicit SeedCurve(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("uniformity must be at least 2");
    capacity_.push_back(0);  // r = 1: no split available
  }

  std::int64_t value(std::size_t N) {
    const BigInt target(N);
    std::size_t r = 1;
    while (true) {
      while (capacity_.size() < r) extend();
      if (target < capacity_[r - 1]) return static_cast<std::int64_t>(r);
      ++r;
    }
  }

 private:
  void extend() {
    const auto r = static_cast<std::int64_t>(capacity_.size() + 1);
    BigInt best = 0;
    for (std::int64_t a = 1; a < r; ++a) {
      BigInt cap = power(BigInt(a), static_cast<unsigned>(n_ - 1)) * (r - a) * (n_ - 1);
      if (cap > best) best = std::move(cap);
    }
    capacity_.push_back(std::move(best));
  }

  int n_;
  std::vector<BigInt> capacity_;
};

// p^(n-1), saturated at `cap` + 1.
std::uint64_t split_divisor(std::uint64_t p, int n, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (int i = 0; i < n - 1; ++i) {
    if (out > cap / p) return cap + 1;
    out *= p;
  }
  return out;
}

class PowerCache {
 public:
  explicit PowerCache(int n) : n_(static_cast<unsigned>(n)) {}
  const BigInt& operator()(std::int64_t base) {
    auto it = cache_.find(base);
    if (it == cache_.end()) it = cache_.emplace(base, power(BigInt(base), n_)).first;
    return it->second;
  }

 private:
  unsigned n_;
  std::map<std::int64_t, BigInt> cache_;
};

bool checked_product(std::int64_t base, int n, std::size_t factor, __int128& out) {
  __int128 acc = static_cast<__int128>(factor);
  for (int i = 0; i < n; ++i) {
    if (__builtin_mul_overflow(acc, static_cast<__int128>(base), &acc)) return false;
  }
  out = acc;
  return true;
}

// Sign of F(a) a^(-1/n) - F(b) b^(-1/n), via F(a)^n b vs F(b)^n a.
int compare_weight(const BoundTable& t, PowerCache& pow_n, std::size_t a, std::size_t b) {
  __int128 l, r;
  if (checked_product(t.F[a], t.n, b, l) && checked_product(t.F[b], t.n, a, r)) {
    return l < r ? -1 : (l > r ? 1 : 0);
  }
  const BigInt lhs = pow_n(t.F[a]) * b;
  const BigInt rhs = pow_n(t.F[b]) * a;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

// Strictly heavier, or equally heavy at a smaller index.
bool heavier(const BoundTable& t, PowerCache& pow_n, std::size_t a, std::size_t b) {
  const int cmp = compare_weight(t, pow_n, a, b);
  return cmp != 0 ? cmp > 0 : a < b;
}

WindowConstant finish_constant(const BoundTable& t, PowerCache& pow_n, std::size_t M,
                               std::size_t end, WindowRule rule, std::size_t argmax) {
  WindowConstant w;
  w.n = t.n;
  w.M = M;
  w.window_end = end;
  w.rule = rule;
  w.argmax = argmax;
  w.f_at_argmax = t.F[argmax];
  const BigInt& f_pow = pow_n(w.f_at_argmax);
  w.c_lower = Rational(BigInt(argmax), f_pow);
  w.lambda = static_cast<double>(w.f_at_argmax) /
             std::pow(static_cast<double>(argmax), 1.0 / t.n);
  // Smallest r with r^n a* >= F(a*)^n M.
  const BigInt need = f_pow * M;
  std::int64_t r = 1;
  while (power(BigInt(r), static_cast<unsigned>(t.n)) * argmax < need) ++r;
  w.r0 = r;
  return w;
}

void check_window_input(const BoundTable& t, std::size_t M, std::size_t end) {
  if (M < 1) throw std::invalid_argument("window start M must be at least 1");
  if (end > t.n_max()) {
    throw std::invalid_argument("table covers N <= " + std::to_string(t.n_max()) +
                                " but the window for M = " + std::to_string(M) +
                                " reaches " + std::to_string(end));
  }
}

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::exact: return "exact";
    case Provenance::closed_form_seed: return "closed-form-seed";
    case Provenance::lemma1: return "lemma1";
  }
  return "?";
}

std::string to_string(WindowRule rule) {
  return rule == WindowRule::published ? "published" : "strict";
}

const std::vector<std::int64_t>& exact_values_n3() {
  static const std::vector<std::int64_t> values = [] {
    std::vector<std::int64_t> v{1};
    v.insert(v.end(), 6, 2);
    v.insert(v.end(), 20, 3);
    return v;
  }();
  return values;
}

std::int64_t closed_form_seed(int n, std::size_t N) { return SeedCurve(n).value(N); }

BoundTable seed_table(int n, std::size_t n_max) {
  SeedCurve curve(n);
  BoundTable t;
  t.n = n;
  for (std::size_t N = 0; N <= n_max; ++N) {
    if (N == 0) {
      t.F.push_back(1);
      t.provenance.push_back(Provenance::exact);
    } else if (n == 3 && N < exact_values_n3().size()) {
      t.F.push_back(exact_values_n3()[N]);
      t.provenance.push_back(Provenance::exact);
    } else {
      t.F.push_back(curve.value(N));
      t.provenance.push_back(Provenance::closed_form_seed);
    }
  }
  return t;
}

void CompositionDp::push(std::int64_t value) {
  const std::int64_t env = envelope_.empty() ? value : std::max(value, envelope_.back());
  if (steps_.empty() || env > steps_.back().second) steps_.emplace_back(envelope_.size(), env);
  envelope_.push_back(env);
}

std::int64_t CompositionDp::max_sum(std::size_t parts, std::size_t budget) {
  if (parts < 1) throw std::invalid_argument("max_sum: at least one part");
  if (budget >= envelope_.size()) throw std::out_of_range("max_sum: budget beyond table");
  if (parts == 1) return envelope_[budget];
  // Stage k is only ever extended after stage k-1, so a filled top stage
  // means the whole column is ready.
  if (stages_.size() < parts - 1 || stages_[parts - 2].size() <= budget) fill(parts, budget);
  return stages_[parts - 2][budget];
}

void CompositionDp::fill(std::size_t parts, std::size_t budget) {
  if (stages_.size() < parts - 1) stages_.resize(parts - 1);
  for (std::size_t k = 2; k <= parts; ++k) {
    auto& stage = stages_[k - 2];
    const auto* prev = k == 2 ? &envelope_ : &stages_[k - 3];
    while (stage.size() <= budget) {
      const std::size_t b = stage.size();
      std::int64_t best = 0;
      for (const auto& [first, value] : steps_) {
        if (first > b) break;
        best = std::max(best, value + (*prev)[b - first]);
      }
      stage.push_back(best);
    }
  }
}

BoundTable lemma1_extend(const BoundTable& table, std::size_t n_max_new) {
  if (table.F.empty() || table.F[0] != 1) {
    throw std::invalid_argument("lemma1_extend: table must start with F(0) = 1");
  }
  BoundTable out = table;
  CompositionDp dp;
  for (std::int64_t v : out.F) dp.push(v);
  SeedCurve curve(out.n);

  for (std::size_t N = out.F.size(); N <= n_max_new; ++N) {
    std::int64_t best = curve.value(N);
    Provenance source = Provenance::closed_form_seed;
    // max_sum(p, .) >= p F(0) = p, so p only helps while p < best.
    for (std::uint64_t p = 2; static_cast<std::int64_t>(p) < best; ++p) {
      const std::uint64_t divisor = split_divisor(p, out.n, N);
      const std::size_t budget = divisor > N ? 0 : N / divisor;
      // Two feasible compositions bound max_sum from below: one part takes
      // the whole budget, or all parts share it evenly.
      const std::int64_t pi = static_cast<std::int64_t>(p);
      const std::int64_t floor_bound = std::max(pi - 1 + dp.envelope(budget),
                                                pi * dp.envelope(budget / p));
      if (floor_bound >= best) {
        if (budget == 0) break;
        continue;
      }
      const std::int64_t bound = dp.max_sum(p, budget);
      if (bound < best) {
        best = bound;
        source = Provenance::lemma1;
      }
      if (budget == 0) break;
    }
    out.F.push_back(best);
    out.provenance.push_back(source);
    dp.push(best);
  }

  for (std::size_t N = out.F.size() - 1; N > 0; --N) {
    if (out.F[N - 1] > out.F[N]) {
      out.F[N - 1] = out.F[N];
      out.provenance[N - 1] = out.provenance[N];
    }
  }
  return out;
}

BoundTable build_table(int n, std::size_t n_max) {
  const std::size_t exact_end = n == 3 ? exact_values_n3().size() - 1 : 0;
  return lemma1_extend(seed_table(n, std::min(exact_end, n_max)), n_max);
}

std::size_t table_lower_bound(const BoundTable& table, std::int64_t r) {
  for (std::size_t N = 0; N < table.F.size(); ++N) {
    if (table.F[N] > r) return N;
  }
  return table.F.size();
}

Rational window_factor(int n) {
  if (n < 3) throw std::invalid_argument("window factor (1 - 2^(1-n))^(-n) is undefined for n < 3");
  const BigInt q = power(BigInt(2), static_cast<unsigned>(n - 1));
  return Rational(power(q, static_cast<unsigned>(n)), power(q - 1, static_cast<unsigned>(n)));
}

std::size_t window_end(int n, std::size_t M, WindowRule rule) {
  if (rule == WindowRule::published) {
    return ceil(window_factor(n) * M).convert_to<std::size_t>();
  }
  if (n < 2) throw std::invalid_argument("strict window needs n >= 2");
  const long double nn = n;
  const long double factor = std::pow(1.0L - std::pow(2.0L, -(nn - 1) / nn), -nn);
  // The extra slot absorbs rounding in the irrational factor.
  return static_cast<std::size_t>(std::ceil(factor * static_cast<long double>(M))) + 1;
}

WindowConstant lemma2_constant(const BoundTable& table, std::size_t M, WindowRule rule) {
  const std::size_t end = window_end(table.n, M, rule);
  check_window_input(table, M, end);
  PowerCache pow_n(table.n);
  std::size_t best = M;
  for (std::size_t a = M + 1; a <= end; ++a) {
    if (heavier(table, pow_n, a, best)) best = a;
  }
  return finish_constant(table, pow_n, M, end, rule, best);
}

WindowConstant best_window_constant(const BoundTable& table, WindowRule rule) {
  const std::size_t size = table.F.size();
  PowerCache pow_n(table.n);
  // Sparse table of range argmax under `heavier`.
  std::vector<std::vector<std::size_t>> levels{std::vector<std::size_t>(size)};
  for (std::size_t i = 0; i < size; ++i) levels[0][i] = i;
  for (std::size_t width = 2; width <= size; width *= 2) {
    const auto& prev = levels.back();
    std::vector<std::size_t> next(size - width + 1);
    for (std::size_t i = 0; i + width <= size; ++i) {
      const std::size_t a = prev[i];
      const std::size_t b = prev[i + width / 2];
      next[i] = heavier(table, pow_n, a, b) ? a : b;
    }
    levels.push_back(std::move(next));
  }
  auto range_argmax = [&](std::size_t lo, std::size_t hi) {
    std::size_t level = 0;
    while (std::size_t{2} << level <= hi - lo + 1) ++level;
    const std::size_t a = levels[level][lo];
    const std::size_t b = levels[level][hi + 1 - (std::size_t{1} << level)];
    return heavier(table, pow_n, a, b) ? a : b;
  };

  std::optional<std::size_t> best_M;
  std::size_t best_arg = 0;
  for (std::size_t M = 1;; ++M) {
    const std::size_t end = window_end(table.n, M, rule);
    if (end > table.n_max()) break;
    const std::size_t arg = range_argmax(M, end);
    // Larger c_lower = a/F(a)^n means a lighter argmax.
    if (!best_M || compare_weight(table, pow_n, arg, best_arg) < 0) {
      best_M = M;
      best_arg = arg;
    }
  }
  if (!best_M) throw std::invalid_argument("table too short for any window");
  return finish_constant(table, pow_n, *best_M, window_end(table.n, *best_M, rule), rule,
                         best_arg);
}

std::optional<BigInt> window_lower_bound(const WindowConstant& w, std::int64_t r) {
  if (r < w.r0) return std::nullopt;
  const BigInt num = power(BigInt(r), static_cast<unsigned>(w.n)) * w.argmax;
  const BigInt den = power(BigInt(w.f_at_argmax), static_cast<unsigned>(w.n));
  return num / den + 1;
}

BigInt pluhar_threshold(int n, int r) {
  const Rational p = ordered_chain_probability(n, r);
  const BigInt lhs_scale = 2 * boost::multiprecision::numerator(p);
  const BigInt rhs = factorial(static_cast<unsigned>(r)) * boost::multiprecision::denominator(p);
  auto holds = [&](const BigInt& edges) {
    return lhs_scale * power(edges, static_cast<unsigned>(r)) < rhs;
  };
  BigInt lo = 0;  // holds
  BigInt hi = 1;
  while (holds(hi)) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const BigInt mid = (lo + hi) / 2;
    (holds(mid) ? lo : hi) = mid;
  }
  return lo;
}

ClosedFormBounds closed_form_bounds(int n, int r) {
  if (n < 2 || r < 1) throw std::invalid_argument("closed_form_bounds: need n >= 2, r >= 1");
  const int a = (n - 1) * r / n;
  const int spare = (r + n - 1) / n;
  ClosedFormBounds out;
  out.alon_lb = BigInt(n - 1) * spare * power(BigInt(a), static_cast<unsigned>(n - 1));
  out.erdos_ub = binomial(static_cast<std::uint64_t>((n - 1) * r + 1), static_cast<std::uint64_t>(n));
  return out;
}

BigInt ReportRow::best_lower() const {
  BigInt best = std::max(alon_lb, pluhar_lb);
  best = std::max(best, BigInt(table_lb));
  if (window_lb) best = std::max(best, *window_lb);
  return best;
}

BoundReport bound_report(const BoundTable& table, std::int64_t r_from, std::int64_t r_to,
                         const EngineParams& params) {
  if (r_from < 1 || r_to < r_from) throw std::invalid_argument("bound_report: bad r range");
  BoundReport report;
  report.n = table.n;
  report.params = params;
  try {
    report.window = params.M ? lemma2_constant(table, *params.M, params.rule)
                             : best_window_constant(table, params.rule);
  } catch (const std::invalid_argument& ex) {
    report.window_note = ex.what();
  }

  for (std::int64_t r = r_from; r <= r_to; ++r) {
    ReportRow row;
    row.r = r;
    if (report.window) row.window_lb = window_lower_bound(*report.window, r);
    row.table_lb = table_lower_bound(table, r);
    const auto closed = closed_form_bounds(table.n, static_cast<int>(r));
    row.alon_lb = closed.alon_lb;
    row.erdos_ub = closed.erdos_ub;
    // One edge already defeats a single color.
    row.pluhar_lb = r >= 2 ? pluhar_threshold(table.n, static_cast<int>(r)) + 1 : BigInt(1);
    row.consistent = row.best_lower() <= row.erdos_ub;
    report.rows.push_back(std::move(row));
  }
  return report;
}

BoundReport bound_report(int n, std::int64_t r_from, std::int64_t r_to,
                         const EngineParams& params) {
  return bound_report(build_table(n, params.n_max), r_from, r_to, params);
}

}  // namespace hcolor
