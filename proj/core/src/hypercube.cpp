#include "wdg/hypercube.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <thread>
#include <utility>

#include "wdg/error.hpp"

namespace wdg::hypercube {

namespace {

// Integer image of a WDG: every weight (and the shift) multiplied by the
// common denominator `scale`. Variables are 1..n; index 0 is unused.
template <typename Int>
struct ScaledGraph {
  std::size_t n = 0;
  mpz_class scale = 1;
  Int shift{};
  std::vector<Int> ancilla;
  std::vector<std::vector<std::pair<std::size_t, Int>>> adj;
};

template <typename Int>
Int from_mpz(const mpz_class& v) {
  if constexpr (std::is_same_v<Int, mpz_class>) {
    return v;
  } else {
    return static_cast<Int>(v.get_si());
  }
}

template <typename Int>
mpz_class to_mpz(const Int& v) {
  if constexpr (std::is_same_v<Int, mpz_class>) {
    return v;
  } else {
    return mpz_class(static_cast<long>(v));
  }
}

template <typename Int>
ScaledGraph<Int> convert(const ScaledGraph<mpz_class>& src) {
  ScaledGraph<Int> out;
  out.n = src.n;
  out.scale = src.scale;
  out.shift = from_mpz<Int>(src.shift);
  out.ancilla.reserve(src.ancilla.size());
  for (const auto& w : src.ancilla) out.ancilla.push_back(from_mpz<Int>(w));
  out.adj.resize(src.adj.size());
  for (std::size_t i = 0; i < src.adj.size(); ++i) {
    for (const auto& [j, w] : src.adj[i]) out.adj[i].emplace_back(j, from_mpz<Int>(w));
  }
  return out;
}

// Calls fn(graph) with an int64 graph when every partial sum provably fits,
// otherwise with an arbitrary-precision one.
template <typename Fn>
void with_scaled(const Wdg& wdg, Fn&& fn) {
  std::vector<Rational> values;
  values.reserve(wdg.edges().size() + 1);
  for (const Edge& e : wdg.edges()) values.push_back(e.weight);
  values.push_back(wdg.shift());
  const mpz_class scale = common_denominator(values);

  ScaledGraph<mpz_class> big;
  big.n = wdg.variable_count();
  big.scale = scale;
  big.ancilla.assign(big.n + 1, mpz_class(0));
  big.adj.resize(big.n + 1);
  mpz_class magnitude = 0;
  for (const Edge& e : wdg.edges()) {
    const mpz_class w = e.weight.numerator() * (scale / e.weight.denominator());
    magnitude += abs(w);
    if (e.u == 0) {
      big.ancilla[e.v] = w;
    } else {
      big.adj[e.u].emplace_back(e.v, w);
      big.adj[e.v].emplace_back(e.u, w);
    }
  }
  big.shift = wdg.shift().numerator() * (scale / wdg.shift().denominator());
  magnitude += abs(big.shift) + scale;

  // |g| and every local field are bounded by the summed magnitudes; the
  // incremental updates need headroom for 2·|field|.
  const mpz_class int64_budget = mpz_class(1) << 60;
  if (magnitude < int64_budget) {
    fn(convert<std::int64_t>(big));
  } else {
    fn(big);
  }
}

template <typename Int, typename Visit>
void scan_block(const ScaledGraph<Int>& graph, std::uint64_t prefix, std::size_t prefix_bits, Visit&& visit) {
  const std::size_t n = graph.n;
  const std::size_t free_bits = n - prefix_bits;
  std::uint64_t key = free_bits >= 64 ? 0 : (prefix << free_bits);
  std::vector<int> x(n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) x[i] = ((key >> (n - i)) & 1U) != 0 ? 1 : -1;

  std::vector<Int> field(n + 1);
  Int value{};
  for (std::size_t i = 1; i <= n; ++i) {
    field[i] = graph.ancilla[i];
    if (x[i] > 0) {
      value += graph.ancilla[i];
    } else {
      value -= graph.ancilla[i];
    }
    for (const auto& [j, w] : graph.adj[i]) {
      if (x[j] > 0) {
        field[i] += w;
      } else {
        field[i] -= w;
      }
      if (j > i) {
        if (x[i] * x[j] > 0) {
          value += w;
        } else {
          value -= w;
        }
      }
    }
  }
  visit(key, value);

  const std::uint64_t steps = std::uint64_t{1} << free_bits;
  for (std::uint64_t step = 1; step < steps; ++step) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(step));
    const std::size_t var = n - bit;
    key ^= std::uint64_t{1} << bit;
    // Flipping x_var changes g by -2·x_var·field(var).
    if (x[var] > 0) {
      value -= field[var];
      value -= field[var];
      for (const auto& [j, w] : graph.adj[var]) {
        field[j] -= w;
        field[j] -= w;
      }
    } else {
      value += field[var];
      value += field[var];
      for (const auto& [j, w] : graph.adj[var]) {
        field[j] += w;
        field[j] += w;
      }
    }
    x[var] = -x[var];
    visit(key, value);
  }
}

template <typename Int>
struct BlockExtrema {
  Int max{};
  std::uint64_t max_key = 0;
  Int min{};
  std::uint64_t min_key = 0;
  bool seen = false;

  void offer(std::uint64_t key, const Int& value) {
    if (!seen) {
      max = value;
      min = value;
      max_key = key;
      min_key = key;
      seen = true;
      return;
    }
    if (value > max || (value == max && key > max_key)) {
      max = value;
      max_key = key;
    }
    if (value < min || (value == min && key > min_key)) {
      min = value;
      min_key = key;
    }
  }

  void merge(const BlockExtrema& other) {
    if (!other.seen) return;
    if (!seen) {
      *this = other;
      return;
    }
    offer(other.max_key, other.max);
    offer(other.min_key, other.min);
  }
};

std::size_t prefix_bits_for(std::size_t n, unsigned threads) {
  if (threads <= 1 || n == 0) return 0;
  const auto wanted = static_cast<std::size_t>(std::bit_width(threads)) + 2;
  return std::min(n, wanted);
}

template <typename Int>
BlockExtrema<Int> scan_extrema(const ScaledGraph<Int>& graph, unsigned threads) {
  const std::size_t prefix_bits = prefix_bits_for(graph.n, threads);
  const std::size_t blocks = std::size_t{1} << prefix_bits;
  std::vector<BlockExtrema<Int>> partial(blocks);
  auto run = [&](std::size_t worker, std::size_t stride) {
    for (std::size_t b = worker; b < blocks; b += stride) {
      BlockExtrema<Int> acc;
      scan_block(graph, b, prefix_bits, [&acc](std::uint64_t key, const Int& v) { acc.offer(key, v); });
      partial[b] = std::move(acc);
    }
  };
  if (blocks == 1) {
    run(0, 1);
  } else {
    const std::size_t workers = std::min<std::size_t>(threads, blocks);
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w, workers);
  }
  BlockExtrema<Int> total;
  for (const auto& p : partial) total.merge(p);
  return total;
}

void require_enumerable(const Wdg& wdg, std::size_t limit) {
  if (wdg.variable_count() > limit || wdg.variable_count() >= 64) {
    throw Error(ErrorCode::LimitExceeded, std::to_string(wdg.variable_count()) +
                                              " variables exceed the enumeration limit of " + std::to_string(limit));
  }
}

}  // namespace

ExtremaReport extrema(const Wdg& wdg, const ScanOptions& options) {
  ExtremaReport report;
  report.lower_bound = vertex_weight_bound(wdg) * 2;
  report.upper_bound = l1_norm(wdg) * 2;
  const std::size_t n = wdg.variable_count();
  if (n > options.limit || n >= 64) return report;

  with_scaled(wdg, [&](const auto& graph) {
    const auto found = scan_extrema(graph, options.threads);
    report.max = Extremum{Rational(to_mpz(found.max), graph.scale), Assignment::from_key(found.max_key, n)};
    report.min = Extremum{Rational(to_mpz(found.min), graph.scale), Assignment::from_key(found.min_key, n)};
  });
  report.delta = report.max->value - report.min->value;
  return report;
}

SupportClasses support_classes(const Wdg& wdg, const std::optional<std::vector<Assignment>>& domain,
                               const ScanOptions& options) {
  SupportClasses classes;
  if (domain) {
    for (const Assignment& x : *domain) {
      const Rational f = f_value(wdg, x);
      if (f == 1) {
        classes.s_plus.push_back(x);
      } else if (f.is_zero()) {
        classes.s_minus.push_back(x);
      }
    }
  } else {
    require_enumerable(wdg, options.limit);
    const std::size_t n = wdg.variable_count();
    std::vector<std::uint64_t> plus;
    std::vector<std::uint64_t> minus;
    with_scaled(wdg, [&](const auto& graph) {
      using Int = std::decay_t<decltype(graph.shift)>;
      const Int one = from_mpz<Int>(graph.scale) - graph.shift;
      const Int zero = Int{} - graph.shift;
      scan_block(graph, 0, 0, [&](std::uint64_t key, const Int& v) {
        if (v == one) {
          plus.push_back(key);
        } else if (v == zero) {
          minus.push_back(key);
        }
      });
    });
    std::sort(plus.begin(), plus.end());
    std::sort(minus.begin(), minus.end());
    for (auto k : plus) classes.s_plus.push_back(Assignment::from_key(k, n));
    for (auto k : minus) classes.s_minus.push_back(Assignment::from_key(k, n));
  }
  std::sort(classes.s_plus.begin(), classes.s_plus.end());
  std::sort(classes.s_minus.begin(), classes.s_minus.end());
  classes.s_plus.erase(std::unique(classes.s_plus.begin(), classes.s_plus.end()), classes.s_plus.end());
  classes.s_minus.erase(std::unique(classes.s_minus.begin(), classes.s_minus.end()), classes.s_minus.end());
  return classes;
}

bool range_check(const Wdg& wdg, const ScanOptions& options) {
  require_enumerable(wdg, options.limit);
  const ExtremaReport report = extrema(wdg, options);
  return report.min->value + wdg.shift() >= 0 && report.max->value + wdg.shift() <= 1;
}

Rational vertex_weight_bound(const Wdg& wdg) {
  std::vector<Rational> incident(wdg.dimension());
  for (const Edge& e : wdg.edges()) {
    incident[e.u] += abs(e.weight);
    incident[e.v] += abs(e.weight);
  }
  Rational best;
  for (const Rational& s : incident) best = max(best, s);
  return best;
}

Wdg normalize_range(const Wdg& wdg, const ScanOptions& options) {
  require_enumerable(wdg, options.limit);
  const ExtremaReport report = extrema(wdg, options);
  if (report.delta->is_zero()) throw Error(ErrorCode::DegenerateGraph, "delta(D) = 0; nothing to normalize");
  const Rational inverse = Rational(1) / *report.delta;
  return wdg.scaled(inverse).with_shift(-(report.min->value * inverse));
}

Rational approximation_error(const Wdg& wdg, const PartialFunctionSpec& target, const Rational& c) {
  if (target.dimension() != wdg.dimension()) {
    throw Error(ErrorCode::BadIndex, "target dimension " + std::to_string(target.dimension()) +
                                         " differs from graph dimension " + std::to_string(wdg.dimension()));
  }
  Rational worst;
  for (const TargetPoint& p : target.points()) {
    worst = max(worst, abs(evaluate(wdg, p.input) - Rational(p.value) + c));
  }
  return worst;
}

Rational advantage_indicator(const Wdg& wdg) {
  const Rational total = l1_norm_with_shift(wdg);
  return total * total;
}

void for_each_value(const Wdg& wdg, const std::function<void(const Assignment&, const Rational&)>& visit,
                    std::size_t limit) {
  require_enumerable(wdg, limit);
  const std::size_t n = wdg.variable_count();
  with_scaled(wdg, [&](const auto& graph) {
    using Int = std::decay_t<decltype(graph.shift)>;
    scan_block(graph, 0, 0, [&](std::uint64_t key, const Int& v) {
      visit(Assignment::from_key(key, n), Rational(to_mpz(v), graph.scale));
    });
  });
}

}  // namespace wdg::hypercube
