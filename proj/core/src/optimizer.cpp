#include "wdg/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "wdg/error.hpp"
#include "wdg/hypercube.hpp"

namespace wdg::opt {

namespace {

constexpr double kPenalty = 100.0;
constexpr double kFeasibleSlack = 1e-9;

// Sign table and target layout shared by all chains.
struct Problem {
  std::size_t dimension = 0;
  std::size_t variables = 0;
  std::size_t points = 0;  // 2^variables
  EdgeTemplate edges;
  std::vector<std::int8_t> signs;  // signs[e * points + key] = s(e, x)
  std::vector<std::uint64_t> target_keys;
  std::vector<double> target_values;
  double epsilon = 0.0;
  const PartialFunctionSpec* spec = nullptr;
};

Problem make_problem(const PartialFunctionSpec& spec, const std::optional<EdgeTemplate>& edge_template,
                     const SearchOptions& options) {
  Problem p;
  p.dimension = spec.dimension();
  p.variables = p.dimension - 1;
  if (p.variables > options.variable_limit || p.variables >= 63) {
    throw Error(ErrorCode::LimitExceeded, std::to_string(p.variables) + " variables exceed the optimizer limit of " +
                                              std::to_string(options.variable_limit));
  }
  p.edges = edge_template ? *edge_template : complete_template(p.dimension);
  // Validates indices, loops and duplicates the same way a WDG would.
  (void)uniform_heuristic(p.edges, p.dimension);
  for (auto& [u, v] : p.edges) {
    if (u > v) std::swap(u, v);
  }
  p.points = std::size_t{1} << p.variables;
  p.signs.resize(p.edges.size() * p.points);
  for (std::size_t key = 0; key < p.points; ++key) {
    const Assignment x = Assignment::from_key(key, p.variables);
    for (std::size_t e = 0; e < p.edges.size(); ++e) {
      p.signs[e * p.points + key] = static_cast<std::int8_t>(x.vertex(p.edges[e].first) * x.vertex(p.edges[e].second));
    }
  }
  for (const TargetPoint& t : spec.points()) {
    p.target_keys.push_back(t.input.key());
    p.target_values.push_back(static_cast<double>(t.value));
  }
  p.epsilon = spec.epsilon().to_double();
  p.spec = &spec;
  return p;
}

struct FloatScore {
  double objective = 0.0;  // Σ|w| / δ
  double violation = std::numeric_limits<double>::infinity();
  double value = -std::numeric_limits<double>::infinity();

  [[nodiscard]] bool feasible() const { return violation <= kFeasibleSlack; }
};

FloatScore score(const Problem& p, const std::vector<double>& w, const std::vector<double>& g) {
  FloatScore s;
  const auto [lo, hi] = std::minmax_element(g.begin(), g.end());
  const double delta = *hi - *lo;
  double l1 = 0.0;
  for (double x : w) l1 += std::abs(x);
  if (!(delta > 1e-12 * l1) || l1 == 0.0) return s;
  s.objective = l1 / delta;
  double r_min = std::numeric_limits<double>::infinity();
  double r_max = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.target_keys.size(); ++i) {
    const double r = g[p.target_keys[i]] / delta - p.target_values[i];
    r_min = std::min(r_min, r);
    r_max = std::max(r_max, r);
  }
  const double spread = p.target_keys.empty() ? 0.0 : r_max - r_min;
  s.violation = std::max(0.0, spread / 2.0 - p.epsilon);
  s.value = s.objective - kPenalty * s.violation;
  return s;
}

void recompute_values(const Problem& p, const std::vector<double>& w, std::vector<double>& g) {
  std::fill(g.begin(), g.end(), 0.0);
  for (std::size_t e = 0; e < w.size(); ++e) {
    if (w[e] == 0.0) continue;
    const std::int8_t* row = &p.signs[e * p.points];
    for (std::size_t k = 0; k < p.points; ++k) g[k] += w[e] * row[k];
  }
}

void shift_weight(const Problem& p, std::vector<double>& g, std::size_t e, double delta) {
  const std::int8_t* row = &p.signs[e * p.points];
  for (std::size_t k = 0; k < p.points; ++k) g[k] += delta * row[k];
}

// Exactly verified direction: any positive multiple of `weights` gives the
// same normalized solution.
struct ExactCandidate {
  std::vector<Rational> weights;
  Rational delta;      // δ of the raw weights
  Rational l1;         // Σ|w| of the raw weights
  Rational objective;  // l1 / delta
  Rational c;          // C for the δ-normalized graph
  bool feasible = false;
};

Wdg raw_graph(const Problem& p, const std::vector<Rational>& weights) {
  std::vector<EdgeSpec> edges;
  edges.reserve(weights.size());
  for (std::size_t e = 0; e < weights.size(); ++e) {
    edges.push_back(EdgeSpec{p.edges[e].first, p.edges[e].second, weights[e]});
  }
  return build_wdg(p.dimension, std::move(edges));
}

ExactCandidate exact_check(const Problem& p, std::vector<Rational> weights) {
  ExactCandidate cand;
  cand.weights = std::move(weights);
  const Wdg graph = raw_graph(p, cand.weights);
  const auto report = hypercube::extrema(graph, {.limit = p.variables, .threads = 1});
  cand.delta = *report.delta;
  if (cand.delta.is_zero()) return cand;
  cand.l1 = l1_norm(graph);
  cand.objective = cand.l1 / cand.delta;
  if (p.spec->points().empty()) {
    cand.c = -(report.min->value / cand.delta);
    cand.feasible = true;
    return cand;
  }
  std::optional<Rational> r_min;
  std::optional<Rational> r_max;
  for (const TargetPoint& t : p.spec->points()) {
    const Rational r = evaluate(graph, t.input) / cand.delta - Rational(t.value);
    r_min = r_min ? min(*r_min, r) : r;
    r_max = r_max ? max(*r_max, r) : r;
  }
  cand.c = -(*r_min + *r_max) / 2;
  cand.feasible = (*r_max - *r_min) <= p.spec->epsilon() * 2;
  return cand;
}

bool better(const ExactCandidate& a, const std::optional<ExactCandidate>& incumbent) {
  return a.feasible && (!incumbent || a.objective > incumbent->objective);
}

// Tries several denominator caps on the max-normalized vector and keeps the
// best exactly feasible snap.
std::optional<ExactCandidate> snap_and_verify(const Problem& p, const std::vector<double>& w, std::uint64_t cap) {
  double scale = 0.0;
  for (double x : w) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) return std::nullopt;
  std::optional<ExactCandidate> best;
  for (std::uint64_t q = 2;; q *= 2) {
    const std::uint64_t level = std::min(q, cap);
    std::vector<Rational> snapped;
    snapped.reserve(w.size());
    for (double x : w) snapped.push_back(snap_rational(x / scale, level));
    ExactCandidate cand = exact_check(p, std::move(snapped));
    if (better(cand, best)) best = std::move(cand);
    if (level >= cap) break;
  }
  return best;
}

// Sign-frozen coordinate polish in exact arithmetic: relative steps of
// ±2^-j on one weight at a time, accepted only when feasibility holds and
// the objective strictly improves.
ExactCandidate exact_polish(const Problem& p, ExactCandidate cand, std::size_t evaluations) {
  std::size_t used = 0;
  for (int j = 1; j <= 6 && used < evaluations; ++j) {
    const Rational step(1, 1L << j);
    bool improved = true;
    while (improved && used < evaluations) {
      improved = false;
      for (std::size_t e = 0; e < cand.weights.size() && used < evaluations; ++e) {
        if (cand.weights[e].is_zero()) continue;
        for (const Rational& factor : {Rational(1) + step, Rational(1) - step}) {
          std::vector<Rational> trial = cand.weights;
          trial[e] *= factor;
          ExactCandidate next = exact_check(p, std::move(trial));
          ++used;
          if (next.feasible && next.objective > cand.objective) {
            cand = std::move(next);
            improved = true;
            break;
          }
          if (used >= evaluations) break;
        }
      }
    }
  }
  return cand;
}

struct ChainOutcome {
  std::optional<ExactCandidate> best;
  std::size_t iterations = 0;
};

ChainOutcome run_chain(const Problem& p, const SearchOptions& options, std::size_t chain) {
  ChainOutcome out;
  const std::size_t edge_count = p.edges.size();
  std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32U),
                    static_cast<std::uint32_t>(chain)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, edge_count - 1);

  std::vector<double> w(edge_count, 1.0 / static_cast<double>(edge_count));
  if (chain != 0) {
    for (double& x : w) x = normal(rng);
  }
  std::vector<double> g(p.points);
  recompute_values(p, w, g);
  FloatScore current = score(p, w, g);

  std::optional<std::vector<double>> best_w;
  double best_objective = 0.0;
  if (current.feasible()) {
    best_w = w;
    best_objective = current.objective;
  }

  const double t_start = 0.05;
  const double t_end = 1e-5;
  const double s_start = 0.3;
  const double s_end = 0.003;
  const auto budget = static_cast<double>(std::max<std::size_t>(options.budget, 1));
  for (std::size_t it = 0; it < options.budget; ++it) {
    const double progress = static_cast<double>(it) / budget;
    const double temperature = t_start * std::pow(t_end / t_start, progress);
    const double sigma = s_start * std::pow(s_end / s_start, progress);

    double l1 = 0.0;
    for (double x : w) l1 += std::abs(x);
    const std::size_t e = pick(rng);
    const double old = w[e];
    const double roll = unit(rng);
    double proposed = old;
    if (roll < 0.05) {
      proposed = -old;
    } else if (roll < 0.10) {
      proposed = 0.0;
    } else {
      proposed = old + sigma * normal(rng) * (l1 / static_cast<double>(edge_count));
    }
    w[e] = proposed;
    shift_weight(p, g, e, proposed - old);
    const FloatScore next = score(p, w, g);
    bool accept = true;
    if (std::isfinite(current.value)) {
      if (!std::isfinite(next.value)) {
        accept = false;
      } else {
        const double gain = next.value - current.value;
        accept = gain >= 0.0 || unit(rng) < std::exp(gain / temperature);
      }
    }
    if (accept) {
      current = next;
    } else {
      w[e] = old;
      shift_weight(p, g, e, old - proposed);
    }
    if (current.feasible() && (!best_w || current.objective > best_objective * (1.0 + 1e-12))) {
      best_w = w;
      best_objective = current.objective;
    }
    if ((it + 1) % 512 == 0) {
      double norm = 0.0;
      for (double x : w) norm += std::abs(x);
      if (norm > 0.0) {
        for (double& x : w) x /= norm;
      }
      recompute_values(p, w, g);
      current = score(p, w, g);
    }
    ++out.iterations;
  }

  // Sign-frozen float polish of the best feasible state.
  if (best_w) {
    std::vector<double> pw = *best_w;
    std::vector<double> pg(p.points);
    recompute_values(p, pw, pg);
    FloatScore ps = score(p, pw, pg);
    for (double eta : {0.1, 0.03, 0.01, 0.003, 0.001}) {
      for (std::size_t e = 0; e < edge_count; ++e) {
        if (pw[e] == 0.0) continue;
        for (double factor : {1.0 + eta, 1.0 - eta}) {
          const double old = pw[e];
          pw[e] = old * factor;
          shift_weight(p, pg, e, pw[e] - old);
          const FloatScore trial = score(p, pw, pg);
          if (trial.feasible() && trial.objective > ps.objective * (1.0 + 1e-12)) {
            ps = trial;
            break;
          }
          shift_weight(p, pg, e, old - pw[e]);
          pw[e] = old;
        }
      }
    }
    if (ps.objective > best_objective * (1.0 + 1e-12)) best_w = pw;
  }

  std::vector<std::vector<double>> seeds;
  if (chain == 0) seeds.emplace_back(edge_count, 1.0 / static_cast<double>(edge_count));
  if (best_w) seeds.push_back(*best_w);
  seeds.push_back(w);
  for (const auto& s : seeds) {
    auto cand = snap_and_verify(p, s, options.snap_denominator_cap);
    if (cand && better(*cand, out.best)) out.best = std::move(cand);
  }
  if (out.best) out.best = exact_polish(p, std::move(*out.best), options.polish_evaluations);
  return out;
}

struct SearchOutcome {
  ExactCandidate best;
  std::size_t iterations = 0;
};

SearchOutcome search(const Problem& p, const SearchOptions& options) {
  const std::size_t chains = std::max<std::size_t>(options.chains, 1);
  std::vector<ChainOutcome> outcomes(chains);
  const std::size_t workers = std::clamp<std::size_t>(options.threads, 1, chains);
  auto run = [&](std::size_t worker) {
    for (std::size_t c = worker; c < chains; c += workers) outcomes[c] = run_chain(p, options, c);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  SearchOutcome result;
  std::optional<ExactCandidate> best;
  for (auto& o : outcomes) {
    result.iterations += o.iterations;
    if (o.best && better(*o.best, best)) best = std::move(o.best);
  }
  if (!best) {
    throw Error(ErrorCode::Infeasible, "no exactly feasible solution found within the iteration budget");
  }
  result.best = std::move(*best);
  return result;
}

}  // namespace

EdgeTemplate complete_template(std::size_t dimension) {
  EdgeTemplate t;
  for (std::size_t u = 0; u < dimension; ++u) {
    for (std::size_t v = u + 1; v < dimension; ++v) t.emplace_back(u, v);
  }
  return t;
}

Wdg uniform_heuristic(const EdgeTemplate& edge_template, std::size_t dimension) {
  if (edge_template.empty()) throw Error(ErrorCode::EmptyTemplate, "edge template is empty");
  const Rational weight(1L, static_cast<long>(edge_template.size()));
  std::vector<EdgeSpec> edges;
  edges.reserve(edge_template.size());
  for (const auto& [u, v] : edge_template) edges.push_back(EdgeSpec{u, v, weight});
  return build_wdg(dimension, std::move(edges));
}

OptimizationResult maximize_l1(const PartialFunctionSpec& spec, const std::optional<EdgeTemplate>& edge_template,
                               const SearchOptions& options) {
  const Problem p = make_problem(spec, edge_template, options);
  const SearchOutcome found = search(p, options);
  const ExactCandidate& best = found.best;

  OptimizationResult result;
  result.c = best.c;
  result.wdg = raw_graph(p, best.weights).scaled(Rational(1) / best.delta).with_shift(best.c);
  result.objective = l1_norm(result.wdg);
  result.iterations = found.iterations;
  const auto report = hypercube::extrema(result.wdg, {.limit = p.variables, .threads = options.threads});
  result.verified = report.delta == Rational(1) && hypercube::approximation_error(result.wdg, spec, result.c) <= spec.epsilon();
  result.feasible = result.verified;
  return result;
}

OptimizationResult minimize_delta(const PartialFunctionSpec& spec, const std::optional<EdgeTemplate>& edge_template,
                                  const SearchOptions& options) {
  const Problem p = make_problem(spec, edge_template, options);
  const SearchOutcome found = search(p, options);
  const ExactCandidate& best = found.best;

  OptimizationResult result;
  result.c = best.c;
  result.wdg = raw_graph(p, best.weights).scaled(Rational(1) / best.l1).with_shift(best.c);
  result.objective = best.delta / best.l1;
  result.iterations = found.iterations;
  const auto report = hypercube::extrema(result.wdg, {.limit = p.variables, .threads = options.threads});
  const Wdg normalized = result.wdg.scaled(Rational(1) / result.objective);
  result.verified = l1_norm(result.wdg) == Rational(1) && report.delta == result.objective &&
                    hypercube::approximation_error(normalized, spec, result.c) <= spec.epsilon();
  result.feasible = result.verified;
  return result;
}

OptimizationResult min_to_max(const OptimizationResult& min_result) {
  if (min_result.objective.is_zero()) throw Error(ErrorCode::DegenerateGraph, "delta = 0 cannot be rescaled");
  OptimizationResult out = min_result;
  out.wdg = min_result.wdg.scaled(Rational(1) / min_result.objective);
  out.objective = l1_norm(out.wdg);
  const auto report = hypercube::extrema(out.wdg);
  out.verified = min_result.verified && report.delta == Rational(1);
  out.feasible = min_result.feasible && out.verified;
  return out;
}

Rational snap_rational(double value, std::uint64_t denominator_cap) {
  const Rational exact = Rational::from_double(value);
  const mpz_class cap(static_cast<unsigned long>(std::max<std::uint64_t>(denominator_cap, 1)));
  if (exact.denominator() <= cap) return exact;
  mpz_class p0 = 0;
  mpz_class q0 = 1;
  mpz_class p1 = 1;
  mpz_class q1 = 0;
  mpz_class n = exact.numerator();
  mpz_class d = exact.denominator();
  while (true) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    const mpz_class q2 = q0 + a * q1;
    if (q2 > cap) break;
    const mpz_class p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const mpz_class r = n - a * d;
    n = d;
    d = r;
  }
  mpz_class k;
  mpz_fdiv_q(k.get_mpz_t(), mpz_class(cap - q0).get_mpz_t(), q1.get_mpz_t());
  const Rational bound1(mpz_class(p0 + k * p1), mpz_class(q0 + k * q1));
  const Rational bound2(p1, q1);
  return abs(bound2 - exact) <= abs(bound1 - exact) ? bound2 : bound1;
}

}  // namespace wdg::opt
