// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wdg/boolean_analysis.hpp"
#include "wdg/composition.hpp"
#include "wdg/error.hpp"
#include "wdg/hypercube.hpp"
#include "wdg/measurement.hpp"
#include "wdg/optimizer.hpp"
#include "wdg/rational_matrix.hpp"
#include "wdg/wdg.hpp"

using wdg::Assignment;
using wdg::Rational;
using wdg::RationalMatrix;

namespace {

// Collects failed expectations of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  [[nodiscard]] bool ok() const { return failed_ == 0; }
  [[nodiscard]] std::string summary() const {
    std::ostringstream out;
    out << (total_ - failed_) << "/" << total_ << " checks";
    for (const auto& f : failures_) out << "; failed: " << f;
    return out.str();
  }
  std::string note;

 private:
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

struct Criterion {
  int id;
  const char* title;
  double time_limit;  // seconds; <= 0 means none
  std::function<void(Check&)> body;
};

std::string str(const Rational& r) { return r.to_string(); }

void golden_values(Check& c) {
  const wdg::Wdg d = oracle::six_vertex();
  c.expect(wdg::evaluate(d, Assignment::parse("-++-+")) == Rational(1, 2), "g at (1,-1,1,1,-1,1)");
  c.expect(wdg::evaluate(d, Assignment::parse("--++-")) == Rational(-1, 2), "g at (1,-1,-1,1,1,-1)");
  const auto ext = wdg::hypercube::extrema(d);
  c.expect(ext.exact() && *ext.delta == Rational(1), "delta = 1");
  c.expect(ext.max->value == Rational(1, 2) && ext.min->value == Rational(-1, 2), "extreme values");
  const Rational e(1, 8);
  const RationalMatrix printed{{0, 0, e, 0, 0, e},  {0, 0, -e, 0, 0, 0}, {e, -e, 0, 0, 0, 0},
                               {0, 0, 0, 0, -e, 0}, {0, 0, 0, -e, 0, 0}, {e, 0, 0, 0, 0, 0}};
  c.expect(wdg::matrix_of(d).entries() == printed, "6x6 associated matrix");
  c.expect(wdg::l1_norm(oracle::two_vertex_d()) == Rational(1, 2), "L(g_D) = 1/2");
  c.expect(wdg::l1_norm(oracle::two_vertex_d_prime()) == Rational(2, 3), "L(g_D') = 2/3");
}

void composition_golden(Check& c) {
  namespace cp = wdg::compose;
  const Assignment x = cp::tensor_assignment(Assignment::parse("+-"), Assignment::parse("+-"));
  const auto a = cp::compose_and(oracle::two_vertex_d(), oracle::two_vertex_d_prime());
  c.expect(wdg::l1_norm(a.wdg) == Rational(1), "AND L1 = 1, got " + str(wdg::l1_norm(a.wdg)));
  c.expect(a.predicted_l1 == wdg::l1_norm(a.wdg), "AND predicted = computed");
  c.expect(wdg::evaluate(a.wdg, x) == Rational(2, 3), "AND g'' = 2/3");
  const auto o = cp::compose_or(oracle::two_vertex_d(), oracle::two_vertex_d_prime());
  c.expect(wdg::l1_norm(o.wdg) == Rational(5, 6), "OR L1 = 5/6, got " + str(wdg::l1_norm(o.wdg)));
  c.expect(o.predicted_l1 == wdg::l1_norm(o.wdg), "OR predicted = computed");
  c.expect(wdg::evaluate(o.wdg, x) == Rational(1, 6), "OR g'' = 1/6");
}

void composition_semantics(Check& c) {
  namespace cp = wdg::compose;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int pair = 0; pair < 200; ++pair) {
    const wdg::Wdg a = oracle::random_wdg(rng, dim(rng), 0.6);
    const wdg::Wdg b = oracle::random_wdg(rng, dim(rng), 0.6);
    const Rational k = a.shift();
    const Rational kp = b.shift();
    const auto anded = cp::compose_and(a, b);
    const auto ored = cp::compose_or(a, b);
    bool and_ok = true;
    bool or_ok = true;
    for (std::uint64_t xk = 0; xk < (std::uint64_t{1} << a.variable_count()); ++xk) {
      const Assignment x = Assignment::from_key(xk, a.variable_count());
      const Rational f = oracle::naive_g(a, x) + k;
      for (std::uint64_t yk = 0; yk < (std::uint64_t{1} << b.variable_count()); ++yk) {
        const Assignment y = Assignment::from_key(yk, b.variable_count());
        const Rational fp = oracle::naive_g(b, y) + kp;
        const Assignment xy = cp::tensor_assignment(x, y);
        and_ok = and_ok && oracle::naive_g(anded.wdg, xy) == f * fp - k * kp;
        or_ok = or_ok && oracle::naive_g(ored.wdg, xy) == f + fp - f * fp - (k + kp - k * kp);
      }
    }
    c.expect(and_ok, "AND identity, pair " + std::to_string(pair));
    c.expect(or_ok, "OR identity, pair " + std::to_string(pair));
    c.expect(wdg::l1_norm(anded.wdg) == anded.predicted_l1, "AND norm, pair " + std::to_string(pair));
    c.expect(wdg::l1_norm(ored.wdg) == ored.predicted_l1, "OR norm, pair " + std::to_string(pair));
  }
}

void norm_identities(Check& c) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 100; ++i) {
    const wdg::Wdg d = oracle::random_wdg(rng, 2 + i % 7, 0.6);
    const wdg::Wdg g = d.with_shift(0);
    const std::vector<Rational> table = oracle::value_table(g);
    const Rational fourier = oracle::fourier_l1(table);
    // L is the absolute weight sum.
    c.expect(fourier == wdg::upper_triangle_sum(wdg::abs_matrix(wdg::matrix_of(d).entries())), "absolute weight sum");
    // A constant adds its absolute value.
    std::vector<Rational> shifted = table;
    for (Rational& v : shifted) v += d.shift();
    c.expect(oracle::fourier_l1(shifted) == fourier + wdg::abs(d.shift()), "shift");
    // Product with an independent graph on disjoint variables.
    const wdg::Wdg other = oracle::random_wdg(rng, 2 + i % 4, 0.6, false);
    const std::vector<Rational> t2 = oracle::value_table(other);
    const std::size_t nb = other.variable_count();
    std::vector<Rational> joint(table.size() * t2.size());
    for (std::size_t x = 0; x < table.size(); ++x)
      for (std::size_t y = 0; y < t2.size(); ++y) joint[(x << nb) | y] = table[x] * t2[y];
    c.expect(oracle::fourier_l1(joint) == fourier * wdg::l1_norm(other), "disjoint product");
    // Scaling.
    const Rational k = oracle::random_rational(rng);
    std::vector<Rational> scaled = table;
    for (Rational& v : scaled) v *= k;
    c.expect(oracle::fourier_l1(scaled) == wdg::abs(k) * fourier, "scaling");
    // Kronecker constant, measured as L(M'⊗M'') / (L' L'').
    if (i % 2 == 0) {
      const wdg::Wdg a = oracle::random_wdg(rng, 2 + i % 3, 0.8, false);
      const wdg::Wdg b = oracle::random_wdg(rng, 2 + (i / 2) % 3, 0.8, false);
      if (a.edges().empty() || b.edges().empty()) continue;
      const wdg::Wdg prod =
          wdg::wdg_of_matrix(wdg::kronecker(wdg::matrix_of(a).entries(), wdg::matrix_of(b).entries()));
      const Rational constant = oracle::fourier_l1(oracle::value_table(prod)) / (wdg::l1_norm(a) * wdg::l1_norm(b));
      c.expect(constant == Rational(2), "Kronecker constant 2, measured " + str(constant));
    }
  }
  c.note = "Kronecker constant pinned at 2";
}

void lower_bound(Check& c) {
  std::mt19937_64 rng(55);
  std::uniform_int_distribution<std::size_t> vars(1, 12);
  for (int i = 0; i < 200; ++i) {
    const wdg::Wdg d = oracle::random_wdg(rng, vars(rng) + 1, 0.4);
    const auto ext = wdg::hypercube::extrema(d);
    const Rational eps = wdg::hypercube::vertex_weight_bound(d);
    c.expect(ext.exact() && *ext.delta >= 2 * eps, "delta >= 2 eps on instance " + std::to_string(i));
  }
  int tight = 0;
  for (std::size_t k = 1; k <= 12; ++k) {
    std::vector<wdg::EdgeSpec> edges;
    for (std::size_t v = 1; v <= k; ++v) edges.push_back({0, v, Rational(1, static_cast<long>(k))});
    const wdg::Wdg star = wdg::build_wdg(k + 1, std::move(edges));
    const Rational delta = *wdg::hypercube::extrema(star).delta;
    const bool eq = delta == 2 * wdg::hypercube::vertex_weight_bound(star);
    c.expect(eq, "star k=" + std::to_string(k) + " tight");
    tight += eq ? 1 : 0;
  }
  c.note = std::to_string(tight) + " tight star cases";
}

void growth(Check& c) {
  namespace cp = wdg::compose;
  const auto stages = cp::iterate_compose(oracle::two_vertex_d_prime(), 5, cp::Mode::And);
  c.expect(stages.size() == 5, "five stages");
  c.expect(stages.back().wdg.dimension() == 243, "stage 5 dimension 3^5");
  const std::vector<Rational> expected{Rational(2, 3), Rational(4, 3), Rational(56, 27)};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    c.expect(wdg::l1_norm(stages[i].wdg) == expected[i],
             "L1 stage " + std::to_string(i + 1) + " = " + str(wdg::l1_norm(stages[i].wdg)));
  }
  Rational previous = 0;
  for (const auto& s : stages) {
    const Rational total = wdg::l1_norm_with_shift(s.wdg);
    c.expect(total > previous, "L+|K| strictly increasing");
    c.expect(wdg::l1_norm(s.wdg) == s.predicted_l1, "stage norm matches closed form");
    previous = total;
  }
  c.note = "L+|K| at depth 5 = " + str(previous);
}

void f_family(Check& c) {
  namespace bf = wdg::boolean;
  for (std::size_t k = 1; k <= 4; ++k) {
    const wdg::Wdg d = bf::wdg_for_F(k);
    bool match = true;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      std::vector<int> bits(k);
      for (std::size_t i = 0; i < k; ++i) bits[i] = ((mask >> (k - 1 - i)) & 1U) != 0 ? 1 : -1;
      // The family encodes F in ±1 form: f = 2F - 1.
      match = match && wdg::f_value(d, bf::tensor_input(bits)) == Rational(2 * bf::eval_F(bits) - 1);
    }
    c.expect(match, "f = 2F-1 on tensor inputs, k=" + std::to_string(k));
    const auto cert = bf::certificate_complexity(bf::F_table(k));
    c.expect(cert.c0 == 1 && cert.c1 == k, "certificates (1,k) at k=" + std::to_string(k));
    const long p = 1L << k;
    c.expect(wdg::l1_norm(d) == Rational(p - 1) * Rational(2, p), "L1 = (2^k-1) 2^(1-k) at k=" + std::to_string(k));
  }
}

void optimizer(Check& c) {
  namespace opt = wdg::opt;
  const wdg::PartialFunctionSpec six_vertex_target(
      6, {{Assignment::parse("-++-+"), 1}, {Assignment::parse("--++-"), 0}}, 0);
  opt::SearchOptions options;
  options.chains = 4;
  options.budget = 25000;  // 10^5 iterations in total
  options.seed = 1;
  auto verify_max = [&](const opt::OptimizationResult& r, const wdg::PartialFunctionSpec& spec, const char* what) {
    if (!r.feasible) return;
    const auto b = oracle::brute_extrema(r.wdg);
    bool fits = true;
    for (const auto& t : spec.points()) {
      fits = fits && wdg::abs(oracle::naive_g(r.wdg, t.input) - Rational(t.value) + r.c) <= spec.epsilon();
    }
    c.expect(b.max - b.min == Rational(1) && fits, std::string(what) + " re-verification");
  };
  try {
    const auto r1 = opt::maximize_l1(six_vertex_target, std::nullopt, options);
    const auto r2 = opt::maximize_l1(six_vertex_target, std::nullopt, options);
    c.expect(r1.feasible && r1.verified, "SixVertex target feasible");
    verify_max(r1, six_vertex_target, "SixVertex max");
    c.expect(r1.objective >= Rational(1, 2), "objective >= 1/2, got " + str(r1.objective));
    c.expect(r1.iterations <= 100000, "iteration budget");
    c.expect(r1.wdg == r2.wdg && r1.objective == r2.objective, "deterministic per seed");
    c.note = "SixVertex objective " + str(r1.objective);

    const wdg::PartialFunctionSpec relaxed(
        6, {{Assignment::parse("-++-+"), 1}, {Assignment::parse("--++-"), 0}}, Rational(1, 8));
    opt::SearchOptions small = options;
    small.budget = 5000;
    const auto m = opt::minimize_delta(relaxed, std::nullopt, small);
    c.expect(m.feasible && m.verified, "minimize_delta feasible");
    c.expect(wdg::l1_norm(m.wdg) == Rational(1), "min L1 = 1");
    const auto mx = opt::min_to_max(m);
    c.expect(mx.objective == Rational(1) / m.objective, "duality objective = 1/delta");
    verify_max(mx, relaxed, "min_to_max");
  } catch (const wdg::Error& e) {
    c.expect(false, std::string("optimizer threw: ") + e.what());
  }
}

void measurement(Check& c) {
  namespace ms = wdg::measure;
  c.expect(ms::csop_order({6, {6}}) == 0, "order (6) = 0");
  c.expect(ms::csop_order({6, {3, 3}}) == 3, "order (3,3) = 3");
  c.expect(ms::csop_order({6, {1, 5}}) == 1, "order (1,5) = 1");
  auto diag = [](int a, int b) {
    RationalMatrix m(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
  };
  c.expect(ms::validate_csop({2, {diag(1, 0), diag(0, 1)}}), "coordinate projectors accepted");
  c.expect(ms::validate_csop({2, {RationalMatrix::identity(2)}}), "identity accepted");
  c.expect(!ms::validate_csop({2, {diag(1, 0), diag(1, 0)}}), "repeated projector rejected");
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + i % 40;
    const std::size_t parts = 1 + i % 7;
    ms::CsopProfile p{n, std::vector<std::size_t>(parts, 0)};
    std::uniform_int_distribution<std::size_t> pick(0, parts - 1);
    for (std::size_t j = 0; j < n; ++j) ++p.projector_dims[pick(rng)];
    const std::size_t order = ms::csop_order(p);
    std::shuffle(p.projector_dims.begin(), p.projector_dims.end(), rng);
    c.expect(ms::csop_order(p) == order, "permutation invariance");
  }
}

void asymptotics(Check& c) {
  // Finite indicators only; none of them decides an asymptotic statement.
  namespace cp = wdg::compose;
  const auto stages = cp::iterate_compose(oracle::two_vertex_d_prime(), 4, cp::Mode::And);
  std::ostringstream note;
  note << "advantage indicators";
  for (const auto& s : stages) note << " " << wdg::hypercube::advantage_indicator(s.wdg).to_string();
  const auto trend = wdg::measure::order_trend({{2, {1, 1}}, {4, {1, 3}}, {8, {1, 7}}});
  const auto bound = wdg::boolean::randomized_lower_bound(wdg::boolean::certificate_complexity(
                                                              wdg::boolean::F_table(4)).c);
  note << "; order trend " << (trend.bounded ? "bounded" : "unbounded") << " (" << trend.label << ")";
  note << "; sqrt C(F_4) = " << bound.scale;
  c.expect(trend.label == "advisory", "order trend labeled advisory");
  c.expect(bound.note.find("advisory") != std::string::npos, "lower bound labeled advisory");
  c.note = note.str() + "; not reproducible at desk scale, reported as advisory only";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "golden values", 1.0, golden_values},
      {2, "composition golden values", 0.0, composition_golden},
      {3, "composition semantics", 60.0, composition_semantics},
      {4, "Fourier norm identities", 10.0, norm_identities},
      {5, "lower bound", 60.0, lower_bound},
      {6, "growth", 30.0, growth},
      {7, "F family", 0.0, f_family},
      {8, "optimizer", 120.0, optimizer},
      {9, "measurement", 0.0, measurement},
      {10, "large-scale asymptotics (advisory)", 0.0, asymptotics},
  };
  int failed = 0;
  for (const Criterion& crit : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("unexpected exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = crit.time_limit <= 0.0 || seconds < crit.time_limit;
    const bool pass = check.ok() && in_time;
    failed += pass ? 0 : 1;
    std::printf("criterion %d: %s  %s  [%s, %.2fs%s]%s%s\n", crit.id, pass ? "PASS" : "FAIL", crit.title,
                check.summary().c_str(), seconds, in_time ? "" : " over time limit",
                check.note.empty() ? "" : "  ", check.note.c_str());
  }
  return failed == 0 ? 0 : 1;
}
