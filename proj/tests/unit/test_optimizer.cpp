#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wdg/error.hpp"
#include "wdg/hypercube.hpp"
#include "wdg/optimizer.hpp"

using wdg::Assignment;
using wdg::Rational;
namespace opt = wdg::opt;

namespace {

wdg::PartialFunctionSpec six_vertex_target(Rational eps = 0) {
  return wdg::PartialFunctionSpec(6, {{Assignment::parse("-++-+"), 1}, {Assignment::parse("--++-"), 0}}, eps);
}

opt::EdgeTemplate star_template(std::size_t k) {
  opt::EdgeTemplate t;
  for (std::size_t v = 1; v <= k; ++v) t.emplace_back(0, v);
  return t;
}

opt::SearchOptions small_options() {
  opt::SearchOptions o;
  o.budget = 3000;
  o.chains = 2;
  return o;
}

// Independent re-check with the brute-force oracle.
void expect_max_verified(const opt::OptimizationResult& r, const wdg::PartialFunctionSpec& spec) {
  ASSERT_TRUE(r.feasible);
  ASSERT_TRUE(r.verified);
  const oracle::BruteExtrema b = oracle::brute_extrema(r.wdg);
  EXPECT_EQ(b.max - b.min, Rational(1));
  for (const auto& t : spec.points()) {
    EXPECT_LE(wdg::abs(oracle::naive_g(r.wdg, t.input) - Rational(t.value) + r.c), spec.epsilon());
  }
  EXPECT_EQ(r.objective, wdg::l1_norm(r.wdg));
  EXPECT_EQ(r.wdg.shift(), r.c);
}

}  // namespace

TEST(UniformHeuristic, Examples) {
  const wdg::Wdg four = opt::uniform_heuristic({{0, 1}, {0, 2}, {1, 2}, {2, 3}}, 4);
  for (const auto& e : four.edges()) EXPECT_EQ(e.weight, Rational(1, 4));
  EXPECT_EQ(opt::uniform_heuristic({{0, 1}}, 2).edges().front().weight, Rational(1));
  const wdg::Wdg six_vertex = opt::uniform_heuristic({{0, 2}, {0, 5}, {1, 2}, {3, 4}}, 6);
  EXPECT_EQ(wdg::l1_norm(six_vertex), Rational(1));
  EXPECT_EQ(wdg::hypercube::vertex_weight_bound(six_vertex), Rational(1, 2));
  try {
    opt::uniform_heuristic({}, 3);
    FAIL();
  } catch (const wdg::Error& e) {
    EXPECT_EQ(e.code(), wdg::ErrorCode::EmptyTemplate);
  }
}

TEST(UniformHeuristic, StarIsTight) {
  for (std::size_t k = 1; k <= 8; ++k) {
    const wdg::Wdg d = opt::uniform_heuristic(star_template(k), k + 1);
    EXPECT_EQ(wdg::l1_norm(d), Rational(1));
    EXPECT_EQ(*wdg::hypercube::extrema(d).delta, 2 * wdg::hypercube::vertex_weight_bound(d));
  }
}

TEST(MaximizeL1, SixVertexTarget) {
  const auto spec = six_vertex_target();
  const opt::OptimizationResult r = opt::maximize_l1(spec, std::nullopt, small_options());
  expect_max_verified(r, spec);
  EXPECT_GE(r.objective, Rational(1, 2));
}

TEST(MaximizeL1, EmptyTargetBeatsUniform) {
  const wdg::PartialFunctionSpec spec(4, {}, 0);
  const opt::OptimizationResult r = opt::maximize_l1(spec, std::nullopt, small_options());
  expect_max_verified(r, spec);
  const wdg::Wdg u = opt::uniform_heuristic(opt::complete_template(4), 4);
  EXPECT_GE(r.objective, wdg::l1_norm(u) / *wdg::hypercube::extrema(u).delta);
}

TEST(MaximizeL1, ContradictoryTargets) {
  const wdg::PartialFunctionSpec spec(3, {{Assignment::parse("+-"), 1}, {Assignment::parse("+-"), 0}}, 0);
  try {
    opt::maximize_l1(spec, std::nullopt, small_options());
    FAIL();
  } catch (const wdg::Error& e) {
    EXPECT_EQ(e.code(), wdg::ErrorCode::Infeasible);
  }
  EXPECT_THROW(opt::minimize_delta(spec, std::nullopt, small_options()), wdg::Error);
}

TEST(MaximizeL1, Deterministic) {
  const auto spec = six_vertex_target(Rational(1, 10));
  opt::SearchOptions o = small_options();
  o.seed = 99;
  const auto a = opt::maximize_l1(spec, std::nullopt, o);
  const auto b = opt::maximize_l1(spec, std::nullopt, o);
  EXPECT_EQ(a.wdg, b.wdg);
  EXPECT_EQ(a.objective, b.objective);
  o.threads = 2;
  const auto c = opt::maximize_l1(spec, std::nullopt, o);
  EXPECT_EQ(a.wdg, c.wdg);
}

TEST(MaximizeL1, TooManyVariables) {
  const wdg::PartialFunctionSpec spec(30, {}, 0);
  EXPECT_THROW(opt::maximize_l1(spec, std::nullopt, small_options()), wdg::Error);
}

TEST(MinimizeDelta, SingleEdge) {
  const wdg::PartialFunctionSpec spec(2, {}, 0);
  const auto r = opt::minimize_delta(spec, opt::EdgeTemplate{{0, 1}}, small_options());
  ASSERT_TRUE(r.verified);
  EXPECT_EQ(r.objective, Rational(2));
  EXPECT_EQ(wdg::l1_norm(r.wdg), Rational(1));
}

TEST(MinimizeDelta, StarTemplate) {
  for (std::size_t k = 2; k <= 5; ++k) {
    const wdg::PartialFunctionSpec spec(k + 1, {}, 0);
    const auto r = opt::minimize_delta(spec, star_template(k), small_options());
    ASSERT_TRUE(r.verified);
    EXPECT_EQ(r.objective, Rational(2));
  }
}

TEST(MinToMax, Duality) {
  const auto spec = six_vertex_target(Rational(1, 8));
  const auto r = opt::minimize_delta(spec, std::nullopt, small_options());
  ASSERT_TRUE(r.verified);
  EXPECT_EQ(wdg::l1_norm(r.wdg), Rational(1));
  EXPECT_EQ(*wdg::hypercube::extrema(r.wdg).delta, r.objective);
  const auto m = opt::min_to_max(r);
  ASSERT_TRUE(m.verified);
  EXPECT_EQ(m.objective, Rational(1) / r.objective);
  // The rescaled graph solves the maximization constraints with the same C.
  expect_max_verified(m, spec);
}

TEST(MinToMax, Scaling) {
  opt::OptimizationResult r;
  r.wdg = wdg::build_wdg(2, {{0, 1, Rational(1)}});
  r.objective = 2;
  r.feasible = r.verified = true;
  const auto m = opt::min_to_max(r);
  EXPECT_EQ(m.objective, Rational(1, 2));
  EXPECT_EQ(*wdg::hypercube::extrema(m.wdg).delta, Rational(1));

  r.wdg = wdg::build_wdg(3, {{0, 1, Rational(1, 3)}, {0, 2, Rational(1, 3)}, {1, 2, Rational(-1, 3)}});
  r.objective = *wdg::hypercube::extrema(r.wdg).delta;
  const auto m2 = opt::min_to_max(r);
  EXPECT_EQ(m2.objective, Rational(1) / r.objective);

  r.objective = 0;
  try {
    opt::min_to_max(r);
    FAIL();
  } catch (const wdg::Error& e) {
    EXPECT_EQ(e.code(), wdg::ErrorCode::DegenerateGraph);
  }
}

TEST(SnapRational, ContinuedFractions) {
  EXPECT_EQ(opt::snap_rational(0.3333333333, 100), Rational(1, 3));
  EXPECT_EQ(opt::snap_rational(3.14159265358979, 1000), Rational(355, 113));
  EXPECT_EQ(opt::snap_rational(0.125, 8), Rational(1, 8));
  EXPECT_EQ(opt::snap_rational(-0.6666667, 10), Rational(-2, 3));
  EXPECT_EQ(opt::snap_rational(5.0, 1), Rational(5));
}
