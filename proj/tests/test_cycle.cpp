#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "qcarnot/constants.hpp"
#include "qcarnot/cycle.hpp"
#include "qcarnot/errors.hpp"
#include "support/oracles.hpp"

using namespace qcarnot;

namespace {

CycleParams reference(double tau, double t_hot = 16.5) {
  CycleParams p;
  p.tau = tau;
  p.t_hot = t_hot;
  return p;
}

void expect_first_law(const StrokeRecord& s) {
  EXPECT_NEAR(s.delta_u(), s.q + s.w, 1e-10) << to_string(s.label);
}

}  // namespace

TEST(CycleParams, DerivedFrequencies) {
  const CycleParams p = reference(1.0);
  EXPECT_DOUBLE_EQ(p.nu_c(), 1.44);
  EXPECT_DOUBLE_EQ(p.nu_a(), 5.0);
  EXPECT_NEAR(p.eta_carnot(), 0.6, 1e-15);
}

TEST(CycleParams, DomainGuards) {
  CycleParams p = reference(1.0);
  p.t_hot = p.t_cold;
  EXPECT_THROW(p.validate(), DomainError);
  p = reference(0.0);
  EXPECT_THROW(p.validate(), DomainError);
  p = reference(1.0);
  p.nu_d = -2.0;
  EXPECT_THROW(p.validate(), DomainError);
  p = reference(1.0);
  p.tol = 0.0;
  EXPECT_THROW(run_cycle(p), DomainError);
}

TEST(RunIsothermal, HotIsothermHeat) {
  const StrokeRecord s = run_isothermal(16.5, 5.0, 3.6, Axis::y);
  // T (S_B - S_A) from closed-form two-level entropies
  EXPECT_NEAR(s.q, 1.1758561402575922, 1e-12);
  expect_first_law(s);
  EXPECT_EQ(s.state_in, gibbs_state(field_hamiltonian(5.0, Axis::y), 16.5));
}

TEST(RunIsothermal, ColdIsothermHeat) {
  const StrokeRecord s = run_isothermal(6.6, 1.44, 2.0, Axis::x, Stroke::CD);
  EXPECT_NEAR(s.q, -0.47034245610303686, 1e-12);
  EXPECT_EQ(s.label, Stroke::CD);
  expect_first_law(s);
}

TEST(RunIsothermal, NullStroke) {
  const StrokeRecord s = run_isothermal(6.6, 2.0, 2.0, Axis::x);
  EXPECT_EQ(s.q, 0.0);
  EXPECT_EQ(s.w, 0.0);
}

TEST(RunIsothermal, InvalidInputs) {
  EXPECT_THROW(run_isothermal(0.0, 1.0, 2.0, Axis::x), DomainError);
  EXPECT_THROW(run_isothermal(6.6, -1.0, 2.0, Axis::x), DomainError);
}

TEST(RunAdiabatic, QuasiStaticWork) {
  const auto s = HamiltonianSchedule::compression(3.6, 1.44, 100.0);
  const DensityMatrix rho_b = gibbs_state(s.start_hamiltonian(), 16.5);
  const StrokeRecord rec = run_adiabatic(s, rho_b);
  EXPECT_EQ(rec.q, 0.0);
  EXPECT_EQ(rec.label, Stroke::BCp);
  // <H_C>_{rho_C} - <H_B>_{rho_B}
  EXPECT_NEAR(rec.w, 1.8886914019380418, 1e-3);
  expect_first_law(rec);
}

TEST(RunAdiabatic, SuddenWork) {
  const auto s = HamiltonianSchedule::compression(3.6, 1.44, 1e-4);
  const DensityMatrix rho_b = gibbs_state(s.start_hamiltonian(), 16.5);
  const StrokeRecord rec = run_adiabatic(s, rho_b);
  // <H_C> on the frozen rho_B is zero, so w = -<H_B>_{rho_B}.
  EXPECT_NEAR(rec.w, 3.1478190032300696, 1e-3);
}

TEST(RunAdiabatic, StationaryStateDoesNoWork) {
  // The protocol always turns the field axis, so the only state diagonal at
  // every instant is the maximally mixed one.
  const auto s = HamiltonianSchedule::expansion(2.0, 2.0, 0.5);
  const StrokeRecord rec = run_adiabatic(s, DensityMatrix{});
  EXPECT_EQ(rec.w, 0.0);
  EXPECT_EQ(rec.label, Stroke::DAp);
}

TEST(RunRelaxation, AlreadyThermal) {
  const QubitOperator h = field_hamiltonian(1.44, Axis::x);
  const StrokeRecord rec = run_relaxation(gibbs_state(h, 6.6), h, 6.6);
  EXPECT_EQ(rec.q, 0.0);
  EXPECT_EQ(rec.w, 0.0);
}

TEST(RunRelaxation, SuddenCompressionHeat) {
  const DensityMatrix rho_b = gibbs_state(field_hamiltonian(3.6, Axis::y), 16.5);
  const StrokeRecord rec = run_relaxation(rho_b, field_hamiltonian(1.44, Axis::x), 6.6);
  EXPECT_NEAR(rec.q, -1.2591276012920279, 1e-12);
  expect_first_law(rec);
}

TEST(RunRelaxation, SuddenExpansionHeat) {
  const DensityMatrix rho_d = gibbs_state(field_hamiltonian(2.0, Axis::x), 6.6);
  const StrokeRecord rec =
      run_relaxation(rho_d, field_hamiltonian(5.0, Axis::y), 16.5, Stroke::ApA);
  EXPECT_NEAR(rec.q, -5.7456612966222542, 1e-12);
  EXPECT_EQ(rec.label, Stroke::ApA);
}

TEST(RunCycle, QuasiStaticRecoversCarnot) {
  const CycleReport r = run_cycle(reference(100.0));
  ASSERT_TRUE(r.eta.has_value());
  EXPECT_NEAR(*r.eta, 0.6, 2e-3);
  EXPECT_NEAR(r.work, oracle::quasi_static_work(3.6, 2.0, 6.6, 16.5), 2e-3);
  EXPECT_NEAR(r.work, 0.70551368415455529, 2e-3);
  EXPECT_EQ(r.mode, Mode::engine);
  EXPECT_LT(r.fric_comp, 1e-3);
  EXPECT_LT(r.fric_exp, 1e-3);
  ASSERT_TRUE(r.lag.has_value());
  EXPECT_LT(*r.lag, 1e-3);
  EXPECT_LT(r.coh_c + r.pop_c + r.coh_a + r.pop_a, 4e-6);
}

TEST(RunCycle, FastDrivingIsNotAnEngine) {
  const CycleReport r = run_cycle(reference(0.1));
  EXPECT_LT(r.work, 0.0);
  EXPECT_EQ(r.mode, Mode::non_engine);
}

TEST(RunCycle, HotterSourceKeepsEngineAt150Microseconds) {
  const CycleReport r = run_cycle(reference(0.15, 33.5));
  EXPECT_EQ(r.mode, Mode::engine);
  EXPECT_GT(r.work, 0.0);
}

TEST(RunCycle, EtaUndefinedWithoutHeatIntake) {
  const CycleReport r = run_cycle(reference(1e-4));
  EXPECT_LT(r.q_in, 0.0);
  EXPECT_FALSE(r.eta.has_value());
  EXPECT_FALSE(r.lag.has_value());
  EXPECT_EQ(r.mode, Mode::non_engine);
  EXPECT_FALSE(efficiency_lag(r).has_value());
}

TEST(RunCycle, BookkeepingIdentities) {
  for (double tau : {0.02, 0.2, 0.7, 3.0}) {
    const CycleReport r = run_cycle(reference(tau, 21.5));
    double total_du = 0.0;
    for (const StrokeRecord& s : r.strokes) {
      expect_first_law(s);
      total_du += s.delta_u();
    }
    EXPECT_NEAR(total_du, 0.0, 1e-9);
    EXPECT_EQ(r.stroke(Stroke::BCp).q, 0.0);
    EXPECT_EQ(r.stroke(Stroke::DAp).q, 0.0);
    EXPECT_EQ(r.stroke(Stroke::CpC).w, 0.0);
    EXPECT_EQ(r.stroke(Stroke::ApA).w, 0.0);
    EXPECT_NEAR(r.q_in, r.stroke(Stroke::ApA).q + r.stroke(Stroke::AB).q, 1e-12);
    EXPECT_NEAR(r.q_out, r.stroke(Stroke::CpC).q + r.stroke(Stroke::CD).q, 1e-12);
    EXPECT_NEAR(r.work, r.q_in + r.q_out, 1e-12);
    EXPECT_NEAR(r.srel_c, r.coh_c + r.pop_c, 1e-10);
    EXPECT_NEAR(r.srel_a, r.coh_a + r.pop_a, 1e-10);
    // Consecutive strokes share their corner state.
    for (std::size_t i = 0; i + 1 < r.strokes.size(); ++i) {
      EXPECT_EQ(r.strokes[i].state_out, r.strokes[i + 1].state_in);
    }
  }
}

TEST(Friction, SuddenLimitMatchesClosedForm) {
  const CycleReport r = run_cycle(reference(1e-4));
  const oracle::SuddenLimit lim = oracle::sudden_limit(3.6, 2.0, 6.6, 16.5);
  EXPECT_NEAR(r.fric_comp, lim.fric_comp, 1e-3);
  EXPECT_NEAR(r.fric_comp, 1.2591276012920279, 1e-3);
  EXPECT_NEAR(r.fric_exp, lim.fric_exp, 1e-3);
  EXPECT_NEAR(r.q_in, lim.q_in, 1e-3);
  const FrictionWork fw = friction(r);
  EXPECT_EQ(fw.fric_comp, r.fric_comp);
  EXPECT_EQ(fw.fric_exp, r.fric_exp);
}

TEST(Friction, NonNegativeAcrossTau) {
  for (double tau : {1e-3, 0.05, 0.3, 1.5, 6.0}) {
    const CycleReport r = run_cycle(reference(tau));
    EXPECT_GE(r.fric_comp, 0.0);
    EXPECT_GE(r.fric_exp, 0.0);
  }
}

TEST(Friction, IdentityViolationDetected) {
  CycleReport r = run_cycle(reference(0.3));
  r.stroke(Stroke::CpC).q += 1e-6;
  EXPECT_THROW(friction(r), ConsistencyError);
}

TEST(EfficiencyLag, LagClosesCarnotGap) {
  for (double t_hot : {16.5, 33.5}) {
    for (int i = 0; i < 50; ++i) {
      const double tau = 0.05 * std::pow(100.0, i / 49.0);  // 0.05 .. 5 ms
      const CycleReport r = run_cycle(reference(tau, t_hot));
      if (r.mode != Mode::engine) continue;
      ASSERT_TRUE(r.eta && r.lag);
      EXPECT_NEAR(*r.eta + *r.lag, r.eta_carnot, 1e-8);
      EXPECT_GT(*r.lag, 0.0);
      EXPECT_LT(*r.eta, r.eta_carnot);
    }
  }
}

TEST(DecomposeFriction, SuddenCompressionSplit) {
  const CycleReport r = run_cycle(reference(1e-5));
  const FrictionSplit split = decompose_friction(r);
  // rho_B is perpendicular to the x axis, so its dephased form is maximally mixed.
  EXPECT_NEAR(split.coh_c, 0.09227867427444334, 1e-5);
  EXPECT_NEAR(split.pop_c, 0.098498235012227547, 1e-5);
  EXPECT_EQ(split.coh_c, r.coh_c);
}

TEST(DecomposeFriction, QuasiStaticTermsVanish) {
  const CycleReport r = run_cycle(reference(100.0));
  for (double v : {r.coh_c, r.pop_c, r.coh_a, r.pop_a}) EXPECT_LT(v, 1e-6);
}

TEST(CycleProperties, MonotoneEndpointApproach) {
  double prev_c = INFINITY;
  double prev_a = INFINITY;
  for (double tau : {1.0, 5.0, 25.0, 100.0}) {
    const CycleReport r = run_cycle(reference(tau));
    EXPECT_LT(r.srel_c, prev_c) << tau;
    EXPECT_LT(r.srel_a, prev_a) << tau;
    prev_c = r.srel_c;
    prev_a = r.srel_a;
  }
}

TEST(CycleProperties, EngineRegionNestsWithHotterSource) {
  for (int i = 0; i < 40; ++i) {
    const double tau = 0.02 * std::pow(50.0, i / 39.0);  // 0.02 .. 1 ms
    const bool cool = run_cycle(reference(tau, 16.5)).mode == Mode::engine;
    const bool hot = run_cycle(reference(tau, 33.5)).mode == Mode::engine;
    if (cool) {
      EXPECT_TRUE(hot) << "tau = " << tau;
    }
  }
}

TEST(ScaleInvariance, SpinGapsAtReferenceTemperatures) {
  const std::vector<double> hot{gap_energy(3.6)};
  const std::vector<double> cold{gap_energy(1.44)};
  EXPECT_TRUE(check_scale_invariance(hot, cold, 16.5, 6.6).pass);
}

TEST(ScaleInvariance, UniformScalingPasses) {
  const std::vector<double> hot{2.0, 4.0, 6.0};
  const std::vector<double> cold{1.0, 2.0, 3.0};
  const ScaleInvarianceResult res = check_scale_invariance(hot, cold, 2.0, 1.0);
  EXPECT_TRUE(res.pass);
  EXPECT_FALSE(res.failing_index.has_value());
}

TEST(ScaleInvariance, ReportsFirstViolation) {
  const std::vector<double> hot{2.0, 4.0, 7.0};
  const std::vector<double> cold{1.0, 2.0, 3.0};
  const ScaleInvarianceResult res = check_scale_invariance(hot, cold, 2.0, 1.0);
  EXPECT_FALSE(res.pass);
  ASSERT_TRUE(res.failing_index.has_value());
  EXPECT_EQ(*res.failing_index, 2u);
  EXPECT_FALSE(res.reason.empty());
}

TEST(ScaleInvariance, MalformedInputs) {
  const std::vector<double> two{1.0, 2.0};
  const std::vector<double> one{1.0};
  const std::vector<double> none;
  const std::vector<double> negative{-1.0, 2.0};
  EXPECT_THROW(check_scale_invariance(two, one, 2.0, 1.0), DomainError);
  EXPECT_THROW(check_scale_invariance(none, none, 2.0, 1.0), DomainError);
  EXPECT_THROW(check_scale_invariance(negative, two, 2.0, 1.0), DomainError);
}
