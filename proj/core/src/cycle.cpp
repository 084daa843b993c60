#include "qcarnot/cycle.hpp"

#include <cmath>
#include <sstream>

#include "qcarnot/constants.hpp"
#include "qcarnot/errors.hpp"

namespace qcarnot {

namespace {

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(what) + " must be positive and finite");
  }
}

}  // namespace

void CycleParams::validate() const {
  require_positive(nu_b, "nu_b");
  require_positive(nu_d, "nu_d");
  require_positive(t_cold, "t_cold");
  require_positive(t_hot, "t_hot");
  require_positive(tau, "tau");
  if (!(t_hot > t_cold)) throw DomainError("t_hot must exceed t_cold");
  if (!(tol > 0.0 && tol < 1.0)) throw DomainError("tol must lie in (0, 1)");
}

std::string_view to_string(Stroke stroke) {
  switch (stroke) {
    case Stroke::AB:
      return "AB";
    case Stroke::BCp:
      return "BCp";
    case Stroke::CpC:
      return "CpC";
    case Stroke::CD:
      return "CD";
    case Stroke::DAp:
      return "DAp";
    case Stroke::ApA:
      return "ApA";
  }
  return "?";
}

std::string_view to_string(Mode mode) {
  return mode == Mode::engine ? "engine" : "non_engine";
}

QubitOperator field_hamiltonian(double nu_khz, Axis axis) {
  const double coefficient = -0.5 * kPlanck * nu_khz;
  return axis == Axis::x ? QubitOperator::sigma_x(coefficient)
                         : QubitOperator::sigma_y(coefficient);
}

StrokeRecord run_isothermal(double temperature, double nu_start, double nu_end, Axis axis,
                            Stroke label) {
  require_positive(temperature, "run_isothermal: temperature");
  require_positive(nu_start, "run_isothermal: nu_start");
  require_positive(nu_end, "run_isothermal: nu_end");

  StrokeRecord rec;
  rec.label = label;
  rec.h_in = field_hamiltonian(nu_start, axis);
  rec.h_out = field_hamiltonian(nu_end, axis);
  rec.state_in = gibbs_state(rec.h_in, temperature);
  rec.state_out = gibbs_state(rec.h_out, temperature);
  rec.q = temperature * (von_neumann_entropy(rec.state_out) - von_neumann_entropy(rec.state_in));
  rec.w = rec.delta_u() - rec.q;
  return rec;
}

StrokeRecord run_adiabatic(const HamiltonianSchedule& schedule, const DensityMatrix& rho0,
                           double tol, std::uint64_t* steps_used) {
  const PropagationResult prop = propagate_converged(schedule, rho0, tol);
  if (steps_used != nullptr) *steps_used = prop.steps_used;

  StrokeRecord rec;
  rec.label = schedule.kind() == StrokeKind::compression ? Stroke::BCp : Stroke::DAp;
  rec.h_in = schedule.start_hamiltonian();
  rec.h_out = schedule.end_hamiltonian();
  rec.state_in = rho0;
  rec.state_out = prop.final_state;
  rec.q = 0.0;
  rec.w = rec.delta_u();
  return rec;
}

StrokeRecord run_relaxation(const DensityMatrix& rho_prime, const QubitOperator& hamiltonian,
                            double temperature, Stroke label) {
  StrokeRecord rec;
  rec.label = label;
  rec.h_in = hamiltonian;
  rec.h_out = hamiltonian;
  rec.state_in = rho_prime;
  rec.state_out = gibbs_state(hamiltonian, temperature);
  rec.q = rec.delta_u();
  rec.w = 0.0;
  return rec;
}

CycleReport run_cycle(const CycleParams& p) {
  p.validate();

  CycleReport rep;
  rep.params = p;
  rep.eta_carnot = p.eta_carnot();

  const QubitOperator h_a = field_hamiltonian(p.nu_a(), Axis::y);
  const QubitOperator h_c = field_hamiltonian(p.nu_c(), Axis::x);

  auto& ab = rep.stroke(Stroke::AB);
  ab = run_isothermal(p.t_hot, p.nu_a(), p.nu_b, Axis::y, Stroke::AB);

  auto& bcp = rep.stroke(Stroke::BCp);
  bcp = run_adiabatic(HamiltonianSchedule::compression(p.nu_b, p.nu_c(), p.tau), ab.state_out,
                      p.tol, &rep.steps_comp);

  auto& cpc = rep.stroke(Stroke::CpC);
  cpc = run_relaxation(bcp.state_out, h_c, p.t_cold, Stroke::CpC);

  auto& cd = rep.stroke(Stroke::CD);
  cd = run_isothermal(p.t_cold, p.nu_c(), p.nu_d, Axis::x, Stroke::CD);

  auto& dap = rep.stroke(Stroke::DAp);
  dap = run_adiabatic(HamiltonianSchedule::expansion(p.nu_d, p.nu_a(), p.tau), cd.state_out,
                      p.tol, &rep.steps_exp);

  auto& apa = rep.stroke(Stroke::ApA);
  apa = run_relaxation(dap.state_out, h_a, p.t_hot, Stroke::ApA);

  rep.q_in = apa.q + ab.q;
  rep.q_out = cpc.q + cd.q;
  rep.work = rep.q_in + rep.q_out;
  if (rep.q_in > 0.0) rep.eta = 1.0 + rep.q_out / rep.q_in;
  rep.mode = (rep.work > 0.0 && rep.q_in > 0.0 && rep.q_out < 0.0) ? Mode::engine
                                                                   : Mode::non_engine;

  rep.srel_c = relative_entropy(cpc.state_in, cpc.state_out);
  rep.srel_a = relative_entropy(apa.state_in, apa.state_out);

  const FrictionWork fw = friction(rep);
  rep.fric_comp = fw.fric_comp;
  rep.fric_exp = fw.fric_exp;

  const FrictionSplit split = decompose_friction(rep);
  rep.coh_c = split.coh_c;
  rep.pop_c = split.pop_c;
  rep.coh_a = split.coh_a;
  rep.pop_a = split.pop_a;

  rep.lag = efficiency_lag(rep);
  return rep;
}

FrictionWork friction(const CycleReport& report) {
  const CycleParams& p = report.params;
  FrictionWork fw{p.t_cold * report.srel_c, p.t_hot * report.srel_a};

  const double q_cpc = report.stroke(Stroke::CpC).q;
  const double q_apa = report.stroke(Stroke::ApA).q;
  const double residual_c = std::abs(fw.fric_comp + q_cpc);
  const double residual_a = std::abs(fw.fric_exp + q_apa);
  if (residual_c > kFrictionIdentityTolerance || residual_a > kFrictionIdentityTolerance) {
    std::ostringstream msg;
    msg.precision(6);
    msg << "friction: T*S(rho'||rho) != -Q_relax (compression residual " << residual_c
        << " peV, expansion residual " << residual_a << " peV)";
    throw ConsistencyError(msg.str());
  }
  return fw;
}

std::optional<double> efficiency_lag(const CycleReport& report) {
  if (!(report.q_in > 0.0)) return std::nullopt;
  return report.params.t_cold * (report.srel_c + report.srel_a) / report.q_in;
}

FrictionSplit decompose_friction(const CycleReport& report) {
  const StrokeRecord& cpc = report.stroke(Stroke::CpC);
  const StrokeRecord& apa = report.stroke(Stroke::ApA);

  FrictionSplit split;
  split.coh_c = coherence(cpc.state_in, cpc.h_in);
  split.pop_c = relative_entropy(dephase(cpc.state_in, cpc.h_in), cpc.state_out);
  split.coh_a = coherence(apa.state_in, apa.h_in);
  split.pop_a = relative_entropy(dephase(apa.state_in, apa.h_in), apa.state_out);
  return split;
}

ScaleInvarianceResult check_scale_invariance(std::span<const double> gaps_hot,
                                             std::span<const double> gaps_cold, double t_hot,
                                             double t_cold, double tol) {
  if (gaps_hot.empty() || gaps_hot.size() != gaps_cold.size()) {
    throw DomainError("check_scale_invariance: gap lists must be non-empty and equally long");
  }
  require_positive(t_hot, "check_scale_invariance: t_hot");
  require_positive(t_cold, "check_scale_invariance: t_cold");
  for (std::size_t k = 0; k < gaps_hot.size(); ++k) {
    if (!(gaps_hot[k] > 0.0) || !(gaps_cold[k] > 0.0)) {
      throw DomainError("check_scale_invariance: gaps must be positive");
    }
  }

  const double lambda = t_hot / t_cold;
  for (std::size_t k = 0; k < gaps_hot.size(); ++k) {
    const double ratio = gaps_hot[k] / gaps_cold[k];
    if (std::abs(ratio - lambda) > tol) {
      std::ostringstream msg;
      msg << "gap " << k << ": ratio " << ratio << " differs from T_H/T_L = " << lambda;
      return {false, k, msg.str()};
    }
  }
  return {true, std::nullopt, {}};
}

}  // namespace qcarnot
