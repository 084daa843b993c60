#include "qcarnot/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "qcarnot/quantum_state.hpp"

namespace qcarnot {

namespace {

std::string describe(const CycleReport& r) {
  std::ostringstream out;
  out << "tau=" << format_real(r.params.tau) << " ms, T_H=" << format_real(r.params.t_hot)
      << " peV";
  return out.str();
}

// Largest residual of `metric` over the reports for which it is defined.
CheckResult scan(const std::string& name, double tolerance,
                 const std::vector<CycleReport>& reports,
                 const std::function<std::optional<double>(const CycleReport&)>& metric) {
  CheckResult res{name, 0.0, tolerance, true, {}};
  for (const CycleReport& r : reports) {
    const std::optional<double> value = metric(r);
    if (!value) continue;
    // NaN must fail.
    const double v = std::isnan(*value) ? INFINITY : *value;
    if (res.worst_point.empty() || v > res.max_residual) {
      res.max_residual = v;
      res.worst_point = describe(r);
    }
  }
  res.passed = res.max_residual < tolerance;
  return res;
}

}  // namespace

std::vector<CheckResult> evaluate_checks(const std::vector<CycleReport>& reports) {
  std::vector<CheckResult> out;

  out.push_back(scan("friction identity T*S(rho'||rho) + Q_relax [peV]", 1e-8, reports,
                     [](const CycleReport& r) -> std::optional<double> {
                       const double c = r.params.t_cold * r.srel_c + r.stroke(Stroke::CpC).q;
                       const double a = r.params.t_hot * r.srel_a + r.stroke(Stroke::ApA).q;
                       return std::max(std::abs(c), std::abs(a));
                     }));

  out.push_back(scan("efficiency lag eta - (eta_C - lag), engine points", 1e-8, reports,
                     [](const CycleReport& r) -> std::optional<double> {
                       if (r.mode != Mode::engine || !r.eta || !r.lag) return std::nullopt;
                       return std::abs(*r.eta - (r.eta_carnot - *r.lag));
                     }));

  out.push_back(scan("coherence/population split srel - (coh + pop) [nats]", 1e-10, reports,
                     [](const CycleReport& r) -> std::optional<double> {
                       return std::max(std::abs(r.srel_c - (r.coh_c + r.pop_c)),
                                       std::abs(r.srel_a - (r.coh_a + r.pop_a)));
                     }));

  out.push_back(scan("purity drift of unitary strokes", 1e-11, reports,
                     [](const CycleReport& r) -> std::optional<double> {
                       double worst = 0.0;
                       for (Stroke s : {Stroke::BCp, Stroke::DAp}) {
                         const StrokeRecord& rec = r.stroke(s);
                         worst = std::max(
                             worst, std::abs(rec.state_out.purity() - rec.state_in.purity()));
                       }
                       return worst;
                     }));

  out.push_back(scan("first law per stroke dU - q - w [peV]", 1e-10, reports,
                     [](const CycleReport& r) -> std::optional<double> {
                       double worst = 0.0;
                       for (const StrokeRecord& rec : r.strokes) {
                         worst = std::max(worst, std::abs(rec.delta_u() - rec.q - rec.w));
                       }
                       return worst;
                     }));

  out.push_back(scan("cycle closure sum dU [peV]", 1e-9, reports,
                     [](const CycleReport& r) -> std::optional<double> {
                       double total = 0.0;
                       for (const StrokeRecord& rec : r.strokes) total += rec.delta_u();
                       return std::abs(total);
                     }));

  out.push_back(scan("work balance work - (q_in + q_out) [peV]", 1e-10, reports,
                     [](const CycleReport& r) -> std::optional<double> {
                       const double q_in = r.stroke(Stroke::ApA).q + r.stroke(Stroke::AB).q;
                       const double q_out = r.stroke(Stroke::CpC).q + r.stroke(Stroke::CD).q;
                       return std::max({std::abs(r.q_in - q_in), std::abs(r.q_out - q_out),
                                        std::abs(r.work - (q_in + q_out))});
                     }));

  // Sign properties: residual is the amount by which the bound is exceeded.
  out.push_back(scan("relaxation heats non-positive max(q_CpC, q_ApA) [peV]", 1e-12, reports,
                     [](const CycleReport& r) -> std::optional<double> {
                       return std::max(
                           {0.0, r.stroke(Stroke::CpC).q, r.stroke(Stroke::ApA).q});
                     }));

  out.push_back(scan("energy at A' not below A [peV]", 1e-12, reports,
                     [](const CycleReport& r) -> std::optional<double> {
                       const StrokeRecord& apa = r.stroke(Stroke::ApA);
                       return std::max(0.0, apa.energy_out() - apa.energy_in());
                     }));

  out.push_back(scan("scale invariance S(rho_B)=S(rho_C), S(rho_A)=S(rho_D) [nats]", 1e-12,
                     reports, [](const CycleReport& r) -> std::optional<double> {
                       const StrokeRecord& ab = r.stroke(Stroke::AB);
                       const StrokeRecord& cd = r.stroke(Stroke::CD);
                       const double bc = von_neumann_entropy(ab.state_out) -
                                         von_neumann_entropy(cd.state_in);
                       const double ad = von_neumann_entropy(ab.state_in) -
                                         von_neumann_entropy(cd.state_out);
                       return std::max(std::abs(bc), std::abs(ad));
                     }));

  return out;
}

std::vector<CheckResult> run_checks(const CheckOptions& options) {
  SweepSpec spec;
  spec.base = options.base;
  spec.temps_hot = options.temps_hot;
  spec.tau_grid = log_spaced(options.tau_min, options.tau_max, options.tau_count);
  std::vector<CycleReport> reports = run_sweep(spec, options.threads);

  if (options.perturb != 0.0) {
    for (CycleReport& r : reports) r.stroke(Stroke::CpC).q += options.perturb;
  }
  return evaluate_checks(reports);
}

}  // namespace qcarnot
