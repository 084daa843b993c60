// qcarnot: single-cycle reports, tau x T_H sweeps and invariant self-checks for
// the six-stroke irreversible Carnot cycle of a driven spin-1/2.
//
// Exit codes: 0 success, 1 runtime/physics error, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qcarnot/checks.hpp"
#include "qcarnot/cycle.hpp"
#include "qcarnot/errors.hpp"
#include "qcarnot/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

// Raised for flag combinations that parse but violate the parameter domain.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SharedFlags {
  double nu_b = 3.6;
  double nu_d = 2.0;
  double t_cold = 6.6;
  double tol = qcarnot::kDefaultTolerance;
};

void add_shared(CLI::App& cmd, SharedFlags& f) {
  cmd.add_option("--nu-b", f.nu_b, "Frequency at B [kHz]")->capture_default_str();
  cmd.add_option("--nu-d", f.nu_d, "Frequency at D [kHz]")->capture_default_str();
  cmd.add_option("--t-cold", f.t_cold, "Cold bath temperature [peV]")->capture_default_str();
  cmd.add_option("--tol", f.tol, "Propagation tolerance (trace distance)")
      ->capture_default_str();
}

qcarnot::CycleParams base_params(const SharedFlags& f) {
  qcarnot::CycleParams p;
  p.nu_b = f.nu_b;
  p.nu_d = f.nu_d;
  p.t_cold = f.t_cold;
  p.tol = f.tol;
  return p;
}

void validate_usage(const qcarnot::CycleParams& p) {
  try {
    p.validate();
  } catch (const qcarnot::DomainError& e) {
    throw UsageError(e.what());
  }
}

std::string fmt(double v) { return qcarnot::format_real(v); }

std::string fmt(const std::optional<double>& v) { return v ? fmt(*v) : "undefined"; }

void print_state(std::ostream& out, const char* name, const qcarnot::DensityMatrix& rho) {
  out << "  " << std::left << std::setw(5) << name << " bloch = (" << fmt(rho.rx()) << ", "
      << fmt(rho.ry()) << ", " << fmt(rho.rz()) << ")\n";
}

void print_text_report(std::ostream& out, const qcarnot::CycleReport& r) {
  using qcarnot::Stroke;
  const auto& p = r.params;
  out << "parameters\n"
      << "  nu_B       = " << fmt(p.nu_b) << " kHz\n"
      << "  nu_C       = " << fmt(p.nu_c()) << " kHz\n"
      << "  nu_D       = " << fmt(p.nu_d) << " kHz\n"
      << "  nu_A       = " << fmt(p.nu_a()) << " kHz\n"
      << "  T_L        = " << fmt(p.t_cold) << " peV\n"
      << "  T_H        = " << fmt(p.t_hot) << " peV\n"
      << "  tau        = " << fmt(p.tau) << " ms\n"
      << "  tol        = " << fmt(p.tol) << "\n"
      << "  steps      = " << r.steps_comp << " (compression), " << r.steps_exp
      << " (expansion)\n";

  out << "strokes (q absorbed by spin, w done on spin, peV)\n";
  for (const auto& s : r.strokes) {
    out << "  " << std::left << std::setw(4) << qcarnot::to_string(s.label)
        << " q = " << std::setw(18) << fmt(s.q) << " w = " << std::setw(18) << fmt(s.w)
        << " dU = " << fmt(s.delta_u()) << "\n";
  }

  out << "states\n";
  print_state(out, "A", r.stroke(Stroke::AB).state_in);
  print_state(out, "B", r.stroke(Stroke::AB).state_out);
  print_state(out, "C'", r.stroke(Stroke::BCp).state_out);
  print_state(out, "C", r.stroke(Stroke::CpC).state_out);
  print_state(out, "D", r.stroke(Stroke::CD).state_out);
  print_state(out, "A'", r.stroke(Stroke::DAp).state_out);

  out << "cycle\n"
      << "  q_in       = " << fmt(r.q_in) << " peV\n"
      << "  q_out      = " << fmt(r.q_out) << " peV\n"
      << "  work       = " << fmt(r.work) << " peV (extracted)\n"
      << "  eta        = " << fmt(r.eta) << "\n"
      << "  eta_carnot = " << fmt(r.eta_carnot) << "\n"
      << "  lag        = " << fmt(r.lag) << "\n"
      << "  mode       = " << qcarnot::to_string(r.mode) << "\n";

  out << "friction\n"
      << "  fric_comp  = " << fmt(r.fric_comp) << " peV\n"
      << "  fric_exp   = " << fmt(r.fric_exp) << " peV\n"
      << "  srel_C     = " << fmt(r.srel_c) << " nats\n"
      << "  srel_A     = " << fmt(r.srel_a) << " nats\n"
      << "  coh_C      = " << fmt(r.coh_c) << " nats\n"
      << "  pop_C      = " << fmt(r.pop_c) << " nats\n"
      << "  coh_A      = " << fmt(r.coh_a) << " nats\n"
      << "  pop_A      = " << fmt(r.pop_a) << " nats\n";
}

nlohmann::json to_json(const qcarnot::CycleReport& r) {
  using nlohmann::json;
  const auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  const auto bloch = [](const qcarnot::DensityMatrix& rho) {
    return json::array({rho.rx(), rho.ry(), rho.rz()});
  };
  json strokes = json::array();
  for (const auto& s : r.strokes) {
    strokes.push_back({{"label", qcarnot::to_string(s.label)},
                       {"q_pev", s.q},
                       {"w_pev", s.w},
                       {"bloch_in", bloch(s.state_in)},
                       {"bloch_out", bloch(s.state_out)}});
  }
  const auto& p = r.params;
  return {{"params",
           {{"nu_b_khz", p.nu_b},
            {"nu_c_khz", p.nu_c()},
            {"nu_d_khz", p.nu_d},
            {"nu_a_khz", p.nu_a()},
            {"t_cold_pev", p.t_cold},
            {"t_hot_pev", p.t_hot},
            {"tau_ms", p.tau},
            {"tol", p.tol}}},
          {"strokes", strokes},
          {"q_in_pev", r.q_in},
          {"q_out_pev", r.q_out},
          {"work_pev", r.work},
          {"eta", opt(r.eta)},
          {"eta_carnot", r.eta_carnot},
          {"lag", opt(r.lag)},
          {"fric_comp_pev", r.fric_comp},
          {"fric_exp_pev", r.fric_exp},
          {"srel_c", r.srel_c},
          {"srel_a", r.srel_a},
          {"coh_c", r.coh_c},
          {"pop_c", r.pop_c},
          {"coh_a", r.coh_a},
          {"pop_a", r.pop_a},
          {"mode", qcarnot::to_string(r.mode)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Irreversible quantum Carnot cycle on a driven spin-1/2"};
  app.require_subcommand(1);

  // cycle
  SharedFlags cycle_flags;
  double cycle_t_hot = 16.5;
  double cycle_tau = 0.0;
  bool cycle_json = false;
  auto* cycle = app.add_subcommand("cycle", "Run one cycle and print its report");
  add_shared(*cycle, cycle_flags);
  cycle->add_option("--t-hot", cycle_t_hot, "Hot bath temperature [peV]")
      ->capture_default_str();
  cycle->add_option("--tau", cycle_tau, "Duration of each unitary stroke [ms]")->required();
  cycle->add_flag("--json", cycle_json, "Print the report as JSON");

  // sweep
  SharedFlags sweep_flags;
  std::vector<double> sweep_temps(qcarnot::kDefaultHotTemperatures.begin(),
                                  qcarnot::kDefaultHotTemperatures.end());
  double tau_min = qcarnot::kDefaultTauMin;
  double tau_max = qcarnot::kDefaultTauMax;
  std::size_t tau_count = qcarnot::kDefaultTauCount;
  std::string out_path;
  unsigned threads = 0;
  auto* sweep = app.add_subcommand("sweep", "Write a tau x T_H grid as CSV");
  add_shared(*sweep, sweep_flags);
  sweep->add_option("--t-hot", sweep_temps, "Hot bath temperatures [peV], comma separated")
      ->delimiter(',')
      ->capture_default_str();
  sweep->add_option("--tau-min", tau_min, "Smallest tau [ms]")->capture_default_str();
  sweep->add_option("--tau-max", tau_max, "Largest tau [ms]")->capture_default_str();
  sweep->add_option("--tau-count", tau_count, "Number of log-spaced tau values")
      ->capture_default_str();
  sweep->add_option("--out", out_path, "Output CSV path (default: standard output)");
  sweep->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

  // check
  SharedFlags check_flags;
  qcarnot::CheckOptions check_opts;
  double check_perturb = 0.0;
  auto* check = app.add_subcommand("check", "Scan the cycle identities and sign properties");
  add_shared(*check, check_flags);
  check->add_option("--t-hot", check_opts.temps_hot, "Hot bath temperatures [peV]")
      ->delimiter(',')
      ->capture_default_str();
  check->add_option("--tau-min", check_opts.tau_min, "Smallest tau [ms]")->capture_default_str();
  check->add_option("--tau-max", check_opts.tau_max, "Largest tau [ms]")->capture_default_str();
  check->add_option("--tau-count", check_opts.tau_count, "Number of log-spaced tau values")
      ->capture_default_str();
  check->add_option("--perturb", check_perturb,
                    "Bias [peV] added to the C'->C heat (negative control)");
  check->add_option("--threads", check_opts.threads, "Worker threads (0 = hardware concurrency)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cycle->parsed()) {
      qcarnot::CycleParams p = base_params(cycle_flags);
      p.t_hot = cycle_t_hot;
      p.tau = cycle_tau;
      validate_usage(p);

      const qcarnot::CycleReport report = qcarnot::run_cycle(p);
      if (cycle_json) {
        std::cout << to_json(report).dump(2) << '\n';
      } else {
        print_text_report(std::cout, report);
      }
      return kExitOk;
    }

    if (sweep->parsed()) {
      qcarnot::SweepSpec spec;
      spec.base = base_params(sweep_flags);
      spec.temps_hot = sweep_temps;
      spec.output_path = out_path;
      try {
        spec.tau_grid = qcarnot::log_spaced(tau_min, tau_max, tau_count);
        spec.validate();
      } catch (const qcarnot::DomainError& e) {
        throw UsageError(e.what());
      }

      const std::vector<qcarnot::CycleReport> reports = qcarnot::run_sweep(spec, threads);
      if (out_path.empty()) {
        qcarnot::write_csv(std::cout, reports);
        std::cout.flush();
        if (!std::cout) throw std::runtime_error("failed writing to standard output");
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open " + out_path + " for writing");
        qcarnot::write_csv(file, reports);
        file.close();
        if (!file) throw std::runtime_error("failed writing " + out_path);
        std::cerr << "wrote " << reports.size() << " rows to " << out_path << '\n';
      }
      return kExitOk;
    }

    if (check->parsed()) {
      check_opts.base = base_params(check_flags);
      check_opts.perturb = check_perturb;
      try {
        if (check_opts.temps_hot.empty()) throw qcarnot::DomainError("empty --t-hot list");
        for (double t : check_opts.temps_hot) {
          qcarnot::CycleParams p = check_opts.base;
          p.t_hot = t;
          p.tau = check_opts.tau_min;
          p.validate();
        }
        qcarnot::log_spaced(check_opts.tau_min, check_opts.tau_max, check_opts.tau_count);
      } catch (const qcarnot::DomainError& e) {
        throw UsageError(e.what());
      }

      const auto results = qcarnot::run_checks(check_opts);
      bool all_passed = true;
      for (const auto& res : results) {
        all_passed = all_passed && res.passed;
        std::cout << (res.passed ? "PASS  " : "FAIL  ") << res.name
                  << "  max residual = " << fmt(res.max_residual)
                  << "  tolerance = " << fmt(res.tolerance);
        if (!res.passed) std::cout << "  worst at " << res.worst_point;
        std::cout << '\n';
      }
      std::cout << (all_passed ? "all invariants hold" : "invariant violation detected") << '\n';
      return all_passed ? kExitOk : kExitRuntime;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n\n";
    std::cerr << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}
