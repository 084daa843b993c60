#include "qcarnot/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <ostream>
#include <thread>

#include "qcarnot/errors.hpp"

namespace qcarnot {

std::vector<double> log_spaced(double lo, double hi, std::size_t count) {
  if (count == 0) throw DomainError("log_spaced: count must be at least 1");
  if (!(lo > 0.0) || !(hi >= lo) || !std::isfinite(hi)) {
    throw DomainError("log_spaced: need 0 < lo <= hi");
  }
  if (count == 1) return {lo};
  std::vector<double> grid(count);
  const double log_lo = std::log(lo);
  const double step = (std::log(hi) - log_lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    grid[i] = std::exp(log_lo + step * static_cast<double>(i));
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

SweepSpec SweepSpec::defaults() {
  SweepSpec spec;
  spec.tau_grid = log_spaced(kDefaultTauMin, kDefaultTauMax, kDefaultTauCount);
  spec.temps_hot.assign(kDefaultHotTemperatures.begin(), kDefaultHotTemperatures.end());
  return spec;
}

void SweepSpec::validate() const {
  if (tau_grid.empty()) throw DomainError("sweep: tau grid is empty");
  if (temps_hot.empty()) throw DomainError("sweep: hot temperature list is empty");
  for (const SweepPoint& pt : sweep_points(*this)) {
    CycleParams p = base;
    p.tau = pt.tau;
    p.t_hot = pt.t_hot;
    p.validate();
  }
}

std::vector<SweepPoint> sweep_points(const SweepSpec& spec) {
  std::vector<double> taus = spec.tau_grid;
  std::vector<double> temps = spec.temps_hot;
  std::sort(taus.begin(), taus.end());
  std::sort(temps.begin(), temps.end());

  std::vector<SweepPoint> points;
  points.reserve(taus.size() * temps.size());
  for (double t_hot : temps) {
    for (double tau : taus) points.push_back({tau, t_hot});
  }
  return points;
}

std::vector<CycleReport> run_sweep(const SweepSpec& spec, unsigned threads) {
  spec.validate();
  const std::vector<SweepPoint> points = sweep_points(spec);
  std::vector<CycleReport> reports(points.size());
  std::vector<std::exception_ptr> errors(points.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        CycleParams p = spec.base;
        p.tau = points[i].tau;
        p.t_hot = points[i].t_hot;
        reports[i] = run_cycle(p);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, points.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  return reports;
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string csv_header() {
  std::string line;
  for (std::size_t i = 0; i < kCsvColumns.size(); ++i) {
    if (i) line += ',';
    line += kCsvColumns[i];
  }
  return line;
}

std::string csv_row(const CycleReport& r) {
  const auto optional_real = [](const std::optional<double>& v) {
    return v ? format_real(*v) : std::string{};
  };
  const std::array<std::string, 20> fields{
      format_real(r.params.tau),
      format_real(r.params.t_hot),
      format_real(r.params.t_cold),
      format_real(r.stroke(Stroke::AB).q),
      format_real(r.stroke(Stroke::CpC).q),
      format_real(r.stroke(Stroke::CD).q),
      format_real(r.stroke(Stroke::ApA).q),
      format_real(r.q_in),
      format_real(r.q_out),
      format_real(r.work),
      optional_real(r.eta),
      format_real(r.eta_carnot),
      optional_real(r.lag),
      format_real(r.srel_c),
      format_real(r.srel_a),
      format_real(r.coh_c),
      format_real(r.pop_c),
      format_real(r.coh_a),
      format_real(r.pop_a),
      std::string(to_string(r.mode)),
  };
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += fields[i];
  }
  return line;
}

void write_csv(std::ostream& out, const std::vector<CycleReport>& reports) {
  out << csv_header() << '\n';
  for (const CycleReport& r : reports) out << csv_row(r) << '\n';
}

}  // namespace qcarnot
