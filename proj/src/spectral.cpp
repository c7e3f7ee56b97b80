#include "ycoupler/spectral.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <ostream>
#include <string>

#include "ycoupler/error.hpp"
#include "ycoupler/gallery.hpp"

namespace ycoupler::spectral {

namespace {

void check_arm(const SpectralArm& a, const char* name) {
  if (!(a.n > 0.0) || !std::isfinite(a.n)) throw InvalidArgument(std::string(name) + ": refractive index must be positive");
  if (!(a.length >= 0.0) || !std::isfinite(a.length)) throw InvalidArgument(std::string(name) + ": length must be >= 0");
}

void check_grid(std::span<const double> k) {
  if (k.empty()) throw InvalidArgument("k grid is empty");
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (!(k[i] > 0.0) || !std::isfinite(k[i])) throw InvalidArgument("k grid values must be positive and finite");
    if (i && !(k[i] > k[i - 1])) throw InvalidArgument("k grid must be strictly increasing");
  }
}

SweepRecord closed_form_point(const SpectralArm& arm1, const SpectralArm& arm2, double k) {
  const auto rt = gallery::resonator_rt({arm1.phase(k), arm2.phase(k)});
  return {k, 2.0 * kPi / k, std::norm(rt.r), std::norm(rt.t)};
}

SweepRecord solver_point(const network::Netlist& n, const SpectralArm& arm1, const SpectralArm& arm2, double k,
                         double tol) {
  const network::Netlist driven =
      network::with_link_phase(network::with_link_phase(n, "arm1", arm1.phase(k)), "arm2", arm2.phase(k));
  const auto rep = network::solve_steady_state(driven, tol);
  return {k, 2.0 * kPi / k, std::norm(rep.effective(0, 0)), std::norm(rep.effective(1, 0))};
}

void check_two_port(const network::Netlist& n) {
  if (n.externals.size() != 2) throw InvalidArgument("spectral sweep needs a netlist with exactly two externals");
  // Surfaces missing labels before any thread starts.
  (void)network::with_link_phase(network::with_link_phase(n, "arm1", 0.0), "arm2", 0.0);
}

template <class PointFn>
void fill_parallel(std::vector<SweepRecord>& out, std::span<const double> k, PointFn point) {
  std::exception_ptr failure;
  const auto count = static_cast<long long>(k.size());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = point(k[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(ycoupler_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::vector<double> linear_k_grid(double kmin, double kmax, std::size_t points) {
  if (points < 2) throw InvalidArgument("k grid needs at least two points");
  if (!(kmin > 0.0) || !(kmax > kmin) || !std::isfinite(kmax)) {
    throw InvalidArgument("k grid needs 0 < kmin < kmax");
  }
  std::vector<double> k(points);
  const double step = (kmax - kmin) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) k[i] = kmin + step * static_cast<double>(i);
  k.back() = kmax;
  return k;
}

SweepResult sweep_resonator_serial(const SpectralArm& arm1, const SpectralArm& arm2, std::span<const double> k_grid) {
  check_arm(arm1, "arm1");
  check_arm(arm2, "arm2");
  check_grid(k_grid);
  SweepResult s{{}, arm1, arm2};
  s.records.reserve(k_grid.size());
  for (const double k : k_grid) s.records.push_back(closed_form_point(arm1, arm2, k));
  return s;
}

SweepResult sweep_resonator(const SpectralArm& arm1, const SpectralArm& arm2, std::span<const double> k_grid) {
  check_arm(arm1, "arm1");
  check_arm(arm2, "arm2");
  check_grid(k_grid);
  SweepResult s{std::vector<SweepRecord>(k_grid.size()), arm1, arm2};
  fill_parallel(s.records, k_grid, [&](double k) { return closed_form_point(arm1, arm2, k); });
  return s;
}

SweepResult sweep_netlist_serial(const network::Netlist& n, const SpectralArm& arm1, const SpectralArm& arm2,
                                 std::span<const double> k_grid, double tol) {
  check_arm(arm1, "arm1");
  check_arm(arm2, "arm2");
  check_grid(k_grid);
  check_two_port(n);
  SweepResult s{{}, arm1, arm2};
  s.records.reserve(k_grid.size());
  for (const double k : k_grid) s.records.push_back(solver_point(n, arm1, arm2, k, tol));
  return s;
}

SweepResult sweep_netlist(const network::Netlist& n, const SpectralArm& arm1, const SpectralArm& arm2,
                          std::span<const double> k_grid, double tol) {
  check_arm(arm1, "arm1");
  check_arm(arm2, "arm2");
  check_grid(k_grid);
  check_two_port(n);
  SweepResult s{std::vector<SweepRecord>(k_grid.size()), arm1, arm2};
  fill_parallel(s.records, k_grid, [&](double k) { return solver_point(n, arm1, arm2, k, tol); });
  return s;
}

std::vector<Notch> notch_metrics(const SweepResult& s, double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0)) throw InvalidArgument("notch threshold must lie in (0, 1)");
  const auto& r = s.records;
  std::vector<Notch> out;
  std::size_t i = 0;
  while (i < r.size()) {
    if (r[i].T >= threshold) {
      ++i;
      continue;
    }
    const std::size_t first = i;
    std::size_t best = i;
    while (i < r.size() && r[i].T < threshold) {
      if (r[i].T < r[best].T) best = i;
      ++i;
    }
    const std::size_t last = i - 1;
    // a run whose minimum is the grid edge has no located minimum
    if (best == 0 || best + 1 == r.size()) continue;
    auto crossing = [&](std::size_t above, std::size_t below) {
      const double f = (r[above].T - threshold) / (r[above].T - r[below].T);
      return r[above].k + f * (r[below].k - r[above].k);
    };
    const double left = first == 0 ? r.front().k : crossing(first - 1, first);
    const double right = last + 1 == r.size() ? r.back().k : crossing(last + 1, last);
    out.push_back({r[best].k, right - left, r[best].T});
  }
  return out;
}

std::vector<double> b_zeros(const SpectralArm& arm1, const SpectralArm& arm2, double kmin, double kmax) {
  const double d = std::abs(arm1.optical_length() - arm2.optical_length());
  std::vector<double> out;
  if (d == 0.0) return out;
  const double period = 2.0 * kPi / d;
  const double first = kPi / d;
  for (double m = std::ceil((kmin - first) / period); first + m * period <= kmax; m += 1.0) {
    const double k = first + m * period;
    if (k >= kmin && k > 0.0) out.push_back(k);
  }
  return out;
}

std::vector<double> resonance_zeros(const SpectralArm& arm1, const SpectralArm& arm2, double kmin, double kmax) {
  const double sum = arm1.optical_length() + arm2.optical_length();
  const double diff = arm1.optical_length() - arm2.optical_length();
  std::vector<double> out;
  if (sum == 0.0) return out;
  const double period = 2.0 * kPi / sum;
  for (double m = std::max(1.0, std::ceil(kmin / period)); m * period <= kmax; m += 1.0) {
    const double k = m * period;
    // C = 0 there as well: removable singularity, full transmission
    if (std::abs(std::sin(0.5 * k * diff)) < 1e-9) continue;
    out.push_back(k);
  }
  return out;
}

void write_csv(std::ostream& os, const SweepResult& s) {
  os << "k,lambda,R,T\n";
  char buf[128];
  for (const SweepRecord& r : s.records) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g\n", r.k, r.lambda, r.R, r.T);
    os << buf;
  }
}

}  // namespace ycoupler::spectral
