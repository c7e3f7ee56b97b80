#include "ycoupler/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <random>

#include "ycoupler/catalog.hpp"
#include "ycoupler/gallery.hpp"
#include "ycoupler/network.hpp"
#include "ycoupler/quantum.hpp"
#include "ycoupler/spectral.hpp"

namespace ycoupler {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

class Battery {
 public:
  void add(std::string suite, std::string name, double bound, const std::function<double()>& worst) {
    double dev = 0.0;
    bool ok = false;
    try {
      dev = worst();
      ok = dev <= bound;
    } catch (const std::exception&) {
      dev = std::numeric_limits<double>::infinity();
    }
    results_.push_back({std::move(suite), std::move(name), ok, dev, bound});
  }
  std::vector<VerifyResult> take() { return std::move(results_); }

 private:
  std::vector<VerifyResult> results_;
};

/// Largest unitarity or reciprocity deviation over a sampled family.
double family_worst(Rng& rng, int draws, bool reciprocal, const std::function<ScatteringMatrix(Rng&)>& make) {
  double worst = 0.0;
  for (int i = 0; i < draws; ++i) {
    const ScatteringMatrix s = make(rng);
    worst = std::max(worst, check_unitary(s).deviation);
    if (reciprocal) worst = std::max(worst, check_reciprocal(s).deviation);
  }
  return worst;
}

void catalog_checks(Battery& b) {
  Rng rng(20240827);
  const double s2 = 1.0 / std::sqrt(2.0);
  b.add("catalog", "symmetric_y matches the closed-form coupler", 1e-12, [&] {
    const auto ref = ScatteringMatrix::from_rows({{0.0, s2, s2}, {s2, -0.5, 0.5}, {s2, 0.5, -0.5}});
    return max_abs_difference(catalog::symmetric_y(), ref);
  });
  b.add("catalog", "grover(d) entries for d = 3..12", 1e-15, [] {
    double w = 0;
    for (int d = 3; d <= 12; ++d) {
      const auto g = catalog::grover(d);
      for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j)
          w = std::max(w, std::abs(g(i, j) - (i == j ? 2.0 / d - 1.0 : 2.0 / d)));
    }
    return w;
  });
  b.add("catalog", "circulant minimum reflectivity equals (d-2)^2/d^2 at x = -1", 1e-6, [] {
    double w = 0;
    for (int d = 3; d <= 12; ++d) {
      double best = 2.0;
      double at = 0.0;
      for (int k = 0; k <= 1000; ++k) {
        const double x = -1.0 + 1e-3 * k;
        const double r2 = std::norm(catalog::circulant_family({d, x})(0, 0));
        if (r2 < best) best = r2, at = x;
      }
      w = std::max({w, std::abs(best - catalog::min_reflectivity(d)), std::abs(at + 1.0)});
    }
    return w;
  });
  b.add("catalog", "circulant family unitary and reciprocal", 1e-12, [&] {
    return family_worst(rng, 50, true, [](Rng& g) {
      return catalog::circulant_family({3 + static_cast<int>(g() % 8), uniform(g, -1.0, 0.0)});
    });
  });
  b.add("catalog", "asymmetric Y-coupler unitary and reciprocal", 1e-12, [&] {
    return family_worst(rng, 50, true, [](Rng& g) {
      return catalog::asymmetric_y({uniform(g, 0.01, 0.99), uniform(g, -kPi, kPi)});
    });
  });
  b.add("catalog", "unbiased Y-coupler unitary and reciprocal", 1e-12, [&] {
    return family_worst(rng, 50, true, [](Rng& g) {
      return catalog::unbiased_y({uniform(g, 0.01, 1.0), uniform(g, -1.0, -0.01), g() % 2 ? 1 : -1});
    });
  });
  b.add("catalog", "y_pm unitary and reciprocal", 1e-12, [&] {
    return family_worst(rng, 50, true, [](Rng& g) { return catalog::y_pm(uniform(g, -0.99, 0.99)); });
  });
  b.add("catalog", "beam splitter unitary", 1e-12, [&] {
    return family_worst(rng, 50, false, [](Rng& g) {
      return catalog::beam_splitter({uniform(g, 0, 1), uniform(g, -kPi, kPi), uniform(g, -kPi, kPi), uniform(g, -kPi, kPi)});
    });
  });
  b.add("catalog", "asymmetric Y-coupler phase constraint", 1e-10, [&] {
    double w = 0;
    for (int i = 0; i < 50; ++i) {
      const auto y = catalog::asymmetric_y({uniform(rng, 0.05, 0.95), uniform(rng, -kPi, kPi)});
      const double lhs = std::arg(y(0, 2)) - std::arg(y(0, 1)) + kPi;
      const double mid = std::arg(y(1, 2)) - std::arg(y(1, 1));
      const double rhs = std::arg(y(2, 2)) - std::arg(y(1, 2));
      w = std::max({w, std::abs(std::remainder(lhs - mid, 2 * kPi)), std::abs(std::remainder(mid - rhs, 2 * kPi))});
    }
    return w;
  });
  b.add("catalog", "limits reproduce the symmetric coupler", 1e-8, [] {
    const auto ref = catalog::symmetric_y();
    return std::max({max_abs_difference(catalog::asymmetric_y({1.0 / std::sqrt(2.0), 0.0}), ref),
                     max_abs_difference(catalog::y_pm(0.0), ref),
                     max_abs_difference(catalog::y_pm(1e-10), ref)});
  });
}

void network_checks(Battery& b) {
  Rng rng(7);
  b.add("network", "bridged couplers reproduce the generalized Grover four-port", 1e-12, [&] {
    double w = 0;
    for (int i = 0; i < 20; ++i) {
      const double phi = uniform(rng, 0, 2 * kPi);
      w = std::max(w, max_abs_difference(network::solve_steady_state(gallery::grover4_netlist(phi)).effective,
                                         gallery::generalized_grover(phi)));
    }
    return w;
  });
  b.add("network", "loop mirror reflects fully for any loop phase", 1e-12, [&] {
    double w = 0;
    for (int i = 0; i < 50; ++i) {
      const double phi = uniform(rng, 0, 2 * kPi);
      const auto rep = network::solve_steady_state(gallery::loop_mirror_netlist(phi));
      w = std::max({w, std::abs(std::abs(rep.effective(0, 0)) - 1.0),
                    std::abs(rep.effective(0, 0) - gallery::loop_mirror_reflection(phi))});
    }
    return w;
  });
  b.add("network", "Michelson probabilities sin^2(phi/2), cos^2(phi/2)", 1e-12, [&] {
    double w = 0;
    for (int i = 0; i < 50; ++i) {
      const double phi = uniform(rng, 0, 2 * kPi);
      const auto s = network::solve_steady_state(gallery::michelson_netlist(phi)).effective;
      const double sh = std::sin(phi / 2);
      const double ch = std::cos(phi / 2);
      w = std::max({w, std::abs(std::norm(s(0, 0)) - sh * sh), std::abs(std::norm(s(1, 0)) - ch * ch)});
    }
    return w;
  });
  b.add("network", "resonator solve matches the closed form on a 50x50 grid", 1e-10, [] {
    double w = 0;
    for (int i = 0; i < 50; ++i) {
      for (int j = 0; j < 50; ++j) {
        const gallery::ResonatorPhases p{2 * kPi * i / 50.0, 2 * kPi * j / 50.0};
        const auto s = network::solve_steady_state(gallery::resonator_netlist(p)).effective;
        const auto rt = gallery::resonator_rt(p);
        w = std::max({w, std::abs(s(0, 0) - rt.r), std::abs(s(1, 0) - rt.t)});
      }
    }
    return w;
  });
  b.add("network", "round-trip iteration matches the solve on the resonator", 1e-9, [&] {
    double w = 0;
    for (int i = 0; i < 20; ++i) {
      const gallery::ResonatorPhases p{uniform(rng, 0, 2 * kPi), uniform(rng, 0, 2 * kPi)};
      const auto net = gallery::resonator_netlist(p);
      const double radius = network::roundtrip_spectral_radius(net);
      if (radius > 0.999) continue;
      const auto s = network::solve_steady_state(net).effective;
      const auto it = network::iterate_roundtrips(net, 0, 1000000, 1e-13);
      w = std::max({w, std::abs(it.amplitudes(0) - s(0, 0)), std::abs(it.amplitudes(1) - s(1, 0))});
    }
    return w;
  });
}

void gallery_checks(Battery& b) {
  b.add("gallery", "resonator |r|^2 + |t|^2 = 1 on a 200x200 grid", 1e-12, [] {
    constexpr int kN = 200;
    double w = 0;
#pragma omp parallel for reduction(max : w) schedule(static)
    for (int i = 0; i < kN; ++i) {
      for (int j = 0; j < kN; ++j) {
        const auto rt = gallery::resonator_rt({2 * kPi * i / kN, 2 * kPi * j / kN});
        w = std::max(w, std::abs(std::norm(rt.r) + std::norm(rt.t) - 1.0));
      }
    }
    return w;
  });
  b.add("gallery", "resonator symmetric under arm exchange", 1e-12, [] {
    double w = 0;
    for (int i = 0; i < 40; ++i) {
      for (int j = 0; j < 40; ++j) {
        const double a = 2 * kPi * i / 40.0 + 0.01;
        const double c = 2 * kPi * j / 40.0 + 0.02;
        const auto x = gallery::resonator_rt({a, c});
        const auto y = gallery::resonator_rt({c, a});
        w = std::max({w, std::abs(x.r - y.r), std::abs(x.t - y.t)});
      }
    }
    return w;
  });
  b.add("gallery", "supermode series converges to its steady state", 1e-10, [] {
    const gallery::ResonatorPhases p{0.7, 2.1};
    const auto lim = gallery::supermode_steady_state(p);
    const auto sum = gallery::supermode_series(p, 400);
    return std::max(std::abs(lim.a - sum.a), std::abs(lim.b - sum.b));
  });
}

void quantum_checks(Battery& b) {
  Rng rng(11);
  b.add("quantum", "coincidences cancel at |r| = 1/sqrt(2)", 1e-12, [&] {
    double w = 0;
    for (int i = 0; i < 100; ++i) {
      quantum::TwoPhotonInput in;
      in.splitter = {1.0 / std::sqrt(2.0), uniform(rng, -kPi, kPi), uniform(rng, -kPi, kPi), uniform(rng, -kPi, kPi)};
      w = std::max(w, std::abs(quantum::coincidence_amplitude(in)));
    }
    return w;
  });
  b.add("quantum", "coincidence scan equals (2|r|^2 - 1)^2", 1e-12, [] {
    const auto grid = quantum::unit_grid(101);
    double w = 0;
    for (const auto& p : quantum::coincidence_probability_scan(grid)) {
      const double e = 2 * p.r_mag * p.r_mag - 1;
      w = std::max(w, std::abs(p.probability - e * e));
    }
    return w;
  });
}

void spectral_checks(Battery& b) {
  b.add("spectral", "equal arms transmit every wavelength", 1e-10, [] {
    const auto k = spectral::linear_k_grid(1.0, 200.0, 5001);
    const auto s = spectral::sweep_resonator({1.5, 0.3}, {1.5, 0.3}, k);
    double w = 0;
    for (const auto& r : s.records) w = std::max(w, std::abs(r.T - 1.0));
    return w;
  });
  b.add("spectral", "R + T = 1 at every sweep point", 1e-10, [] {
    const auto k = spectral::linear_k_grid(1.0, 200.0, 5001);
    const auto s = spectral::sweep_resonator({1.5, 0.3}, {1.52, 0.3}, k);
    double w = 0;
    for (const auto& r : s.records) w = std::max(w, std::abs(r.R + r.T - 1.0));
    return w;
  });
  b.add("spectral", "parallel sweep equals the serial reference", 0.0, [] {
    const auto k = spectral::linear_k_grid(1.0, 200.0, 2001);
    const auto a = spectral::sweep_resonator({1.5, 0.3}, {1.6, 0.3}, k);
    const auto c = spectral::sweep_resonator_serial({1.5, 0.3}, {1.6, 0.3}, k);
    double w = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
      w = std::max({w, std::abs(a.records[i].R - c.records[i].R), std::abs(a.records[i].T - c.records[i].T)});
    }
    return w;
  });
}

}  // namespace

std::vector<VerifyResult> run_verification() {
  Battery b;
  catalog_checks(b);
  network_checks(b);
  gallery_checks(b);
  quantum_checks(b);
  spectral_checks(b);
  return b.take();
}

}  // namespace ycoupler
