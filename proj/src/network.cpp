#include "ycoupler/network.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include "ycoupler/error.hpp"

namespace ycoupler::network {

namespace {

using Index = Eigen::Index;

struct PortTable {
  std::map<std::string, std::size_t> device_index;
  std::vector<std::size_t> offset;  // global index of port 0 for each device
  std::size_t total = 0;

  explicit PortTable(const Netlist& n) {
    for (std::size_t d = 0; d < n.devices.size(); ++d) {
      device_index.emplace(n.devices[d].id, d);
      offset.push_back(total);
      total += n.devices[d].matrix.dim();
    }
  }

  std::size_t global(const PortRef& p) const { return offset[device_index.at(p.device)] + p.port; }
};

std::vector<Complex> to_std(const CVector& v) { return {v.data(), v.data() + v.size()}; }

/// Eigenvector of g whose eigenvalue lies closest to 1, plus a readable summary.
std::pair<std::vector<Complex>, std::string> resonant_supermode(
    const CMatrix& g, const std::vector<std::string>& labels) {
  Eigen::ComplexEigenSolver<CMatrix> es(g);
  const auto& vals = es.eigenvalues();
  Index best = 0;
  for (Index k = 1; k < vals.size(); ++k) {
    if (std::abs(vals(k) - 1.0) < std::abs(vals(best) - 1.0)) best = k;
  }
  const CVector v = es.eigenvectors().col(best);
  std::ostringstream os;
  os << "resonant internal supermode (round-trip eigenvalue " << vals(best).real()
     << (vals(best).imag() < 0 ? "" : "+") << vals(best).imag() << "i) on";
  for (Index k = 0; k < v.size(); ++k) {
    if (std::abs(v(k)) > 1e-8) os << ' ' << labels[static_cast<std::size_t>(k)];
  }
  return {to_std(v), os.str()};
}

double spectral_radius(const CMatrix& g) {
  if (g.size() == 0) return 0.0;
  Eigen::ComplexEigenSolver<CMatrix> es(g, false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

std::string to_string(const PortRef& p) { return p.device + "." + std::to_string(p.port + 1); }

PortRef parse_port_ref(std::string_view text) {
  const auto dot = text.rfind('.');
  if (dot == std::string_view::npos || dot == 0 || dot + 1 == text.size()) {
    throw InvalidArgument("port reference must look like id.port, got '" + std::string(text) + "'");
  }
  std::size_t k = 0;
  const std::string_view digits = text.substr(dot + 1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || k == 0) {
    throw InvalidArgument("port number in '" + std::string(text) + "' must be a positive integer");
  }
  return PortRef{std::string(text.substr(0, dot)), k - 1};
}

std::vector<std::string> validate(const Netlist& n) {
  std::vector<std::string> out;
  std::map<std::string, std::size_t> dims;
  for (const Device& d : n.devices) {
    if (d.id.empty()) out.push_back("device with empty id");
    if (!dims.emplace(d.id, d.matrix.dim()).second) out.push_back("duplicate device id '" + d.id + "'");
  }
  if (n.devices.empty()) out.push_back("netlist has no devices");
  if (n.externals.empty()) out.push_back("netlist has no external ports");

  std::map<std::pair<std::string, std::size_t>, int> uses;
  auto check_ref = [&](const PortRef& p, const std::string& where) {
    const auto it = dims.find(p.device);
    if (it == dims.end()) {
      out.push_back(where + " refers to unknown device '" + p.device + "'");
      return false;
    }
    if (p.port >= it->second) {
      out.push_back(where + " refers to port " + std::to_string(p.port + 1) + " but '" + p.device +
                    "' has " + std::to_string(it->second) + " ports");
      return false;
    }
    return true;
  };

  for (std::size_t k = 0; k < n.links.size(); ++k) {
    const Link& l = n.links[k];
    const std::string where = "link " + std::to_string(k + 1) + " (" + to_string(l.a) + " - " + to_string(l.b) + ")";
    if (!std::isfinite(l.phase)) out.push_back(where + " has a non-finite phase");
    if (l.a == l.b) {
      out.push_back(where + " connects a port to itself");
      continue;
    }
    if (check_ref(l.a, where)) ++uses[{l.a.device, l.a.port}];
    if (check_ref(l.b, where)) ++uses[{l.b.device, l.b.port}];
  }
  for (std::size_t k = 0; k < n.externals.size(); ++k) {
    const PortRef& p = n.externals[k];
    if (check_ref(p, "external " + std::to_string(k + 1) + " (" + to_string(p) + ")")) ++uses[{p.device, p.port}];
  }
  for (const Device& d : n.devices) {
    for (std::size_t p = 0; p < d.matrix.dim(); ++p) {
      const auto it = uses.find({d.id, p});
      const int count = it == uses.end() ? 0 : it->second;
      const std::string name = to_string(PortRef{d.id, p});
      if (count == 0) out.push_back("port " + name + " is neither linked nor external");
      if (count > 1) out.push_back("port " + name + " is used " + std::to_string(count) + " times");
    }
  }
  return out;
}

Netlist with_link_phase(Netlist n, std::string_view label, double phase) {
  bool found = false;
  for (Link& l : n.links) {
    if (l.label == label) {
      l.phase = phase;
      found = true;
    }
  }
  if (!found) throw InvalidArgument("no link labeled '" + std::string(label) + "'");
  return n;
}

ModeSystem assemble(const Netlist& n, bool fold_terminations) {
  if (auto problems = validate(n); !problems.empty()) {
    std::string first = "invalid netlist: " + problems.front();
    throw NetlistError(first, std::move(problems));
  }
  const PortTable table(n);
  const auto dim_of = [&](const PortRef& p) { return n.devices[table.device_index.at(p.device)].matrix.dim(); };

  // Global block-diagonal S over all device ports.
  const auto total = static_cast<Index>(table.total);
  CMatrix s = CMatrix::Zero(total, total);
  for (std::size_t d = 0; d < n.devices.size(); ++d) {
    const auto off = static_cast<Index>(table.offset[d]);
    const auto k = static_cast<Index>(n.devices[d].matrix.dim());
    s.block(off, off, k, k) = n.devices[d].matrix.matrix();
  }

  // Ports removed by folding, and the diagonal return factor they leave behind.
  std::set<std::size_t> folded;
  std::map<std::size_t, Complex> self_return;
  std::vector<const Link*> kept;
  for (const Link& l : n.links) {
    if (fold_terminations) {
      const bool a_term = dim_of(l.a) == 1;
      const bool b_term = dim_of(l.b) == 1;
      if (a_term != b_term) {
        const PortRef& term = a_term ? l.a : l.b;
        const PortRef& open = a_term ? l.b : l.a;
        const std::size_t gt = table.global(term);
        folded.insert(gt);
        self_return[table.global(open)] =
            std::polar(1.0, 2.0 * l.phase) * s(static_cast<Index>(gt), static_cast<Index>(gt));
        continue;
      }
    }
    kept.push_back(&l);
  }

  std::vector<std::size_t> ext;
  for (const PortRef& p : n.externals) ext.push_back(table.global(p));
  std::vector<std::size_t> internal;
  std::map<std::size_t, Index> internal_pos;
  {
    std::set<std::size_t> is_ext(ext.begin(), ext.end());
    for (std::size_t g = 0; g < table.total; ++g) {
      if (is_ext.count(g) || folded.count(g)) continue;
      internal_pos[g] = static_cast<Index>(internal.size());
      internal.push_back(g);
    }
  }

  ModeSystem sys;
  auto take = [&s](const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    CMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j)
        m(static_cast<Index>(i), static_cast<Index>(j)) = s(static_cast<Index>(rows[i]), static_cast<Index>(cols[j]));
    return m;
  };
  sys.s_ee = take(ext, ext);
  sys.s_ei = take(ext, internal);
  sys.s_ie = take(internal, ext);
  sys.s_ii = take(internal, internal);
  const auto ni = static_cast<Index>(internal.size());
  sys.c = CMatrix::Zero(ni, ni);
  for (const Link* l : kept) {
    const Index a = internal_pos.at(table.global(l->a));
    const Index b = internal_pos.at(table.global(l->b));
    const Complex f = std::polar(1.0, l->phase);
    sys.c(a, b) = f;
    sys.c(b, a) = f;
  }
  for (const auto& [g, f] : self_return) sys.c(internal_pos.at(g), internal_pos.at(g)) = f;

  std::vector<std::string> names(table.total);
  for (const Device& d : n.devices) {
    for (std::size_t p = 0; p < d.matrix.dim(); ++p) names[table.global(PortRef{d.id, p})] = to_string(PortRef{d.id, p});
  }
  for (const std::size_t g : internal) sys.internal_labels.push_back(names[g]);
  return sys;
}

double roundtrip_spectral_radius(const Netlist& n) {
  const ModeSystem sys = assemble(n);
  return spectral_radius(sys.s_ii * sys.c);
}

SolveReport solve_steady_state(const Netlist& n, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("solve_steady_state: tol must be positive");
  const ModeSystem sys = assemble(n);
  const Index ni = sys.s_ii.rows();
  if (ni == 0) return SolveReport{ScatteringMatrix(sys.s_ee), 1.0, 0.0, false};

  const CMatrix g = sys.s_ii * sys.c;
  const CMatrix m = CMatrix::Identity(ni, ni) - g;
  const double radius = spectral_radius(g);

  Eigen::FullPivLU<CMatrix> lu(m);
  const double rcond = lu.rcond();
  const double cond = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();

  CMatrix x;
  bool projected = false;
  if (cond <= kConditionLimit && lu.isInvertible()) {
    x = lu.solve(sys.s_ie);
  } else {
    Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    svd.setThreshold(tol);
    x = svd.solve(sys.s_ie);
    const double scale = std::max(1.0, sys.s_ie.cwiseAbs().maxCoeff());
    const double residual = ni ? (m * x - sys.s_ie).cwiseAbs().maxCoeff() : 0.0;
    if (residual > tol * scale) {
      auto [mode, text] = resonant_supermode(g, sys.internal_labels);
      const auto& sv = svd.singularValues();
      const double smin = sv(sv.size() - 1);
      const double smax = sv(0);
      if (smin <= tol * smax) {
        throw DarkStateSingular("feedback is singular and the drive excites the " + text, std::move(mode));
      }
      std::ostringstream msg;
      msg << "feedback is ill-conditioned (condition estimate " << cond << ") near the " << text;
      throw IllConditioned(msg.str(), cond, std::move(mode));
    }
    projected = true;
  }
  CMatrix eff = sys.s_ee + sys.s_ei * sys.c * x;
  return SolveReport{ScatteringMatrix(std::move(eff)), cond, radius, projected};
}

RoundTripResult iterate_roundtrips(const Netlist& n, std::size_t input, std::size_t max_bounces, double tol) {
  if (max_bounces < 1) throw InvalidArgument("iterate_roundtrips: need at least one bounce");
  if (!(tol > 0.0)) throw InvalidArgument("iterate_roundtrips: tol must be positive");
  const ModeSystem sys = assemble(n, true);
  const Index ne = sys.s_ee.rows();
  if (input >= static_cast<std::size_t>(ne)) {
    throw InvalidArgument("iterate_roundtrips: input " + std::to_string(input + 1) + " exceeds the " +
                          std::to_string(ne) + " external ports");
  }
  const auto in = static_cast<Index>(input);

  RoundTripResult res;
  res.amplitudes = sys.s_ee.col(in);
  CVector inside = sys.s_ie.col(in);  // outgoing amplitudes on internal ports
  res.residual_norm = inside.norm();
  if (res.residual_norm <= tol) {
    res.converged = true;
    return res;
  }
  const CMatrix leak = sys.s_ei * sys.c;
  const CMatrix feedback = sys.s_ii * sys.c;
  while (res.bounces < max_bounces) {
    res.amplitudes += leak * inside;
    inside = feedback * inside;
    ++res.bounces;
    res.residual_norm = inside.norm();
    if (res.residual_norm <= tol) {
      res.converged = true;
      return res;
    }
  }
  if (spectral_radius(feedback) >= 1.0 - 1e-9) {
    throw NotConverged("round-trip iteration did not empty the internal modes after " +
                           std::to_string(max_bounces) + " bounces (feedback has a unit-modulus eigenvalue)",
                       max_bounces);
  }
  return res;
}

}  // namespace ycoupler::network
