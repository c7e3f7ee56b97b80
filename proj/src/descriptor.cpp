#include "ycoupler/descriptor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "ycoupler/catalog.hpp"
#include "ycoupler/error.hpp"

namespace ycoupler {

namespace {

using nlohmann::json;

class Params {
 public:
  Params(const json& d, std::string type) : type_(std::move(type)) {
    if (!d.is_object()) throw InvalidArgument("device descriptor must be a JSON object");
    for (const auto& [key, value] : d.items()) {
      if (key == "type" || key == "id") continue;
      if (key == "params") {
        if (!value.is_object()) throw InvalidArgument("\"params\" must be an object");
        for (const auto& [k, v] : value.items()) values_[k] = v;
      } else {
        values_[key] = value;
      }
    }
  }

  double real(const std::string& key, double fallback) {
    used_.insert(key);
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    if (!it->second.is_number()) throw InvalidArgument(type_ + ": parameter '" + key + "' must be a number");
    return it->second.get<double>();
  }

  int integer(const std::string& key, int fallback) {
    const double v = real(key, fallback);
    if (std::floor(v) != v) throw InvalidArgument(type_ + ": parameter '" + key + "' must be an integer");
    return static_cast<int>(v);
  }

  const json* raw(const std::string& key) {
    used_.insert(key);
    const auto it = values_.find(key);
    return it == values_.end() ? nullptr : &it->second;
  }

  void reject_unused() const {
    for (const auto& [key, _] : values_) {
      if (!used_.count(key)) throw InvalidArgument(type_ + ": unknown parameter '" + key + "'");
    }
  }

 private:
  std::string type_;
  std::map<std::string, json> values_;
  std::set<std::string> used_;
};

ScatteringMatrix explicit_matrix(const json* entries) {
  if (entries == nullptr || !entries->is_array() || entries->empty()) {
    throw InvalidArgument("matrix: 'entries' must be a non-empty array of rows");
  }
  const auto n = static_cast<Eigen::Index>(entries->size());
  CMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = (*entries)[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw InvalidArgument("matrix: every row must hold N entries");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      const json& z = row[static_cast<std::size_t>(j)];
      if (z.is_number()) {
        m(i, j) = z.get<double>();
      } else if (z.is_array() && z.size() == 2 && z[0].is_number() && z[1].is_number()) {
        m(i, j) = Complex(z[0].get<double>(), z[1].get<double>());
      } else {
        throw InvalidArgument("matrix: entries are numbers or [re, im] pairs");
      }
    }
  }
  return ScatteringMatrix(std::move(m));
}

}  // namespace

const std::vector<std::string>& device_types() {
  static const std::vector<std::string> types{
      "symmetric_y", "symmetric_y_phase", "grover",       "circulant",  "circulator", "beam_splitter",
      "mirror",      "asymmetric_y",      "unbiased_y",   "y_pm",       "matrix"};
  return types;
}

ScatteringMatrix device_from_descriptor(const json& d) {
  if (!d.is_object() || !d.contains("type") || !d["type"].is_string()) {
    throw InvalidArgument("device descriptor needs a string \"type\"");
  }
  const std::string type = d["type"].get<std::string>();
  Params p(d, type);
  auto finish = [&p](ScatteringMatrix s) {
    p.reject_unused();
    return s;
  };

  if (type == "symmetric_y") return finish(catalog::symmetric_y());
  if (type == "symmetric_y_phase") return finish(catalog::symmetric_y_phase(p.real("phi", 0.0)));
  if (type == "grover") return finish(catalog::grover(p.integer("d", 4)));
  if (type == "circulant") {
    catalog::CirculantParams c;
    c.d = p.integer("d", c.d);
    c.x = p.real("x", c.x);
    return finish(catalog::circulant_family(c));
  }
  if (type == "circulator") return finish(catalog::circulator(p.integer("n", 4), p.integer("j", 1)));
  if (type == "beam_splitter") {
    catalog::BeamSplitterParams b;
    b.r_mag = p.real("r_mag", b.r_mag);
    b.arg_r1 = p.real("arg_r1", b.arg_r1);
    b.arg_r2 = p.real("arg_r2", b.arg_r2);
    b.arg_t1 = p.real("arg_t1", b.arg_t1);
    return finish(catalog::beam_splitter(b));
  }
  if (type == "mirror") return finish(catalog::mirror(p.real("phase", 0.0)));
  if (type == "asymmetric_y") {
    catalog::AsymmetricParams a;
    a.t = p.real("t", a.t);
    a.delta = p.real("delta", a.delta);
    return finish(catalog::asymmetric_y(a));
  }
  if (type == "unbiased_y") {
    catalog::UnbiasedParams u;
    u.a_mag = p.real("a", u.a_mag);
    u.x = p.real("x", u.x);
    u.class_sign = p.integer("class", u.class_sign);
    return finish(catalog::unbiased_y(u));
  }
  if (type == "y_pm") return finish(catalog::y_pm(p.real("r", 0.0)));
  if (type == "matrix") return finish(explicit_matrix(p.raw("entries")));
  throw InvalidArgument("unknown device type '" + type + "'");
}

}  // namespace ycoupler
