#include "ycoupler/format.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace ycoupler {

namespace {
constexpr double kDisplayZero = 1e-14;
}

std::string format_real(double x) {
  if (std::abs(x) < kDisplayZero) x = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string format_complex(Complex z) {
  const std::string re = format_real(z.real());
  std::string im = format_real(z.imag());
  if (im.front() != '-') im.insert(im.begin(), '+');
  return re + im + "i";
}

void print_matrix(std::ostream& os, const ScatteringMatrix& s) {
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t j = 0; j < s.dim(); ++j) {
      if (j) os << "  ";
      os << format_complex(s(i, j));
    }
    os << '\n';
  }
}

void print_report(std::ostream& os, const SymmetryReport& r) {
  auto line = [&os](const char* name, const Check& c) {
    os << name << '=' << (c.holds ? "true" : "false") << " deviation=" << format_real(c.deviation)
       << '\n';
  };
  line("unitary", r.unitary);
  line("reciprocal", r.reciprocal);
  line("circulant", r.circulant);
  os << "feed_forward=";
  for (std::size_t p = 0; p < r.feed_forward.size(); ++p) {
    if (p) os << ',';
    os << (r.feed_forward[p] ? "true" : "false");
  }
  os << '\n';
}

}  // namespace ycoupler
