#pragma once

#include <iosfwd>
#include <string>

#include "ycoupler/core.hpp"

namespace ycoupler {

/// Fixed 12-significant-digit decimal. Magnitudes below 1e-14 print as 0 so
/// rounding residue does not leak into reports.
std::string format_real(double x);
/// "re+imi" / "re-imi" with format_real components.
std::string format_complex(Complex z);
/// One row per line, entries separated by two spaces.
void print_matrix(std::ostream& os, const ScatteringMatrix& s);
void print_report(std::ostream& os, const SymmetryReport& r);

}  // namespace ycoupler
