#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "ycoupler/core.hpp"

namespace ycoupler {

/// Builds a device matrix from a descriptor such as {"type":"y_pm","r":0.3}.
/// Parameters may sit inline or under a "params" object.
///
///   symmetric_y                   -
///   symmetric_y_phase             phi
///   grover                        d
///   circulant                     d, x
///   circulator                    n, j
///   beam_splitter                 r_mag, arg_r1, arg_r2, arg_t1
///   mirror                        phase
///   asymmetric_y                  t, delta
///   unbiased_y                    a, x, class (+1 / -1)
///   y_pm                          r
///   matrix                        entries: rows of [re, im] pairs
///
/// Missing parameters take the defaults of the catalog parameter structs.
/// Unknown types and unknown parameter keys throw InvalidArgument.
ScatteringMatrix device_from_descriptor(const nlohmann::json& descriptor);

/// Every type tag accepted by device_from_descriptor.
const std::vector<std::string>& device_types();

}  // namespace ycoupler
