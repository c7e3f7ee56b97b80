#pragma once

#include <filesystem>

#include "json.hpp"
#include "ycoupler/network.hpp"

namespace ycoupler::network {

/// Netlist document:
///
///   {
///     "devices":   [{"id": "Y1", "type": "symmetric_y"}, {"id": "M", "type": "mirror", "phase": 0}],
///     "links":     [{"a": "Y1.1", "b": "M.1", "phase": 0.25, "label": "arm"}],
///     "externals": ["Y1.2", "Y1.3"]
///   }
///
/// Port numbers are 1-based. "links" may be omitted; "label" is optional.
/// Structural problems are reported through NetlistError with every diagnostic.
Netlist parse_netlist(const nlohmann::json& doc);
Netlist load_netlist(const std::filesystem::path& path);

}  // namespace ycoupler::network
