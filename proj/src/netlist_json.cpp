#include "ycoupler/netlist_json.hpp"

#include <fstream>

#include "ycoupler/descriptor.hpp"
#include "ycoupler/error.hpp"

namespace ycoupler::network {

using nlohmann::json;

Netlist parse_netlist(const json& doc) {
  if (!doc.is_object()) throw InvalidArgument("netlist must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "devices" && key != "links" && key != "externals") {
      throw InvalidArgument("netlist: unknown top-level key '" + key + "'");
    }
  }
  if (!doc.contains("devices") || !doc["devices"].is_array()) throw InvalidArgument("netlist: \"devices\" array required");
  if (!doc.contains("externals") || !doc["externals"].is_array()) {
    throw InvalidArgument("netlist: \"externals\" array required");
  }

  Netlist n;
  for (const json& d : doc["devices"]) {
    if (!d.is_object() || !d.contains("id") || !d["id"].is_string()) {
      throw InvalidArgument("netlist: every device needs a string \"id\"");
    }
    const std::string id = d["id"].get<std::string>();
    try {
      n.devices.push_back(Device{id, device_from_descriptor(d)});
    } catch (const Error& e) {
      throw InvalidArgument("device '" + id + "': " + e.what());
    }
  }
  if (doc.contains("links")) {
    if (!doc["links"].is_array()) throw InvalidArgument("netlist: \"links\" must be an array");
    for (const json& l : doc["links"]) {
      if (!l.is_object() || !l.contains("a") || !l.contains("b") || !l["a"].is_string() || !l["b"].is_string()) {
        throw InvalidArgument("netlist: every link needs string endpoints \"a\" and \"b\"");
      }
      Link link{parse_port_ref(l["a"].get<std::string>()), parse_port_ref(l["b"].get<std::string>()), 0.0, {}};
      if (l.contains("phase")) {
        if (!l["phase"].is_number()) throw InvalidArgument("netlist: link phase must be a number");
        link.phase = l["phase"].get<double>();
      }
      if (l.contains("label")) {
        if (!l["label"].is_string()) throw InvalidArgument("netlist: link label must be a string");
        link.label = l["label"].get<std::string>();
      }
      for (const auto& [key, _] : l.items()) {
        if (key != "a" && key != "b" && key != "phase" && key != "label") {
          throw InvalidArgument("netlist: unknown link key '" + key + "'");
        }
      }
      n.links.push_back(std::move(link));
    }
  }
  for (const json& e : doc["externals"]) {
    if (!e.is_string()) throw InvalidArgument("netlist: externals are \"id.port\" strings");
    n.externals.push_back(parse_port_ref(e.get<std::string>()));
  }
  if (auto problems = validate(n); !problems.empty()) {
    std::string first = "invalid netlist: " + problems.front();
    throw NetlistError(first, std::move(problems));
  }
  return n;
}

Netlist load_netlist(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open netlist '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidArgument("netlist '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return parse_netlist(doc);
}

}  // namespace ycoupler::network
