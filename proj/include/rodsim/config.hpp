#pragma once

#include <map>
#include <string>

#include "rodsim/engine3d.hpp"

namespace rodsim {

enum class Engine { ThreeD, TwoD };

/// Parsed run configuration.
struct RunConfig {
  SimConfig sim;
  Engine engine = Engine::ThreeD;
  int level = -1;  // >= 0 when dt and N came from run.level
  std::map<std::string, std::string> entries;  // echo of the document
};

/// Parses a `key = value` document; `#` starts a comment. Keys are dotted
/// (`run.dt`, `scenario.alpha.poly`, ...). Errors name the offending key.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Keys understood by parse_config.
const std::vector<std::string>& known_config_keys();

}  // namespace rodsim
