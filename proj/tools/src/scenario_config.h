// Copyright 2026 The qcfnest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCFNEST_TOOLS_SCENARIO_CONFIG_H
#define QCFNEST_TOOLS_SCENARIO_CONFIG_H

#include <cstdint>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcfnest/engine.h"

namespace qcfnest::cli {

class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct ElementSpec {
    /// One of ideal, bbbg09, chailloux, custom.
    std::string kind;
    /// Raw values as written in the file; interpreted by to_profile().
    std::map<std::string, std::string> params;

    bool operator==(const ElementSpec &) const = default;
};

/// Scenario file contents. See docs/scenario-format.md for the grammar.
struct ScenarioConfig {
    std::vector<ElementSpec> elements;
    double p_e = 0.0;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;

    bool operator==(const ScenarioConfig &) const = default;
};

/// Throws ConfigError on a syntax error, an unknown section or key, a
/// malformed value, or a file that does not describe a valid framework.
ScenarioConfig parse_config(std::istream &in);
ScenarioConfig parse_config_string(const std::string &text);
ScenarioConfig load_config(const std::string &path);

/// Writes a file that parse_config reads back into an equal ScenarioConfig.
std::string serialize_config(const ScenarioConfig &config);

ElementProfile to_profile(const ElementSpec &spec);
FrameworkSpec to_framework(const ScenarioConfig &config);

}  // namespace qcfnest::cli

#endif
