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

#include "scenario_config.h"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace qcfnest::cli {

namespace {

const std::set<std::string> kTopLevelKeys = {"p_e", "trials", "seed"};

const std::map<std::string, std::set<std::string>> kElementKeys = {
    {"ideal", {"kind"}},
    {"chailloux", {"kind"}},
    {"bbbg09", {"kind", "alpha_sq", "coefficient"}},
    {"custom", {"kind", "name", "p", "q", "p_star"}},
};

std::string trim(const std::string &s) {
    auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return "";
    }
    auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::string at_line(int line) {
    return "line " + std::to_string(line) + ": ";
}

double parse_double(const std::string &text, const std::string &key) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ConfigError("value of '" + key + "' is not a number: '" + text + "'");
    }
    return value;
}

std::uint64_t parse_uint(const std::string &text, const std::string &key) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ConfigError("value of '" + key + "' is not a non-negative integer: '" + text + "'");
    }
    return value;
}

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

void check_element_keys(const ElementSpec &spec, int line) {
    auto allowed = kElementKeys.find(spec.kind);
    if (allowed == kElementKeys.end()) {
        throw ConfigError(
            at_line(line) + "unknown element kind '" + spec.kind + "' (expected ideal, bbbg09, chailloux or custom)");
    }
    for (const auto &[key, value] : spec.params) {
        if (!allowed->second.contains(key)) {
            throw ConfigError(at_line(line) + "unknown key '" + key + "' for element kind '" + spec.kind + "'");
        }
    }
}

}  // namespace

ScenarioConfig parse_config(std::istream &in) {
    ScenarioConfig config;
    // Line numbers where each [element] section starts, for diagnostics.
    std::vector<int> element_lines;
    bool in_element = false;
    std::set<std::string> seen_top;
    std::set<std::string> seen_element;

    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        auto hash = raw.find('#');
        std::string text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (text.empty()) {
            continue;
        }
        if (text.front() == '[') {
            if (text.back() != ']') {
                throw ConfigError(at_line(line) + "unterminated section header");
            }
            std::string section = trim(text.substr(1, text.size() - 2));
            if (section != "element") {
                throw ConfigError(at_line(line) + "unknown section '" + section + "'");
            }
            config.elements.emplace_back();
            element_lines.push_back(line);
            seen_element.clear();
            in_element = true;
            continue;
        }
        auto eq = text.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(at_line(line) + "expected 'key = value'");
        }
        std::string key = trim(text.substr(0, eq));
        std::string value = trim(text.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ConfigError(at_line(line) + "expected 'key = value'");
        }

        if (!in_element) {
            if (!kTopLevelKeys.contains(key)) {
                throw ConfigError(at_line(line) + "unknown key '" + key + "'");
            }
            if (!seen_top.insert(key).second) {
                throw ConfigError(at_line(line) + "duplicate key '" + key + "'");
            }
            try {
                if (key == "p_e") {
                    config.p_e = parse_double(value, key);
                } else if (key == "trials") {
                    config.trials = parse_uint(value, key);
                } else {
                    config.seed = parse_uint(value, key);
                }
            } catch (const ConfigError &e) {
                throw ConfigError(at_line(line) + e.what());
            }
            continue;
        }

        if (!seen_element.insert(key).second) {
            throw ConfigError(at_line(line) + "duplicate key '" + key + "'");
        }
        auto &element = config.elements.back();
        if (key == "kind") {
            element.kind = value;
        } else {
            element.params[key] = value;
        }
    }

    if (config.elements.empty()) {
        throw ConfigError("scenario has no [element] sections");
    }
    for (std::size_t i = 0; i < config.elements.size(); ++i) {
        if (config.elements[i].kind.empty()) {
            throw ConfigError(at_line(element_lines[i]) + "element is missing 'kind'");
        }
        check_element_keys(config.elements[i], element_lines[i]);
    }
    if (config.trials == 0) {
        throw ConfigError("trials must be positive");
    }
    try {
        to_framework(config);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    return config;
}

ScenarioConfig parse_config_string(const std::string &text) {
    std::istringstream in(text);
    return parse_config(in);
}

ScenarioConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read scenario file '" + path + "'");
    }
    try {
        return parse_config(in);
    } catch (const ConfigError &e) {
        throw ConfigError(path + ": " + e.what());
    }
}

std::string serialize_config(const ScenarioConfig &config) {
    std::ostringstream out;
    out << "p_e = " << format_double(config.p_e) << "\n";
    out << "trials = " << config.trials << "\n";
    out << "seed = " << config.seed << "\n";
    for (const auto &element : config.elements) {
        out << "\n[element]\n";
        out << "kind = " << element.kind << "\n";
        for (const auto &[key, value] : element.params) {
            out << key << " = " << value << "\n";
        }
    }
    return out.str();
}

ElementProfile to_profile(const ElementSpec &spec) {
    const auto &params = spec.params;
    auto get = [&](const std::string &key) -> const std::string * {
        auto it = params.find(key);
        return it == params.end() ? nullptr : &it->second;
    };

    if (spec.kind == "ideal") {
        return profile_ideal();
    }
    if (spec.kind == "chailloux") {
        return profile_chailloux();
    }
    if (spec.kind == "bbbg09") {
        const auto *alpha_sq = get("alpha_sq");
        if (alpha_sq == nullptr) {
            throw ConfigError("bbbg09 element is missing 'alpha_sq'");
        }
        auto coefficient = Bbbg09Coefficient::half;
        if (const auto *c = get("coefficient")) {
            coefficient = parse_coefficient(*c);
        }
        return profile_bbbg09(parse_double(*alpha_sq, "alpha_sq"), coefficient);
    }
    if (spec.kind == "custom") {
        const auto *p = get("p");
        if (p == nullptr) {
            throw ConfigError("custom element is missing 'p'");
        }
        ElementProfile profile;
        profile.name = get("name") ? *get("name") : "custom";
        profile.p = parse_double(*p, "p");
        profile.q = get("q") ? parse_double(*get("q"), "q") : profile.p;
        profile.p_star = get("p_star") ? parse_double(*get("p_star"), "p_star") : 0.0;
        validate(profile);
        return profile;
    }
    throw ConfigError("unknown element kind '" + spec.kind + "'");
}

FrameworkSpec to_framework(const ScenarioConfig &config) {
    std::vector<ElementProfile> profiles;
    profiles.reserve(config.elements.size());
    for (const auto &element : config.elements) {
        profiles.push_back(to_profile(element));
    }
    return FrameworkSpec(std::move(profiles), NoiseSetting{config.p_e});
}

}  // namespace qcfnest::cli
