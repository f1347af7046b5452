// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#include "grassroots/config.hpp"

#include <sstream>

namespace grassroots {

Configuration::Configuration(std::map<AgentId, LocalState> states)
    : states_(std::move(states)) {
    if (states_.empty()) {
        throw DomainError("configuration over an empty agent set");
    }
}

AgentSet Configuration::domain() const {
    AgentSet agents;
    for (const auto& [agent, state] : states_) {
        agents.insert(agents.end(), agent);
    }
    return agents;
}

bool Configuration::contains(const AgentId& agent) const {
    return states_.count(agent) > 0;
}

const LocalState& Configuration::at(const AgentId& agent) const {
    auto it = states_.find(agent);
    if (it == states_.end()) {
        throw DomainError("agent '" + agent.str() + "' not in configuration");
    }
    return it->second;
}

Configuration Configuration::with(const AgentId& agent, LocalState state) const {
    auto copy = states_;
    auto it = copy.find(agent);
    if (it == copy.end()) {
        throw DomainError("agent '" + agent.str() + "' not in configuration");
    }
    it->second = std::move(state);
    return Configuration(std::move(copy));
}

std::string Configuration::str() const {
    std::ostringstream out;
    for (const auto& [agent, state] : states_) {
        out << agent.str() << ' ' << state_str(state) << '\n';
    }
    return out.str();
}

Configuration project(const Configuration& config, const AgentSet& target) {
    if (target.empty()) {
        throw DomainError("projection onto an empty agent set");
    }
    std::map<AgentId, LocalState> states;
    for (const auto& agent : target) {
        if (!config.contains(agent)) {
            throw DomainError("projection target '" + agent.str() +
                              "' outside the configuration's domain");
        }
        states.emplace(agent, config.at(agent));
    }
    return Configuration(std::move(states));
}

std::string config_file_str(const Configuration& config, const std::string& platform) {
    return "gconfig 1 " + platform + "\n" + config.str();
}

namespace {

const char* state_prefix_for(const std::string& platform) {
    if (platform == "gsn") {
        return "friends=";
    }
    if (platform == "gc") {
        return "coins=";
    }
    if (platform == "gf") {
        return "graph=";
    }
    throw ParseError("unknown platform '" + platform + "'");
}

} // namespace

std::pair<std::string, Configuration> parse_config_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError("empty configuration file");
    }
    std::istringstream header(line);
    std::string magic, version, platform;
    if (!(header >> magic >> version >> platform) || magic != "gconfig" ||
        version != "1") {
        throw ParseError("bad configuration header: '" + line + "'");
    }
    const std::string prefix = state_prefix_for(platform);
    std::map<AgentId, LocalState> states;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string agent, state;
        if (!(fields >> agent)) {
            continue;
        }
        if (!(fields >> state) || state.rfind(prefix, 0) != 0) {
            throw ParseError("bad state line for platform " + platform + ": '" + line +
                             "'");
        }
        if (!states.emplace(AgentId(agent), parse_state(state)).second) {
            throw ParseError("duplicate agent '" + agent + "'");
        }
    }
    if (states.empty()) {
        throw ParseError("configuration file has no agents");
    }
    return {platform, Configuration(std::move(states))};
}

std::string config_digest(const Configuration& config) {
    const std::string text = config.str();
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex;
    for (int shift = 60; shift >= 0; shift -= 4) {
        out << ((hash >> shift) & 0xF);
    }
    return out.str();
}

} // namespace grassroots
