// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#include "grassroots/agent.hpp"

#include <algorithm>
#include <sstream>

namespace grassroots {

bool AgentId::valid_token(const std::string& token) {
    if (token.empty()) {
        return false;
    }
    return std::all_of(token.begin(), token.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_' || c == '-';
    });
}

AgentId::AgentId(std::string token) : token_(std::move(token)) {
    if (!valid_token(token_)) {
        throw ParseError("invalid agent token: '" + token_ + "'");
    }
}

AgentSet default_agents(int n) {
    if (n < 1 || n > 26) {
        throw DomainError("agent count must be in [1, 26], got " + std::to_string(n));
    }
    AgentSet agents;
    for (int i = 0; i < n; ++i) {
        agents.insert(AgentId(std::string(1, static_cast<char>('a' + i))));
    }
    return agents;
}

bool is_subset(const AgentSet& sub, const AgentSet& super) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

std::string agents_str(const AgentSet& agents) {
    std::ostringstream out;
    bool first = true;
    for (const auto& agent : agents) {
        if (!first) {
            out << ',';
        }
        out << agent.str();
        first = false;
    }
    return out.str();
}

AgentSet parse_agents(const std::string& text) {
    AgentSet agents;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty()) {
            throw ParseError("empty agent token in '" + text + "'");
        }
        agents.insert(AgentId(token));
    }
    if (agents.empty()) {
        throw ParseError("empty agent set: '" + text + "'");
    }
    return agents;
}

} // namespace grassroots
