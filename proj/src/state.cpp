// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#include "grassroots/state.hpp"

#include <sstream>

namespace grassroots {

namespace {

std::string friends_str(const FriendSet& friends) {
    std::ostringstream out;
    out << "friends=";
    bool first = true;
    for (const auto& friend_id : friends) {
        if (!first) {
            out << ',';
        }
        out << friend_id.str();
        first = false;
    }
    return out.str();
}

} // namespace

std::string state_str(const LocalState& state) {
    if (const auto* friends = std::get_if<FriendSet>(&state)) {
        return friends_str(*friends);
    }
    if (const auto* coins = std::get_if<CoinBag>(&state)) {
        return "coins=" + coins->str();
    }
    return "graph=" + std::get<FederationGraph>(state).str();
}

LocalState parse_state(const std::string& text) {
    if (text.rfind("friends=", 0) == 0) {
        FriendSet friends;
        std::string list = text.substr(8);
        if (!list.empty()) {
            std::istringstream in(list);
            std::string token;
            while (std::getline(in, token, ',')) {
                friends.insert(AgentId(token));
            }
        }
        return friends;
    }
    if (text.rfind("coins=", 0) == 0) {
        return CoinBag::parse(text.substr(6));
    }
    if (text.rfind("graph=", 0) == 0) {
        return FederationGraph::parse(text.substr(6));
    }
    throw ParseError("unknown state '" + text + "'");
}

} // namespace grassroots
