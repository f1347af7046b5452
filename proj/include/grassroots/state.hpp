// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <set>
#include <string>
#include <variant>

#include "grassroots/agent.hpp"
#include "grassroots/coin_bag.hpp"
#include "grassroots/federation_graph.hpp"

namespace grassroots {

/// Social-network local state: the set of mutual friends.
using FriendSet = std::set<AgentId>;

/// Local state of one agent.  The alternative in use is fixed by the
/// platform; configurations never mix alternatives.
using LocalState = std::variant<FriendSet, CoinBag, FederationGraph>;

/// Canonical one-token form: "friends=a,b", "coins=a:2", "graph=nodes:a;edges:".
std::string state_str(const LocalState& state);
LocalState parse_state(const std::string& text);

} // namespace grassroots
