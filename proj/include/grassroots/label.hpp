// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "grassroots/agent.hpp"
#include "grassroots/coin_bag.hpp"
#include "grassroots/federation_graph.hpp"

namespace grassroots {

// Labels are the compact, replayable identity of a transaction.  Binary
// labels keep their two agents in agent order.

struct BefriendLabel {
    AgentId p, q; // p < q
    auto operator<=>(const BefriendLabel&) const = default;
};

struct UnfriendLabel {
    AgentId p, q; // p < q
    auto operator<=>(const UnfriendLabel&) const = default;
};

struct MintLabel {
    AgentId minter;
    std::uint64_t amount;
    auto operator<=>(const MintLabel&) const = default;
};

struct SwapLabel {
    AgentId p, q;    // p < q
    CoinBag p_gives; // coins leaving p ("x=")
    CoinBag q_gives; // coins leaving q ("y=")
    auto operator<=>(const SwapLabel&) const = default;
};

struct FederateLabel {
    CommunityId community;
    auto operator<=>(const FederateLabel&) const = default;
};

struct JoinLabel {
    CommunityId parent, child;
    auto operator<=>(const JoinLabel&) const = default;
};

struct LeaveLabel {
    CommunityId parent, child;
    auto operator<=>(const LeaveLabel&) const = default;
};

using TxLabel = std::variant<BefriendLabel, UnfriendLabel, MintLabel,
                             SwapLabel, FederateLabel, JoinLabel, LeaveLabel>;

/// "befriend a b", "mint a 2", "swap a b x=a:1 y=", "federate a/1",
/// "join a/1 b", "leave a/1 b".
std::string label_str(const TxLabel& label);

/// Parses any label kind; binary labels are normalized to agent order.
TxLabel parse_label(const std::string& text);

} // namespace grassroots
