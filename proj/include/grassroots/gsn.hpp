// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <optional>
#include <utility>

#include "grassroots/platform.hpp"

namespace grassroots {

/// Social network: friend-set local states, binary befriend/unfriend.
class SocialNetworkPlatform : public Platform {
  public:
    std::string name() const override { return "gsn"; }
    LocalState initial_state(const AgentId&) const override { return FriendSet{}; }
    Transaction make(const TxLabel& label, const Configuration& config) const override;
    void check_label_guard(const TxLabel& label,
                           const Configuration& config) const override;
    std::vector<TxLabel> enumerate_labels(const Configuration& config,
                                          const Bounds& bounds) const override;
    AgentSet refs(const LocalState& state) const override;

  protected:
    /// Guard seam; the production guard looks only at the two
    /// participants' states.
    virtual void check_befriend_guard(const AgentId& p, const AgentId& q,
                                      const Configuration& config) const;
};

namespace gsn {

/// Mutual friendship creation; degree 2.
Transaction befriend(const AgentId& p, const AgentId& q, const Configuration& config);
/// Mutual friendship removal; degree 2.
Transaction unfriend(const AgentId& p, const AgentId& q, const Configuration& config);

struct SymmetryResult {
    bool ok = true;
    /// First asymmetric ordered pair (p, q) with q in p's friends but not
    /// conversely, in agent order.
    std::optional<std::pair<AgentId, AgentId>> violation;
};

/// Friendship symmetry: p in c_q iff q in c_p, for all pairs.
SymmetryResult check_symmetry(const Configuration& config);

/// Enabled befriend/unfriend transactions at `config`, canonical order.
std::vector<Transaction> enumerate_enabled(const Configuration& config);

} // namespace gsn

} // namespace grassroots
