// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <string>
#include <vector>

#include "grassroots/gsn.hpp"
#include "grassroots/trace.hpp"

namespace grassroots::testing {

/// Negative control for the oblivious check: a social network whose
/// befriend guard also inspects non-participants, so a transaction
/// enabled within a subgroup can be rejected in a larger configuration.
class OutsiderGatedGsn : public SocialNetworkPlatform {
  public:
    std::string name() const override { return "gsn-gated"; }

  protected:
    void check_befriend_guard(const AgentId& p, const AgentId& q,
                              const Configuration& config) const override {
        SocialNetworkPlatform::check_befriend_guard(p, q, config);
        for (const auto& [agent, state] : config) {
            if (agent != p && agent != q && !std::get<FriendSet>(state).empty()) {
                throw GuardError("a non-participant already has friends");
            }
        }
    }
};

inline AgentId agent(const std::string& token) {
    return AgentId(token);
}

/// Applies the labels in order from the initial configuration, recording
/// resolved participant sets, so the result replays.
inline Trace make_trace(const std::string& platform_name, const AgentSet& agents,
                        const std::vector<std::string>& labels) {
    const Platform& platform = platform_for(platform_name);
    Trace trace;
    trace.platform = platform_name;
    trace.agents = agents;
    Configuration current = platform.initial_config(agents);
    for (const auto& text : labels) {
        Transaction tx = platform.make(parse_label(text), current);
        current = lift(tx, current).after;
        trace.steps.push_back(TraceStep{tx.label(), tx.participants(), std::nullopt});
    }
    return trace;
}

inline Configuration run_labels(const std::string& platform_name, const AgentSet& agents,
                                const std::vector<std::string>& labels) {
    const Platform& platform = platform_for(platform_name);
    Configuration current = platform.initial_config(agents);
    for (const auto& text : labels) {
        current = apply_label(platform, current, parse_label(text));
    }
    return current;
}

} // namespace grassroots::testing
