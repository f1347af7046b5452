// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "grassroots/state.hpp"

namespace grassroots {

/// Assignment of one local state to each agent of a finite, nonempty
/// agent set.  Immutable after construction; updates go through `with`.
class Configuration {
  public:
    Configuration() = default;
    explicit Configuration(std::map<AgentId, LocalState> states);

    AgentSet domain() const;
    bool contains(const AgentId& agent) const;
    const LocalState& at(const AgentId& agent) const;
    std::size_t size() const { return states_.size(); }

    /// Copy with one agent's state replaced (the agent must be present).
    Configuration with(const AgentId& agent, LocalState state) const;

    auto begin() const { return states_.begin(); }
    auto end() const { return states_.end(); }

    bool operator==(const Configuration&) const = default;
    auto operator<=>(const Configuration&) const = default;

    /// Canonical multi-line form: one "agent state" line per agent, in
    /// agent order.
    std::string str() const;

  private:
    std::map<AgentId, LocalState> states_;
};

/// Restriction of `config` to the agents in `target`.  States are kept
/// verbatim and may still mention agents outside `target`.
Configuration project(const Configuration& config, const AgentSet& target);

/// FNV-1a over the canonical form, as 16 hex digits.
std::string config_digest(const Configuration& config);

/// Configuration file: "gconfig 1 <platform>" header, then one
/// "agent state" line per agent.
std::string config_file_str(const Configuration& config, const std::string& platform);
std::pair<std::string, Configuration> parse_config_file(const std::string& text);

} // namespace grassroots
