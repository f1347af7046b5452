// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grassroots/trace.hpp"

namespace grassroots {

/// Desk-scale guardrails for exhaustive exploration.  Exceeding them is a
/// loud LimitError, never a silent truncation.
inline constexpr std::size_t kMaxAgentsExhaustive = 5;
inline constexpr int kMaxDepthExhaustive = 6;

/// A reachable configuration together with one generating label path.
struct ReachedConfig {
    Configuration config;
    std::vector<TxLabel> path;
};

/// Breadth-first set of configurations reachable from the initial one in
/// at most `depth` steps under the platform's bounded enumeration,
/// deduplicated structurally.  Element 0 is the initial configuration.
std::vector<ReachedConfig> reachable(const Platform& platform, const AgentSet& agents,
                                     int depth, const Bounds& bounds);

/// True iff every agent of `group` only references members of `group`
/// in its state.  `group` must be within the configuration's domain.
bool in_cp(const Platform& platform, const Configuration& config,
           const AgentSet& group);

/// Participants plus every agent referenced by the before/after states.
AgentSet transaction_scope(const Platform& platform, const Transaction& tx);

/// Transaction family membership for the group: scope within `group`.
bool in_rp(const Platform& platform, const Transaction& tx, const AgentSet& group);

struct Counterexample {
    std::optional<std::string> config_text; // canonical configuration
    std::optional<std::string> label_text;
    std::optional<std::string> trace_text;
    std::string detail;
};

struct CheckReport {
    std::string check;
    std::string platform;
    AgentSet group;       // P
    AgentSet supergroup;  // P'
    bool pass = false;
    std::uint64_t instances = 0;
    int depth = 0;
    double elapsed_ms = 0.0;
    std::optional<Counterexample> counterexample;
    /// Longest witness computation found (interactive/grassroots modes).
    std::optional<std::size_t> max_witness_len;
    std::string note;

    std::string json() const;
    std::string summary() const;
};

/// Every transaction of the subgroup that is enabled at the projection of
/// a reachable supergroup configuration must lift to a transition the
/// supergroup system itself offers, with identical participant updates.
CheckReport check_oblivious(const Platform& platform, const AgentSet& group,
                            const AgentSet& supergroup, int depth,
                            const Bounds& bounds, unsigned jobs = 1);

/// Witness search from one qualifying configuration: a computation of at
/// most `max_witness_depth` supergroup steps after which some group
/// member's state references an outsider.  Platform-shaped witnesses are
/// tried first, then breadth-first search.
CheckReport check_interactive(const Platform& platform, const AgentSet& group,
                              const AgentSet& supergroup, const Configuration& config,
                              int max_witness_depth, const Bounds& bounds);

/// check_interactive at every reachable qualifying configuration.
CheckReport check_interactive_all(const Platform& platform, const AgentSet& group,
                                  const AgentSet& supergroup, int depth,
                                  int max_witness_depth, const Bounds& bounds,
                                  unsigned jobs = 1);

/// Lifting a group transaction into a supergroup configuration directly
/// must equal lifting it over the group first and then embedding that
/// step, and the direct lift must restrict back to the group step.
/// Instances are sampled with the given seed.
CheckReport check_closure_transitivity(const Platform& platform, const AgentSet& group,
                                       const AgentSet& supergroup,
                                       std::uint64_t samples, std::uint64_t seed,
                                       const Bounds& bounds);

/// Oblivious + interactive at every reachable qualifying configuration.
CheckReport check_grassroots(const Platform& platform, const AgentSet& group,
                             const AgentSet& supergroup, int depth,
                             int max_witness_depth, const Bounds& bounds,
                             unsigned jobs = 1);

} // namespace grassroots
