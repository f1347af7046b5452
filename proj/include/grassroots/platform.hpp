// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grassroots/transaction.hpp"

namespace grassroots {

/// Enumeration bounds for the infinite transaction families (mint amounts
/// and swap sizes).  Ignored by platforms whose families are finite.
struct Bounds {
    std::uint64_t max_mint = 2;
    std::uint64_t max_swap_size = 2;
};

/// A platform fixes the local-state alternative, the initial state, the
/// transaction families and their guards, and which agents a state
/// mentions.  Implementations are stateless and thread-safe.
class Platform {
  public:
    virtual ~Platform() = default;

    virtual std::string name() const = 0;

    /// The designated initial local state of one agent.
    virtual LocalState initial_state(const AgentId& agent) const = 0;

    Configuration initial_config(const AgentSet& agents) const;

    /// Materializes the transaction named by `label` at `config`.
    /// Throws (GuardError, NotEnabledError, ...) when it is not enabled.
    virtual Transaction make(const TxLabel& label,
                             const Configuration& config) const = 0;

    /// The label's precondition, evaluated against `config`; throws
    /// (GuardError, OrderError, NoOpError, DomainError) when it fails.
    /// Guards are local to the label's parameters, so a transaction
    /// enabled within a subgroup stays enabled in any larger
    /// configuration whose participant states agree.
    virtual void check_label_guard(const TxLabel& label,
                                   const Configuration& config) const = 0;

    /// Labels of every transaction enabled at `config` within `bounds`,
    /// in canonical order.
    virtual std::vector<TxLabel> enumerate_labels(const Configuration& config,
                                                  const Bounds& bounds) const = 0;

    /// Size of enumerate_labels without materializing it.  Assumes a
    /// reachable configuration.
    virtual std::uint64_t count_enabled(const Configuration& config,
                                        const Bounds& bounds) const;

    /// index-th element of enumerate_labels without materializing it.
    virtual TxLabel nth_enabled(const Configuration& config, const Bounds& bounds,
                                std::uint64_t index) const;

    /// Agents mentioned by a local state (friends; minters held; roots of
    /// community identifiers).
    virtual AgentSet refs(const LocalState& state) const = 0;

    /// Enabled transactions at `config`, materialized, canonical order.
    std::vector<Transaction> enumerate_enabled(const Configuration& config,
                                               const Bounds& bounds) const;
};

/// True iff the participants' states match `tx.before` and the label's
/// guard holds at `config`.  Participants outside the domain are a
/// DomainError.
bool is_enabled(const Platform& platform, const Configuration& config,
                const Transaction& tx);

/// lift(tx, config).after; throws NotEnabledError unless is_enabled.
Configuration apply(const Platform& platform, const Configuration& config,
                    const Transaction& tx);

/// make + lift in one step.
Configuration apply_label(const Platform& platform, const Configuration& config,
                          const TxLabel& label);

/// Registry of the shipped platforms: "gsn", "gc", "gf".
const Platform& platform_for(const std::string& name);
std::vector<std::string> platform_names();

} // namespace grassroots
