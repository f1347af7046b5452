// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <map>

#include "grassroots/config.hpp"
#include "grassroots/label.hpp"

namespace grassroots {

/// Atomic transaction: a pair of distinct partial configurations over a
/// participant set, plus the label that reconstructs it.  Non-participants
/// are unconstrained; the (infinite) set of induced transitions over any
/// larger agent set is represented intensionally and accessed via `lift`.
class Transaction {
  public:
    Transaction(TxLabel label, std::map<AgentId, LocalState> before,
                std::map<AgentId, LocalState> after);

    const TxLabel& label() const { return label_; }
    const AgentSet& participants() const { return participants_; }
    const std::map<AgentId, LocalState>& before() const { return before_; }
    const std::map<AgentId, LocalState>& after() const { return after_; }

    /// Participants whose state changes.
    AgentSet active() const;
    /// Number of active participants (>= 1 by construction).
    std::size_t degree() const;

    bool operator==(const Transaction&) const = default;

  private:
    TxLabel label_;
    AgentSet participants_;
    std::map<AgentId, LocalState> before_;
    std::map<AgentId, LocalState> after_;
};

/// One step of a system over a full agent set: a pair of distinct
/// configurations over the same domain.
struct Transition {
    Configuration before;
    Configuration after;

    bool operator==(const Transition&) const = default;
};

/// Instantiates `tx` at `config`: the unique induced transition whose
/// before-configuration is `config`.  Participants move to their
/// after-states, everyone else stays put.
///
/// Throws DomainError if the participants are not a subset of the
/// configuration's domain, NotEnabledError if the participants' states do
/// not match the transaction's before-states.
Transition lift(const Transaction& tx, const Configuration& config);

/// Structural enabledness: participants within domain and their states
/// equal to the transaction's before-states.
bool structurally_enabled(const Configuration& config, const Transaction& tx);

} // namespace grassroots
