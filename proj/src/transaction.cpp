// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#include "grassroots/transaction.hpp"

namespace grassroots {

Transaction::Transaction(TxLabel label, std::map<AgentId, LocalState> before,
                         std::map<AgentId, LocalState> after)
    : label_(std::move(label)), before_(std::move(before)), after_(std::move(after)) {
    if (before_.empty()) {
        throw InvalidParticipantsError("transaction with no participants");
    }
    if (before_.size() != after_.size()) {
        throw InvalidParticipantsError("before/after participant sets differ");
    }
    for (const auto& [agent, state] : before_) {
        if (after_.count(agent) == 0) {
            throw InvalidParticipantsError("before/after participant sets differ");
        }
        participants_.insert(participants_.end(), agent);
    }
    if (before_ == after_) {
        throw NoOpError("transaction changes no local state");
    }
}

AgentSet Transaction::active() const {
    AgentSet result;
    for (const auto& [agent, state] : before_) {
        if (after_.at(agent) != state) {
            result.insert(result.end(), agent);
        }
    }
    return result;
}

std::size_t Transaction::degree() const {
    return active().size();
}

Transition lift(const Transaction& tx, const Configuration& config) {
    std::map<AgentId, LocalState> after;
    for (const auto& [agent, state] : config) {
        auto it = tx.after().find(agent);
        after.emplace(agent, it == tx.after().end() ? state : it->second);
    }
    for (const auto& [agent, state] : tx.before()) {
        if (!config.contains(agent)) {
            throw DomainError("participant '" + agent.str() +
                              "' outside the configuration's domain");
        }
        if (config.at(agent) != state) {
            throw NotEnabledError("state mismatch for participant '" + agent.str() + "'");
        }
    }
    return Transition{config, Configuration(std::move(after))};
}

bool structurally_enabled(const Configuration& config, const Transaction& tx) {
    for (const auto& [agent, state] : tx.before()) {
        if (!config.contains(agent) || config.at(agent) != state) {
            return false;
        }
    }
    return true;
}

} // namespace grassroots
