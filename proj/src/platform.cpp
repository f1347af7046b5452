// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#include "grassroots/platform.hpp"

#include "grassroots/gc.hpp"
#include "grassroots/gf.hpp"
#include "grassroots/gsn.hpp"

namespace grassroots {

Configuration Platform::initial_config(const AgentSet& agents) const {
    if (agents.empty()) {
        throw DomainError("initial configuration over an empty agent set");
    }
    std::map<AgentId, LocalState> states;
    for (const auto& agent : agents) {
        states.emplace(agent, initial_state(agent));
    }
    return Configuration(std::move(states));
}

std::uint64_t Platform::count_enabled(const Configuration& config,
                                      const Bounds& bounds) const {
    return enumerate_labels(config, bounds).size();
}

TxLabel Platform::nth_enabled(const Configuration& config, const Bounds& bounds,
                              std::uint64_t index) const {
    auto labels = enumerate_labels(config, bounds);
    if (index >= labels.size()) {
        throw DomainError("enabled-transaction index out of range");
    }
    return labels[index];
}

std::vector<Transaction> Platform::enumerate_enabled(const Configuration& config,
                                                     const Bounds& bounds) const {
    std::vector<Transaction> result;
    for (const auto& label : enumerate_labels(config, bounds)) {
        try {
            result.push_back(make(label, config));
        } catch (const NotEnabledError&) {
            // Candidate does not survive at a non-valid configuration.
        }
    }
    return result;
}

bool is_enabled(const Platform& platform, const Configuration& config,
                const Transaction& tx) {
    for (const auto& agent : tx.participants()) {
        if (!config.contains(agent)) {
            throw DomainError("participant '" + agent.str() +
                              "' outside the configuration's domain");
        }
    }
    if (!structurally_enabled(config, tx)) {
        return false;
    }
    try {
        platform.check_label_guard(tx.label(), config);
    } catch (const Error&) {
        return false;
    }
    return true;
}

Configuration apply(const Platform& platform, const Configuration& config,
                    const Transaction& tx) {
    if (!is_enabled(platform, config, tx)) {
        throw NotEnabledError("transaction '" + label_str(tx.label()) +
                              "' is not enabled");
    }
    return lift(tx, config).after;
}

Configuration apply_label(const Platform& platform, const Configuration& config,
                          const TxLabel& label) {
    return lift(platform.make(label, config), config).after;
}

const Platform& platform_for(const std::string& name) {
    static const SocialNetworkPlatform gsn_platform;
    static const CurrencyPlatform gc_platform;
    static const FederationPlatform gf_platform;
    if (name == "gsn") {
        return gsn_platform;
    }
    if (name == "gc") {
        return gc_platform;
    }
    if (name == "gf") {
        return gf_platform;
    }
    throw DomainError("unknown platform '" + name + "'");
}

std::vector<std::string> platform_names() {
    return {"gsn", "gc", "gf"};
}

} // namespace grassroots
