// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#include "grassroots/gsn.hpp"

#include <algorithm>

namespace grassroots {

namespace {

const FriendSet& friends_of(const Configuration& config, const AgentId& agent) {
    const auto* friends = std::get_if<FriendSet>(&config.at(agent));
    if (friends == nullptr) {
        throw DomainError("agent '" + agent.str() + "' has a non-friend-set state");
    }
    return *friends;
}

void check_pair(const AgentId& p, const AgentId& q, const Configuration& config) {
    if (p == q) {
        throw InvalidParticipantsError("befriend/unfriend needs two distinct agents");
    }
    if (!config.contains(p) || !config.contains(q)) {
        throw DomainError("participant outside the configuration's domain");
    }
}

} // namespace

void SocialNetworkPlatform::check_befriend_guard(const AgentId& p, const AgentId& q,
                                                 const Configuration& config) const {
    if (friends_of(config, p).count(q) > 0 || friends_of(config, q).count(p) > 0) {
        throw GuardError("already friends: " + p.str() + ", " + q.str());
    }
}

void SocialNetworkPlatform::check_label_guard(const TxLabel& label,
                                              const Configuration& config) const {
    if (const auto* b = std::get_if<BefriendLabel>(&label)) {
        check_pair(b->p, b->q, config);
        check_befriend_guard(b->p, b->q, config);
        return;
    }
    if (const auto* u = std::get_if<UnfriendLabel>(&label)) {
        check_pair(u->p, u->q, config);
        if (friends_of(config, u->p).count(u->q) == 0 ||
            friends_of(config, u->q).count(u->p) == 0) {
            throw GuardError("not mutual friends: " + u->p.str() + ", " + u->q.str());
        }
        return;
    }
    throw DomainError("label '" + label_str(label) + "' is not a social-network label");
}

Transaction SocialNetworkPlatform::make(const TxLabel& label,
                                        const Configuration& config) const {
    check_label_guard(label, config);
    if (const auto* b = std::get_if<BefriendLabel>(&label)) {
        FriendSet p_after = friends_of(config, b->p);
        FriendSet q_after = friends_of(config, b->q);
        p_after.insert(b->q);
        q_after.insert(b->p);
        return Transaction(label,
                           {{b->p, friends_of(config, b->p)}, {b->q, friends_of(config, b->q)}},
                           {{b->p, std::move(p_after)}, {b->q, std::move(q_after)}});
    }
    const auto& u = std::get<UnfriendLabel>(label);
    FriendSet p_after = friends_of(config, u.p);
    FriendSet q_after = friends_of(config, u.q);
    p_after.erase(u.q);
    q_after.erase(u.p);
    return Transaction(label,
                       {{u.p, friends_of(config, u.p)}, {u.q, friends_of(config, u.q)}},
                       {{u.p, std::move(p_after)}, {u.q, std::move(q_after)}});
}

std::vector<TxLabel> SocialNetworkPlatform::enumerate_labels(const Configuration& config,
                                                             const Bounds&) const {
    // At most one move per unordered pair: befriend when neither lists
    // the other, unfriend when both do.
    std::vector<TxLabel> befriends;
    std::vector<TxLabel> unfriends;
    for (auto p = config.begin(); p != config.end(); ++p) {
        for (auto q = std::next(p); q != config.end(); ++q) {
            const auto& p_friends = friends_of(config, p->first);
            const auto& q_friends = friends_of(config, q->first);
            const bool p_lists_q = p_friends.count(q->first) > 0;
            const bool q_lists_p = q_friends.count(p->first) > 0;
            if (!p_lists_q && !q_lists_p) {
                bool guard_ok = true;
                try {
                    check_befriend_guard(p->first, q->first, config);
                } catch (const GuardError&) {
                    guard_ok = false;
                }
                if (guard_ok) {
                    befriends.push_back(BefriendLabel{p->first, q->first});
                }
            } else if (p_lists_q && q_lists_p) {
                unfriends.push_back(UnfriendLabel{p->first, q->first});
            }
        }
    }
    std::vector<TxLabel> labels = std::move(befriends);
    labels.insert(labels.end(), unfriends.begin(), unfriends.end());
    return labels;
}

AgentSet SocialNetworkPlatform::refs(const LocalState& state) const {
    const auto* friends = std::get_if<FriendSet>(&state);
    if (friends == nullptr) {
        throw DomainError("non-friend-set state");
    }
    return *friends;
}

namespace gsn {

Transaction befriend(const AgentId& p, const AgentId& q, const Configuration& config) {
    if (p == q) {
        throw InvalidParticipantsError("befriend needs two distinct agents");
    }
    return platform_for("gsn").make(BefriendLabel{std::min(p, q), std::max(p, q)}, config);
}

Transaction unfriend(const AgentId& p, const AgentId& q, const Configuration& config) {
    if (p == q) {
        throw InvalidParticipantsError("unfriend needs two distinct agents");
    }
    return platform_for("gsn").make(UnfriendLabel{std::min(p, q), std::max(p, q)}, config);
}

SymmetryResult check_symmetry(const Configuration& config) {
    for (const auto& [p, state] : config) {
        for (const auto& q : friends_of(config, p)) {
            if (!config.contains(q)) {
                continue; // references outside the domain cannot be checked
            }
            if (friends_of(config, q).count(p) == 0) {
                return SymmetryResult{false, std::make_pair(p, q)};
            }
        }
    }
    return SymmetryResult{};
}

std::vector<Transaction> enumerate_enabled(const Configuration& config) {
    return platform_for("gsn").enumerate_enabled(config, Bounds{});
}

} // namespace gsn

} // namespace grassroots
