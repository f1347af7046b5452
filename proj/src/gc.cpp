// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#include "grassroots/gc.hpp"

#include <algorithm>

#include "grassroots/trace.hpp"

namespace grassroots {

namespace {

const CoinBag& bag_of(const Configuration& config, const AgentId& agent) {
    const auto* bag = std::get_if<CoinBag>(&config.at(agent));
    if (bag == nullptr) {
        throw DomainError("agent '" + agent.str() + "' has a non-coin-bag state");
    }
    return *bag;
}

// Sub-bags of `bag` with total size <= limit, in canonical order: counts
// of the first minter ascending, then recursively.  The same order is
// used by enumeration, counting and unranking.
void collect_sub_bags(const std::vector<std::pair<AgentId, std::uint64_t>>& entries,
                      std::size_t from, std::uint64_t limit, CoinBag& current,
                      std::vector<CoinBag>& out) {
    if (from == entries.size()) {
        out.push_back(current);
        return;
    }
    const auto& [minter, available] = entries[from];
    const std::uint64_t top = std::min(available, limit);
    for (std::uint64_t take = 0; take <= top; ++take) {
        if (take > 0) {
            current.add(minter, 1);
        }
        collect_sub_bags(entries, from + 1, limit - take, current, out);
    }
    current.remove(minter, top);
}

std::vector<CoinBag> sub_bags(const CoinBag& bag, std::uint64_t limit) {
    std::vector<std::pair<AgentId, std::uint64_t>> entries(bag.begin(), bag.end());
    std::vector<CoinBag> out;
    CoinBag scratch;
    collect_sub_bags(entries, 0, limit, scratch, out);
    return out;
}

// counts[s] = number of sub-bags of exact size s, s <= limit.
std::vector<std::uint64_t> sub_bag_counts(const CoinBag& bag, std::uint64_t limit) {
    std::vector<std::uint64_t> counts(limit + 1, 0);
    counts[0] = 1;
    for (const auto& [minter, available] : bag) {
        std::vector<std::uint64_t> next(limit + 1, 0);
        for (std::uint64_t size = 0; size <= limit; ++size) {
            const std::uint64_t top = std::min(available, size);
            for (std::uint64_t take = 0; take <= top; ++take) {
                next[size] += counts[size - take];
            }
        }
        counts = std::move(next);
    }
    return counts;
}

CoinBag pointwise_min(const CoinBag& a, const CoinBag& b) {
    CoinBag result;
    for (const auto& [minter, count] : a) {
        result.add(minter, std::min(count, b.count(minter)));
    }
    return result;
}

// Swaps between p and q within the size bound, minus the x == y pairs
// (those would be no-ops).
std::uint64_t swap_count(const CoinBag& p_bag, const CoinBag& q_bag,
                         std::uint64_t max_size) {
    const auto p_counts = sub_bag_counts(p_bag, max_size);
    const auto q_counts = sub_bag_counts(q_bag, max_size);
    std::uint64_t total = 0;
    for (std::uint64_t i = 0; i <= max_size; ++i) {
        for (std::uint64_t j = 0; i + j <= max_size; ++j) {
            total += p_counts[i] * q_counts[j];
        }
    }
    const auto shared = sub_bag_counts(pointwise_min(p_bag, q_bag), max_size);
    for (std::uint64_t i = 0; 2 * i <= max_size; ++i) {
        total -= shared[i];
    }
    return total;
}

} // namespace

void CurrencyPlatform::check_label_guard(const TxLabel& label,
                                         const Configuration& config) const {
    if (const auto* m = std::get_if<MintLabel>(&label)) {
        if (m->amount == 0) {
            throw GuardError("mint amount must be positive");
        }
        if (!config.contains(m->minter)) {
            throw DomainError("minter outside the configuration's domain");
        }
        (void)bag_of(config, m->minter);
        return;
    }
    if (const auto* s = std::get_if<SwapLabel>(&label)) {
        if (!config.contains(s->p) || !config.contains(s->q)) {
            throw DomainError("swap participant outside the configuration's domain");
        }
        if (s->p_gives == s->q_gives) {
            throw NoOpError("swap of identical bags");
        }
        if (!s->p_gives.subset_of(bag_of(config, s->p))) {
            throw GuardError(s->p.str() + " does not hold the offered coins");
        }
        if (!s->q_gives.subset_of(bag_of(config, s->q))) {
            throw GuardError(s->q.str() + " does not hold the offered coins");
        }
        return;
    }
    throw DomainError("label '" + label_str(label) + "' is not a currency label");
}

Transaction CurrencyPlatform::make(const TxLabel& label,
                                   const Configuration& config) const {
    check_label_guard(label, config);
    if (const auto* m = std::get_if<MintLabel>(&label)) {
        const CoinBag& before = bag_of(config, m->minter);
        CoinBag after = before;
        after.add(m->minter, m->amount);
        return Transaction(label, {{m->minter, before}}, {{m->minter, std::move(after)}});
    }
    const auto& s = std::get<SwapLabel>(label);
    const CoinBag& p_before = bag_of(config, s.p);
    const CoinBag& q_before = bag_of(config, s.q);
    CoinBag p_after = p_before.minus(s.p_gives).plus(s.q_gives);
    CoinBag q_after = q_before.minus(s.q_gives).plus(s.p_gives);
    return Transaction(label, {{s.p, p_before}, {s.q, q_before}},
                       {{s.p, std::move(p_after)}, {s.q, std::move(q_after)}});
}

std::vector<TxLabel> CurrencyPlatform::enumerate_labels(const Configuration& config,
                                                        const Bounds& bounds) const {
    std::vector<TxLabel> labels;
    for (const auto& [agent, state] : config) {
        (void)bag_of(config, agent);
        for (std::uint64_t k = 1; k <= bounds.max_mint; ++k) {
            labels.push_back(MintLabel{agent, k});
        }
    }
    for (auto p = config.begin(); p != config.end(); ++p) {
        for (auto q = std::next(p); q != config.end(); ++q) {
            const auto xs = sub_bags(bag_of(config, p->first), bounds.max_swap_size);
            const auto ys = sub_bags(bag_of(config, q->first), bounds.max_swap_size);
            for (const auto& x : xs) {
                const std::uint64_t y_limit = bounds.max_swap_size - x.total();
                for (const auto& y : ys) {
                    if (y.total() > y_limit || y == x) {
                        continue;
                    }
                    labels.push_back(SwapLabel{p->first, q->first, x, y});
                }
            }
        }
    }
    return labels;
}

std::uint64_t CurrencyPlatform::count_enabled(const Configuration& config,
                                              const Bounds& bounds) const {
    std::uint64_t total = config.size() * bounds.max_mint;
    for (auto p = config.begin(); p != config.end(); ++p) {
        for (auto q = std::next(p); q != config.end(); ++q) {
            total += swap_count(bag_of(config, p->first), bag_of(config, q->first),
                                bounds.max_swap_size);
        }
    }
    return total;
}

TxLabel CurrencyPlatform::nth_enabled(const Configuration& config, const Bounds& bounds,
                                      std::uint64_t index) const {
    for (const auto& [agent, state] : config) {
        if (index < bounds.max_mint) {
            return MintLabel{agent, index + 1};
        }
        index -= bounds.max_mint;
    }
    for (auto p = config.begin(); p != config.end(); ++p) {
        for (auto q = std::next(p); q != config.end(); ++q) {
            const auto& p_bag = bag_of(config, p->first);
            const auto& q_bag = bag_of(config, q->first);
            const std::uint64_t pair_total =
                swap_count(p_bag, q_bag, bounds.max_swap_size);
            if (index >= pair_total) {
                index -= pair_total;
                continue;
            }
            const auto q_counts = sub_bag_counts(q_bag, bounds.max_swap_size);
            std::vector<std::uint64_t> q_prefix(q_counts.size() + 1, 0);
            for (std::size_t s = 0; s < q_counts.size(); ++s) {
                q_prefix[s + 1] = q_prefix[s] + q_counts[s];
            }
            for (const auto& x : sub_bags(p_bag, bounds.max_swap_size)) {
                const std::uint64_t y_limit = bounds.max_swap_size - x.total();
                std::uint64_t block = q_prefix[y_limit + 1];
                if (x.total() <= y_limit && x.subset_of(q_bag)) {
                    --block; // y == x excluded
                }
                if (index >= block) {
                    index -= block;
                    continue;
                }
                for (const auto& y : sub_bags(q_bag, y_limit)) {
                    if (y == x) {
                        continue;
                    }
                    if (index == 0) {
                        return SwapLabel{p->first, q->first, x, y};
                    }
                    --index;
                }
            }
        }
    }
    throw DomainError("enabled-transaction index out of range");
}

AgentSet CurrencyPlatform::refs(const LocalState& state) const {
    const auto* bag = std::get_if<CoinBag>(&state);
    if (bag == nullptr) {
        throw DomainError("non-coin-bag state");
    }
    AgentSet minters;
    for (const auto& [minter, count] : *bag) {
        minters.insert(minters.end(), minter);
    }
    return minters;
}

namespace gc {

std::string swap_kind_str(SwapKind kind) {
    switch (kind) {
    case SwapKind::Payment:
        return "payment";
    case SwapKind::MutualCredit:
        return "mutual-credit";
    case SwapKind::Redemption:
        return "redemption";
    case SwapKind::Other:
        return "other";
    }
    return "other";
}

Transaction mint(const AgentId& p, std::uint64_t amount, const Configuration& config) {
    return platform_for("gc").make(MintLabel{p, amount}, config);
}

Transaction swap(const AgentId& p, const AgentId& q, const SwapSpec& spec,
                 const Configuration& config) {
    if (p == q) {
        throw InvalidParticipantsError("swap needs two distinct agents");
    }
    const SwapLabel label = p < q ? SwapLabel{p, q, spec.give, spec.take}
                                  : SwapLabel{q, p, spec.take, spec.give};
    return platform_for("gc").make(label, config);
}

SwapKind classify_swap(const SwapSpec& spec, const AgentId& p, const AgentId& q) {
    const CoinBag& x = spec.give;
    const CoinBag& y = spec.take;
    if (x.all_minted_by(q) && y.empty()) {
        return SwapKind::Payment;
    }
    if (x.all_minted_by(p) && y.all_minted_by(q)) {
        return SwapKind::MutualCredit;
    }
    if (x.all_minted_by(q) && y.total() == x.total()) {
        return SwapKind::Redemption;
    }
    return SwapKind::Other;
}

std::uint64_t coin_count(const Configuration& config, const AgentId& minter) {
    std::uint64_t total = 0;
    for (const auto& [agent, state] : config) {
        total += std::get<CoinBag>(state).count(minter);
    }
    return total;
}

ConservationResult check_conservation(const Trace& trace) {
    if (trace.platform != "gc") {
        throw ValidationError("conservation applies to gc traces only", 0);
    }
    // A trace whose steps do not even replay fails at the offending step.
    std::vector<Configuration> configs;
    try {
        configs = replay_prefixes(trace);
    } catch (const ValidationError& error) {
        return ConservationResult{false, error.index, std::nullopt};
    }
    std::map<AgentId, std::uint64_t> minted;
    for (const auto& agent : trace.agents) {
        minted[agent] = 0;
    }
    for (std::size_t step = 0; step <= trace.steps.size(); ++step) {
        if (step > 0) {
            if (const auto* m = std::get_if<MintLabel>(&trace.steps[step - 1].label)) {
                minted[m->minter] += m->amount;
            }
        }
        for (const auto& [agent, total] : minted) {
            if (coin_count(configs[step], agent) != total) {
                return ConservationResult{false, step, agent};
            }
        }
    }
    return ConservationResult{};
}

std::vector<Transaction> enumerate_enabled(const Configuration& config,
                                           const Bounds& bounds) {
    return platform_for("gc").enumerate_enabled(config, bounds);
}

} // namespace gc

} // namespace grassroots
