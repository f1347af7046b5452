// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <optional>

#include "grassroots/platform.hpp"

namespace grassroots {

struct Trace; // trace.hpp

/// Cryptocurrency: coin-bag local states, unary mint, binary swap.
class CurrencyPlatform : public Platform {
  public:
    std::string name() const override { return "gc"; }
    LocalState initial_state(const AgentId&) const override { return CoinBag{}; }
    Transaction make(const TxLabel& label, const Configuration& config) const override;
    void check_label_guard(const TxLabel& label,
                           const Configuration& config) const override;
    std::vector<TxLabel> enumerate_labels(const Configuration& config,
                                          const Bounds& bounds) const override;
    std::uint64_t count_enabled(const Configuration& config,
                                const Bounds& bounds) const override;
    TxLabel nth_enabled(const Configuration& config, const Bounds& bounds,
                        std::uint64_t index) const override;
    AgentSet refs(const LocalState& state) const override;
};

namespace gc {

/// What p hands over (x) and what q hands over (y).  x != y is required;
/// equal bags would make the exchange a no-op.
struct SwapSpec {
    CoinBag give; // x, taken from p
    CoinBag take; // y, taken from q
};

enum class SwapKind { Payment, MutualCredit, Redemption, Other };

std::string swap_kind_str(SwapKind kind);

/// p mints `amount` of its own coins; unary, degree 1.
Transaction mint(const AgentId& p, std::uint64_t amount, const Configuration& config);

/// Atomic exchange between p and q; degree 2 (one side may hand over
/// nothing, as in a plain payment).
Transaction swap(const AgentId& p, const AgentId& q, const SwapSpec& spec,
                 const Configuration& config);

/// Economic reading of a swap, in precedence order: payment (x is
/// q-coins, nothing back), mutual credit (both sides hand over their own
/// coins), redemption (q-coins returned one-for-one), other.
SwapKind classify_swap(const SwapSpec& spec, const AgentId& p, const AgentId& q);

/// Total `minter`-coins held across all agents.
std::uint64_t coin_count(const Configuration& config, const AgentId& minter);

struct ConservationResult {
    bool ok = true;
    /// First (step index, minter) where held coins diverge from the
    /// minted total.
    std::optional<std::size_t> step;
    std::optional<AgentId> minter;
};

/// Replays the trace and checks, after every prefix, that each agent's
/// coins in circulation equal the amount it has minted so far.
ConservationResult check_conservation(const Trace& trace);

/// Enabled mint/swap transactions at `config` within `bounds`.
std::vector<Transaction> enumerate_enabled(const Configuration& config,
                                           const Bounds& bounds);

} // namespace gc

} // namespace grassroots
