// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "grassroots/agent.hpp"

namespace grassroots {

/// Multiset of coins keyed by minter.  Coins of the same minter are
/// fungible, so a bag is a per-minter count vector.  Zero counts are
/// normalized away; iteration order is minter order.
class CoinBag {
  public:
    CoinBag() = default;

    static CoinBag single(const AgentId& minter, std::uint64_t count);

    std::uint64_t count(const AgentId& minter) const;
    std::uint64_t total() const;
    bool empty() const { return counts_.empty(); }

    /// Count-wise containment.
    bool subset_of(const CoinBag& other) const;

    /// True when every coin in the bag was minted by `minter` and the bag
    /// is nonempty.
    bool all_minted_by(const AgentId& minter) const;

    void add(const AgentId& minter, std::uint64_t count);
    /// Throws GuardError on underflow.
    void remove(const AgentId& minter, std::uint64_t count);

    CoinBag plus(const CoinBag& other) const;
    CoinBag minus(const CoinBag& other) const;

    auto begin() const { return counts_.begin(); }
    auto end() const { return counts_.end(); }
    std::size_t minter_count() const { return counts_.size(); }

    bool operator==(const CoinBag&) const = default;
    auto operator<=>(const CoinBag&) const = default;

    /// "a:2,b:1" with minters in order; "" for the empty bag.
    std::string str() const;
    static CoinBag parse(const std::string& text);

  private:
    std::map<AgentId, std::uint64_t> counts_;
};

} // namespace grassroots
