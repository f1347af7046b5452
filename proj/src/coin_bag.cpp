// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#include "grassroots/coin_bag.hpp"

#include <sstream>

namespace grassroots {

CoinBag CoinBag::single(const AgentId& minter, std::uint64_t count) {
    CoinBag bag;
    bag.add(minter, count);
    return bag;
}

std::uint64_t CoinBag::count(const AgentId& minter) const {
    auto it = counts_.find(minter);
    return it == counts_.end() ? 0 : it->second;
}

std::uint64_t CoinBag::total() const {
    std::uint64_t sum = 0;
    for (const auto& [minter, count] : counts_) {
        sum += count;
    }
    return sum;
}

bool CoinBag::subset_of(const CoinBag& other) const {
    for (const auto& [minter, count] : counts_) {
        if (other.count(minter) < count) {
            return false;
        }
    }
    return true;
}

bool CoinBag::all_minted_by(const AgentId& minter) const {
    return counts_.size() == 1 && counts_.begin()->first == minter;
}

void CoinBag::add(const AgentId& minter, std::uint64_t count) {
    if (count == 0) {
        return;
    }
    counts_[minter] += count;
}

void CoinBag::remove(const AgentId& minter, std::uint64_t count) {
    if (count == 0) {
        return;
    }
    auto it = counts_.find(minter);
    if (it == counts_.end() || it->second < count) {
        throw GuardError("insufficient " + minter.str() + "-coins");
    }
    it->second -= count;
    if (it->second == 0) {
        counts_.erase(it);
    }
}

CoinBag CoinBag::plus(const CoinBag& other) const {
    CoinBag result = *this;
    for (const auto& [minter, count] : other.counts_) {
        result.add(minter, count);
    }
    return result;
}

CoinBag CoinBag::minus(const CoinBag& other) const {
    CoinBag result = *this;
    for (const auto& [minter, count] : other.counts_) {
        result.remove(minter, count);
    }
    return result;
}

std::string CoinBag::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [minter, count] : counts_) {
        if (!first) {
            out << ',';
        }
        out << minter.str() << ':' << count;
        first = false;
    }
    return out.str();
}

CoinBag CoinBag::parse(const std::string& text) {
    CoinBag bag;
    if (text.empty()) {
        return bag;
    }
    std::istringstream in(text);
    std::string entry;
    while (std::getline(in, entry, ',')) {
        auto colon = entry.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 >= entry.size()) {
            throw ParseError("bad coin entry '" + entry + "'");
        }
        std::uint64_t count = 0;
        try {
            count = std::stoull(entry.substr(colon + 1));
        } catch (const std::exception&) {
            throw ParseError("bad coin count in '" + entry + "'");
        }
        if (count == 0) {
            throw ParseError("zero coin count in '" + entry + "'");
        }
        AgentId minter(entry.substr(0, colon));
        if (bag.count(minter) != 0) {
            throw ParseError("duplicate minter in '" + text + "'");
        }
        bag.add(minter, count);
    }
    return bag;
}

} // namespace grassroots
