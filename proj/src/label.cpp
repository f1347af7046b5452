// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#include "grassroots/label.hpp"

#include <sstream>
#include <vector>

namespace grassroots {

namespace {

std::vector<std::string> split_words(const std::string& text) {
    std::vector<std::string> words;
    std::istringstream in(text);
    std::string word;
    while (in >> word) {
        words.push_back(word);
    }
    return words;
}

std::uint64_t parse_amount(const std::string& word, const std::string& context) {
    try {
        return std::stoull(word);
    } catch (const std::exception&) {
        throw ParseError("bad amount in '" + context + "'");
    }
}

} // namespace

std::string label_str(const TxLabel& label) {
    std::ostringstream out;
    if (const auto* b = std::get_if<BefriendLabel>(&label)) {
        out << "befriend " << b->p.str() << ' ' << b->q.str();
    } else if (const auto* u = std::get_if<UnfriendLabel>(&label)) {
        out << "unfriend " << u->p.str() << ' ' << u->q.str();
    } else if (const auto* m = std::get_if<MintLabel>(&label)) {
        out << "mint " << m->minter.str() << ' ' << m->amount;
    } else if (const auto* s = std::get_if<SwapLabel>(&label)) {
        out << "swap " << s->p.str() << ' ' << s->q.str() << " x=" << s->p_gives.str()
            << " y=" << s->q_gives.str();
    } else if (const auto* f = std::get_if<FederateLabel>(&label)) {
        out << "federate " << f->community.str();
    } else if (const auto* j = std::get_if<JoinLabel>(&label)) {
        out << "join " << j->parent.str() << ' ' << j->child.str();
    } else {
        const auto& l = std::get<LeaveLabel>(label);
        out << "leave " << l.parent.str() << ' ' << l.child.str();
    }
    return out.str();
}

TxLabel parse_label(const std::string& text) {
    const auto words = split_words(text);
    if (words.empty()) {
        throw ParseError("empty label");
    }
    const std::string& kind = words[0];

    if (kind == "befriend" || kind == "unfriend") {
        if (words.size() != 3) {
            throw ParseError("expected '" + kind + " p q': '" + text + "'");
        }
        AgentId p(words[1]);
        AgentId q(words[2]);
        if (p == q) {
            throw ParseError("participants must differ: '" + text + "'");
        }
        if (q < p) {
            std::swap(p, q);
        }
        if (kind == "befriend") {
            return BefriendLabel{p, q};
        }
        return UnfriendLabel{p, q};
    }
    if (kind == "mint") {
        if (words.size() != 3) {
            throw ParseError("expected 'mint p k': '" + text + "'");
        }
        return MintLabel{AgentId(words[1]), parse_amount(words[2], text)};
    }
    if (kind == "swap") {
        if (words.size() != 5 || words[3].rfind("x=", 0) != 0 ||
            words[4].rfind("y=", 0) != 0) {
            throw ParseError("expected 'swap p q x=... y=...': '" + text + "'");
        }
        AgentId p(words[1]);
        AgentId q(words[2]);
        if (p == q) {
            throw ParseError("participants must differ: '" + text + "'");
        }
        CoinBag from_p = CoinBag::parse(words[3].substr(2));
        CoinBag from_q = CoinBag::parse(words[4].substr(2));
        if (q < p) {
            std::swap(p, q);
            std::swap(from_p, from_q);
        }
        return SwapLabel{p, q, std::move(from_p), std::move(from_q)};
    }
    if (kind == "federate") {
        if (words.size() != 2) {
            throw ParseError("expected 'federate v': '" + text + "'");
        }
        return FederateLabel{CommunityId::parse(words[1])};
    }
    if (kind == "join" || kind == "leave") {
        if (words.size() != 3) {
            throw ParseError("expected '" + kind + " f g': '" + text + "'");
        }
        CommunityId parent = CommunityId::parse(words[1]);
        CommunityId child = CommunityId::parse(words[2]);
        if (kind == "join") {
            return JoinLabel{std::move(parent), std::move(child)};
        }
        return LeaveLabel{std::move(parent), std::move(child)};
    }
    throw ParseError("unknown label kind '" + kind + "'");
}

} // namespace grassroots
