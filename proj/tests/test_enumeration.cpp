// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#include <doctest.h>

#include <utility>

#include "grassroots/gc.hpp"
#include "grassroots/gf.hpp"
#include "grassroots/gsn.hpp"
#include "grassroots/simulator.hpp"
#include "support/fixtures.hpp"

using namespace grassroots;
using grassroots::testing::agent;
using grassroots::testing::run_labels;

namespace {

void check_consistency(const Platform& platform, const Configuration& config,
                       const Bounds& bounds) {
    const auto labels = platform.enumerate_labels(config, bounds);
    REQUIRE(platform.count_enabled(config, bounds) == labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        CAPTURE(i);
        CHECK(platform.nth_enabled(config, bounds, i) == labels[i]);
    }
    if (!labels.empty()) {
        CHECK_THROWS_AS(platform.nth_enabled(config, bounds, labels.size()),
                        DomainError);
    }
}

} // namespace

TEST_CASE("count, nth and enumerate agree along random runs of every platform") {
    for (const char* name : {"gsn", "gc", "gf"}) {
        const Platform& platform = platform_for(name);
        const Bounds bounds{2, 3};
        SplitMix64 rng(271828);
        Configuration c = platform.initial_config(default_agents(4));
        for (int step = 0; step < 15; ++step) {
            check_consistency(platform, c, bounds);
            const auto n = platform.count_enabled(c, bounds);
            if (n == 0) {
                break;
            }
            c = apply_label(platform, c,
                            platform.nth_enabled(c, bounds, rng.below(n)));
        }
    }
}

TEST_CASE("swap unranking handles many minters and every size bound") {
    const Platform& platform = platform_for("gc");
    // Bags over several minters, built by minting and shuffling coins.
    const Configuration config = run_labels(
        "gc", default_agents(3),
        {"mint a 2", "mint b 2", "mint c 1", "swap a b x=a:1 y=b:1",
         "swap a c x=b:1 y=c:1", "swap b c x=a:1 y="});
    for (std::uint64_t size = 0; size <= 4; ++size) {
        CAPTURE(size);
        check_consistency(platform, config, Bounds{2, size});
    }
    // No mints allowed: only swaps remain.
    const Bounds swaps_only{0, 2};
    for (const auto& label : platform.enumerate_labels(config, swaps_only)) {
        CHECK(std::holds_alternative<SwapLabel>(label));
    }
    check_consistency(platform, config, swaps_only);
}

TEST_CASE("federation enumeration survives forgotten communities") {
    // Leaving the only child severs a/1 from a's view while b remembers
    // it through its own communities.
    const Configuration corner = run_labels(
        "gf", default_agents(3),
        {"federate a", "join a/1 b", "leave a/1 a"});
    const Platform& platform = platform_for("gf");
    check_consistency(platform, corner, Bounds{});
    for (const auto& tx : platform.enumerate_enabled(corner, Bounds{})) {
        CHECK(is_enabled(platform, corner, tx));
    }
    CHECK(gf::check_valid(corner).ok);
}

TEST_CASE("enumerated transactions are exactly the enabled ones") {
    // Spot check: everything enumerate returns is enabled, and a few
    // hand-picked absent labels are not.
    const Platform& platform = platform_for("gc");
    const Configuration config =
        run_labels("gc", default_agents(2), {"mint a 1"});
    const Bounds bounds{1, 1};
    std::set<std::string> offered;
    for (const auto& tx : platform.enumerate_enabled(config, bounds)) {
        CHECK(is_enabled(platform, config, tx));
        offered.insert(label_str(tx.label()));
    }
    CHECK(offered.count("swap a b x=a:1 y=") == 1);
    CHECK(offered.count("mint a 1") == 1);
    CHECK(offered.count("mint a 2") == 0); // above the bound
    CHECK(offered.count("swap a b x=b:1 y=") == 0); // b holds nothing
}

TEST_CASE("parsers reject or accept, never misbehave") {
    SplitMix64 rng(31337);
    const std::string alphabet = "ab/:,=>|x y01 \t#-_";
    for (int round = 0; round < 3000; ++round) {
        std::string text;
        const auto length = rng.below(24);
        for (std::uint64_t i = 0; i < length; ++i) {
            text.push_back(alphabet[rng.below(alphabet.size())]);
        }
        try {
            const TxLabel label = parse_label(text);
            // Anything accepted must round-trip through its canonical form.
            CHECK(parse_label(label_str(label)) == label);
        } catch (const ParseError&) {
        }
        try {
            (void)Trace::parse("gtrace 1 gsn a,b 0\n0 | " + text + " | a,b\n");
        } catch (const ParseError&) {
        } catch (const DomainError&) {
        }
        try {
            (void)CoinBag::parse(text);
        } catch (const ParseError&) {
        }
        try {
            (void)CommunityId::parse(text);
        } catch (const ParseError&) {
        }
        try {
            (void)parse_state(text);
        } catch (const ParseError&) {
        }
    }
}

TEST_CASE("canonical labels round-trip from generated instances") {
    SplitMix64 rng(99991);
    const std::vector<AgentId> agents{agent("a"), agent("bb"), agent("c-3"),
                                      agent("d_4")};
    auto random_bag = [&](std::uint64_t budget) {
        CoinBag bag;
        for (const auto& minter : agents) {
            bag.add(minter, rng.below(budget + 1));
        }
        return bag;
    };
    auto random_id = [&] {
        CommunityId id{agents[rng.below(agents.size())], {}};
        const auto depth = rng.below(3);
        for (std::uint64_t i = 0; i < depth; ++i) {
            id.path.push_back(static_cast<std::uint32_t>(1 + rng.below(9)));
        }
        return id;
    };
    for (int round = 0; round < 500; ++round) {
        AgentId p = agents[rng.below(agents.size())];
        AgentId q = agents[rng.below(agents.size())];
        if (p == q) {
            continue;
        }
        if (q < p) {
            std::swap(p, q);
        }
        std::vector<TxLabel> labels{
            BefriendLabel{p, q},
            UnfriendLabel{p, q},
            MintLabel{p, 1 + rng.below(9)},
            FederateLabel{random_id()},
        };
        const CoinBag x = random_bag(2);
        const CoinBag y = random_bag(2);
        if (x != y) {
            labels.push_back(SwapLabel{p, q, x, y});
        }
        const CommunityId f = random_id();
        const CommunityId g = random_id();
        if (f != g) {
            labels.push_back(JoinLabel{f, g});
            labels.push_back(LeaveLabel{f, g});
        }
        for (const auto& label : labels) {
            CHECK(parse_label(label_str(label)) == label);
        }
    }
}
