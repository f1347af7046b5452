// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#include <doctest.h>

#include "grassroots/checker.hpp"
#include "grassroots/gc.hpp"
#include "grassroots/gf.hpp"
#include "grassroots/gsn.hpp"
#include "support/fixtures.hpp"

using namespace grassroots;
using grassroots::testing::agent;
using grassroots::testing::make_trace;
using grassroots::testing::OutsiderGatedGsn;

TEST_CASE("reachable explores breadth-first with structural deduplication") {
    const Platform& gsn_platform = platform_for("gsn");
    // Two agents: the initial configuration and the mutual friendship.
    CHECK(reachable(gsn_platform, default_agents(2), 1, Bounds{}).size() == 2);
    CHECK(reachable(gsn_platform, default_agents(2), 2, Bounds{}).size() == 2);

    const Platform& gc_platform = platform_for("gc");
    CHECK(reachable(gc_platform, default_agents(1), 1, Bounds{2, 2}).size() == 3);

    // Three agents, depth three: every friendship graph with up to three
    // edges is reachable; with three agents that is all eight of them.
    CHECK(reachable(gsn_platform, default_agents(3), 3, Bounds{}).size() == 8);
}

TEST_CASE("reachable guardrails fail loudly") {
    const Platform& platform = platform_for("gsn");
    CHECK_THROWS_AS(reachable(platform, default_agents(6), 1, Bounds{}), LimitError);
    CHECK_THROWS_AS(reachable(platform, default_agents(2), 7, Bounds{}), LimitError);
}

TEST_CASE("reachable paths replay as runs") {
    for (const char* name : {"gsn", "gc", "gf"}) {
        const Platform& platform = platform_for(name);
        const Bounds bounds{1, 2};
        for (const auto& node : reachable(platform, default_agents(2), 3, bounds)) {
            Trace trace;
            trace.platform = name;
            trace.agents = default_agents(2);
            Configuration current = platform.initial_config(trace.agents);
            for (const auto& label : node.path) {
                const Transaction tx = platform.make(label, current);
                current = lift(tx, current).after;
                trace.steps.push_back(
                    TraceStep{label, tx.participants(), std::nullopt});
            }
            CHECK(validate_run(trace, platform).ok);
            CHECK(current == node.config);
        }
    }
}

TEST_CASE("group containment looks at referenced agents") {
    const Platform& gsn_platform = platform_for("gsn");
    std::map<AgentId, LocalState> states;
    states.emplace(agent("p"), FriendSet{agent("q")});
    const Configuration lonely{std::move(states)};
    CHECK_FALSE(in_cp(gsn_platform, lonely, {agent("p")}));

    const Platform& gc_platform = platform_for("gc");
    std::map<AgentId, LocalState> coins;
    coins.emplace(agent("p"), CoinBag::single(agent("p"), 2));
    coins.emplace(agent("q"), CoinBag::single(agent("p"), 1));
    const Configuration funded{std::move(coins)};
    CHECK(in_cp(gc_platform, funded, {agent("p"), agent("q")}));

    const Platform& gf_platform = platform_for("gf");
    const Configuration initial = gf_platform.initial_config(default_agents(3));
    CHECK(in_cp(gf_platform, project(initial, default_agents(2)), default_agents(2)));

    CHECK_THROWS_AS(in_cp(gsn_platform, lonely, {agent("z")}), DomainError);
}

TEST_CASE("states expressible within a group stay expressible in any larger one") {
    const Platform& platform = platform_for("gsn");
    const AgentSet four = default_agents(4);
    for (const auto& node : reachable(platform, four, 2, Bounds{})) {
        for (int size = 2; size <= 3; ++size) {
            const AgentSet small = default_agents(size);
            const AgentSet larger = default_agents(size + 1);
            for (const auto& [who, state] : node.config) {
                if (is_subset(platform.refs(state), small)) {
                    CHECK(is_subset(platform.refs(state), larger));
                }
            }
            // Group containment restricted to the same members is monotone.
            bool members_clean = true;
            for (const auto& who : small) {
                members_clean =
                    members_clean && is_subset(platform.refs(node.config.at(who)), small);
            }
            if (members_clean) {
                for (const auto& who : small) {
                    CHECK(is_subset(platform.refs(node.config.at(who)), larger));
                }
            }
        }
    }
}

TEST_CASE("transaction scope covers participants and referenced agents") {
    const Platform& gc_platform = platform_for("gc");
    const Configuration initial = gc_platform.initial_config(default_agents(2));
    const Transaction mint_tx = gc::mint(agent("a"), 1, initial);
    CHECK(transaction_scope(gc_platform, mint_tx) == AgentSet{agent("a")});
    CHECK(in_rp(gc_platform, mint_tx, {agent("a")}));

    const Configuration funded =
        apply_label(gc_platform, initial, parse_label("mint b 1"));
    const Transaction swap_tx = gc_platform.make(parse_label("swap a b x= y=b:1"), funded);
    CHECK(transaction_scope(gc_platform, swap_tx) == AgentSet{agent("a"), agent("b")});

    const Platform& gf_platform = platform_for("gf");
    const Configuration gf_initial = gf_platform.initial_config(default_agents(2));
    const Transaction join_tx = gf::join(CommunityId::parse("b"), CommunityId::parse("a"),
                                         gf_initial);
    CHECK(transaction_scope(gf_platform, join_tx) == AgentSet{agent("a"), agent("b")});
}

TEST_CASE("the shipped platforms are oblivious at desk scale") {
    const AgentSet group = default_agents(2);
    const AgentSet supergroup = default_agents(3);

    const auto gsn_report =
        check_oblivious(platform_for("gsn"), group, supergroup, 2, Bounds{});
    CHECK(gsn_report.pass);
    CHECK(gsn_report.instances > 0);

    const auto gc_report = check_oblivious(platform_for("gc"), default_agents(1),
                                           default_agents(2), 2, Bounds{1, 2});
    CHECK(gc_report.pass);

    const auto gf_report =
        check_oblivious(platform_for("gf"), group, supergroup, 2, Bounds{});
    CHECK(gf_report.pass);
}

TEST_CASE("a guard that inspects outsiders breaks obliviousness") {
    const OutsiderGatedGsn gated;
    const auto report =
        check_oblivious(gated, default_agents(2), default_agents(4), 2, Bounds{});
    CHECK_FALSE(report.pass);
    REQUIRE(report.counterexample.has_value());
    CHECK(report.counterexample->label_text.has_value());
    CHECK(report.counterexample->config_text.has_value());
}

TEST_CASE("interactivity witnesses stay within the platform bounds") {
    const AgentSet group = default_agents(2);
    const AgentSet supergroup = default_agents(3);

    const auto gsn_report = check_interactive_all(platform_for("gsn"), group, supergroup,
                                                  2, 3, Bounds{});
    CHECK(gsn_report.pass);
    CHECK(*gsn_report.max_witness_len <= 1);

    const auto gc_report = check_interactive_all(platform_for("gc"), group, supergroup,
                                                 2, 3, Bounds{1, 2});
    CHECK(gc_report.pass);
    CHECK(*gc_report.max_witness_len <= 3);

    const auto gf_report = check_interactive_all(platform_for("gf"), group, supergroup,
                                                 2, 3, Bounds{});
    CHECK(gf_report.pass);
    CHECK(*gf_report.max_witness_len <= 1);
}

TEST_CASE("a single qualifying configuration yields a witness computation") {
    const Platform& platform = platform_for("gsn");
    const AgentSet supergroup = default_agents(3);
    const Configuration initial = platform.initial_config(supergroup);
    const auto report = check_interactive(platform, default_agents(2), supergroup,
                                          initial, 3, Bounds{});
    CHECK(report.pass);
    CHECK(*report.max_witness_len == 1);

    // A configuration that already has alien traces is out of scope.
    const Configuration crossed =
        apply_label(platform, initial, parse_label("befriend a c"));
    CHECK_THROWS_AS(check_interactive(platform, default_agents(2), supergroup, crossed,
                                      3, Bounds{}),
                    DomainError);
}

TEST_CASE("closure transitivity holds on sampled instances") {
    const AgentSet group = default_agents(2);
    const AgentSet supergroup = default_agents(4);
    for (const char* name : {"gsn", "gc", "gf"}) {
        const auto report = check_closure_transitivity(platform_for(name), group,
                                                       supergroup, 300, 7, Bounds{2, 2});
        CHECK(report.pass);
        CHECK(report.instances == 300);
    }
}

TEST_CASE("grassroots = oblivious + interactive") {
    for (const char* name : {"gsn", "gc", "gf"}) {
        const Bounds bounds{1, 2};
        const auto report = check_grassroots(platform_for(name), default_agents(2),
                                             default_agents(3), 2, 3, bounds);
        CHECK(report.pass);
    }
    const OutsiderGatedGsn gated;
    const auto report =
        check_grassroots(gated, default_agents(2), default_agents(4), 2, 3, Bounds{});
    CHECK_FALSE(report.pass);
    CHECK(report.note == "oblivious check failed");
}

TEST_CASE("worker count does not change the verdict or the counterexample") {
    const OutsiderGatedGsn gated;
    const auto serial =
        check_oblivious(gated, default_agents(2), default_agents(4), 2, Bounds{}, 1);
    const auto parallel =
        check_oblivious(gated, default_agents(2), default_agents(4), 2, Bounds{}, 4);
    CHECK(serial.pass == parallel.pass);
    CHECK(serial.instances == parallel.instances);
    CHECK(serial.counterexample->config_text == parallel.counterexample->config_text);
    CHECK(serial.counterexample->label_text == parallel.counterexample->label_text);

    const auto honest_serial = check_grassroots(platform_for("gf"), default_agents(2),
                                                default_agents(3), 2, 3, Bounds{}, 1);
    const auto honest_parallel = check_grassroots(platform_for("gf"), default_agents(2),
                                                  default_agents(3), 2, 3, Bounds{}, 4);
    CHECK(honest_serial.pass == honest_parallel.pass);
    CHECK(honest_serial.instances == honest_parallel.instances);
}

TEST_CASE("reports carry a machine-readable record") {
    const auto report = check_oblivious(platform_for("gsn"), default_agents(2),
                                        default_agents(3), 1, Bounds{});
    const std::string json = report.json();
    CHECK(json.find("\"verdict\": \"pass\"") != std::string::npos);
    CHECK(json.find("\"check\": \"oblivious\"") != std::string::npos);
    CHECK(report.summary().rfind("[PASS]", 0) == 0);

    CHECK_THROWS_AS(check_oblivious(platform_for("gsn"), default_agents(3),
                                    default_agents(3), 1, Bounds{}),
                    DomainError);
}
