// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#include <doctest.h>

#include "grassroots/simulator.hpp"
#include "support/fixtures.hpp"

using namespace grassroots;
using grassroots::testing::agent;
using grassroots::testing::make_trace;

TEST_CASE("labels round-trip through their text form") {
    for (const char* text : {
             "befriend a b",
             "unfriend a b",
             "mint a 3",
             "swap a b x=a:1 y=",
             "swap a b x= y=b:2",
             "swap a b x=a:1,b:2 y=c:1",
             "federate a/1",
             "join a/1 b",
             "leave a/1/2 b/1",
         }) {
        CHECK(label_str(parse_label(text)) == text);
    }
    // Binary labels normalize to agent order.
    CHECK(label_str(parse_label("befriend b a")) == "befriend a b");
    CHECK(label_str(parse_label("swap b a x=b:1 y=a:2")) == "swap a b x=a:2 y=b:1");
    CHECK_THROWS_AS(parse_label("befriend a a"), ParseError);
    CHECK_THROWS_AS(parse_label("frobnicate a"), ParseError);
    CHECK_THROWS_AS(parse_label("mint a"), ParseError);
}

TEST_CASE("traces round-trip through their text form") {
    Scenario scenario;
    scenario.platform = "gc";
    scenario.agents = default_agents(3);
    scenario.steps = 25;
    scenario.seed = 12;
    scenario.bounds = Bounds{2, 2};
    const SimulationResult result = simulate(scenario);
    const std::string text = result.trace.str();
    const Trace parsed = Trace::parse(text);
    CHECK(parsed.platform == result.trace.platform);
    CHECK(parsed.agents == result.trace.agents);
    CHECK(parsed.seed == result.trace.seed);
    CHECK(parsed.steps == result.trace.steps);
    CHECK(parsed.str() == text);
}

TEST_CASE("trace parsing rejects malformed input") {
    CHECK_THROWS_AS(Trace::parse(""), ParseError);
    CHECK_THROWS_AS(Trace::parse("gtrace 2 gsn a,b 0\n"), ParseError);
    CHECK_THROWS_AS(Trace::parse("gtrace 1 nosuch a,b 0\n"), DomainError);
    CHECK_THROWS_AS(Trace::parse("gtrace 1 gsn a,b 0\n1 | befriend a b | a,b\n"),
                    ParseError); // step indices must start at 0
    CHECK_THROWS_AS(Trace::parse("gtrace 1 gsn a,b 0\n0 | befriend a b\n"), ParseError);
}

TEST_CASE("validate_run flags digests, participants and foreign steps") {
    const AgentSet ab = default_agents(2);
    const Platform& gsn_platform = platform_for("gsn");

    Trace wrong_digest = make_trace("gsn", ab, {"befriend a b"});
    wrong_digest.steps[0].digest = "0000000000000000";
    auto result = validate_run(wrong_digest, gsn_platform);
    CHECK_FALSE(result.ok);
    CHECK(result.fail_index == 0);

    Trace wrong_parties = make_trace("gsn", ab, {"befriend a b"});
    wrong_parties.steps[0].participants = {agent("a")};
    result = validate_run(wrong_parties, gsn_platform);
    CHECK_FALSE(result.ok);
    CHECK(result.fail_index == 0);

    Trace foreign = make_trace("gsn", ab, {});
    foreign.steps.push_back(
        TraceStep{parse_label("mint a 1"), {agent("a")}, std::nullopt});
    result = validate_run(foreign, gsn_platform);
    CHECK_FALSE(result.ok);
    CHECK(result.fail_index == 0);

    Trace outsider = make_trace("gsn", ab, {});
    outsider.steps.push_back(
        TraceStep{parse_label("befriend a z"), {agent("a"), agent("z")}, std::nullopt});
    result = validate_run(outsider, gsn_platform);
    CHECK_FALSE(result.ok);
    CHECK(result.fail_index == 0);
}

TEST_CASE("replay reports the earliest disabled step") {
    const AgentSet ab = default_agents(2);
    Trace trace = make_trace("gc", ab, {"mint a 1", "swap a b x=a:1 y="});
    trace.steps.push_back(TraceStep{parse_label("swap a b x=a:1 y="),
                                    {agent("a"), agent("b")},
                                    std::nullopt});
    try {
        (void)replay(trace);
        FAIL("replay should have thrown");
    } catch (const ValidationError& error) {
        CHECK(error.index == 2);
    }
}

TEST_CASE("simulated traces replay to the simulated final configuration") {
    for (const char* platform : {"gsn", "gc", "gf"}) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            Scenario scenario;
            scenario.platform = platform;
            scenario.agents = default_agents(3 + seed % 3);
            scenario.steps = 20;
            scenario.seed = seed * 7919 + 1;
            scenario.bounds = Bounds{2, 2};
            const SimulationResult result = simulate(scenario);
            REQUIRE_FALSE(result.hook_failure.has_value());
            CHECK(validate_run(result.trace, platform_for(platform)).ok);
            CHECK(replay(result.trace) == result.final_config);
        }
    }
}
