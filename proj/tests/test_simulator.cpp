// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#include <doctest.h>

#include "grassroots/simulator.hpp"
#include "support/fixtures.hpp"

using namespace grassroots;
using grassroots::testing::agent;

TEST_CASE("splitmix64 matches the reference sequence") {
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
    CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
    CHECK(rng.next() == 0x06C45D188009454FULL);

    SplitMix64 seeded(1234567);
    CHECK(seeded.next() == 0x599ED017FB08FC85ULL);

    SplitMix64 bounded(42);
    for (int i = 0; i < 1000; ++i) {
        CHECK(bounded.below(7) < 7);
    }
    CHECK_THROWS_AS(bounded.below(0), DomainError);
}

TEST_CASE("identical scenarios give byte-identical traces") {
    for (const char* platform : {"gsn", "gc", "gf"}) {
        Scenario scenario;
        scenario.platform = platform;
        scenario.agents = default_agents(4);
        scenario.steps = 30;
        scenario.seed = 2024;
        scenario.bounds = Bounds{3, 3};
        const SimulationResult first = simulate(scenario);
        const SimulationResult second = simulate(scenario);
        CHECK(first.trace.str() == second.trace.str());
        CHECK(first.final_config == second.final_config);
    }
}

TEST_CASE("zero budget stays at the initial configuration") {
    Scenario scenario;
    scenario.platform = "gsn";
    scenario.agents = default_agents(3);
    scenario.steps = 0;
    scenario.seed = 5;
    const SimulationResult result = simulate(scenario);
    CHECK(result.trace.steps.empty());
    CHECK(result.final_config == platform_for("gsn").initial_config(scenario.agents));
}

TEST_CASE("two agents with one move take it") {
    Scenario scenario;
    scenario.platform = "gsn";
    scenario.agents = default_agents(2);
    scenario.steps = 1;
    scenario.seed = 99;
    const SimulationResult result = simulate(scenario);
    REQUIRE(result.trace.steps.size() == 1);
    CHECK(label_str(result.trace.steps[0].label) == "befriend a b");
}

TEST_CASE("degenerate bounds dead-end immediately") {
    Scenario scenario;
    scenario.platform = "gc";
    scenario.agents = default_agents(1);
    scenario.steps = 10;
    scenario.seed = 3;
    scenario.bounds = Bounds{0, 0};
    scenario.hooks.clear();
    const SimulationResult result = simulate(scenario);
    CHECK(result.dead_end);
    CHECK(result.trace.steps.empty());
}

TEST_CASE("the step choice is a pure function of enumeration order and seed") {
    Scenario scenario;
    scenario.platform = "gc";
    scenario.agents = default_agents(3);
    scenario.steps = 15;
    scenario.seed = 321;
    scenario.bounds = Bounds{2, 2};
    const SimulationResult result = simulate(scenario);

    const Platform& platform = platform_for("gc");
    SplitMix64 rng(scenario.seed);
    Configuration current = platform.initial_config(scenario.agents);
    for (const auto& step : result.trace.steps) {
        const auto labels = platform.enumerate_labels(current, scenario.bounds);
        const TxLabel expected = labels[rng.below(labels.size())];
        CHECK(expected == step.label);
        current = apply_label(platform, current, expected);
    }
}

TEST_CASE("scripted prefixes run first and bad ones carry their index") {
    Scenario scenario;
    scenario.platform = "gsn";
    scenario.agents = default_agents(3);
    scenario.steps = 0;
    scenario.prefix = {parse_label("befriend a b"), parse_label("unfriend a b")};
    const SimulationResult result = simulate(scenario);
    CHECK(result.trace.steps.size() == 2);
    CHECK(result.final_config == platform_for("gsn").initial_config(scenario.agents));

    scenario.prefix.push_back(parse_label("unfriend a c"));
    try {
        (void)simulate(scenario);
        FAIL("disabled scripted step should throw");
    } catch (const ValidationError& error) {
        CHECK(error.index == 2);
    }
}

TEST_CASE("scenarios round-trip through their text form") {
    Scenario scenario;
    scenario.platform = "gc";
    scenario.agents = default_agents(4);
    scenario.seed = 77;
    scenario.steps = 40;
    scenario.bounds = Bounds{3, 2};
    scenario.hooks = {Hook::Conservation};
    scenario.prefix = {parse_label("mint a 2")};
    const Scenario parsed = Scenario::parse(scenario.str());
    CHECK(parsed.platform == scenario.platform);
    CHECK(parsed.agents == scenario.agents);
    CHECK(parsed.seed == scenario.seed);
    CHECK(parsed.steps == scenario.steps);
    CHECK(parsed.bounds.max_mint == 3);
    CHECK(parsed.bounds.max_swap_size == 2);
    CHECK(parsed.hooks == scenario.hooks);
    CHECK(parsed.prefix == scenario.prefix);
    CHECK(simulate(parsed).trace.str() == simulate(scenario).trace.str());
}

TEST_CASE("scenario parser handles counts, comments and defaults") {
    const Scenario scenario = Scenario::parse("gscenario 1\n"
                                              "platform gsn\n"
                                              "agents 4   # a,b,c,d\n"
                                              "seed 9\n"
                                              "steps 5\n");
    CHECK(scenario.agents == default_agents(4));
    CHECK(scenario.hooks == std::set<Hook>{Hook::Symmetry}); // platform default
    CHECK_THROWS_AS(Scenario::parse("gscenario 1\nagents 2\n"), ParseError);
    CHECK_THROWS_AS(Scenario::parse("nonsense\n"), ParseError);
}
