// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#include "grassroots/simulator.hpp"

#include <fstream>
#include <sstream>

#include "grassroots/gc.hpp"
#include "grassroots/gf.hpp"
#include "grassroots/gsn.hpp"

namespace grassroots {

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) {
    if (n == 0) {
        throw DomainError("uniform draw from an empty range");
    }
    const std::uint64_t threshold = (0 - n) % n; // 2^64 mod n
    for (;;) {
        const std::uint64_t draw = next();
        if (draw >= threshold) {
            return draw % n;
        }
    }
}

std::string hook_str(Hook hook) {
    switch (hook) {
    case Hook::Symmetry:
        return "symmetry";
    case Hook::Conservation:
        return "conservation";
    case Hook::Validity:
        return "validity";
    }
    return "?";
}

std::set<Hook> hooks_for(const std::string& platform) {
    if (platform == "gsn") {
        return {Hook::Symmetry};
    }
    if (platform == "gc") {
        return {Hook::Conservation};
    }
    if (platform == "gf") {
        return {Hook::Validity};
    }
    throw DomainError("unknown platform '" + platform + "'");
}

std::string Scenario::str() const {
    std::ostringstream out;
    out << "gscenario 1\n";
    out << "platform " << platform << '\n';
    out << "agents " << agents_str(agents) << '\n';
    out << "seed " << seed << '\n';
    out << "steps " << steps << '\n';
    out << "max-mint " << bounds.max_mint << '\n';
    out << "max-swap-size " << bounds.max_swap_size << '\n';
    if (hooks.empty()) {
        out << "hooks none\n";
    } else {
        for (Hook hook : hooks) {
            out << "hooks " << hook_str(hook) << '\n';
        }
    }
    for (const auto& label : prefix) {
        out << "prefix " << label_str(label) << '\n';
    }
    return out.str();
}

Scenario Scenario::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.substr(0, line.find_last_not_of(" \t\r") + 1) !=
                                       "gscenario 1") {
        throw ParseError("bad scenario header");
    }
    Scenario scenario;
    bool hooks_set = false;
    bool hooks_all = false;
    bool platform_set = false;
    while (std::getline(in, line)) {
        auto comment = line.find('#');
        if (comment != std::string::npos) {
            line = line.substr(0, comment);
        }
        std::istringstream fields(line);
        std::string key;
        if (!(fields >> key)) {
            continue;
        }
        if (key == "platform") {
            fields >> scenario.platform;
            (void)platform_for(scenario.platform);
            platform_set = true;
        } else if (key == "agents") {
            std::string value;
            fields >> value;
            if (!value.empty() && value.find(',') == std::string::npos &&
                std::isdigit(static_cast<unsigned char>(value[0]))) {
                scenario.agents = default_agents(std::stoi(value));
            } else {
                scenario.agents = parse_agents(value);
            }
        } else if (key == "seed") {
            fields >> scenario.seed;
        } else if (key == "steps") {
            fields >> scenario.steps;
        } else if (key == "max-mint") {
            fields >> scenario.bounds.max_mint;
        } else if (key == "max-swap-size") {
            fields >> scenario.bounds.max_swap_size;
        } else if (key == "hooks") {
            std::string value;
            fields >> value;
            hooks_set = true;
            if (value == "none") {
                scenario.hooks.clear();
                hooks_all = false;
            } else if (value == "all") {
                hooks_all = true;
            } else if (value == "symmetry") {
                scenario.hooks.insert(Hook::Symmetry);
            } else if (value == "conservation") {
                scenario.hooks.insert(Hook::Conservation);
            } else if (value == "validity") {
                scenario.hooks.insert(Hook::Validity);
            } else {
                throw ParseError("unknown hook '" + value + "'");
            }
        } else if (key == "prefix") {
            std::string rest;
            std::getline(fields, rest);
            scenario.prefix.push_back(parse_label(rest));
        } else {
            throw ParseError("unknown scenario key '" + key + "'");
        }
    }
    if (!platform_set) {
        throw ParseError("scenario has no platform");
    }
    if (scenario.agents.empty()) {
        throw ParseError("scenario has no agents");
    }
    if (!hooks_set || hooks_all) {
        auto defaults = hooks_for(scenario.platform);
        scenario.hooks.insert(defaults.begin(), defaults.end());
    }
    return scenario;
}

Scenario Scenario::read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot read scenario file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

namespace {

// Incremental conservation watch: total coins per minter must equal what
// that minter has put in circulation.
struct MintedTally {
    std::map<AgentId, std::uint64_t> totals;

    void record(const TxLabel& label) {
        if (const auto* m = std::get_if<MintLabel>(&label)) {
            totals[m->minter] += m->amount;
        }
    }

    std::optional<AgentId> divergent(const Configuration& config) const {
        for (const auto& [agent, state] : config) {
            auto it = totals.find(agent);
            const std::uint64_t expected = it == totals.end() ? 0 : it->second;
            if (gc::coin_count(config, agent) != expected) {
                return agent;
            }
        }
        return std::nullopt;
    }
};

std::optional<HookFailure> run_hooks(const std::set<Hook>& hooks,
                                     const Configuration& config,
                                     const MintedTally& tally, std::size_t step) {
    for (Hook hook : hooks) {
        switch (hook) {
        case Hook::Symmetry: {
            auto result = gsn::check_symmetry(config);
            if (!result.ok) {
                return HookFailure{hook, step,
                                   "asymmetric pair (" + result.violation->first.str() +
                                       ", " + result.violation->second.str() + ")"};
            }
            break;
        }
        case Hook::Conservation: {
            if (auto agent = tally.divergent(config)) {
                return HookFailure{hook, step,
                                   "circulating " + agent->str() +
                                       "-coins differ from the minted total"};
            }
            break;
        }
        case Hook::Validity: {
            auto result = gf::check_valid(config);
            if (!result.ok) {
                return HookFailure{hook, step, result.reason};
            }
            break;
        }
        }
    }
    return std::nullopt;
}

} // namespace

SimulationResult simulate(const Scenario& scenario) {
    const Platform& platform = platform_for(scenario.platform);
    SimulationResult result{Trace{scenario.platform, scenario.agents, scenario.seed, {}},
                            platform.initial_config(scenario.agents), std::nullopt,
                            false};
    MintedTally tally;
    SplitMix64 rng(scenario.seed);

    auto take_step = [&](const TxLabel& label, std::size_t index, bool scripted) {
        Transaction tx = [&] {
            try {
                return platform.make(label, result.final_config);
            } catch (const Error& error) {
                if (scripted) {
                    throw ValidationError("scripted step " + std::to_string(index) +
                                              ": " + error.what(),
                                          index);
                }
                throw;
            }
        }();
        result.final_config = lift(tx, result.final_config).after;
        tally.record(label);
        result.trace.steps.push_back(TraceStep{label, tx.participants(),
                                               config_digest(result.final_config)});
    };

    if (auto failure = run_hooks(scenario.hooks, result.final_config, tally, 0)) {
        result.hook_failure = failure;
        return result;
    }
    for (std::size_t i = 0; i < scenario.prefix.size(); ++i) {
        take_step(scenario.prefix[i], i, true);
        if (auto failure = run_hooks(scenario.hooks, result.final_config, tally,
                                     result.trace.steps.size())) {
            result.hook_failure = failure;
            return result;
        }
    }
    while (result.trace.steps.size() < scenario.prefix.size() + scenario.steps) {
        const std::uint64_t enabled =
            platform.count_enabled(result.final_config, scenario.bounds);
        if (enabled == 0) {
            result.dead_end = true;
            break;
        }
        const TxLabel label =
            platform.nth_enabled(result.final_config, scenario.bounds, rng.below(enabled));
        take_step(label, result.trace.steps.size(), false);
        if (auto failure = run_hooks(scenario.hooks, result.final_config, tally,
                                     result.trace.steps.size())) {
            result.hook_failure = failure;
            return result;
        }
    }
    return result;
}

} // namespace grassroots
