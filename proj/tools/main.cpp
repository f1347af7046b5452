// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
//
// Command-line front end: simulate, replay, check, modelcheck, enumerate.
// Exit codes: 0 all checks passed, 1 a check failed (counterexample
// written), 2 usage or I/O error.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "grassroots/checker.hpp"
#include "grassroots/gc.hpp"
#include "grassroots/gf.hpp"
#include "grassroots/gsn.hpp"
#include "grassroots/simulator.hpp"

namespace {

using namespace grassroots;

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot read '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot write '" + path + "'");
    }
    out << text;
}

struct SimulateArgs {
    std::string platform;
    int agent_count = 0;
    std::string agent_list;
    std::uint64_t steps = 0;
    std::uint64_t seed = 0;
    Bounds bounds;
    std::string hooks = "all";
    std::string scenario_path;
    std::string out_path;
    bool quiet = false;
};

int run_simulate(const SimulateArgs& args) {
    Scenario scenario;
    if (!args.scenario_path.empty()) {
        scenario = Scenario::read_file(args.scenario_path);
    } else {
        if (args.platform.empty()) {
            throw ParseError("either --scenario or --platform is required");
        }
        scenario.platform = args.platform;
        (void)platform_for(scenario.platform);
        scenario.agents = args.agent_list.empty() ? default_agents(args.agent_count)
                                                  : parse_agents(args.agent_list);
        scenario.steps = args.steps;
        scenario.seed = args.seed;
        scenario.bounds = args.bounds;
        if (args.hooks == "all") {
            scenario.hooks = hooks_for(scenario.platform);
        } else if (args.hooks == "none") {
            scenario.hooks.clear();
        } else if (args.hooks == "symmetry") {
            scenario.hooks = {Hook::Symmetry};
        } else if (args.hooks == "conservation") {
            scenario.hooks = {Hook::Conservation};
        } else if (args.hooks == "validity") {
            scenario.hooks = {Hook::Validity};
        } else {
            throw ParseError("unknown hook selection '" + args.hooks + "'");
        }
    }

    const SimulationResult result = simulate(scenario);
    std::string out_path = args.out_path;
    if (out_path.empty() && result.hook_failure) {
        out_path = "hook-failure.trace";
    }
    if (!out_path.empty()) {
        result.trace.write_file(out_path);
    }
    if (!args.quiet) {
        std::cout << "platform " << scenario.platform << ", agents "
                  << agents_str(scenario.agents) << ", seed " << scenario.seed << "\n";
        std::cout << "steps taken: " << result.trace.steps.size();
        if (result.dead_end) {
            std::cout << " (dead end)";
        }
        std::cout << "\nfinal digest: " << config_digest(result.final_config) << "\n";
        if (!out_path.empty()) {
            std::cout << "trace written to " << out_path << "\n";
        }
        if (result.hook_failure) {
            std::cout << "invariant violated: " << hook_str(result.hook_failure->hook)
                      << " after step " << result.hook_failure->step << ": "
                      << result.hook_failure->detail << "\n";
        }
    }
    return result.hook_failure ? 1 : 0;
}

int run_replay(const std::string& trace_path, bool quiet) {
    const Trace trace = Trace::read_file(trace_path);
    try {
        const Configuration final_config = replay(trace);
        if (!quiet) {
            std::cout << "valid run, " << trace.steps.size() << " steps\n";
            std::cout << "final configuration:\n" << final_config.str();
        }
        return 0;
    } catch (const ValidationError& error) {
        std::cout << "invalid at step " << error.index << ": " << error.what() << "\n";
        return 1;
    }
}

int run_check(const std::string& trace_path, const std::string& invariants,
              const std::string& out_path, bool quiet) {
    const Trace trace = Trace::read_file(trace_path);
    const Platform& platform = platform_for(trace.platform);

    std::set<std::string> selected;
    if (invariants == "all") {
        if (trace.platform == "gsn") {
            selected = {"symmetry"};
        } else if (trace.platform == "gc") {
            selected = {"conservation"};
        } else {
            selected = {"validity"};
        }
    } else {
        selected.insert(invariants);
    }
    if (selected.count("symmetry") && trace.platform != "gsn") {
        throw ParseError("symmetry applies to gsn traces");
    }
    if (selected.count("conservation") && trace.platform != "gc") {
        throw ParseError("conservation applies to gc traces");
    }
    if (selected.count("validity") && trace.platform != "gf") {
        throw ParseError("validity applies to gf traces");
    }

    bool all_ok = true;
    std::ostringstream lines;

    const RunValidation validation = validate_run(trace, platform);
    if (!validation.ok) {
        lines << "[FAIL] run: step " << validation.fail_index << ": " << validation.reason
              << "\n";
        all_ok = false;
    } else {
        lines << "[PASS] run: " << trace.steps.size() << " steps replay cleanly\n";
        for (const auto& invariant : selected) {
            if (invariant == "symmetry") {
                bool ok = true;
                const auto configs = replay_prefixes(trace);
                for (std::size_t i = 0; i < configs.size() && ok; ++i) {
                    const auto result = gsn::check_symmetry(configs[i]);
                    if (!result.ok) {
                        lines << "[FAIL] symmetry: prefix " << i << ": asymmetric pair ("
                              << result.violation->first.str() << ", "
                              << result.violation->second.str() << ")\n";
                        ok = false;
                    }
                }
                if (ok) {
                    lines << "[PASS] symmetry: every prefix\n";
                } else {
                    all_ok = false;
                }
            } else if (invariant == "conservation") {
                const auto result = gc::check_conservation(trace);
                if (result.ok) {
                    lines << "[PASS] conservation: every prefix\n";
                } else {
                    lines << "[FAIL] conservation: prefix " << *result.step;
                    if (result.minter) {
                        lines << ", minter " << result.minter->str();
                    }
                    lines << "\n";
                    all_ok = false;
                }
            } else if (invariant == "validity") {
                bool ok = true;
                const auto configs = replay_prefixes(trace);
                for (std::size_t i = 0; i < configs.size() && ok; ++i) {
                    const auto result = gf::check_valid(configs[i]);
                    if (!result.ok) {
                        lines << "[FAIL] validity: prefix " << i << ": " << result.reason
                              << "\n";
                        ok = false;
                    }
                }
                if (ok) {
                    lines << "[PASS] validity: every prefix\n";
                } else {
                    all_ok = false;
                }
            } else {
                throw ParseError("unknown invariant '" + invariant + "'");
            }
        }
    }

    if (!quiet) {
        std::cout << lines.str();
    }
    if (!out_path.empty()) {
        write_text_file(out_path, lines.str());
    }
    return all_ok ? 0 : 1;
}

struct ModelcheckArgs {
    std::string platform;
    int group_size = 2;
    int supergroup_size = 3;
    int depth = 2;
    std::string mode;
    Bounds bounds;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 0;
    int witness_depth = 3;
    unsigned jobs = 1;
    std::string out_path;
    bool quiet = false;
};

int run_modelcheck(const ModelcheckArgs& args) {
    const Platform& platform = platform_for(args.platform);
    const AgentSet group = default_agents(args.group_size);
    const AgentSet supergroup = default_agents(args.supergroup_size);

    CheckReport report;
    if (args.mode == "oblivious") {
        report = check_oblivious(platform, group, supergroup, args.depth, args.bounds,
                                 args.jobs);
    } else if (args.mode == "interactive") {
        report = check_interactive_all(platform, group, supergroup, args.depth,
                                       args.witness_depth, args.bounds, args.jobs);
    } else if (args.mode == "transitivity") {
        report = check_closure_transitivity(platform, group, supergroup, args.samples,
                                            args.seed, args.bounds);
    } else if (args.mode == "grassroots") {
        report = check_grassroots(platform, group, supergroup, args.depth,
                                  args.witness_depth, args.bounds, args.jobs);
    } else {
        throw ParseError("unknown mode '" + args.mode + "'");
    }

    std::string out_path = args.out_path;
    if (out_path.empty()) {
        out_path = "modelcheck-" + args.platform + "-" + args.mode + ".json";
    }
    write_text_file(out_path, report.json() + "\n");
    if (report.counterexample) {
        if (report.counterexample->trace_text) {
            write_text_file(out_path + ".cex.trace", *report.counterexample->trace_text);
        } else if (report.counterexample->config_text) {
            write_text_file(out_path + ".cex.config",
                            "gconfig 1 " + args.platform + "\n" +
                                *report.counterexample->config_text);
        }
    }
    if (!args.quiet) {
        std::cout << report.summary() << "\n";
        std::cout << "report written to " << out_path << "\n";
    }
    return report.pass ? 0 : 1;
}

int run_enumerate(const std::string& config_path, const std::string& platform_name,
                  const Bounds& bounds) {
    const auto [file_platform, config] = parse_config_file(read_text_file(config_path));
    if (!platform_name.empty() && platform_name != file_platform) {
        throw ParseError("configuration file is for platform '" + file_platform + "'");
    }
    const Platform& platform = platform_for(file_platform);
    for (const auto& tx : platform.enumerate_enabled(config, bounds)) {
        std::cout << label_str(tx.label()) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"transactions-based distributed transition systems: "
                 "simulator, trace checker and bounded model checker"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* simulate_cmd = app.add_subcommand("simulate", "run a seeded simulation");
    simulate_cmd->add_option("--platform", sim.platform, "gsn, gc or gf");
    simulate_cmd->add_option("--agents", sim.agent_count, "number of agents (a, b, ...)");
    simulate_cmd->add_option("--agent-list", sim.agent_list, "explicit agent names");
    simulate_cmd->add_option("--steps", sim.steps, "random step budget");
    simulate_cmd->add_option("--seed", sim.seed, "64-bit seed");
    simulate_cmd->add_option("--max-mint", sim.bounds.max_mint, "largest mint amount");
    simulate_cmd->add_option("--max-swap-size", sim.bounds.max_swap_size,
                             "largest |x|+|y| in a swap");
    simulate_cmd->add_option("--hooks", sim.hooks,
                             "all, none, symmetry, conservation or validity");
    simulate_cmd->add_option("--scenario", sim.scenario_path, "scenario file");
    simulate_cmd->add_option("--out", sim.out_path, "trace output path");
    simulate_cmd->add_flag("--quiet", sim.quiet, "suppress the summary");

    std::string replay_trace;
    bool replay_quiet = false;
    auto* replay_cmd = app.add_subcommand("replay", "replay and validate a trace");
    replay_cmd->add_option("--trace", replay_trace, "trace file")->required();
    replay_cmd->add_flag("--quiet", replay_quiet, "suppress the final state dump");

    std::string check_trace, check_invariants = "all", check_out;
    bool check_quiet = false;
    auto* check_cmd = app.add_subcommand("check", "check invariants over a trace");
    check_cmd->add_option("--trace", check_trace, "trace file")->required();
    check_cmd->add_option("--invariants", check_invariants,
                          "all, symmetry, conservation or validity");
    check_cmd->add_option("--out", check_out, "report output path");
    check_cmd->add_flag("--quiet", check_quiet, "suppress the summary");

    ModelcheckArgs mc;
    auto* mc_cmd = app.add_subcommand("modelcheck", "bounded grassroots checks");
    mc_cmd->add_option("--platform", mc.platform, "gsn, gc or gf")->required();
    mc_cmd->add_option("--p", mc.group_size, "subgroup size");
    mc_cmd->add_option("--pprime", mc.supergroup_size, "supergroup size");
    mc_cmd->add_option("--depth", mc.depth, "exploration depth");
    mc_cmd->add_option("--mode", mc.mode,
                       "oblivious, interactive, transitivity or grassroots")
        ->required();
    mc_cmd->add_option("--max-mint", mc.bounds.max_mint, "largest mint amount");
    mc_cmd->add_option("--max-swap-size", mc.bounds.max_swap_size,
                       "largest |x|+|y| in a swap");
    mc_cmd->add_option("--samples", mc.samples, "transitivity sample count");
    mc_cmd->add_option("--seed", mc.seed, "sampling seed");
    mc_cmd->add_option("--witness-depth", mc.witness_depth,
                       "interactivity witness search depth");
    mc_cmd->add_option("--jobs", mc.jobs, "worker threads");
    mc_cmd->add_option("--out", mc.out_path, "report output path");
    mc_cmd->add_flag("--quiet", mc.quiet, "suppress the summary");

    std::string enum_config, enum_platform;
    Bounds enum_bounds;
    auto* enum_cmd = app.add_subcommand("enumerate", "list enabled transactions");
    enum_cmd->add_option("--config", enum_config, "configuration file")->required();
    enum_cmd->add_option("--platform", enum_platform, "cross-check the platform tag");
    enum_cmd->add_option("--max-mint", enum_bounds.max_mint, "largest mint amount");
    enum_cmd->add_option("--max-swap-size", enum_bounds.max_swap_size,
                         "largest |x|+|y| in a swap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& error) {
        app.exit(error);
        return 2;
    }

    try {
        if (simulate_cmd->parsed()) {
            return run_simulate(sim);
        }
        if (replay_cmd->parsed()) {
            return run_replay(replay_trace, replay_quiet);
        }
        if (check_cmd->parsed()) {
            return run_check(check_trace, check_invariants, check_out, check_quiet);
        }
        if (mc_cmd->parsed()) {
            return run_modelcheck(mc);
        }
        if (enum_cmd->parsed()) {
            return run_enumerate(enum_config, enum_platform, enum_bounds);
        }
    } catch (const grassroots::Error& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    }
    return 2;
}
