// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "grassroots/checker.hpp"
#include "grassroots/gc.hpp"
#include "grassroots/gf.hpp"
#include "grassroots/gsn.hpp"
#include "grassroots/simulator.hpp"

namespace py = pybind11;
using namespace grassroots;

namespace {

// Configurations cross the boundary as {agent: state-string} dicts and
// labels as their text form; everything round-trips through the same
// canonical serializations the trace and configuration files use.

Configuration config_from_dict(const py::dict& states) {
    std::map<AgentId, LocalState> parsed;
    for (const auto& [key, value] : states) {
        parsed.emplace(AgentId(py::cast<std::string>(key)),
                       parse_state(py::cast<std::string>(value)));
    }
    return Configuration(std::move(parsed));
}

py::dict config_to_dict(const Configuration& config) {
    py::dict result;
    for (const auto& [agent, state] : config) {
        result[py::str(agent.str())] = state_str(state);
    }
    return result;
}

AgentSet agents_from_any(const py::object& value) {
    if (py::isinstance<py::int_>(value)) {
        return default_agents(py::cast<int>(value));
    }
    AgentSet agents;
    for (const auto& item : value) {
        agents.insert(AgentId(py::cast<std::string>(item)));
    }
    return agents;
}

std::set<Hook> hooks_from_string(const std::string& spec, const std::string& platform) {
    if (spec == "all") {
        return hooks_for(platform);
    }
    if (spec == "none") {
        return {};
    }
    if (spec == "symmetry") {
        return {Hook::Symmetry};
    }
    if (spec == "conservation") {
        return {Hook::Conservation};
    }
    if (spec == "validity") {
        return {Hook::Validity};
    }
    throw DomainError("unknown hook selection '" + spec + "'");
}

py::dict report_to_dict(const CheckReport& report) {
    py::dict result;
    result["check"] = report.check;
    result["platform"] = report.platform;
    result["p"] = agents_str(report.group);
    result["pprime"] = agents_str(report.supergroup);
    result["pass"] = report.pass;
    result["instances"] = report.instances;
    result["depth"] = report.depth;
    if (report.max_witness_len) {
        result["max_witness_len"] = *report.max_witness_len;
    }
    if (!report.note.empty()) {
        result["note"] = report.note;
    }
    if (report.counterexample) {
        py::dict cex;
        if (report.counterexample->config_text) {
            cex["config"] = *report.counterexample->config_text;
        }
        if (report.counterexample->label_text) {
            cex["label"] = *report.counterexample->label_text;
        }
        cex["detail"] = report.counterexample->detail;
        result["counterexample"] = cex;
    } else {
        result["counterexample"] = py::none();
    }
    return result;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Transactions-based distributed transition systems: three "
              "platforms, a deterministic simulator and a bounded checker.";

    py::register_exception<Error>(m, "GrassrootsError");

    m.def("platforms", &platform_names, "Names of the shipped platforms.");

    m.def(
        "initial_config",
        [](const std::string& platform, const py::object& agents) {
            return config_to_dict(
                platform_for(platform).initial_config(agents_from_any(agents)));
        },
        py::arg("platform"), py::arg("agents"));

    m.def(
        "enumerate_enabled",
        [](const std::string& platform, const py::dict& config, std::uint64_t max_mint,
           std::uint64_t max_swap_size) {
            std::vector<std::string> labels;
            for (const auto& tx : platform_for(platform).enumerate_enabled(
                     config_from_dict(config), Bounds{max_mint, max_swap_size})) {
                labels.push_back(label_str(tx.label()));
            }
            return labels;
        },
        py::arg("platform"), py::arg("config"), py::arg("max_mint") = 2,
        py::arg("max_swap_size") = 2);

    m.def(
        "is_enabled",
        [](const std::string& platform, const py::dict& config, const std::string& label) {
            const Platform& impl = platform_for(platform);
            const Configuration parsed = config_from_dict(config);
            try {
                return is_enabled(impl, parsed, impl.make(parse_label(label), parsed));
            } catch (const NotEnabledError&) {
                return false;
            } catch (const GuardError&) {
                return false;
            } catch (const NoOpError&) {
                return false;
            } catch (const OrderError&) {
                return false;
            }
        },
        py::arg("platform"), py::arg("config"), py::arg("label"));

    m.def(
        "apply",
        [](const std::string& platform, const py::dict& config, const std::string& label) {
            return config_to_dict(apply_label(platform_for(platform),
                                              config_from_dict(config),
                                              parse_label(label)));
        },
        py::arg("platform"), py::arg("config"), py::arg("label"));

    m.def(
        "project",
        [](const py::dict& config, const std::vector<std::string>& agents) {
            AgentSet target;
            for (const auto& agent : agents) {
                target.insert(AgentId(agent));
            }
            return config_to_dict(project(config_from_dict(config), target));
        },
        py::arg("config"), py::arg("agents"));

    m.def(
        "simulate",
        [](const std::string& platform, const py::object& agents, std::uint64_t steps,
           std::uint64_t seed, std::uint64_t max_mint, std::uint64_t max_swap_size,
           const std::string& hooks) {
            Scenario scenario;
            scenario.platform = platform;
            (void)platform_for(platform);
            scenario.agents = agents_from_any(agents);
            scenario.steps = steps;
            scenario.seed = seed;
            scenario.bounds = Bounds{max_mint, max_swap_size};
            scenario.hooks = hooks_from_string(hooks, platform);
            const SimulationResult result = simulate(scenario);
            py::dict out;
            out["trace"] = result.trace.str();
            out["final"] = config_to_dict(result.final_config);
            out["steps"] = result.trace.steps.size();
            out["dead_end"] = result.dead_end;
            if (result.hook_failure) {
                py::dict failure;
                failure["hook"] = hook_str(result.hook_failure->hook);
                failure["step"] = result.hook_failure->step;
                failure["detail"] = result.hook_failure->detail;
                out["hook_failure"] = failure;
            } else {
                out["hook_failure"] = py::none();
            }
            return out;
        },
        py::arg("platform"), py::arg("agents"), py::arg("steps"), py::arg("seed"),
        py::arg("max_mint") = 2, py::arg("max_swap_size") = 2, py::arg("hooks") = "all");

    m.def(
        "replay",
        [](const std::string& trace_text) {
            return config_to_dict(replay(Trace::parse(trace_text)));
        },
        py::arg("trace"));

    m.def(
        "validate_run",
        [](const std::string& trace_text) {
            const Trace trace = Trace::parse(trace_text);
            const RunValidation result = validate_run(trace, platform_for(trace.platform));
            return py::make_tuple(result.ok, result.fail_index, result.reason);
        },
        py::arg("trace"));

    m.def(
        "check_symmetry",
        [](const py::dict& config) -> py::tuple {
            const auto result = gsn::check_symmetry(config_from_dict(config));
            if (result.ok) {
                return py::make_tuple(true, py::none());
            }
            return py::make_tuple(false,
                                  py::make_tuple(result.violation->first.str(),
                                                 result.violation->second.str()));
        },
        py::arg("config"));

    m.def(
        "check_conservation",
        [](const std::string& trace_text) -> py::tuple {
            const auto result = gc::check_conservation(Trace::parse(trace_text));
            if (result.ok) {
                return py::make_tuple(true, py::none(), py::none());
            }
            return py::make_tuple(false, *result.step, result.minter->str());
        },
        py::arg("trace"));

    m.def(
        "check_valid",
        [](const py::dict& config) -> py::tuple {
            const auto result = gf::check_valid(config_from_dict(config));
            if (result.ok) {
                return py::make_tuple(true, py::none());
            }
            return py::make_tuple(false, result.reason);
        },
        py::arg("config"));

    m.def(
        "classify_swap",
        [](const std::string& label) {
            const TxLabel parsed = parse_label(label);
            const auto* swap = std::get_if<SwapLabel>(&parsed);
            if (swap == nullptr) {
                throw DomainError("not a swap label: '" + label + "'");
            }
            return gc::swap_kind_str(
                gc::classify_swap(gc::SwapSpec{swap->p_gives, swap->q_gives}, swap->p,
                                  swap->q));
        },
        py::arg("label"));

    m.def(
        "modelcheck",
        [](const std::string& platform, int p, int pprime, int depth,
           const std::string& mode, std::uint64_t max_mint, std::uint64_t max_swap_size,
           std::uint64_t samples, std::uint64_t seed, int witness_depth, unsigned jobs) {
            const Platform& impl = platform_for(platform);
            const AgentSet group = default_agents(p);
            const AgentSet supergroup = default_agents(pprime);
            const Bounds bounds{max_mint, max_swap_size};
            CheckReport report;
            if (mode == "oblivious") {
                report = check_oblivious(impl, group, supergroup, depth, bounds, jobs);
            } else if (mode == "interactive") {
                report = check_interactive_all(impl, group, supergroup, depth,
                                               witness_depth, bounds, jobs);
            } else if (mode == "transitivity") {
                report = check_closure_transitivity(impl, group, supergroup, samples,
                                                    seed, bounds);
            } else if (mode == "grassroots") {
                report = check_grassroots(impl, group, supergroup, depth, witness_depth,
                                          bounds, jobs);
            } else {
                throw DomainError("unknown mode '" + mode + "'");
            }
            return report_to_dict(report);
        },
        py::arg("platform"), py::arg("p") = 2, py::arg("pprime") = 3, py::arg("depth") = 2,
        py::arg("mode") = "grassroots", py::arg("max_mint") = 2,
        py::arg("max_swap_size") = 2, py::arg("samples") = 1000, py::arg("seed") = 0,
        py::arg("witness_depth") = 3, py::arg("jobs") = 1);

    m.attr("__version__") = "0.1.0";
}
