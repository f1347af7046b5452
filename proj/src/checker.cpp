// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#include "grassroots/checker.hpp"

#include <atomic>
#include <mutex>
#include <chrono>
#include <deque>
#include <thread>

#include <json.hpp>

#include "grassroots/simulator.hpp"

namespace grassroots {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_groups(const AgentSet& group, const AgentSet& supergroup) {
    if (group.empty()) {
        throw DomainError("the subgroup is empty");
    }
    if (!is_subset(group, supergroup) || group.size() >= supergroup.size()) {
        throw DomainError("the subgroup must be a strict subset of the supergroup");
    }
}

void require_guardrails(const AgentSet& agents, int depth) {
    if (agents.size() > kMaxAgentsExhaustive) {
        throw LimitError("exhaustive exploration capped at " +
                         std::to_string(kMaxAgentsExhaustive) + " agents, got " +
                         std::to_string(agents.size()));
    }
    if (depth < 0 || depth > kMaxDepthExhaustive) {
        throw LimitError("exhaustive exploration capped at depth " +
                         std::to_string(kMaxDepthExhaustive) + ", got " +
                         std::to_string(depth));
    }
}

// Deterministic worker pool: results land in their instance's slot, so
// the merge order does not depend on the thread count.  The first
// exception wins and is rethrown after every worker has joined.
template <typename Fn>
void for_each_index(std::size_t count, unsigned jobs, Fn&& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count || failed.load()) {
                return;
            }
            try {
                fn(i);
            } catch (...) {
                const std::scoped_lock lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                failed.store(true);
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    const unsigned spawn = std::min<unsigned>(jobs, static_cast<unsigned>(count));
    threads.reserve(spawn);
    for (unsigned t = 0; t < spawn; ++t) {
        threads.emplace_back(worker);
    }
    for (auto& thread : threads) {
        thread.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

AgentSet aliens_of(const AgentSet& group, const AgentSet& supergroup) {
    AgentSet result;
    for (const auto& agent : supergroup) {
        if (group.count(agent) == 0) {
            result.insert(result.end(), agent);
        }
    }
    return result;
}

// Group transactions enabled at the projection; for platforms whose
// candidates may be stale against a non-valid projection, the failed ones
// are simply not part of the subgroup system.
std::vector<Transaction> group_candidates(const Platform& platform,
                                          const Configuration& projected,
                                          const AgentSet& group, const Bounds& bounds) {
    std::vector<Transaction> result;
    for (const auto& label : platform.enumerate_labels(projected, bounds)) {
        try {
            Transaction tx = platform.make(label, projected);
            if (in_rp(platform, tx, group)) {
                result.push_back(std::move(tx));
            }
        } catch (const NotEnabledError&) {
            // Stale against the non-valid projection.
        } catch (const DomainError&) {
            // Participants outside the projection; not a group transaction.
        }
    }
    return result;
}

struct WitnessSearch {
    bool found = false;
    std::vector<TxLabel> steps;
};

std::vector<std::vector<TxLabel>> witness_hints(const Platform& platform,
                                                const AgentSet& group,
                                                const AgentSet& aliens,
                                                const Configuration& config) {
    std::vector<std::vector<TxLabel>> hints;
    const std::string name = platform.name();
    if (name == "gsn") {
        for (const auto& insider : group) {
            for (const auto& outsider : aliens) {
                hints.push_back({parse_label("befriend " + insider.str() + " " +
                                             outsider.str())});
            }
        }
    } else if (name == "gc") {
        const AgentId insider = *group.begin();
        for (const auto& outsider : aliens) {
            // A coin already held by the outsider and foreign to the
            // group crosses the boundary in one swap.
            for (const auto& minter : platform.refs(config.at(outsider))) {
                if (group.count(minter) == 0) {
                    hints.push_back({parse_label("swap " + insider.str() + " " +
                                                 outsider.str() + " x= y=" +
                                                 minter.str() + ":1")});
                }
            }
            hints.push_back({parse_label("mint " + outsider.str() + " 1"),
                             parse_label("swap " + insider.str() + " " + outsider.str() +
                                         " x= y=" + outsider.str() + ":1")});
        }
    } else if (name == "gf") {
        for (const auto& insider : group) {
            for (const auto& outsider : aliens) {
                const CommunityId inside{insider, {}};
                const CommunityId outside{outsider, {}};
                const CommunityId& parent = succ(inside, outside) ? inside : outside;
                const CommunityId& child = succ(inside, outside) ? outside : inside;
                hints.push_back(
                    {parse_label("join " + parent.str() + " " + child.str())});
            }
        }
    }
    return hints;
}

WitnessSearch find_witness(const Platform& platform, const AgentSet& group,
                           const AgentSet& supergroup, const Configuration& config,
                           int max_depth, const Bounds& bounds) {
    if (max_depth < 0 || max_depth > kMaxDepthExhaustive) {
        throw LimitError("witness search depth must be in [0, " +
                         std::to_string(kMaxDepthExhaustive) + "], got " +
                         std::to_string(max_depth));
    }
    const AgentSet aliens = aliens_of(group, supergroup);

    auto leaves_alien_trace = [&](const Configuration& candidate) {
        return !in_cp(platform, project(candidate, group), group);
    };

    for (const auto& hint : witness_hints(platform, group, aliens, config)) {
        if (hint.size() > static_cast<std::size_t>(max_depth)) {
            continue;
        }
        Configuration current = config;
        bool viable = true;
        for (const auto& label : hint) {
            try {
                Transaction tx = platform.make(label, current);
                if (!is_subset(transaction_scope(platform, tx), supergroup)) {
                    viable = false;
                    break;
                }
                current = lift(tx, current).after;
            } catch (const Error&) {
                viable = false;
                break;
            }
        }
        if (viable && leaves_alien_trace(current)) {
            return WitnessSearch{true, hint};
        }
    }

    // Fallback: breadth-first over the supergroup system.
    std::set<Configuration> visited{config};
    std::deque<std::pair<Configuration, std::vector<TxLabel>>> frontier;
    frontier.emplace_back(config, std::vector<TxLabel>{});
    while (!frontier.empty()) {
        auto [current, path] = std::move(frontier.front());
        frontier.pop_front();
        if (path.size() >= static_cast<std::size_t>(max_depth)) {
            continue;
        }
        for (const auto& label : platform.enumerate_labels(current, bounds)) {
            Configuration next = [&]() -> Configuration {
                try {
                    return apply_label(platform, current, label);
                } catch (const Error&) {
                    return current;
                }
            }();
            if (next == current || visited.count(next) > 0) {
                continue;
            }
            auto next_path = path;
            next_path.push_back(label);
            if (leaves_alien_trace(next)) {
                return WitnessSearch{true, std::move(next_path)};
            }
            visited.insert(next);
            frontier.emplace_back(std::move(next), std::move(next_path));
        }
    }
    return WitnessSearch{};
}

} // namespace

std::vector<ReachedConfig> reachable(const Platform& platform, const AgentSet& agents,
                                     int depth, const Bounds& bounds) {
    require_guardrails(agents, depth);
    std::vector<ReachedConfig> result;
    std::set<Configuration> visited;
    std::deque<std::pair<std::size_t, int>> frontier; // index into result, level

    Configuration initial = platform.initial_config(agents);
    visited.insert(initial);
    result.push_back(ReachedConfig{std::move(initial), {}});
    frontier.emplace_back(0, 0);

    while (!frontier.empty()) {
        auto [index, level] = frontier.front();
        frontier.pop_front();
        if (level >= depth) {
            continue;
        }
        const Configuration current = result[index].config;
        const std::vector<TxLabel> path = result[index].path;
        for (const auto& label : platform.enumerate_labels(current, bounds)) {
            Configuration next = apply_label(platform, current, label);
            if (visited.count(next) > 0) {
                continue;
            }
            visited.insert(next);
            auto next_path = path;
            next_path.push_back(label);
            result.push_back(ReachedConfig{std::move(next), std::move(next_path)});
            frontier.emplace_back(result.size() - 1, level + 1);
        }
    }
    return result;
}

bool in_cp(const Platform& platform, const Configuration& config, const AgentSet& group) {
    for (const auto& agent : group) {
        if (!config.contains(agent)) {
            throw DomainError("agent '" + agent.str() +
                              "' outside the configuration's domain");
        }
        if (!is_subset(platform.refs(config.at(agent)), group)) {
            return false;
        }
    }
    return true;
}

AgentSet transaction_scope(const Platform& platform, const Transaction& tx) {
    AgentSet scope = tx.participants();
    for (const auto& [agent, state] : tx.before()) {
        auto referenced = platform.refs(state);
        scope.insert(referenced.begin(), referenced.end());
    }
    for (const auto& [agent, state] : tx.after()) {
        auto referenced = platform.refs(state);
        scope.insert(referenced.begin(), referenced.end());
    }
    return scope;
}

bool in_rp(const Platform& platform, const Transaction& tx, const AgentSet& group) {
    return is_subset(transaction_scope(platform, tx), group);
}

std::string CheckReport::json() const {
    nlohmann::json report;
    report["check"] = check;
    report["platform"] = platform;
    report["p"] = agents_str(group);
    report["pprime"] = agents_str(supergroup);
    report["verdict"] = pass ? "pass" : "fail";
    report["instances"] = instances;
    report["depth"] = depth;
    if (max_witness_len) {
        report["max_witness_len"] = *max_witness_len;
    }
    if (!note.empty()) {
        report["note"] = note;
    }
    if (counterexample) {
        nlohmann::json cex;
        if (counterexample->config_text) {
            cex["config"] = *counterexample->config_text;
        }
        if (counterexample->label_text) {
            cex["label"] = *counterexample->label_text;
        }
        if (counterexample->trace_text) {
            cex["trace"] = *counterexample->trace_text;
        }
        cex["detail"] = counterexample->detail;
        report["counterexample"] = std::move(cex);
    } else {
        report["counterexample"] = nullptr;
    }
    nlohmann::json root;
    root["report"] = std::move(report);
    root["meta"]["elapsed_ms"] = elapsed_ms;
    return root.dump(2);
}

std::string CheckReport::summary() const {
    std::string line = pass ? "[PASS] " : "[FAIL] ";
    line += check + " " + platform + " p=" + agents_str(group) +
            " pprime=" + agents_str(supergroup) +
            " instances=" + std::to_string(instances);
    if (max_witness_len) {
        line += " max_witness_len=" + std::to_string(*max_witness_len);
    }
    if (!pass && counterexample) {
        line += " (" + counterexample->detail + ")";
    }
    return line;
}

CheckReport check_oblivious(const Platform& platform, const AgentSet& group,
                            const AgentSet& supergroup, int depth, const Bounds& bounds,
                            unsigned jobs) {
    const auto start = Clock::now();
    require_groups(group, supergroup);
    CheckReport report;
    report.check = "oblivious";
    report.platform = platform.name();
    report.group = group;
    report.supergroup = supergroup;
    report.depth = depth;

    const auto nodes = reachable(platform, supergroup, depth, bounds);
    std::vector<std::uint64_t> counts(nodes.size(), 0);
    std::vector<std::optional<Counterexample>> failures(nodes.size());

    for_each_index(nodes.size(), jobs, [&](std::size_t i) {
        const Configuration& full = nodes[i].config;
        const Configuration projected = project(full, group);
        for (const auto& tx : group_candidates(platform, projected, group, bounds)) {
            ++counts[i];
            // The lift must exist, keep non-participants stationary and
            // stay guard-enabled in the larger configuration.
            if (!is_enabled(platform, full, tx)) {
                failures[i] = Counterexample{
                    full.str(), label_str(tx.label()), std::nullopt,
                    "subgroup transaction is not enabled in the supergroup system"};
                return;
            }
            const Transition lifted = lift(tx, full);
            for (const auto& [agent, state] : full) {
                const bool participant = tx.participants().count(agent) > 0;
                const LocalState& landed = lifted.after.at(agent);
                if ((participant && landed != tx.after().at(agent)) ||
                    (!participant && landed != state)) {
                    failures[i] = Counterexample{
                        full.str(), label_str(tx.label()), std::nullopt,
                        "lifted transition disagrees with the transaction"};
                    return;
                }
            }
        }
    });

    report.pass = true;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        report.instances += counts[i];
        if (failures[i] && report.pass) {
            report.pass = false;
            report.counterexample = failures[i];
        }
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

CheckReport check_interactive(const Platform& platform, const AgentSet& group,
                              const AgentSet& supergroup, const Configuration& config,
                              int max_witness_depth, const Bounds& bounds) {
    const auto start = Clock::now();
    require_groups(group, supergroup);
    if (config.domain() != supergroup) {
        throw DomainError("configuration is not over the supergroup");
    }
    if (!in_cp(platform, project(config, group), group)) {
        throw DomainError("the subgroup already has alien traces here");
    }
    CheckReport report;
    report.check = "interactive";
    report.platform = platform.name();
    report.group = group;
    report.supergroup = supergroup;
    report.depth = max_witness_depth;
    report.instances = 1;

    const WitnessSearch witness =
        find_witness(platform, group, supergroup, config, max_witness_depth, bounds);
    if (witness.found) {
        report.pass = true;
        report.max_witness_len = witness.steps.size();
        std::string steps;
        for (const auto& label : witness.steps) {
            if (!steps.empty()) {
                steps += "; ";
            }
            steps += label_str(label);
        }
        report.note = "witness: " + steps;
    } else {
        report.pass = false;
        report.counterexample =
            Counterexample{config.str(), std::nullopt, std::nullopt,
                           "no alien-trace computation within depth " +
                               std::to_string(max_witness_depth) + " (inconclusive)"};
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

CheckReport check_interactive_all(const Platform& platform, const AgentSet& group,
                                  const AgentSet& supergroup, int depth,
                                  int max_witness_depth, const Bounds& bounds,
                                  unsigned jobs) {
    const auto start = Clock::now();
    require_groups(group, supergroup);
    CheckReport report;
    report.check = "interactive";
    report.platform = platform.name();
    report.group = group;
    report.supergroup = supergroup;
    report.depth = depth;

    const auto nodes = reachable(platform, supergroup, depth, bounds);
    std::vector<int> lengths(nodes.size(), -1); // -1: not qualifying
    std::vector<std::optional<Counterexample>> failures(nodes.size());

    for_each_index(nodes.size(), jobs, [&](std::size_t i) {
        const Configuration& full = nodes[i].config;
        if (!in_cp(platform, project(full, group), group)) {
            return;
        }
        const WitnessSearch witness =
            find_witness(platform, group, supergroup, full, max_witness_depth, bounds);
        if (witness.found) {
            lengths[i] = static_cast<int>(witness.steps.size());
        } else {
            failures[i] = Counterexample{
                full.str(), std::nullopt, std::nullopt,
                "no alien-trace computation within depth " +
                    std::to_string(max_witness_depth) + " (inconclusive)"};
        }
    });

    report.pass = true;
    std::size_t longest = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (failures[i]) {
            if (report.pass) {
                report.pass = false;
                report.counterexample = failures[i];
            }
            continue;
        }
        if (lengths[i] >= 0) {
            ++report.instances;
            longest = std::max(longest, static_cast<std::size_t>(lengths[i]));
        }
    }
    if (report.pass) {
        report.max_witness_len = longest;
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

CheckReport check_closure_transitivity(const Platform& platform, const AgentSet& group,
                                       const AgentSet& supergroup, std::uint64_t samples,
                                       std::uint64_t seed, const Bounds& bounds) {
    const auto start = Clock::now();
    require_groups(group, supergroup);
    CheckReport report;
    report.check = "transitivity";
    report.platform = platform.name();
    report.group = group;
    report.supergroup = supergroup;

    const AgentSet aliens = aliens_of(group, supergroup);
    SplitMix64 rng(seed);

    auto random_walk = [&](const AgentSet& agents, int depth) {
        Configuration current = platform.initial_config(agents);
        for (int step = 0; step < depth; ++step) {
            const std::uint64_t enabled = platform.count_enabled(current, bounds);
            if (enabled == 0) {
                break;
            }
            current = apply_label(platform, current,
                                  platform.nth_enabled(current, bounds,
                                                       rng.below(enabled)));
        }
        return current;
    };

    const std::uint64_t max_attempts = samples * 50 + 100;
    std::uint64_t attempts = 0;
    while (report.instances < samples) {
        if (++attempts > max_attempts) {
            throw LimitError("could not draw enough transitivity samples");
        }
        const Configuration group_part = random_walk(group, static_cast<int>(rng.below(4)));
        const Configuration alien_part = random_walk(aliens, static_cast<int>(rng.below(4)));
        std::map<AgentId, LocalState> merged;
        for (const auto& [agent, state] : group_part) {
            merged.emplace(agent, state);
        }
        for (const auto& [agent, state] : alien_part) {
            merged.emplace(agent, state);
        }
        const Configuration combined{std::move(merged)};

        const auto candidates = group_candidates(platform, group_part, group, bounds);
        if (candidates.empty()) {
            continue;
        }
        const Transaction& tx = candidates[rng.below(candidates.size())];
        ++report.instances;

        const Transition direct = lift(tx, combined);
        const Transition group_step = lift(tx, group_part);
        std::map<AgentId, LocalState> embedded_before(group_step.before.begin(),
                                                      group_step.before.end());
        std::map<AgentId, LocalState> embedded_after(group_step.after.begin(),
                                                     group_step.after.end());
        const Transaction embedded(tx.label(), std::move(embedded_before),
                                   std::move(embedded_after));
        const Transition via_group = lift(embedded, combined);

        if (via_group != direct) {
            report.pass = false;
            report.counterexample =
                Counterexample{combined.str(), label_str(tx.label()), std::nullopt,
                               "lifting via the group differs from the direct lift"};
            report.elapsed_ms = ms_since(start);
            return report;
        }
        if (project(direct.after, group) != group_step.after) {
            report.pass = false;
            report.counterexample =
                Counterexample{combined.str(), label_str(tx.label()), std::nullopt,
                               "direct lift does not restrict to the group step"};
            report.elapsed_ms = ms_since(start);
            return report;
        }
    }
    report.pass = true;
    report.elapsed_ms = ms_since(start);
    return report;
}

CheckReport check_grassroots(const Platform& platform, const AgentSet& group,
                             const AgentSet& supergroup, int depth,
                             int max_witness_depth, const Bounds& bounds, unsigned jobs) {
    const auto start = Clock::now();
    CheckReport oblivious =
        check_oblivious(platform, group, supergroup, depth, bounds, jobs);
    CheckReport interactive = check_interactive_all(platform, group, supergroup, depth,
                                                    max_witness_depth, bounds, jobs);
    CheckReport report;
    report.check = "grassroots";
    report.platform = platform.name();
    report.group = group;
    report.supergroup = supergroup;
    report.depth = depth;
    report.instances = oblivious.instances + interactive.instances;
    report.pass = oblivious.pass && interactive.pass;
    report.max_witness_len = interactive.max_witness_len;
    if (!oblivious.pass) {
        report.counterexample = oblivious.counterexample;
        report.note = "oblivious check failed";
    } else if (!interactive.pass) {
        report.counterexample = interactive.counterexample;
        report.note = "interactive check failed";
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

} // namespace grassroots
