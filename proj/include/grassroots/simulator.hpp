// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "grassroots/trace.hpp"

namespace grassroots {

/// splitmix64.  Fixed here so that traces are portable: state advances by
/// the golden-ratio increment and each draw is the standard finalizer.
/// Bounded draws use rejection sampling, so they are exactly uniform.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    /// Uniform draw from [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n);

  private:
    std::uint64_t state_;
};

/// Per-step invariant monitors.  "all" selects every monitor that applies
/// to the scenario's platform.
enum class Hook { Symmetry, Conservation, Validity };

std::string hook_str(Hook hook);

/// Declarative simulation input.  Equal scenarios produce byte-identical
/// traces.
///
/// Text format ("gscenario 1" header, then "key value" lines):
///   platform gsn | gc | gf
///   agents a,b,c   (or a count: agents 4)
///   seed 7
///   steps 50
///   max-mint 2
///   max-swap-size 2
///   hooks all | none | symmetry | conservation | validity
///   prefix <label>   (repeatable, applied in order before random steps)
struct Scenario {
    std::string platform;
    AgentSet agents;
    std::uint64_t seed = 0;
    std::uint64_t steps = 0;
    Bounds bounds;
    std::set<Hook> hooks;
    std::vector<TxLabel> prefix;

    std::string str() const;
    static Scenario parse(const std::string& text);
    static Scenario read_file(const std::string& path);
};

/// Default hook set for a platform (its safety monitor).
std::set<Hook> hooks_for(const std::string& platform);

struct HookFailure {
    Hook hook;
    std::size_t step; // steps completed when the monitor tripped
    std::string detail;
};

struct SimulationResult {
    Trace trace;
    Configuration final_config;
    /// Set when a monitor tripped; the trace still holds every step up to
    /// and including the offending one.
    std::optional<HookFailure> hook_failure;
    /// True when the run stopped early because nothing was enabled.
    bool dead_end = false;
};

/// Runs the scenario: scripted prefix first (a disabled scripted step
/// throws ValidationError with its index), then uniformly random enabled
/// transactions until the step budget or a dead end.
SimulationResult simulate(const Scenario& scenario);

} // namespace grassroots
