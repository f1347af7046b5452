// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grassroots/platform.hpp"

namespace grassroots {

/// One replayable step: the label, the participant set it resolved to,
/// and an optional digest of the configuration after the step.
struct TraceStep {
    TxLabel label;
    AgentSet participants;
    std::optional<std::string> digest;

    bool operator==(const TraceStep&) const = default;
};

/// Replayable record of a run.  The initial configuration is always the
/// platform's initial configuration over `agents`, so the file stores
/// only the header and the steps.
///
/// Text format, one record per line:
///   gtrace 1 <platform> <agents> <seed>
///   <index> | <label> | <participants> [| <digest>]
struct Trace {
    std::string platform;
    AgentSet agents;
    std::uint64_t seed = 0;
    std::vector<TraceStep> steps;

    Configuration initial() const;

    std::string str() const;
    static Trace parse(const std::string& text);

    static Trace read_file(const std::string& path);
    void write_file(const std::string& path) const;
};

struct RunValidation {
    bool ok = true;
    /// Earliest violating step when !ok.
    std::size_t fail_index = 0;
    std::string reason;
};

/// Replays every step from the initial configuration, requiring each to
/// be enabled at its predecessor and to match the recorded participants
/// and digest.
RunValidation validate_run(const Trace& trace, const Platform& platform);

/// Final configuration after replaying the whole trace; throws
/// ValidationError (with the step index) on the first disabled step.
Configuration replay(const Trace& trace);

/// Configurations visited by the trace, starting with the initial one;
/// throws ValidationError on a disabled step.
std::vector<Configuration> replay_prefixes(const Trace& trace);

} // namespace grassroots
