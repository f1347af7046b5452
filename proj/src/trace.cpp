// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#include "grassroots/trace.hpp"

#include <fstream>
#include <sstream>

namespace grassroots {

namespace {

std::string trim(const std::string& text) {
    auto begin = text.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return "";
    }
    auto end = text.find_last_not_of(" \t\r");
    return text.substr(begin, end - begin + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        auto bar = line.find('|', start);
        if (bar == std::string::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, bar - start)));
        start = bar + 1;
    }
    return fields;
}

} // namespace

Configuration Trace::initial() const {
    return platform_for(platform).initial_config(agents);
}

std::string Trace::str() const {
    std::ostringstream out;
    out << "gtrace 1 " << platform << ' ' << agents_str(agents) << ' ' << seed << '\n';
    for (std::size_t i = 0; i < steps.size(); ++i) {
        out << i << " | " << label_str(steps[i].label) << " | "
            << agents_str(steps[i].participants);
        if (steps[i].digest) {
            out << " | " << *steps[i].digest;
        }
        out << '\n';
    }
    return out.str();
}

Trace Trace::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError("empty trace");
    }
    std::istringstream header(line);
    std::string magic, version, platform, agents_field;
    std::uint64_t seed = 0;
    if (!(header >> magic >> version >> platform >> agents_field >> seed) ||
        magic != "gtrace" || version != "1") {
        throw ParseError("bad trace header: '" + line + "'");
    }
    Trace trace;
    trace.platform = platform;
    trace.agents = parse_agents(agents_field);
    trace.seed = seed;
    (void)platform_for(platform); // validates the tag
    std::size_t expected_index = 0;
    while (std::getline(in, line)) {
        if (trim(line).empty()) {
            continue;
        }
        auto fields = split_fields(line);
        if (fields.size() < 3 || fields.size() > 4) {
            throw ParseError("bad trace step: '" + line + "'");
        }
        std::size_t index = 0;
        try {
            index = std::stoull(fields[0]);
        } catch (const std::exception&) {
            throw ParseError("bad step index: '" + line + "'");
        }
        if (index != expected_index) {
            throw ParseError("step index " + std::to_string(index) + ", expected " +
                             std::to_string(expected_index));
        }
        ++expected_index;
        std::optional<std::string> digest;
        if (fields.size() == 4) {
            digest = fields[3];
        }
        trace.steps.push_back(
            TraceStep{parse_label(fields[1]), parse_agents(fields[2]), std::move(digest)});
    }
    return trace;
}

Trace Trace::read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot read trace file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

void Trace::write_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot write trace file '" + path + "'");
    }
    out << str();
}

RunValidation validate_run(const Trace& trace, const Platform& platform) {
    Configuration current = platform.initial_config(trace.agents);
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const TraceStep& step = trace.steps[i];
        if (!is_subset(step.participants, trace.agents)) {
            return RunValidation{false, i, "participants outside the agent set"};
        }
        try {
            Transaction tx = platform.make(step.label, current);
            if (tx.participants() != step.participants) {
                return RunValidation{false, i, "recorded participants do not match"};
            }
            current = lift(tx, current).after;
        } catch (const Error& error) {
            return RunValidation{false, i, error.what()};
        }
        if (step.digest && *step.digest != config_digest(current)) {
            return RunValidation{false, i, "post-state digest mismatch"};
        }
    }
    return RunValidation{};
}

std::vector<Configuration> replay_prefixes(const Trace& trace) {
    const Platform& platform = platform_for(trace.platform);
    std::vector<Configuration> configs;
    configs.push_back(platform.initial_config(trace.agents));
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const TraceStep& step = trace.steps[i];
        if (!is_subset(step.participants, trace.agents)) {
            throw ValidationError("step " + std::to_string(i) +
                                      ": participants outside the agent set",
                                  i);
        }
        try {
            Transaction tx = platform.make(step.label, configs.back());
            if (tx.participants() != step.participants) {
                throw ValidationError("step " + std::to_string(i) +
                                          ": recorded participants do not match",
                                      i);
            }
            configs.push_back(lift(tx, configs.back()).after);
        } catch (const ValidationError&) {
            throw;
        } catch (const Error& error) {
            throw ValidationError("step " + std::to_string(i) + ": " + error.what(), i);
        }
        if (step.digest && *step.digest != config_digest(configs.back())) {
            throw ValidationError("step " + std::to_string(i) + ": digest mismatch", i);
        }
    }
    return configs;
}

Configuration replay(const Trace& trace) {
    return replay_prefixes(trace).back();
}

} // namespace grassroots
