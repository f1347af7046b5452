// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <compare>
#include <set>
#include <string>

#include "grassroots/errors.hpp"

namespace grassroots {

/// Opaque agent identifier with a strict total order (lexicographic on the
/// token).  Tokens stand in for public keys; only uniqueness and order are
/// modelled.  Valid tokens are nonempty strings over [A-Za-z0-9_-].
class AgentId {
  public:
    explicit AgentId(std::string token);

    const std::string& str() const { return token_; }

    auto operator<=>(const AgentId&) const = default;

    static bool valid_token(const std::string& token);

  private:
    std::string token_;
};

using AgentSet = std::set<AgentId>;

/// First n lowercase letters as agent names: a, b, c, ...  n must be in
/// [1, 26].
AgentSet default_agents(int n);

bool is_subset(const AgentSet& sub, const AgentSet& super);

std::string agents_str(const AgentSet& agents);
AgentSet parse_agents(const std::string& text);

} // namespace grassroots
