// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "grassroots/agent.hpp"

namespace grassroots {

/// Community identifier: a founding agent plus a finite path of positive
/// indices.  The length-0 identifier (p, []) is agent p's own singleton
/// community.  Serialized as "root/1/2".
struct CommunityId {
    AgentId root;
    std::vector<std::uint32_t> path;

    bool is_agent_node() const { return path.empty(); }

    // Storage order (root, then path); distinct from the community
    // order `succ` below.
    auto operator<=>(const CommunityId&) const = default;

    std::string str() const;
    static CommunityId parse(const std::string& text);
};

/// Strict total order on community identifiers: longer path wins, ties
/// break lexicographically on (root, path).  Every parent-to-child edge
/// respects this order, which rules out cycles.
bool succ(const CommunityId& parent, const CommunityId& child);

/// Directed parent -> child edge.
struct CommunityEdge {
    CommunityId parent;
    CommunityId child;

    auto operator<=>(const CommunityEdge&) const = default;
};

/// DAG over community identifiers.  Also the shape of each agent's local
/// state (the personal subgraph it maintains).
struct FederationGraph {
    std::set<CommunityId> nodes;
    std::set<CommunityEdge> edges;

    bool has_node(const CommunityId& v) const { return nodes.count(v) > 0; }
    bool has_edge(const CommunityId& parent, const CommunityId& child) const {
        return edges.count(CommunityEdge{parent, child}) > 0;
    }
    bool empty() const { return nodes.empty() && edges.empty(); }

    /// Node-wise and edge-wise union.
    void merge(const FederationGraph& other);

    auto operator<=>(const FederationGraph&) const = default;

    /// "nodes:a,a/1;edges:a/1>a" with both lists sorted.
    std::string str() const;
    static FederationGraph parse(const std::string& text);
};

} // namespace grassroots
