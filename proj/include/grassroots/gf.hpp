// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <optional>

#include "grassroots/platform.hpp"

namespace grassroots {

/// Democratic federation: personal-subgraph local states and k-ary
/// federate/join/leave over the shared DAG.
class FederationPlatform : public Platform {
  public:
    std::string name() const override { return "gf"; }
    /// Each agent starts with just its own singleton community.
    LocalState initial_state(const AgentId& agent) const override;
    Transaction make(const TxLabel& label, const Configuration& config) const override;
    void check_label_guard(const TxLabel& label,
                           const Configuration& config) const override;
    std::vector<TxLabel> enumerate_labels(const Configuration& config,
                                          const Bounds& bounds) const override;
    std::uint64_t count_enabled(const Configuration& config,
                                const Bounds& bounds) const override;
    TxLabel nth_enabled(const Configuration& config, const Bounds& bounds,
                        std::uint64_t index) const override;
    AgentSet refs(const LocalState& state) const override;
};

namespace gf {

/// Agents whose singleton community is reachable from `community` by
/// directed edges.  May be empty.
AgentSet members(const FederationGraph& graph, const CommunityId& community);

/// `community`, its adjacent nodes, and its incident edges.
FederationGraph community_subgraph(const FederationGraph& graph,
                                   const CommunityId& community);

/// Union of the community subgraphs of every community `agent` belongs
/// to.  This is exactly what each agent stores as its local state.
FederationGraph personal_subgraph(const FederationGraph& graph, const AgentId& agent);

/// Personal subgraphs of several agents over one shared traversal.
std::map<AgentId, FederationGraph> personal_subgraphs(const FederationGraph& graph,
                                                      const AgentSet& agents);

/// The shared graph is distributed across local states; this reassembles
/// it as the union of every agent's personal subgraph.
FederationGraph reconstruct(const Configuration& config);

/// Members of `community` endow a fresh parent community; the new
/// identifier extends the child's with the next unused index.
Transaction federate(const CommunityId& community, const Configuration& config);

/// `child` becomes a child of `parent`; participants are the members of
/// both.  Requires succ(parent, child), which keeps the graph acyclic.
Transaction join(const CommunityId& parent, const CommunityId& child,
                 const Configuration& config);

/// Removes the parent -> child edge; participants are the parent's
/// members (which include the child's).  Nodes are never removed.
Transaction leave(const CommunityId& parent, const CommunityId& child,
                  const Configuration& config);

struct ValidityResult {
    bool ok = true;
    /// First agent whose state is not its projection of the reassembled
    /// graph, when that is the failure.
    std::optional<AgentId> agent;
    std::string reason;
};

/// A configuration is valid when every local state equals the owner's
/// personal subgraph of the reassembled graph, and that graph is a DAG
/// whose edges all respect the community order.
ValidityResult check_valid(const Configuration& config);

/// Enabled federate/join/leave transactions at `config`.
std::vector<Transaction> enumerate_enabled(const Configuration& config);

} // namespace gf

} // namespace grassroots
