// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#include "grassroots/gf.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <map>
#include <vector>

namespace grassroots {

namespace {

const FederationGraph& graph_of(const Configuration& config, const AgentId& agent) {
    const auto* graph = std::get_if<FederationGraph>(&config.at(agent));
    if (graph == nullptr) {
        throw DomainError("agent '" + agent.str() + "' has a non-graph state");
    }
    return *graph;
}

// Per-graph lookup structures shared by the operations below.  Member
// sets are computed once for every node; the traversal tolerates cycles
// (hand-built graphs) by ignoring back references.
struct GraphIndex {
    std::map<CommunityId, std::vector<CommunityId>> children;
    std::map<CommunityId, std::vector<CommunityEdge>> incident;
    std::map<CommunityId, AgentSet> members;

    explicit GraphIndex(const FederationGraph& graph) {
        for (const auto& edge : graph.edges) {
            children[edge.parent].push_back(edge.child);
            incident[edge.parent].push_back(edge);
            incident[edge.child].push_back(edge);
        }
        std::map<CommunityId, int> visit_state; // 1 in progress, 2 done
        std::function<const AgentSet&(const CommunityId&)> visit =
            [&](const CommunityId& node) -> const AgentSet& {
            auto& state = visit_state[node];
            if (state != 0) {
                return members[node]; // done, or a back edge: contribute nothing
            }
            state = 1;
            AgentSet collected;
            if (node.is_agent_node()) {
                collected.insert(node.root);
            }
            auto it = children.find(node);
            if (it != children.end()) {
                for (const auto& child : it->second) {
                    const AgentSet& below = visit(child);
                    collected.insert(below.begin(), below.end());
                }
            }
            auto& slot = members[node];
            slot = std::move(collected);
            state = 2;
            return slot;
        };
        for (const auto& node : graph.nodes) {
            visit(node);
        }
    }
};

// Reassembled graph plus its index.  Every operation on a configuration
// starts from this, and the simulator, replay and validity checks ask
// for the same configuration several times in a row, so the last one is
// memoized per thread.
struct BuiltGraph {
    FederationGraph graph;
    GraphIndex index;

    explicit BuiltGraph(FederationGraph g) : graph(std::move(g)), index(graph) {}
};

std::shared_ptr<const BuiltGraph> built_for(const Configuration& config) {
    thread_local std::optional<Configuration> cached_config;
    thread_local std::shared_ptr<const BuiltGraph> cached_built;
    if (cached_config && *cached_config == config) {
        return cached_built;
    }
    FederationGraph graph;
    for (const auto& [agent, state] : config) {
        const auto* view = std::get_if<FederationGraph>(&state);
        if (view == nullptr) {
            throw DomainError("agent '" + agent.str() + "' has a non-graph state");
        }
        graph.merge(*view);
    }
    cached_built = std::make_shared<const BuiltGraph>(std::move(graph));
    cached_config = config;
    return cached_built;
}

FederationGraph subgraph_around(const GraphIndex& index, const CommunityId& node) {
    FederationGraph result;
    result.nodes.insert(node);
    auto it = index.incident.find(node);
    if (it != index.incident.end()) {
        for (const auto& edge : it->second) {
            result.nodes.insert(edge.parent);
            result.nodes.insert(edge.child);
            result.edges.insert(edge);
        }
    }
    return result;
}

FederationGraph personal_view(const GraphIndex& index, const AgentId& agent) {
    FederationGraph result;
    for (const auto& [node, node_members] : index.members) {
        if (node_members.count(agent) > 0) {
            result.merge(subgraph_around(index, node));
        }
    }
    return result;
}

std::uint32_t next_parent_index(const FederationGraph& graph, const CommunityId& child) {
    std::uint32_t max_index = 0;
    for (const auto& node : graph.nodes) {
        if (node.root == child.root && node.path.size() == child.path.size() + 1 &&
            std::equal(child.path.begin(), child.path.end(), node.path.begin())) {
            max_index = std::max(max_index, node.path.back());
        }
    }
    return max_index + 1;
}

// Shared by federate/join/leave: the participants' states must be their
// projections of the reassembled graph, and the transaction rewrites them
// to their projections of the edited graph.
Transaction graph_transaction(const TxLabel& label, const Configuration& config,
                              const GraphIndex& before_index,
                              const FederationGraph& after_graph, const AgentSet& parties,
                              const std::string& what) {
    if (parties.empty()) {
        throw InvalidParticipantsError(what + " has no participants");
    }
    std::map<AgentId, LocalState> before;
    std::map<AgentId, LocalState> after;
    const GraphIndex after_index(after_graph);
    for (const auto& agent : parties) {
        if (!config.contains(agent)) {
            throw DomainError("participant '" + agent.str() +
                              "' outside the configuration's domain");
        }
        FederationGraph view = personal_view(before_index, agent);
        if (graph_of(config, agent) != view) {
            throw NotEnabledError("state of '" + agent.str() +
                                  "' does not match the federation graph");
        }
        before.emplace(agent, std::move(view));
        after.emplace(agent, personal_view(after_index, agent));
    }
    return Transaction(label, std::move(before), std::move(after));
}

} // namespace

LocalState FederationPlatform::initial_state(const AgentId& agent) const {
    FederationGraph own;
    own.nodes.insert(CommunityId{agent, {}});
    return own;
}

void FederationPlatform::check_label_guard(const TxLabel& label,
                                           const Configuration& config) const {
    const auto built = built_for(config);
    const FederationGraph& graph = built->graph;
    if (const auto* f = std::get_if<FederateLabel>(&label)) {
        if (!graph.has_node(f->community)) {
            throw DomainError("unknown community '" + f->community.str() + "'");
        }
        return;
    }
    if (const auto* j = std::get_if<JoinLabel>(&label)) {
        if (!graph.has_node(j->parent) || !graph.has_node(j->child)) {
            throw DomainError("unknown community in '" + label_str(label) + "'");
        }
        if (!succ(j->parent, j->child)) {
            throw OrderError("'" + j->parent.str() + "' does not precede '" +
                             j->child.str() + "' in the community order");
        }
        if (graph.has_edge(j->parent, j->child)) {
            throw NoOpError("edge already present: " + label_str(label));
        }
        return;
    }
    if (const auto* l = std::get_if<LeaveLabel>(&label)) {
        if (!graph.has_edge(l->parent, l->child)) {
            throw GuardError("no such edge: " + label_str(label));
        }
        return;
    }
    throw DomainError("label '" + label_str(label) + "' is not a federation label");
}

Transaction FederationPlatform::make(const TxLabel& label,
                                     const Configuration& config) const {
    const auto built = built_for(config);
    const FederationGraph& graph = built->graph;
    const GraphIndex& index = built->index;

    if (const auto* f = std::get_if<FederateLabel>(&label)) {
        const CommunityId& child = f->community;
        if (!graph.has_node(child)) {
            throw DomainError("unknown community '" + child.str() + "'");
        }
        CommunityId parent{child.root, child.path};
        parent.path.push_back(next_parent_index(graph, child));
        FederationGraph after = graph;
        after.nodes.insert(parent);
        after.edges.insert(CommunityEdge{parent, child});
        return graph_transaction(label, config, index, after,
                                 index.members.at(child), "federate");
    }
    if (const auto* j = std::get_if<JoinLabel>(&label)) {
        if (!graph.has_node(j->parent) || !graph.has_node(j->child)) {
            throw DomainError("unknown community in '" + label_str(label) + "'");
        }
        if (!succ(j->parent, j->child)) {
            throw OrderError("'" + j->parent.str() + "' does not precede '" +
                             j->child.str() + "' in the community order");
        }
        if (graph.has_edge(j->parent, j->child)) {
            throw NoOpError("edge already present: " + label_str(label));
        }
        AgentSet parties = index.members.at(j->parent);
        const AgentSet& child_members = index.members.at(j->child);
        parties.insert(child_members.begin(), child_members.end());
        FederationGraph after = graph;
        after.edges.insert(CommunityEdge{j->parent, j->child});
        return graph_transaction(label, config, index, after, parties, "join");
    }
    if (const auto* l = std::get_if<LeaveLabel>(&label)) {
        if (!graph.has_edge(l->parent, l->child)) {
            throw GuardError("no such edge: " + label_str(label));
        }
        // Members of the parent (computed before removal) include the
        // child's members.
        const AgentSet& parties = index.members.at(l->parent);
        FederationGraph after = graph;
        after.edges.erase(CommunityEdge{l->parent, l->child});
        return graph_transaction(label, config, index, after, parties, "leave");
    }
    throw DomainError("label '" + label_str(label) + "' is not a federation label");
}

namespace {

enum class MoveKind { Federate, Join, Leave };

// Enabled federation moves at a reassembled graph, in canonical order
// (federates, then joins, then leaves).  The visitor returns false to
// stop early; nothing is materialized unless the visitor does so.
template <typename Visitor>
void visit_enabled_moves(const FederationGraph& graph, const GraphIndex& index,
                         Visitor&& visit) {
    for (const auto& node : graph.nodes) {
        if (!index.members.at(node).empty()) {
            if (!visit(MoveKind::Federate, node, node)) {
                return;
            }
        }
    }
    for (const auto& parent : graph.nodes) {
        const bool parent_peopled = !index.members.at(parent).empty();
        for (const auto& child : graph.nodes) {
            if (parent == child || !succ(parent, child) ||
                graph.has_edge(parent, child)) {
                continue;
            }
            if (!parent_peopled && index.members.at(child).empty()) {
                continue;
            }
            if (!visit(MoveKind::Join, parent, child)) {
                return;
            }
        }
    }
    for (const auto& edge : graph.edges) {
        if (!index.members.at(edge.parent).empty()) {
            if (!visit(MoveKind::Leave, edge.parent, edge.child)) {
                return;
            }
        }
    }
}

TxLabel move_label(MoveKind kind, const CommunityId& first, const CommunityId& second) {
    switch (kind) {
    case MoveKind::Federate:
        return FederateLabel{first};
    case MoveKind::Join:
        return JoinLabel{first, second};
    case MoveKind::Leave:
        return LeaveLabel{first, second};
    }
    throw DomainError("unreachable move kind");
}

} // namespace

std::vector<TxLabel> FederationPlatform::enumerate_labels(const Configuration& config,
                                                          const Bounds&) const {
    const auto built = built_for(config);
    const FederationGraph& graph = built->graph;
    const GraphIndex& index = built->index;
    std::vector<TxLabel> labels;
    visit_enabled_moves(graph, index,
                        [&](MoveKind kind, const CommunityId& first,
                            const CommunityId& second) {
                            labels.push_back(move_label(kind, first, second));
                            return true;
                        });
    return labels;
}

std::uint64_t FederationPlatform::count_enabled(const Configuration& config,
                                                const Bounds&) const {
    const auto built = built_for(config);
    const FederationGraph& graph = built->graph;
    const GraphIndex& index = built->index;
    std::uint64_t count = 0;
    visit_enabled_moves(graph, index,
                        [&](MoveKind, const CommunityId&, const CommunityId&) {
                            ++count;
                            return true;
                        });
    return count;
}

TxLabel FederationPlatform::nth_enabled(const Configuration& config, const Bounds&,
                                        std::uint64_t index) const {
    const auto built = built_for(config);
    const FederationGraph& graph = built->graph;
    const GraphIndex& graph_index = built->index;
    std::optional<TxLabel> found;
    visit_enabled_moves(graph, graph_index,
                        [&](MoveKind kind, const CommunityId& first,
                            const CommunityId& second) {
                            if (index == 0) {
                                found = move_label(kind, first, second);
                                return false;
                            }
                            --index;
                            return true;
                        });
    if (!found) {
        throw DomainError("enabled-transaction index out of range");
    }
    return *found;
}

AgentSet FederationPlatform::refs(const LocalState& state) const {
    const auto* graph = std::get_if<FederationGraph>(&state);
    if (graph == nullptr) {
        throw DomainError("non-graph state");
    }
    AgentSet roots;
    for (const auto& node : graph->nodes) {
        roots.insert(node.root);
    }
    for (const auto& edge : graph->edges) {
        roots.insert(edge.parent.root);
        roots.insert(edge.child.root);
    }
    return roots;
}

namespace gf {

AgentSet members(const FederationGraph& graph, const CommunityId& community) {
    if (!graph.has_node(community)) {
        throw DomainError("unknown community '" + community.str() + "'");
    }
    return GraphIndex(graph).members.at(community);
}

FederationGraph community_subgraph(const FederationGraph& graph,
                                   const CommunityId& community) {
    if (!graph.has_node(community)) {
        throw DomainError("unknown community '" + community.str() + "'");
    }
    return subgraph_around(GraphIndex(graph), community);
}

FederationGraph personal_subgraph(const FederationGraph& graph, const AgentId& agent) {
    if (!graph.has_node(CommunityId{agent, {}})) {
        throw DomainError("agent '" + agent.str() + "' has no singleton community");
    }
    return personal_view(GraphIndex(graph), agent);
}

std::map<AgentId, FederationGraph> personal_subgraphs(const FederationGraph& graph,
                                                      const AgentSet& agents) {
    const GraphIndex index(graph);
    std::map<AgentId, FederationGraph> views;
    for (const auto& agent : agents) {
        views.emplace(agent, personal_view(index, agent));
    }
    return views;
}

FederationGraph reconstruct(const Configuration& config) {
    return built_for(config)->graph;
}

Transaction federate(const CommunityId& community, const Configuration& config) {
    return platform_for("gf").make(FederateLabel{community}, config);
}

Transaction join(const CommunityId& parent, const CommunityId& child,
                 const Configuration& config) {
    return platform_for("gf").make(JoinLabel{parent, child}, config);
}

Transaction leave(const CommunityId& parent, const CommunityId& child,
                  const Configuration& config) {
    return platform_for("gf").make(LeaveLabel{parent, child}, config);
}

ValidityResult check_valid(const Configuration& config) {
    const auto built = built_for(config);
    const FederationGraph& graph = built->graph;
    for (const auto& edge : graph.edges) {
        if (!graph.has_node(edge.parent) || !graph.has_node(edge.child)) {
            return ValidityResult{false, std::nullopt,
                                  "edge endpoint is not a node: " + edge.parent.str() +
                                      ">" + edge.child.str()};
        }
        if (!succ(edge.parent, edge.child)) {
            return ValidityResult{false, std::nullopt,
                                  "edge violates the community order: " +
                                      edge.parent.str() + ">" + edge.child.str()};
        }
    }
    const GraphIndex& index = built->index;
    // The order check above already excludes cycles; walk anyway so that
    // hand-built graphs fail loudly even if the order changes.
    {
        std::map<CommunityId, std::size_t> indegree;
        for (const auto& node : graph.nodes) {
            indegree[node] = 0;
        }
        for (const auto& edge : graph.edges) {
            ++indegree[edge.child];
        }
        std::vector<CommunityId> queue;
        for (const auto& [node, degree] : indegree) {
            if (degree == 0) {
                queue.push_back(node);
            }
        }
        std::size_t processed = 0;
        while (!queue.empty()) {
            CommunityId node = queue.back();
            queue.pop_back();
            ++processed;
            auto it = index.children.find(node);
            if (it == index.children.end()) {
                continue;
            }
            for (const auto& child : it->second) {
                if (--indegree[child] == 0) {
                    queue.push_back(child);
                }
            }
        }
        if (processed != graph.nodes.size()) {
            return ValidityResult{false, std::nullopt, "graph has a cycle"};
        }
    }
    for (const auto& [agent, state] : config) {
        if (graph_of(config, agent) != personal_view(index, agent)) {
            return ValidityResult{false, agent,
                                  "state of '" + agent.str() +
                                      "' is not its personal subgraph"};
        }
    }
    return ValidityResult{};
}

std::vector<Transaction> enumerate_enabled(const Configuration& config) {
    return platform_for("gf").enumerate_enabled(config, Bounds{});
}

} // namespace gf

} // namespace grassroots
