// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#include "grassroots/federation_graph.hpp"

#include <sstream>

namespace grassroots {

std::string CommunityId::str() const {
    std::ostringstream out;
    out << root.str();
    for (auto index : path) {
        out << '/' << index;
    }
    return out.str();
}

CommunityId CommunityId::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        return CommunityId{AgentId(text), {}};
    }
    CommunityId id{AgentId(text.substr(0, slash)), {}};
    std::istringstream in(text.substr(slash + 1));
    std::string part;
    while (std::getline(in, part, '/')) {
        if (part.empty()) {
            throw ParseError("bad community id '" + text + "'");
        }
        unsigned long value = 0;
        try {
            value = std::stoul(part);
        } catch (const std::exception&) {
            throw ParseError("bad community index in '" + text + "'");
        }
        if (value == 0) {
            throw ParseError("community indices start at 1: '" + text + "'");
        }
        id.path.push_back(static_cast<std::uint32_t>(value));
    }
    if (id.path.empty()) {
        throw ParseError("bad community id '" + text + "'");
    }
    return id;
}

bool succ(const CommunityId& parent, const CommunityId& child) {
    if (parent.path.size() != child.path.size()) {
        return parent.path.size() > child.path.size();
    }
    if (parent.root != child.root) {
        return parent.root > child.root;
    }
    return parent.path > child.path;
}

void FederationGraph::merge(const FederationGraph& other) {
    nodes.insert(other.nodes.begin(), other.nodes.end());
    edges.insert(other.edges.begin(), other.edges.end());
}

std::string FederationGraph::str() const {
    std::ostringstream out;
    out << "nodes:";
    bool first = true;
    for (const auto& node : nodes) {
        if (!first) {
            out << ',';
        }
        out << node.str();
        first = false;
    }
    out << ";edges:";
    first = true;
    for (const auto& edge : edges) {
        if (!first) {
            out << ',';
        }
        out << edge.parent.str() << '>' << edge.child.str();
        first = false;
    }
    return out.str();
}

FederationGraph FederationGraph::parse(const std::string& text) {
    auto semi = text.find(';');
    if (text.rfind("nodes:", 0) != 0 || semi == std::string::npos ||
        text.compare(semi + 1, 6, "edges:") != 0) {
        throw ParseError("bad graph '" + text + "'");
    }
    FederationGraph graph;
    std::string node_list = text.substr(6, semi - 6);
    std::string edge_list = text.substr(semi + 7);
    if (!node_list.empty()) {
        std::istringstream in(node_list);
        std::string token;
        while (std::getline(in, token, ',')) {
            graph.nodes.insert(CommunityId::parse(token));
        }
    }
    if (!edge_list.empty()) {
        std::istringstream in(edge_list);
        std::string token;
        while (std::getline(in, token, ',')) {
            auto arrow = token.find('>');
            if (arrow == std::string::npos) {
                throw ParseError("bad edge '" + token + "'");
            }
            CommunityEdge edge{CommunityId::parse(token.substr(0, arrow)),
                               CommunityId::parse(token.substr(arrow + 1))};
            if (!graph.has_node(edge.parent) || !graph.has_node(edge.child)) {
                throw ParseError("edge endpoint not a node: '" + token + "'");
            }
            graph.edges.insert(edge);
        }
    }
    return graph;
}

} // namespace grassroots
