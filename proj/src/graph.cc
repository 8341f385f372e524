// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwalk/graph.h"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "json.hpp"

namespace qwalk {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges) : vertex_count_(vertex_count) {
    if (vertex_count <= 0) {
        throw GraphError("graph must have at least one vertex");
    }
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
            throw GraphError(
                "edge [" + std::to_string(u) + "," + std::to_string(v) + "] has an endpoint outside 0.." +
                std::to_string(vertex_count - 1));
        }
        if (u == v) {
            throw GraphError("self-loop at vertex " + std::to_string(u));
        }
        edges_.push_back(Edge{std::min(u, v), std::max(u, v)});
    }
    std::sort(edges_.begin(), edges_.end());
    for (size_t i = 1; i < edges_.size(); i++) {
        if (edges_[i] == edges_[i - 1]) {
            throw GraphError(
                "duplicate edge [" + std::to_string(edges_[i].u) + "," + std::to_string(edges_[i].v) + "]");
        }
    }
    neighbors_.assign(vertex_count, {});
    for (const Edge &e : edges_) {
        neighbors_[e.u].push_back(e.v);
        neighbors_[e.v].push_back(e.u);
    }
    for (auto &n : neighbors_) {
        std::sort(n.begin(), n.end());
    }
}

bool Graph::has_edge(int u, int v) const {
    const auto &n = neighbors_.at(u);
    return std::binary_search(n.begin(), n.end(), v);
}

Eigen::MatrixXd Graph::adjacency() const {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(vertex_count_, vertex_count_);
    for (const Edge &e : edges_) {
        a(e.u, e.v) = 1.0;
        a(e.v, e.u) = 1.0;
    }
    return a;
}

Graph Graph::induced_subgraph(std::span<const int> keep) const {
    std::vector<int> new_id(vertex_count_, -1);
    for (size_t i = 0; i < keep.size(); i++) {
        new_id.at(keep[i]) = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> sub;
    for (const Edge &e : edges_) {
        if (new_id[e.u] >= 0 && new_id[e.v] >= 0) {
            sub.emplace_back(new_id[e.u], new_id[e.v]);
        }
    }
    return Graph(static_cast<int>(keep.size()), std::move(sub));
}

int Graph::diameter() const {
    int best = 0;
    for (int s = 0; s < vertex_count_; s++) {
        std::vector<int> dist(vertex_count_, -1);
        std::deque<int> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : neighbors_[u]) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        for (int d : dist) {
            if (d < 0) {
                return -1;
            }
            best = std::max(best, d);
        }
    }
    return best;
}

Gadget::Gadget(Graph graph, std::vector<int> terminals, std::string name)
    : graph_(std::move(graph)), terminals_(std::move(terminals)), name_(std::move(name)) {
    if (terminals_.empty()) {
        throw GraphError("gadget needs at least one terminal");
    }
    terminal_index_.assign(graph_.vertex_count(), -1);
    for (size_t j = 0; j < terminals_.size(); j++) {
        int t = terminals_[j];
        if (t < 0 || t >= graph_.vertex_count()) {
            throw GraphError("terminal " + std::to_string(t) + " is not a vertex");
        }
        if (terminal_index_[t] >= 0) {
            throw GraphError("duplicate terminal " + std::to_string(t));
        }
        terminal_index_[t] = static_cast<int>(j);
    }
}

int Gadget::terminal_index(int v) const {
    return terminal_index_.at(v);
}

Gadget load_gadget(std::string_view document) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::parse_error &e) {
        throw GraphError(std::string("gadget document is not valid JSON: ") + e.what());
    }
    try {
        if (!doc.is_object()) {
            throw GraphError("gadget document must be a JSON object");
        }
        for (const auto &[key, _] : doc.items()) {
            if (key != "vertices" && key != "edges" && key != "terminals" && key != "name") {
                throw GraphError("unknown gadget key '" + key + "'");
            }
        }
        int n = doc.at("vertices").get<int>();
        std::vector<std::pair<int, int>> edges;
        for (const auto &e : doc.at("edges")) {
            if (!e.is_array() || e.size() != 2) {
                throw GraphError("each edge must be a [u,v] pair");
            }
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        auto terminals = doc.at("terminals").get<std::vector<int>>();
        std::string name = doc.contains("name") ? doc["name"].get<std::string>() : std::string();
        return Gadget(Graph(n, std::move(edges)), std::move(terminals), std::move(name));
    } catch (const nlohmann::json::exception &e) {
        throw GraphError(std::string("malformed gadget document: ") + e.what());
    }
}

std::string save_gadget(const Gadget &gadget) {
    nlohmann::ordered_json doc;
    doc["vertices"] = gadget.vertex_count();
    auto edges = nlohmann::ordered_json::array();
    for (const Edge &e : gadget.graph().edges()) {
        edges.push_back({e.u, e.v});
    }
    doc["edges"] = std::move(edges);
    doc["terminals"] = gadget.terminals();
    if (!gadget.name().empty()) {
        doc["name"] = gadget.name();
    }
    return doc.dump() + "\n";
}

Gadget series_merge(const Gadget &g1, int out_terminal, const Gadget &g2, int in_terminal) {
    const int out[] = {out_terminal};
    const int in[] = {in_terminal};
    return series_merge(g1, out, g2, in);
}

Gadget series_merge(
    const Gadget &g1, std::span<const int> out_terminals, const Gadget &g2, std::span<const int> in_terminals) {
    if (out_terminals.size() != in_terminals.size() || out_terminals.empty()) {
        throw GraphError("series merge needs matching, non-empty terminal index lists");
    }
    std::vector<int> g1_merged(g1.terminal_count(), 0), g2_target(g2.vertex_count(), -1);
    for (size_t i = 0; i < out_terminals.size(); i++) {
        int o = out_terminals[i], n = in_terminals[i];
        if (o < 0 || o >= g1.terminal_count()) {
            throw GraphError("output terminal index " + std::to_string(o) + " out of range");
        }
        if (n < 0 || n >= g2.terminal_count()) {
            throw GraphError("input terminal index " + std::to_string(n) + " out of range");
        }
        if (g1_merged[o] || g2_target[g2.terminals()[n]] >= 0) {
            throw GraphError("terminal listed twice in series merge");
        }
        g1_merged[o] = 1;
        g2_target[g2.terminals()[n]] = g1.terminals()[o];
    }

    std::vector<int> remap(g2.vertex_count());
    int next = g1.vertex_count();
    for (int v = 0; v < g2.vertex_count(); v++) {
        remap[v] = g2_target[v] >= 0 ? g2_target[v] : next++;
    }

    std::vector<std::pair<int, int>> edges;
    for (const Edge &e : g1.graph().edges()) {
        edges.emplace_back(e.u, e.v);
    }
    for (const Edge &e : g2.graph().edges()) {
        edges.emplace_back(remap[e.u], remap[e.v]);
    }
    std::vector<int> terminals;
    for (int j = 0; j < g1.terminal_count(); j++) {
        if (!g1_merged[j]) {
            terminals.push_back(g1.terminals()[j]);
        }
    }
    for (int j = 0; j < g2.terminal_count(); j++) {
        if (g2_target[g2.terminals()[j]] < 0) {
            terminals.push_back(remap[g2.terminals()[j]]);
        }
    }
    if (terminals.empty()) {
        throw GraphError("series merge leaves no terminals");
    }
    // Graph's constructor rejects the self-loops and multi-edges a merge could create.
    return Gadget(Graph(next, std::move(edges)), std::move(terminals));
}

Gadget disjoint_union(const Gadget &g1, const Gadget &g2) {
    const int shift = g1.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (const Edge &e : g1.graph().edges()) {
        edges.emplace_back(e.u, e.v);
    }
    for (const Edge &e : g2.graph().edges()) {
        edges.emplace_back(e.u + shift, e.v + shift);
    }
    std::vector<int> terminals = g1.terminals();
    for (int t : g2.terminals()) {
        terminals.push_back(t + shift);
    }
    return Gadget(Graph(shift + g2.vertex_count(), std::move(edges)), std::move(terminals));
}

TruncatedGraph attach_truncated_paths(const Gadget &gadget, int length) {
    if (length < 1) {
        throw GraphError("truncated path length must be at least 1");
    }
    TruncatedGraph out;
    out.length = length;
    std::vector<std::pair<int, int>> edges;
    for (const Edge &e : gadget.graph().edges()) {
        edges.emplace_back(e.u, e.v);
    }
    int next = gadget.vertex_count();
    for (int t : gadget.terminals()) {
        std::vector<int> arm{t};
        for (int x = 0; x < length; x++) {
            edges.emplace_back(arm.back(), next);
            arm.push_back(next++);
        }
        out.arms.push_back(std::move(arm));
    }
    out.graph = Graph(next, std::move(edges));
    return out;
}

namespace {

// Colour refinement seeded with terminal positions; returns stable colour ids
// shared between the two graphs so classes can be compared directly.
std::pair<std::vector<int>, std::vector<int>> refine_colours(const Gadget &a, const Gadget &b) {
    auto seed = [](const Gadget &g) {
        std::vector<int> c(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); v++) {
            c[v] = g.terminal_index(v) + 1;
        }
        return c;
    };
    std::vector<int> ca = seed(a), cb = seed(b);
    for (int round = 0; round <= a.vertex_count(); round++) {
        std::map<std::pair<int, std::vector<int>>, int> ids;
        auto signature = [&](const Gadget &g, const std::vector<int> &c, int v) {
            std::vector<int> ns;
            for (int w : g.graph().neighbors(v)) {
                ns.push_back(c[w]);
            }
            std::sort(ns.begin(), ns.end());
            return std::make_pair(c[v], ns);
        };
        std::vector<std::pair<int, std::vector<int>>> sa, sb;
        for (int v = 0; v < a.vertex_count(); v++) {
            sa.push_back(signature(a, ca, v));
        }
        for (int v = 0; v < b.vertex_count(); v++) {
            sb.push_back(signature(b, cb, v));
        }
        for (const auto &s : sa) {
            ids.emplace(s, 0);
        }
        for (const auto &s : sb) {
            ids.emplace(s, 0);
        }
        int next = 0;
        for (auto &[_, id] : ids) {
            id = next++;
        }
        std::vector<int> na(a.vertex_count()), nb(b.vertex_count());
        for (int v = 0; v < a.vertex_count(); v++) {
            na[v] = ids[sa[v]];
        }
        for (int v = 0; v < b.vertex_count(); v++) {
            nb[v] = ids[sb[v]];
        }
        bool stable = std::set<int>(na.begin(), na.end()).size() == std::set<int>(ca.begin(), ca.end()).size();
        ca = std::move(na);
        cb = std::move(nb);
        if (stable) {
            break;
        }
    }
    return {ca, cb};
}

bool extend(
    const Gadget &a,
    const Gadget &b,
    const std::vector<int> &ca,
    const std::vector<int> &cb,
    std::vector<int> &map_ab,
    std::vector<int> &used_b,
    int v) {
    if (v == a.vertex_count()) {
        return true;
    }
    for (int w = 0; w < b.vertex_count(); w++) {
        if (used_b[w] || ca[v] != cb[w]) {
            continue;
        }
        bool ok = true;
        for (int u : a.graph().neighbors(v)) {
            if (u < v && !b.graph().has_edge(map_ab[u], w)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            int mapped_earlier = 0;
            for (int u : a.graph().neighbors(v)) {
                mapped_earlier += u < v;
            }
            int b_earlier = 0;
            for (int x : b.graph().neighbors(w)) {
                b_earlier += used_b[x];
            }
            ok = mapped_earlier == b_earlier;
        }
        if (!ok) {
            continue;
        }
        map_ab[v] = w;
        used_b[w] = 1;
        if (extend(a, b, ca, cb, map_ab, used_b, v + 1)) {
            return true;
        }
        used_b[w] = 0;
    }
    return false;
}

}  // namespace

bool isomorphic(const Gadget &a, const Gadget &b) {
    if (a.vertex_count() != b.vertex_count() || a.graph().edge_count() != b.graph().edge_count() ||
        a.terminal_count() != b.terminal_count()) {
        return false;
    }
    auto [ca, cb] = refine_colours(a, b);
    auto sorted = [](std::vector<int> c) {
        std::sort(c.begin(), c.end());
        return c;
    };
    if (sorted(ca) != sorted(cb)) {
        return false;
    }
    std::vector<int> map_ab(a.vertex_count(), -1), used_b(b.vertex_count(), 0);
    return extend(a, b, ca, cb, map_ab, used_b, 0);
}

}  // namespace qwalk
