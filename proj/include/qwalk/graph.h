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

#ifndef QWALK_GRAPH_H
#define QWALK_GRAPH_H

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qwalk {

/// Raised for malformed graphs, gadgets and gadget documents.
struct GraphError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Edge {
    int u;
    int v;

    auto operator<=>(const Edge &) const = default;
};

/// Finite simple undirected graph on dense vertex ids 0..n-1.
///
/// Edges are stored with u < v, sorted lexicographically. Construction rejects
/// self-loops, duplicate edges and out-of-range endpoints.
class Graph {
   public:
    Graph() = default;
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const {
        return vertex_count_;
    }
    const std::vector<Edge> &edges() const {
        return edges_;
    }
    int edge_count() const {
        return static_cast<int>(edges_.size());
    }
    const std::vector<int> &neighbors(int v) const {
        return neighbors_[v];
    }
    int degree(int v) const {
        return static_cast<int>(neighbors_[v].size());
    }
    bool has_edge(int u, int v) const;

    Eigen::MatrixXd adjacency() const;

    /// Subgraph induced on `keep` (in that order); vertex i of the result is keep[i].
    Graph induced_subgraph(std::span<const int> keep) const;

    /// Largest shortest-path distance; -1 if disconnected.
    int diameter() const;

    bool operator==(const Graph &other) const {
        return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
    }

   private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> neighbors_;
};

/// A finite graph with an ordered list of terminals, the vertices where
/// semi-infinite paths attach. Terminal order is S-matrix row/column order.
class Gadget {
   public:
    Gadget(Graph graph, std::vector<int> terminals, std::string name = {});

    const Graph &graph() const {
        return graph_;
    }
    const std::vector<int> &terminals() const {
        return terminals_;
    }
    int terminal_count() const {
        return static_cast<int>(terminals_.size());
    }
    int vertex_count() const {
        return graph_.vertex_count();
    }
    const std::string &name() const {
        return name_;
    }
    /// Index of v in the terminal list, or -1 for internal vertices.
    int terminal_index(int v) const;

    bool operator==(const Gadget &other) const {
        return graph_ == other.graph_ && terminals_ == other.terminals_ && name_ == other.name_;
    }

   private:
    Graph graph_;
    std::vector<int> terminals_;
    std::string name_;
    std::vector<int> terminal_index_;
};

/// Parses the interchange document
/// `{"vertices": n, "edges": [[u,v],...], "terminals": [...], "name": "..."}`.
Gadget load_gadget(std::string_view document);
/// Canonical document: edges sorted, keys in schema order, one trailing newline.
std::string save_gadget(const Gadget &gadget);

/// Identifies terminal `out_terminal` of g1 with terminal `in_terminal` of g2.
/// The merged vertex keeps g1's id and becomes internal; g2's other vertices
/// follow in order. Remaining terminals are g1's then g2's.
Gadget series_merge(const Gadget &g1, int out_terminal, const Gadget &g2, int in_terminal);

/// Several identifications at once: out_terminals[i] of g1 with in_terminals[i] of g2.
Gadget series_merge(
    const Gadget &g1, std::span<const int> out_terminals, const Gadget &g2, std::span<const int> in_terminals);

/// Side-by-side copy; g2's vertices are shifted past g1's, terminals concatenated.
Gadget disjoint_union(const Gadget &g1, const Gadget &g2);

/// A closed finite graph made from a gadget by attaching a pendant path of
/// `length` new vertices at every terminal.
struct TruncatedGraph {
    Graph graph;
    int length = 0;
    /// arms[j][x - 1] is the vertex at path coordinate (x, j), x = 1..length+1;
    /// (1, j) is the original terminal.
    std::vector<std::vector<int>> arms;

    int site(int x, int arm) const {
        return arms.at(arm).at(x - 1);
    }
};

TruncatedGraph attach_truncated_paths(const Gadget &gadget, int length);

/// Graph isomorphism that maps the i-th terminal of `a` to the i-th of `b`.
bool isomorphic(const Gadget &a, const Gadget &b);

}  // namespace qwalk

#endif
