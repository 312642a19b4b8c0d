#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace lambdacast {

using NodeId = int;
using Weight = long long;

struct Edge {
    NodeId u = 0;
    NodeId v = 0;
    Weight w = 1;
};

// Simple undirected graph. Nodes are indices 0..n-1; every node also
// carries an identifier (identity labels by default, or distinct random
// labels in [n^c] when constructed with random_ids). Construction
// rejects self-loops and parallel edges.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges, bool weighted = false);

    int node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool weighted() const { return weighted_; }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int edge_id) const { return edges_[edge_id]; }

    // Adjacency as (neighbor, edge id) pairs, in insertion order.
    const std::vector<std::pair<NodeId, int>>& neighbors(NodeId v) const {
        return adj_[v];
    }
    int degree(NodeId v) const { return static_cast<int>(adj_[v].size()); }
    int min_degree() const;
    Weight total_weight() const;

    std::uint64_t node_id(NodeId v) const { return node_ids_[v]; }
    const std::vector<std::uint64_t>& node_ids() const { return node_ids_; }
    // Node index holding the smallest identifier.
    NodeId min_id_node() const;

    // Replaces identity labels with n distinct values drawn from
    // [1, n^c]. c must be >= 1.
    void assign_random_ids(std::uint64_t seed, int c = 3);

    // Subgraph on the full node set keeping the given edge ids.
    Graph edge_subgraph(const std::vector<int>& edge_ids) const;

    bool has_edge(NodeId u, NodeId v) const;

private:
    int n_ = 0;
    bool weighted_ = false;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<NodeId, int>>> adj_;
    std::vector<std::uint64_t> node_ids_;
};

// Text format: first non-comment line "n m" or "n m weighted", then m
// lines "u v" or "u v w". Lines starting with '#' are comments.
Graph read_graph(std::istream& in);
Graph load_graph(const std::string& path);
void write_graph(const Graph& g, std::ostream& out);
void save_graph(const Graph& g, const std::string& path);

struct GraphStats {
    int min_degree = 0;
    int edge_connectivity = 0;
    int diameter = 0;  // kInfiniteDiameter when disconnected
};

inline constexpr int kInfiniteDiameter = -1;

}  // namespace lambdacast
