#pragma once

#include <cstdint>
#include <vector>

#include "lambdacast/graph.hpp"

namespace lambdacast {

inline constexpr Weight kUnreachable = -1;

// Dense all-pairs distance table.
class DistanceTable {
public:
    DistanceTable() = default;
    explicit DistanceTable(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, kUnreachable) {}

    int size() const { return n_; }
    Weight operator()(NodeId u, NodeId v) const {
        return d_[static_cast<std::size_t>(u) * n_ + v];
    }
    Weight& at(NodeId u, NodeId v) { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    bool operator==(const DistanceTable& other) const = default;

private:
    int n_ = 0;
    std::vector<Weight> d_;
};

struct MinCut {
    int value = 0;
    std::vector<char> side;  // side[v] == 1 for the source side
};

struct CutRecord {
    std::uint32_t mask = 0;  // bit v set <=> node v in S; bit 0 always set
    Weight value = 0;
};

// Hop distances from one source (kUnreachable where disconnected).
std::vector<Weight> bfs_distances(const Graph& g, NodeId source);
// Shortest-path distances from one source, honoring edge weights.
std::vector<Weight> dijkstra_distances(const Graph& g, NodeId source);

// Global minimum edge cut of the unweighted view of g, via max-flow
// from node 0 to every other node. Returns 0 for disconnected input.
// Parallel over sinks.
int exact_edge_connectivity(const Graph& g);
// Same value plus one side of a minimum cut.
MinCut exact_min_cut(const Graph& g);

// Max over all pairs of hop distance; kInfiniteDiameter when
// disconnected. Parallel over sources.
int exact_diameter(const Graph& g);

bool is_connected(const Graph& g);

// Exact all-pairs distances. BFS per source when weighted == false,
// Dijkstra per source otherwise. Parallel over sources.
DistanceTable oracle_apsp(const Graph& g, bool weighted);

// All 2^(n-1) - 1 proper bipartitions with node 0 fixed in S, with
// exact cut weights, in ascending mask order. Requires n <= 20.
std::vector<CutRecord> enumerate_cuts(const Graph& g);

Weight cut_value(const Graph& g, const std::vector<char>& in_s);

GraphStats compute_stats(const Graph& g);

// Independent reference implementations, deliberately built on
// different algorithms than the parallel kernels above. Kept for
// testing and for the serial-vs-parallel benchmark.
namespace serial {

// Stoer-Wagner global minimum cut (no max-flow machinery).
int edge_connectivity(const Graph& g);
// Floyd-Warshall.
DistanceTable apsp(const Graph& g, bool weighted);
int diameter(const Graph& g);
std::vector<CutRecord> enumerate_cuts(const Graph& g);

}  // namespace serial

}  // namespace lambdacast
