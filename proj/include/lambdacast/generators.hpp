#pragma once

#include <cstdint>
#include <string>

#include "lambdacast/graph.hpp"

namespace lambdacast {

enum class GraphKind {
    Complete,
    Hypercube,
    Circulant,
    RandomRegular,
    Path,
    Barbell,
};

GraphKind parse_graph_kind(const std::string& name);
std::string graph_kind_name(GraphKind kind);

struct GenParams {
    int n = 0;       // node count (complete, circulant, random_regular, path)
    int degree = 0;  // random_regular
    int dim = 0;     // hypercube dimension
    int span = 0;    // circulant connection set {±1..±span}
    int clique = 0;  // barbell clique size (two cliques joined by a bridge)
};

// All generators return connected simple graphs with identity node
// labels. random_regular samples the pairing model and retries until
// the result is simple and connected.
Graph generate(GraphKind kind, const GenParams& params, std::uint64_t seed);

Graph make_complete(int n);
Graph make_hypercube(int dim);
Graph make_circulant(int n, int span);
Graph make_random_regular(int n, int degree, std::uint64_t seed,
                          int max_retries = 1000);
Graph make_path(int n);
Graph make_barbell(int clique);
// Star K_{1,leaves} with the hub at node 0.
Graph make_star(int leaves);
// Cycle C_n.
Graph make_cycle(int n);

// Draws a fresh weight in [1, max_weight] for every edge.
Graph with_random_weights(const Graph& g, Weight max_weight, std::uint64_t seed);

}  // namespace lambdacast
