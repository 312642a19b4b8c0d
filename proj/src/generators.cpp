#include "lambdacast/generators.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>
#include <vector>

#include "lambdacast/errors.hpp"
#include "lambdacast/rng.hpp"

namespace lambdacast {

namespace {

bool connected(int n, const std::vector<Edge>& edges) {
    if (n == 0) return false;
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
    }
    return count == n;
}

}  // namespace

GraphKind parse_graph_kind(const std::string& name) {
    if (name == "complete") return GraphKind::Complete;
    if (name == "hypercube") return GraphKind::Hypercube;
    if (name == "circulant") return GraphKind::Circulant;
    if (name == "random_regular") return GraphKind::RandomRegular;
    if (name == "path") return GraphKind::Path;
    if (name == "barbell") return GraphKind::Barbell;
    throw ParameterError("unknown graph family: " + name);
}

std::string graph_kind_name(GraphKind kind) {
    switch (kind) {
        case GraphKind::Complete: return "complete";
        case GraphKind::Hypercube: return "hypercube";
        case GraphKind::Circulant: return "circulant";
        case GraphKind::RandomRegular: return "random_regular";
        case GraphKind::Path: return "path";
        case GraphKind::Barbell: return "barbell";
    }
    return "?";
}

Graph generate(GraphKind kind, const GenParams& params, std::uint64_t seed) {
    switch (kind) {
        case GraphKind::Complete: return make_complete(params.n);
        case GraphKind::Hypercube: return make_hypercube(params.dim);
        case GraphKind::Circulant: return make_circulant(params.n, params.span);
        case GraphKind::RandomRegular:
            return make_random_regular(params.n, params.degree, seed);
        case GraphKind::Path: return make_path(params.n);
        case GraphKind::Barbell: return make_barbell(params.clique);
    }
    throw ParameterError("unknown graph kind");
}

Graph make_complete(int n) {
    if (n < 1) throw ParameterError("complete graph needs n >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v, 1});
    return Graph(n, std::move(edges));
}

Graph make_hypercube(int dim) {
    if (dim < 1 || dim > 20) throw ParameterError("hypercube dimension must be in [1, 20]");
    int n = 1 << dim;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * dim / 2);
    for (int u = 0; u < n; ++u)
        for (int b = 0; b < dim; ++b) {
            int v = u ^ (1 << b);
            if (u < v) edges.push_back({u, v, 1});
        }
    return Graph(n, std::move(edges));
}

Graph make_circulant(int n, int span) {
    if (n < 3) throw ParameterError("circulant graph needs n >= 3");
    if (span < 1 || 2 * span >= n)
        throw ParameterError("circulant span must satisfy 1 <= span < n/2");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int s = 1; s <= span; ++s) {
            int v = (u + s) % n;
            edges.push_back({std::min(u, v), std::max(u, v), 1});
        }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [](const Edge& a, const Edge& b) {
                                return a.u == b.u && a.v == b.v;
                            }),
                edges.end());
    return Graph(n, std::move(edges));
}

Graph make_random_regular(int n, int degree, std::uint64_t seed, int max_retries) {
    if (n < 2 || degree < 1 || degree >= n)
        throw ParameterError("random_regular needs 1 <= degree < n, n >= 2");
    if ((static_cast<long long>(n) * degree) % 2 != 0)
        throw ParameterError("random_regular needs n*degree even");

    // Pairing model: n*degree stubs matched uniformly, rejecting any
    // outcome with loops or multi-edges, then rejecting disconnected
    // samples.
    std::vector<int> stubs(static_cast<std::size_t>(n) * degree);
    for (int v = 0; v < n; ++v)
        for (int d = 0; d < degree; ++d) stubs[static_cast<std::size_t>(v) * degree + d] = v;

    for (int attempt = 0; attempt < max_retries; ++attempt) {
        Rng rng(mix_seed(seed, 0x99, static_cast<std::uint64_t>(attempt)));
        std::vector<int> perm = stubs;
        for (std::size_t i = perm.size(); i > 1; --i)
            std::swap(perm[i - 1], perm[rng.bounded(i)]);

        std::vector<Edge> edges;
        edges.reserve(perm.size() / 2);
        std::unordered_set<std::uint64_t> seen;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < perm.size(); i += 2) {
            int u = perm[i], v = perm[i + 1];
            if (u == v) {
                ok = false;
                break;
            }
            std::uint64_t key = (static_cast<std::uint64_t>(std::max(u, v)) << 32) |
                                static_cast<std::uint64_t>(std::min(u, v));
            if (!seen.insert(key).second) {
                ok = false;
                break;
            }
            edges.push_back({std::min(u, v), std::max(u, v), 1});
        }
        if (!ok || !connected(n, edges)) continue;
        return Graph(n, std::move(edges));
    }
    throw GenerationError("random_regular: no simple connected sample within retry budget");
}

Graph make_path(int n) {
    if (n < 1) throw ParameterError("path needs n >= 1");
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1});
    return Graph(n, std::move(edges));
}

Graph make_barbell(int clique) {
    if (clique < 2) throw ParameterError("barbell needs clique size >= 2");
    int n = 2 * clique;
    std::vector<Edge> edges;
    for (int u = 0; u < clique; ++u)
        for (int v = u + 1; v < clique; ++v) {
            edges.push_back({u, v, 1});
            edges.push_back({u + clique, v + clique, 1});
        }
    // Bridge between the two cliques.
    edges.push_back({clique - 1, clique, 1});
    return Graph(n, std::move(edges));
}

Graph make_star(int leaves) {
    if (leaves < 1) throw ParameterError("star needs at least one leaf");
    std::vector<Edge> edges;
    edges.reserve(leaves);
    for (int v = 1; v <= leaves; ++v) edges.push_back({0, v, 1});
    return Graph(leaves + 1, std::move(edges));
}

Graph make_cycle(int n) {
    if (n < 3) throw ParameterError("cycle needs n >= 3");
    std::vector<Edge> edges;
    edges.reserve(n);
    for (int v = 0; v < n; ++v)
        edges.push_back({std::min(v, (v + 1) % n), std::max(v, (v + 1) % n), 1});
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    return Graph(n, std::move(edges));
}

Graph with_random_weights(const Graph& g, Weight max_weight, std::uint64_t seed) {
    if (max_weight < 1) throw ParameterError("max weight must be >= 1");
    Rng rng(mix_seed(seed, 0x3e1));
    std::vector<Edge> edges = g.edges();
    for (Edge& e : edges)
        e.w = 1 + static_cast<Weight>(rng.bounded(static_cast<std::uint64_t>(max_weight)));
    return Graph(g.node_count(), std::move(edges), true);
}

}  // namespace lambdacast
