#include "lambdacast/oracles.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "lambdacast/errors.hpp"

namespace lambdacast {

namespace {

// Dinic on the unit-capacity digraph (each undirected edge becomes two
// opposing arcs of capacity 1). Arc layout is fixed per graph; only
// capacities are reset between (s, t) pairs, so sinks can run in
// parallel on private capacity arrays.
struct FlowNetwork {
    struct Arc {
        int to;
        int rev;  // index of the reverse arc in adj[to]
    };

    explicit FlowNetwork(const Graph& g) : n(g.node_count()), adj(n) {
        arcs.reserve(static_cast<std::size_t>(g.edge_count()) * 2);
        for (const Edge& e : g.edges()) {
            int iu = static_cast<int>(adj[e.u].size());
            int iv = static_cast<int>(adj[e.v].size());
            adj[e.u].push_back(static_cast<int>(arcs.size()));
            arcs.push_back({e.v, iv});
            adj[e.v].push_back(static_cast<int>(arcs.size()));
            arcs.push_back({e.u, iu});
        }
    }

    int n;
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> adj;  // node -> arc indices
};

struct DinicState {
    explicit DinicState(const FlowNetwork& net)
        : cap(net.arcs.size(), 1), level(net.n), it(net.n) {}

    std::vector<int> cap;
    std::vector<int> level;
    std::vector<int> it;
};

bool dinic_bfs(const FlowNetwork& net, DinicState& st, int s, int t) {
    std::fill(st.level.begin(), st.level.end(), -1);
    std::queue<int> q;
    st.level[s] = 0;
    q.push(s);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int a : net.adj[v]) {
            const auto& arc = net.arcs[a];
            if (st.cap[a] > 0 && st.level[arc.to] < 0) {
                st.level[arc.to] = st.level[v] + 1;
                q.push(arc.to);
            }
        }
    }
    return st.level[t] >= 0;
}

int dinic_dfs(const FlowNetwork& net, DinicState& st, int v, int t, int pushed) {
    if (v == t) return pushed;
    for (int& i = st.it[v]; i < static_cast<int>(net.adj[v].size()); ++i) {
        int a = net.adj[v][i];
        const auto& arc = net.arcs[a];
        if (st.cap[a] > 0 && st.level[arc.to] == st.level[v] + 1) {
            int got = dinic_dfs(net, st, arc.to, t, std::min(pushed, st.cap[a]));
            if (got > 0) {
                st.cap[a] -= got;
                int rev_index = net.adj[arc.to][arc.rev];
                st.cap[rev_index] += got;
                return got;
            }
        }
    }
    return 0;
}

// Max-flow from s to t, aborting once the flow reaches `bound` (a
// known upper bound on the global min cut cannot be improved past it).
int dinic_maxflow(const FlowNetwork& net, DinicState& st, int s, int t, int bound) {
    std::fill(st.cap.begin(), st.cap.end(), 1);
    int flow = 0;
    while (flow < bound && dinic_bfs(net, st, s, t)) {
        std::fill(st.it.begin(), st.it.end(), 0);
        int pushed;
        while (flow < bound &&
               (pushed = dinic_dfs(net, st, s, t, std::numeric_limits<int>::max())) > 0)
            flow += pushed;
    }
    return flow;
}

}  // namespace

std::vector<Weight> bfs_distances(const Graph& g, NodeId source) {
    std::vector<Weight> dist(g.node_count(), kUnreachable);
    std::vector<NodeId> frontier = {source}, next;
    dist[source] = 0;
    Weight d = 0;
    while (!frontier.empty()) {
        ++d;
        next.clear();
        for (NodeId v : frontier)
            for (const auto& [u, id] : g.neighbors(v))
                if (dist[u] == kUnreachable) {
                    dist[u] = d;
                    next.push_back(u);
                }
        frontier.swap(next);
    }
    return dist;
}

std::vector<Weight> dijkstra_distances(const Graph& g, NodeId source) {
    std::vector<Weight> dist(g.node_count(), kUnreachable);
    using Item = std::pair<Weight, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[source] = 0;
    heap.push({0, source});
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (d != dist[v]) continue;
        for (const auto& [u, id] : g.neighbors(v)) {
            Weight nd = d + g.edge(id).w;
            if (dist[u] == kUnreachable || nd < dist[u]) {
                dist[u] = nd;
                heap.push({nd, u});
            }
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.node_count() == 0) return false;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(),
                        [](Weight d) { return d == kUnreachable; });
}

int exact_edge_connectivity(const Graph& g) {
    if (g.node_count() < 2) return 0;
    if (!is_connected(g)) return 0;

    FlowNetwork net(g);
    int best = g.min_degree();

    // best only shrinks; stale reads just make a sink do extra work.
    #pragma omp parallel
    {
        DinicState st(net);
        #pragma omp for schedule(dynamic)
        for (int t = 1; t < g.node_count(); ++t) {
            int bound;
            #pragma omp atomic read
            bound = best;
            int flow = dinic_maxflow(net, st, 0, t, bound);
            if (flow < bound) {
                #pragma omp critical(edge_conn_best)
                best = std::min(best, flow);
            }
        }
    }
    return best;
}

MinCut exact_min_cut(const Graph& g) {
    MinCut result;
    result.side.assign(g.node_count(), 0);
    if (g.node_count() < 2 || !is_connected(g)) {
        if (g.node_count() > 0) result.side[0] = 1;
        return result;
    }

    FlowNetwork net(g);
    DinicState st(net);
    int best = g.min_degree();
    int best_t = -1;
    for (int t = 1; t < g.node_count(); ++t) {
        int flow = dinic_maxflow(net, st, 0, t, best);
        if (flow < best || best_t < 0) {
            best = std::min(best, flow);
            best_t = t;
        }
    }
    // Re-run the minimizing sink to completion; the residual-reachable
    // set from the source is one side of a minimum cut.
    int flow = dinic_maxflow(net, st, 0, best_t, std::numeric_limits<int>::max());
    result.value = flow;
    std::vector<char> seen(g.node_count(), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int a : net.adj[v]) {
            const auto& arc = net.arcs[a];
            if (st.cap[a] > 0 && !seen[arc.to]) {
                seen[arc.to] = 1;
                stack.push_back(arc.to);
            }
        }
    }
    result.side = seen;
    return result;
}

int exact_diameter(const Graph& g) {
    if (g.node_count() == 0) return kInfiniteDiameter;
    if (g.node_count() == 1) return 0;
    int n = g.node_count();
    Weight diameter = 0;
    bool disconnected = false;

    #pragma omp parallel for schedule(dynamic) reduction(max : diameter) \
        reduction(|| : disconnected)
    for (int s = 0; s < n; ++s) {
        auto dist = bfs_distances(g, s);
        for (Weight d : dist) {
            if (d == kUnreachable)
                disconnected = true;
            else
                diameter = std::max(diameter, d);
        }
    }
    if (disconnected) return kInfiniteDiameter;
    return static_cast<int>(diameter);
}

DistanceTable oracle_apsp(const Graph& g, bool weighted) {
    int n = g.node_count();
    DistanceTable table(n);
    #pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < n; ++s) {
        auto dist = weighted ? dijkstra_distances(g, s) : bfs_distances(g, s);
        for (int v = 0; v < n; ++v) table.at(s, v) = dist[v];
    }
    return table;
}

Weight cut_value(const Graph& g, const std::vector<char>& in_s) {
    Weight total = 0;
    for (const Edge& e : g.edges())
        if (in_s[e.u] != in_s[e.v]) total += e.w;
    return total;
}

namespace {

std::vector<CutRecord> enumerate_cuts_impl(const Graph& g, bool parallel) {
    int n = g.node_count();
    if (n < 2) throw ParameterError("cut enumeration needs n >= 2");
    if (n > 20) throw SizeError("cut enumeration limited to n <= 20");

    // Masks over nodes 1..n-1; node 0 is always in S. The all-ones
    // mask would be S = V, so it is excluded.
    std::uint32_t count = (1u << (n - 1)) - 1;
    std::vector<CutRecord> cuts(count);
    const auto& edges = g.edges();

    #pragma omp parallel for schedule(static) if (parallel)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
        std::uint32_t mask = (static_cast<std::uint32_t>(i) << 1) | 1u;
        Weight value = 0;
        for (const Edge& e : edges) {
            bool su = (mask >> e.u) & 1u;
            bool sv = (mask >> e.v) & 1u;
            if (su != sv) value += e.w;
        }
        cuts[i] = {mask, value};
    }
    return cuts;
}

}  // namespace

std::vector<CutRecord> enumerate_cuts(const Graph& g) {
    return enumerate_cuts_impl(g, true);
}

GraphStats compute_stats(const Graph& g) {
    GraphStats stats;
    stats.min_degree = g.min_degree();
    stats.edge_connectivity = exact_edge_connectivity(g);
    stats.diameter = exact_diameter(g);
    return stats;
}

namespace serial {

int edge_connectivity(const Graph& g) {
    int n = g.node_count();
    if (n < 2 || !is_connected(g)) return 0;

    // Stoer-Wagner on the unit-weight adjacency matrix.
    std::vector<std::vector<Weight>> w(n, std::vector<Weight>(n, 0));
    for (const Edge& e : g.edges()) {
        w[e.u][e.v] += 1;
        w[e.v][e.u] += 1;
    }
    std::vector<int> active(n);
    for (int i = 0; i < n; ++i) active[i] = i;

    Weight best = std::numeric_limits<Weight>::max();
    while (active.size() > 1) {
        int k = static_cast<int>(active.size());
        std::vector<Weight> weight_to_a(k, 0);
        std::vector<char> added(k, 0);
        int prev = -1, last = -1;
        for (int step = 0; step < k; ++step) {
            int pick = -1;
            for (int i = 0; i < k; ++i)
                if (!added[i] && (pick < 0 || weight_to_a[i] > weight_to_a[pick]))
                    pick = i;
            added[pick] = 1;
            prev = last;
            last = pick;
            if (step == k - 1) break;
            for (int i = 0; i < k; ++i)
                if (!added[i]) weight_to_a[i] += w[active[pick]][active[i]];
        }
        best = std::min(best, weight_to_a[last]);
        // Merge `last` into `prev`.
        int a = active[prev], b = active[last];
        for (int i = 0; i < n; ++i) {
            w[a][i] += w[b][i];
            w[i][a] += w[i][b];
        }
        active.erase(active.begin() + last);
    }
    return static_cast<int>(best);
}

DistanceTable apsp(const Graph& g, bool weighted) {
    int n = g.node_count();
    const Weight inf = std::numeric_limits<Weight>::max() / 4;
    std::vector<Weight> d(static_cast<std::size_t>(n) * n, inf);
    for (int v = 0; v < n; ++v) d[static_cast<std::size_t>(v) * n + v] = 0;
    for (const Edge& e : g.edges()) {
        Weight w = weighted ? e.w : 1;
        auto& duv = d[static_cast<std::size_t>(e.u) * n + e.v];
        auto& dvu = d[static_cast<std::size_t>(e.v) * n + e.u];
        duv = std::min(duv, w);
        dvu = std::min(dvu, w);
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            Weight dik = d[static_cast<std::size_t>(i) * n + k];
            if (dik == inf) continue;
            for (int j = 0; j < n; ++j) {
                Weight cand = dik + d[static_cast<std::size_t>(k) * n + j];
                auto& dij = d[static_cast<std::size_t>(i) * n + j];
                if (cand < dij) dij = cand;
            }
        }
    DistanceTable table(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Weight val = d[static_cast<std::size_t>(i) * n + j];
            table.at(i, j) = (val >= inf) ? kUnreachable : val;
        }
    return table;
}

int diameter(const Graph& g) {
    if (g.node_count() == 0) return kInfiniteDiameter;
    auto table = apsp(g, false);
    Weight best = 0;
    for (int i = 0; i < g.node_count(); ++i)
        for (int j = 0; j < g.node_count(); ++j) {
            if (table(i, j) == kUnreachable) return kInfiniteDiameter;
            best = std::max(best, table(i, j));
        }
    return static_cast<int>(best);
}

std::vector<CutRecord> enumerate_cuts(const Graph& g) {
    return enumerate_cuts_impl(g, false);
}

}  // namespace serial

}  // namespace lambdacast
