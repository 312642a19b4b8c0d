#include "lambdacast/graph.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "lambdacast/errors.hpp"
#include "lambdacast/rng.hpp"

namespace lambdacast {

namespace {

std::uint64_t pair_key(NodeId u, NodeId v) {
    auto lo = static_cast<std::uint64_t>(std::min(u, v));
    auto hi = static_cast<std::uint64_t>(std::max(u, v));
    return (hi << 32) | lo;
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges, bool weighted)
    : n_(n), weighted_(weighted), edges_(std::move(edges)) {
    if (n < 0) throw ParameterError("node count must be nonnegative");
    adj_.resize(n_);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges_.size() * 2);
    for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
        Edge& e = edges_[id];
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
            throw ParameterError("edge endpoint out of range");
        if (e.u == e.v) throw ParameterError("self-loops are not allowed");
        if (!seen.insert(pair_key(e.u, e.v)).second)
            throw ParameterError("parallel edges are not allowed");
        if (e.w < 1) throw ParameterError("edge weights must be >= 1");
        if (!weighted_ && e.w != 1)
            throw ParameterError("unweighted graph has an edge with weight != 1");
        adj_[e.u].emplace_back(e.v, id);
        adj_[e.v].emplace_back(e.u, id);
    }
    node_ids_.resize(n_);
    for (int v = 0; v < n_; ++v) node_ids_[v] = static_cast<std::uint64_t>(v);
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = std::numeric_limits<int>::max();
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

Weight Graph::total_weight() const {
    Weight total = 0;
    for (const Edge& e : edges_) total += e.w;
    return total;
}

NodeId Graph::min_id_node() const {
    NodeId best = 0;
    for (int v = 1; v < n_; ++v)
        if (node_ids_[v] < node_ids_[best]) best = v;
    return best;
}

void Graph::assign_random_ids(std::uint64_t seed, int c) {
    if (c < 1) throw ParameterError("id-space exponent must be >= 1");
    std::uint64_t space = 1;
    for (int i = 0; i < c; ++i) {
        if (space > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(std::max(n_, 2)))
            throw ParameterError("id space overflows 64 bits");
        space *= static_cast<std::uint64_t>(std::max(n_, 2));
    }
    Rng rng(mix_seed(seed, 0x1d5u));
    std::unordered_set<std::uint64_t> used;
    used.reserve(n_ * 2);
    for (int v = 0; v < n_; ++v) {
        std::uint64_t id;
        do {
            id = rng.bounded(space) + 1;
        } while (!used.insert(id).second);
        node_ids_[v] = id;
    }
}

Graph Graph::edge_subgraph(const std::vector<int>& edge_ids) const {
    std::vector<Edge> kept;
    kept.reserve(edge_ids.size());
    for (int id : edge_ids) {
        if (id < 0 || id >= edge_count())
            throw ParameterError("edge id out of range");
        kept.push_back(edges_[id]);
    }
    Graph sub(n_, std::move(kept), weighted_);
    sub.node_ids_ = node_ids_;
    return sub;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    const auto& a = adj_[degree(u) <= degree(v) ? u : v];
    NodeId other = (degree(u) <= degree(v)) ? v : u;
    for (const auto& [nb, id] : a)
        if (nb == other) return true;
    return false;
}

Graph read_graph(std::istream& in) {
    std::string line;
    int n = -1, m = -1;
    bool weighted = false;
    std::vector<Edge> edges;
    int parsed_edges = 0;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m)) {
                std::string probe;
                std::istringstream probe_ls(line);
                if (probe_ls >> probe)
                    throw FormatError("expected header line 'n m [weighted]'");
                n = -1;
                continue;  // blank/comment line before header
            }
            std::string flag;
            if (ls >> flag) {
                if (flag != "weighted")
                    throw FormatError("unknown header flag: " + flag);
                weighted = true;
            }
            if (n < 0 || m < 0) throw FormatError("negative n or m in header");
            edges.reserve(m);
            continue;
        }
        Edge e;
        if (!(ls >> e.u >> e.v)) {
            std::string probe;
            std::istringstream probe_ls(line);
            if (probe_ls >> probe) throw FormatError("malformed edge line: " + line);
            continue;
        }
        if (weighted) {
            if (!(ls >> e.w)) throw FormatError("missing weight on edge line: " + line);
        }
        edges.push_back(e);
        ++parsed_edges;
    }
    if (n < 0) throw FormatError("missing header line");
    if (parsed_edges != m) throw FormatError("edge count does not match header");
    return Graph(n, std::move(edges), weighted);
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open graph file: " + path);
    return read_graph(in);
}

void write_graph(const Graph& g, std::ostream& out) {
    out << g.node_count() << ' ' << g.edge_count();
    if (g.weighted()) out << " weighted";
    out << '\n';
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v;
        if (g.weighted()) out << ' ' << e.w;
        out << '\n';
    }
}

void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open output file: " + path);
    write_graph(g, out);
}

}  // namespace lambdacast
