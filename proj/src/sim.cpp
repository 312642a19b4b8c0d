#include "lambdacast/sim.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "lambdacast/errors.hpp"

namespace lambdacast {

int value_bits(std::uint64_t v) {
    int bits = 0;
    while (v > 0) {
        ++bits;
        v >>= 1;
    }
    return bits;
}

int ceil_log2(std::uint64_t n) {
    if (n <= 2) return 1;
    return value_bits(n - 1);
}

Token pack_token(int tag, std::uint64_t value, int value_width) {
    if (tag < 0 || tag >= (1 << kTagBits))
        throw BandwidthViolation("token tag out of range");
    if (value_width < 0 || value_width > 60)
        throw BandwidthViolation("token value width out of range");
    if (value_width < 64 && value >= (1ULL << value_width))
        throw BandwidthViolation("token value exceeds its declared width");
    return Token{(value << kTagBits) | static_cast<std::uint64_t>(tag),
                 kTagBits + value_width};
}

int token_tag(const Token& t) {
    return static_cast<int>(t.payload & ((1u << kTagBits) - 1));
}

std::uint64_t token_value(const Token& t) { return t.payload >> kTagBits; }

int bandwidth_bits(int n, int factor) {
    return factor * ceil_log2(static_cast<std::uint64_t>(std::max(n, 2)));
}

void Outbox::send(int port, const Token& t) {
    if (!violation_.empty()) return;
    if (port < 0 || port >= degree_) {
        violation_ = "send on invalid port " + std::to_string(port);
        return;
    }
    if (t.bit_size > bandwidth_) {
        violation_ = "token of " + std::to_string(t.bit_size) +
                     " bits exceeds the budget of " + std::to_string(bandwidth_);
        return;
    }
    if (t.bit_size < 0 ||
        (t.bit_size < 64 && t.payload >= (1ULL << t.bit_size))) {
        violation_ = "token payload wider than its declared bit size";
        return;
    }
    if (port_stamp_[port] == round_) {
        violation_ = "two tokens on one directed edge in one round";
        return;
    }
    port_stamp_[port] = round_;
    entries_.push_back({port, t});
}

namespace {

struct PortRef {
    NodeId node;
    int port;
};

}  // namespace

SimResult run_protocol(const Graph& g, const ProgramFactory& factory,
                       std::uint64_t seed, const SimConfig& cfg) {
    const int n = g.node_count();
    const int bandwidth = bandwidth_bits(n, cfg.bandwidth_factor);
    long long round = 0;

    // Port tables. reverse_port[v][p] is the port index of the same
    // edge at the neighbor.
    std::vector<std::vector<std::uint64_t>> neighbor_ids(n);
    std::vector<std::vector<Weight>> edge_weights(n);
    std::vector<std::vector<int>> port_edge(n);
    std::vector<std::vector<PortRef>> reverse_port(n);
    {
        std::vector<std::vector<int>> port_of_edge_at(n);
        std::vector<int> edge_port_u(g.edge_count(), -1);
        for (int v = 0; v < n; ++v) {
            const auto& adj = g.neighbors(v);
            neighbor_ids[v].reserve(adj.size());
            edge_weights[v].reserve(adj.size());
            port_edge[v].reserve(adj.size());
            for (const auto& [u, id] : adj) {
                neighbor_ids[v].push_back(g.node_id(u));
                edge_weights[v].push_back(g.edge(id).w);
                port_edge[v].push_back(id);
            }
        }
        // Map each edge to its two (node, port) slots.
        std::vector<std::pair<PortRef, PortRef>> edge_ports(
            g.edge_count(), {{-1, -1}, {-1, -1}});
        for (int v = 0; v < n; ++v)
            for (int p = 0; p < static_cast<int>(port_edge[v].size()); ++p) {
                int id = port_edge[v][p];
                if (edge_ports[id].first.node < 0)
                    edge_ports[id].first = {v, p};
                else
                    edge_ports[id].second = {v, p};
            }
        for (int v = 0; v < n; ++v)
            reverse_port[v].resize(port_edge[v].size());
        for (int id = 0; id < g.edge_count(); ++id) {
            auto [a, b] = edge_ports[id];
            reverse_port[a.node][a.port] = b;
            reverse_port[b.node][b.port] = a;
        }
    }

    std::vector<NodeContext> contexts;
    contexts.reserve(n);
    for (int v = 0; v < n; ++v)
        contexts.push_back(NodeContext(
            n, g.node_id(v), g.degree(v),
            neighbor_ids[v].empty() ? nullptr : neighbor_ids[v].data(),
            edge_weights[v].empty() ? nullptr : edge_weights[v].data(),
            bandwidth, &round, mix_seed(seed, 0xA0DE, g.node_id(v))));

    SimResult result;
    result.programs.reserve(n);
    for (int v = 0; v < n; ++v) result.programs.push_back(factory(v));
    result.edge_congestion.assign(g.edge_count(), 0);

    std::vector<Outbox> outboxes(n);
    for (int v = 0; v < n; ++v) {
        outboxes[v].port_stamp_.assign(g.degree(v), -1);
        outboxes[v].bandwidth_ = bandwidth;
        outboxes[v].degree_ = g.degree(v);
    }
    std::vector<std::vector<Delivery>> inboxes(n);
    std::vector<NodeId> touched;  // nodes with deliveries this round

    const bool parallel = cfg.parallel && n >= 64;
    auto all_done = [&] {
        for (int v = 0; v < n; ++v)
            if (!result.programs[v]->done(contexts[v])) return false;
        return true;
    };

    while (true) {
        if (all_done()) break;
        if (round >= cfg.round_cap) {
            result.timed_out = true;
            break;
        }
        ++round;

        // Send phase: nodes only touch their own outbox and state.
        #pragma omp parallel for schedule(static) if (parallel)
        for (int v = 0; v < n; ++v) {
            outboxes[v].entries_.clear();
            outboxes[v].round_ = round;
            result.programs[v]->send(contexts[v], outboxes[v]);
        }
        for (int v = 0; v < n; ++v)
            if (!outboxes[v].violation_.empty())
                throw BandwidthViolation("node " + std::to_string(v) + ": " +
                                         outboxes[v].violation_);

        // Deliver phase (serial): congestion accounting and inboxes.
        for (int v = 0; v < n; ++v) {
            for (const auto& entry : outboxes[v].entries_) {
                int edge_id = port_edge[v][entry.port];
                ++result.edge_congestion[edge_id];
                PortRef dst = reverse_port[v][entry.port];
                if (inboxes[dst.node].empty()) touched.push_back(dst.node);
                inboxes[dst.node].push_back({dst.port, entry.token});
                if (cfg.trace)
                    *cfg.trace << round << ',' << g.node_id(v) << ','
                               << g.node_id(dst.node) << ','
                               << entry.token.bit_size << '\n';
            }
        }

        // Receive phase: only nodes with deliveries.
        #pragma omp parallel for schedule(static) if (parallel)
        for (std::size_t i = 0; i < touched.size(); ++i) {
            NodeId v = touched[i];
            result.programs[v]->receive(contexts[v], inboxes[v]);
        }
        for (NodeId v : touched) inboxes[v].clear();
        touched.clear();
    }

    result.rounds = round;
    for (long long c : result.edge_congestion)
        result.max_edge_congestion = std::max(result.max_edge_congestion, c);
    return result;
}

long long broadcast_lower_bound(long long k, int lambda) {
    if (lambda <= 0) return 0;
    return (k + lambda - 1) / lambda;
}

double broadcast_upper_formula(int n, long long k, int min_degree, int lambda) {
    if (min_degree <= 0 || lambda <= 0) return 0.0;
    double ln_n = std::log(static_cast<double>(std::max(n, 2)));
    return (n * ln_n) / min_degree +
           (static_cast<double>(k) * ln_n) / lambda;
}

}  // namespace lambdacast
