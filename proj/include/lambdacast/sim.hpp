#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <span>
#include <vector>

#include "lambdacast/graph.hpp"
#include "lambdacast/rng.hpp"

namespace lambdacast {

// One message on one directed edge in one round. The payload is an
// opaque bit string (up to 64 bits here; every protocol in this suite
// fits) and bit_size is the declared width, charged against the
// per-round budget B.
struct Token {
    std::uint64_t payload = 0;
    int bit_size = 0;
};

inline constexpr int kTagBits = 4;

// Width of v in bits; value_bits(0) == 0.
int value_bits(std::uint64_t v);
// Bits needed to address one of n values (>= 1).
int ceil_log2(std::uint64_t n);

Token pack_token(int tag, std::uint64_t value, int value_width);
int token_tag(const Token& t);
std::uint64_t token_value(const Token& t);

// B = factor * ceil(log2 n), with n clamped to >= 2.
int bandwidth_bits(int n, int factor);

struct SimConfig {
    int bandwidth_factor = 4;
    long long round_cap = 1'000'000;
    bool parallel = true;          // step nodes with OpenMP
    std::ostream* trace = nullptr; // CSV: round,src,dst,bits
};

class SimNetwork;

// The engine-enforced local view of one node: identity, neighbor ids
// and incident weights (per port), n, the bit budget, the round
// counter, and a private deterministic random stream. Nothing else of
// the topology is reachable from here.
class NodeContext {
public:
    int node_count() const { return n_; }
    std::uint64_t id() const { return id_; }
    int degree() const { return degree_; }
    std::uint64_t neighbor_id(int port) const { return neighbor_ids_[port]; }
    Weight edge_weight(int port) const { return edge_weights_[port]; }
    int bandwidth() const { return bandwidth_; }
    long long round() const { return *round_; }
    Rng& rng() { return rng_; }

private:
    friend class SimNetwork;
    NodeContext(int n, std::uint64_t id, int degree, const std::uint64_t* nb,
                const Weight* ew, int bandwidth, const long long* round,
                std::uint64_t rng_seed)
        : n_(n), id_(id), degree_(degree), neighbor_ids_(nb), edge_weights_(ew),
          bandwidth_(bandwidth), round_(round), rng_(rng_seed) {}

    int n_;
    std::uint64_t id_;
    int degree_;
    const std::uint64_t* neighbor_ids_;
    const Weight* edge_weights_;
    int bandwidth_;
    const long long* round_;
    Rng rng_;
};

// Send slots for one node in one round: at most one token per incident
// port, each within the bit budget. Violations are recorded and
// surfaced as BandwidthViolation after the phase.
class Outbox {
public:
    void send(int port, const Token& t);
    void send(int port, int tag, std::uint64_t value, int value_width) {
        send(port, pack_token(tag, value, value_width));
    }

private:
    friend class SimNetwork;
    struct Entry {
        int port;
        Token token;
    };
    std::vector<Entry> entries_;
    std::vector<long long> port_stamp_;  // round of last send per port
    long long round_ = 0;
    int bandwidth_ = 0;
    int degree_ = 0;
    std::string violation_;
};

struct Delivery {
    int port;
    Token token;
};

class NodeProgram {
public:
    virtual ~NodeProgram() = default;
    // Called once per round for every node.
    virtual void send(NodeContext& ctx, Outbox& out) = 0;
    // Called only when tokens arrived this round.
    virtual void receive(NodeContext& ctx, std::span<const Delivery> in) = 0;
    virtual bool done(const NodeContext& ctx) const = 0;
};

using ProgramFactory = std::function<std::unique_ptr<NodeProgram>(NodeId)>;

struct SimResult {
    long long rounds = 0;
    bool timed_out = false;
    long long max_edge_congestion = 0;
    std::vector<long long> edge_congestion;  // per edge id, both directions summed
    std::vector<std::unique_ptr<NodeProgram>> programs;

    template <typename P>
    const P& program(NodeId v) const {
        return dynamic_cast<const P&>(*programs[v]);
    }
};

// Executes rounds until every node reports done or the cap is hit.
// Two runs with identical (graph, factory, seed, config) produce
// identical results.
SimResult run_protocol(const Graph& g, const ProgramFactory& factory,
                       std::uint64_t seed, const SimConfig& cfg = {});

struct RunReport {
    long long rounds_used = 0;
    long long max_edge_congestion = 0;
    bool correctness = true;
    bool timed_out = false;
    long long reference_lower_bound = 0;   // ceil(k / lambda)
    double reference_upper_formula = 0.0;  // (n ln n)/delta + (k ln n)/lambda
};

long long broadcast_lower_bound(long long k, int lambda);
double broadcast_upper_formula(int n, long long k, int min_degree, int lambda);

}  // namespace lambdacast
