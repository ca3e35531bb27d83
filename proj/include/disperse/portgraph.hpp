#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace disperse {

// One endpoint of an edge as seen from a node: the neighbor reached through a
// local port and the reciprocal port on the neighbor's side.
struct PortTarget {
    int node = -1;
    int port = -1;
    bool operator==(const PortTarget&) const = default;
};

// Anonymous undirected graph with per-node port numbering. Immutable after
// construction; node ids exist only for simulation bookkeeping and are never
// shown to robots.
class PortGraph {
public:
    PortGraph() = default;

    // edges[i] = {u, pu, v, pv}: port pu of u connects to port pv of v.
    static PortGraph from_edges(int n, const std::vector<std::array<int, 4>>& edges);

    int node_count() const { return static_cast<int>(ports_.size()); }
    int edge_count() const { return edge_count_; }
    int degree(int v) const { return static_cast<int>(ports_.at(v).size()); }

    // Follow port p out of node v. Throws std::out_of_range on an invalid port.
    PortTarget neighbor_via_port(int v, int p) const;

    const std::vector<PortTarget>& ports_of(int v) const { return ports_.at(v); }

    bool operator==(const PortGraph&) const = default;

private:
    friend PortGraph build_path(int);
    friend PortGraph build_ring(int);
    friend PortGraph build_random_tree(int, std::uint64_t);
    friend PortGraph build_random_connected(int, int, std::uint64_t);
    friend PortGraph build_dumbbell(int);
    friend PortGraph permute_ports(const PortGraph&, std::uint64_t);

    std::vector<std::vector<PortTarget>> ports_;
    int edge_count_ = 0;
};

// Generators. All are deterministic functions of their arguments.
PortGraph build_path(int n);
PortGraph build_ring(int n);
PortGraph build_random_tree(int n, std::uint64_t seed);
PortGraph build_random_connected(int n, int m, std::uint64_t seed);
PortGraph build_dumbbell(int n);

// Re-label every node's ports with a seeded permutation, preserving structure.
// Algorithms must not exploit port conventions, so tests run generators both
// raw and permuted.
PortGraph permute_ports(const PortGraph& g, std::uint64_t seed);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Checks port contiguity, reciprocity, simple-graph and degree-sum invariants.
// Violations are return values, not exceptions.
ValidationReport validate(const PortGraph& g);

struct GraphMetrics {
    int diameter = 0;
    int max_degree = 0;
    bool is_tree = false;
};

// Exact metrics via BFS from every node. Throws std::invalid_argument if g is
// disconnected. Used for reporting and bounds only, never revealed to robots.
GraphMetrics graph_metrics(const PortGraph& g);

// BFS depths from a root; -1 for unreachable nodes.
std::vector<int> bfs_depths(const PortGraph& g, int root);

struct ParseError : std::runtime_error {
    ParseError(int line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
    int line;
};

// Text format: header "n m", then one line "u pu v pv" per edge with u < v,
// lines sorted lexicographically. '#' starts a comment.
std::string to_text(const PortGraph& g);
PortGraph parse_text(const std::string& text);

}  // namespace disperse
