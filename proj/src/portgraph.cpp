#include "disperse/portgraph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

namespace disperse {

namespace {

// Bounded draw by rejection so results do not depend on the standard library's
// distribution internals (serializations are byte-stable per seed).
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

template <typename T>
void shuffle_vec(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[draw_below(rng, i)]);
    }
}

// Adjacency collected as plain neighbor lists; ports are assigned afterwards,
// either in insertion order (canonical) or by a seeded permutation.
PortGraph assign_ports(int n, const std::vector<std::pair<int, int>>& edges, std::mt19937_64* rng) {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<std::vector<int>> order(n);
    for (int v = 0; v < n; ++v) {
        order[v].resize(adj[v].size());
        std::iota(order[v].begin(), order[v].end(), 0);
        if (rng) shuffle_vec(order[v], *rng);
    }
    // port_of[v][k] = port at v assigned to its k-th incident edge.
    std::vector<std::vector<int>> port_of(n);
    for (int v = 0; v < n; ++v) {
        port_of[v].resize(adj[v].size());
        for (std::size_t p = 0; p < order[v].size(); ++p) port_of[v][order[v][p]] = static_cast<int>(p);
    }
    std::vector<int> next(n, 0);
    PortGraph g;
    g.ports_.assign(n, {});
    for (int v = 0; v < n; ++v) g.ports_[v].resize(adj[v].size());
    for (auto [u, v] : edges) {
        const int pu = port_of[u][next[u]++];
        const int pv = port_of[v][next[v]++];
        g.ports_[u][pu] = {v, pv};
        g.ports_[v][pv] = {u, pu};
    }
    g.edge_count_ = static_cast<int>(edges.size());
    return g;
}

}  // namespace

PortGraph PortGraph::from_edges(int n, const std::vector<std::array<int, 4>>& edges) {
    if (n < 1) throw std::invalid_argument("node count must be positive");
    PortGraph g;
    g.ports_.assign(n, {});
    for (const auto& e : edges) {
        auto [u, pu, v, pv] = e;
        for (int node : {u, v})
            if (node < 0 || node >= n) throw std::invalid_argument("node id out of range");
        for (int port : {pu, pv})
            if (port < 0) throw std::invalid_argument("negative port");
        if (static_cast<int>(g.ports_[u].size()) <= pu) g.ports_[u].resize(pu + 1);
        if (static_cast<int>(g.ports_[v].size()) <= pv) g.ports_[v].resize(pv + 1);
        if (g.ports_[u][pu].node != -1 || g.ports_[v][pv].node != -1)
            throw std::invalid_argument("duplicate port assignment");
        g.ports_[u][pu] = {v, pv};
        g.ports_[v][pv] = {u, pu};
    }
    g.edge_count_ = static_cast<int>(edges.size());
    return g;
}

PortTarget PortGraph::neighbor_via_port(int v, int p) const {
    const auto& tab = ports_.at(v);
    if (p < 0 || p >= static_cast<int>(tab.size()))
        throw std::out_of_range("invalid port " + std::to_string(p) + " at node " + std::to_string(v));
    return tab[p];
}

PortGraph build_path(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    // Insert the edge toward i-1 first so port 0 of node i>0 leads backward.
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i - 1);
    PortGraph g = assign_ports(n, edges, nullptr);
    return g;
}

PortGraph build_ring(int n) {
    if (n < 3) throw std::invalid_argument("ring needs n >= 3");
    PortGraph g;
    g.ports_.assign(n, std::vector<PortTarget>(2));
    for (int i = 0; i < n; ++i) {
        const int prev = (i + n - 1) % n;
        const int next = (i + 1) % n;
        g.ports_[i][0] = {prev, 1};  // port 1 of node i leads to (i+1) mod n
        g.ports_[i][1] = {next, 0};
    }
    g.edge_count_ = n;
    return g;
}

PortGraph build_random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("tree needs n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    // Uniform random attachment: node i joins a uniformly chosen earlier node.
    for (int i = 1; i < n; ++i) edges.emplace_back(static_cast<int>(draw_below(rng, i)), i);
    return assign_ports(n, edges, &rng);
}

PortGraph build_random_connected(int n, int m, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("graph needs n >= 1");
    const long long max_m = static_cast<long long>(n) * (n - 1) / 2;
    if (m < n - 1 || m > max_m) throw std::invalid_argument("edge count out of range for connected simple graph");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> used;
    for (int i = 1; i < n; ++i) {
        const int j = static_cast<int>(draw_below(rng, i));
        edges.emplace_back(j, i);
        used.insert({j, i});
    }
    std::vector<std::pair<int, int>> rest;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!used.count({u, v})) rest.emplace_back(u, v);
    shuffle_vec(rest, rng);
    for (int k = 0; k < m - (n - 1); ++k) edges.push_back(rest[k]);
    return assign_ports(n, edges, &rng);
}

PortGraph build_dumbbell(int n) {
    if (n < 6) throw std::invalid_argument("dumbbell needs n >= 6");
    std::vector<std::pair<int, int>> edges;
    const int k = n / 2;
    auto add_clique = [&](int base) {
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (!(i == 0 && j == k - 1)) edges.emplace_back(base + i, base + j);
    };
    // a-clique on 0..k-1, b-clique on k..2k-1, odd case adds c = 2k.
    add_clique(0);
    add_clique(k);
    if (n % 2 == 0) {
        edges.emplace_back(0, k);              // a1 - b1
        edges.emplace_back(k - 1, 2 * k - 1);  // a_k - b_k
    } else {
        const int c = 2 * k;
        edges.emplace_back(0, c);
        edges.emplace_back(k - 1, c);
        edges.emplace_back(k, c);
        edges.emplace_back(2 * k - 1, c);
    }
    return assign_ports(n, edges, nullptr);
}

PortGraph permute_ports(const PortGraph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int n = g.node_count();
    std::vector<std::vector<int>> remap(n);  // remap[v][old port] = new port
    for (int v = 0; v < n; ++v) {
        remap[v].resize(g.degree(v));
        std::iota(remap[v].begin(), remap[v].end(), 0);
        shuffle_vec(remap[v], rng);
    }
    PortGraph out;
    out.ports_.assign(n, {});
    for (int v = 0; v < n; ++v) out.ports_[v].resize(g.degree(v));
    for (int v = 0; v < n; ++v)
        for (int p = 0; p < g.degree(v); ++p) {
            const PortTarget t = g.ports_of(v)[p];
            out.ports_[v][remap[v][p]] = {t.node, remap[t.node][t.port]};
        }
    out.edge_count_ = g.edge_count();
    return out;
}

ValidationReport validate(const PortGraph& g) {
    ValidationReport rep;
    auto fail = [&rep](std::string s) {
        rep.ok = false;
        rep.violations.push_back(std::move(s));
    };
    const int n = g.node_count();
    long long degree_sum = 0;
    std::set<std::pair<int, int>> seen_edges;
    for (int v = 0; v < n; ++v) {
        const auto& tab = g.ports_of(v);
        degree_sum += static_cast<long long>(tab.size());
        for (int p = 0; p < static_cast<int>(tab.size()); ++p) {
            const PortTarget t = tab[p];
            if (t.node < 0 || t.node >= n) {
                fail("node " + std::to_string(v) + " port " + std::to_string(p) + ": dangling target");
                continue;
            }
            if (t.node == v) fail("self-loop at node " + std::to_string(v) + " port " + std::to_string(p));
            if (t.port < 0 || t.port >= g.degree(t.node)) {
                fail("node " + std::to_string(v) + " port " + std::to_string(p) + ": port contiguity broken at neighbor " +
                     std::to_string(t.node) + " (port " + std::to_string(t.port) + " of degree " +
                     std::to_string(g.degree(t.node)) + ")");
                continue;
            }
            const PortTarget back = g.ports_of(t.node)[t.port];
            if (back.node != v || back.port != p)
                fail("reciprocity violated: (" + std::to_string(v) + "," + std::to_string(p) + ") -> (" +
                     std::to_string(t.node) + "," + std::to_string(t.port) + ") which maps back to (" +
                     std::to_string(back.node) + "," + std::to_string(back.port) + ")");
            if (v < t.node && !seen_edges.insert({v, t.node}).second)
                fail("parallel edge between " + std::to_string(v) + " and " + std::to_string(t.node));
        }
    }
    if (degree_sum != 2LL * g.edge_count())
        fail("degree sum " + std::to_string(degree_sum) + " != 2m = " + std::to_string(2 * g.edge_count()));
    return rep;
}

std::vector<int> bfs_depths(const PortGraph& g, int root) {
    std::vector<int> depth(g.node_count(), -1);
    std::queue<int> q;
    depth.at(root) = 0;
    q.push(root);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (const PortTarget& t : g.ports_of(v))
            if (depth[t.node] < 0) {
                depth[t.node] = depth[v] + 1;
                q.push(t.node);
            }
    }
    return depth;
}

GraphMetrics graph_metrics(const PortGraph& g) {
    GraphMetrics mx;
    const int n = g.node_count();
    for (int v = 0; v < n; ++v) {
        const auto depths = bfs_depths(g, v);
        for (int d : depths) {
            if (d < 0) throw std::invalid_argument("graph is not connected");
            mx.diameter = std::max(mx.diameter, d);
        }
        mx.max_degree = std::max(mx.max_degree, g.degree(v));
    }
    mx.is_tree = (g.edge_count() == n - 1);
    return mx;
}

std::string to_text(const PortGraph& g) {
    std::vector<std::string> lines;
    for (int v = 0; v < g.node_count(); ++v)
        for (int p = 0; p < g.degree(v); ++p) {
            const PortTarget t = g.ports_of(v)[p];
            if (v < t.node)
                lines.push_back(std::to_string(v) + " " + std::to_string(p) + " " + std::to_string(t.node) + " " +
                                std::to_string(t.port));
        }
    std::sort(lines.begin(), lines.end());
    std::string out = std::to_string(g.node_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

PortGraph parse_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1, m = -1;
    std::vector<std::array<int, 4>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m)) {
                if (line.find_first_not_of(" \t\r") == std::string::npos) {
                    n = -1;  // blank/comment line before the header
                    continue;
                }
                throw ParseError(line_no, "expected header \"n m\"");
            }
            if (n < 1 || m < 0) throw ParseError(line_no, "bad header values");
            continue;
        }
        int u, pu, v, pv;
        if (!(ls >> u)) continue;  // blank line
        if (!(ls >> pu >> v >> pv)) throw ParseError(line_no, "expected \"u pu v pv\"");
        std::string extra;
        if (ls >> extra) throw ParseError(line_no, "trailing tokens");
        edges.push_back({u, pu, v, pv});
    }
    if (n < 0) throw ParseError(line_no, "missing header");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError(line_no, "expected " + std::to_string(m) + " edge lines, got " + std::to_string(edges.size()));
    PortGraph g;
    try {
        g = PortGraph::from_edges(n, edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
    const auto rep = validate(g);
    if (!rep.ok) throw ParseError(line_no, rep.violations.front());
    return g;
}

}  // namespace disperse
