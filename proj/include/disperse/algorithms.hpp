#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "disperse/model.hpp"

namespace disperse {

// Per-robot persistent state, one record per algorithm. Fields marked
// "instrumentation" are harness counters, not part of the declared robot
// memory, and are excluded from the bit accounting.

struct PRTState {
    int port_entered = 0;
    bool settled = false;
    int rnd = 0;
};

enum class WalkMode : std::uint8_t { Explore, Settled, Backtrack, BacktrackToRoot };

struct RootedGraphState {
    int port_entered = -1;
    int parent_ptr = -1;
    WalkMode mode = WalkMode::Explore;
    int rnd = 0;
};

struct GraphLogNState {
    int port_entered = -1;
    int parent_ptr = -1;
    WalkMode mode = WalkMode::Explore;
    RobotLabel starting_node = 0;
    int dist = -1;
    int rnd = 0;
    int conversions = 0;  // instrumentation
    int walk_steps = 0;   // instrumentation: backtrack-to-root step cap
};

enum class TreeMode : std::uint8_t { Root, Explore, Wait, Settled };

struct RootedTreeState {
    int port_entered = 0;
    int parent_ptr = -1;
    TreeMode mode = TreeMode::Explore;
    int dist = 0;
    int fd_ports = 0;  // counter of child ports whose subtree reported fully dispersed
    bool fully_dispersed = false;
    int num_reqd = 0;
    int open_unassigned = 0;  // never-settled child ports; drives wave allocation
    int lvl = 1;
    int rnd = 0;
    bool away = false;  // off its assigned node, shuttling to the parent
    bool halted = false;
};

struct GraphNLogNState {
    int port_entered = -1;
    WalkMode mode = WalkMode::Explore;
    std::vector<std::pair<RobotLabel, int>> seen;  // settled label -> first entry port, -1 for none
    int rnd = 0;
};

using RobotState = std::variant<PRTState, RootedGraphState, GraphLogNState, RootedTreeState, GraphNLogNState>;

const char* algorithm_name(AlgorithmKind k);  // prt, rooted-graph, graph-logn, rooted-tree, graph-nlogn
std::optional<AlgorithmKind> parse_algorithm(std::string_view name);

RobotState make_initial_state(AlgorithmKind k, RobotLabel label);

// The initialization block run once per occupied node before round 1, for the
// algorithms that have one (GraphLogN, RootedTree, GraphNLogN: the lowest
// label settles; GraphLogN peers adopt its label as starting node). Group is
// label-ascending. Returns the index of the robot that settled, if any.
std::optional<int> init_group(AlgorithmKind k, const std::vector<RobotState*>& group,
                              const std::vector<RobotLabel>& labels, int degree);

Published publish_robot(AlgorithmKind k, const RobotState& s, RobotLabel label, std::optional<int> entry);

// One robot's phase-1 decision. Pure in (state, view): co-located robots may
// be evaluated in any order against the same snapshot.
Action step_robot(AlgorithmKind k, RobotState& s, RobotLabel label, const LocalView& view);

// Rooted-tree robots stop on their own; everyone else runs to the horizon.
bool robot_halted(const RobotState& s);

// Fixed loop bounds: 2n, 2m, 2mn + n^2, 2m; rooted-tree gets a 3n^2 safety
// cap and is expected to self-terminate well before it.
long long horizon(AlgorithmKind k, int n, long long m);

// Declared persistent-field widths for one robot, in bits. Port fields use
// ceil(log2(max(deg,2))), labels 1..n use ceil(log2(max(n,2))), counters use
// the declared range, booleans one bit, and the graph-nlogn table holds n
// slots of (optional label, port, presence flag). Harness instrumentation is
// excluded.
long long measure_state_bits(const RobotState& s, int n, long long m, int max_degree);
long long state_bits(AlgorithmKind k, int n, long long m, int max_degree);

// The rooted-tree wave allocation: every robot on the node derives the same
// port requirements from the settled robot's broadcast and the shuttle
// reports, then deals exploring robots to ports in increasing port order,
// robots in increasing label order.
struct TreeAllocation {
    std::vector<int> requirement;                          // per port of the node
    std::vector<std::pair<RobotLabel, int>> robot_ports;   // explorer -> port
    int delivered_to_unassigned = 0;
};
TreeAllocation tree_allocate(const LocalView& view);

}  // namespace disperse
