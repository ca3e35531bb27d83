#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace disperse {

// Robot labels are 1..n. Nodes stay anonymous toward robots; node ids below
// appear only in traces and engine bookkeeping.
using RobotLabel = int;

enum class AlgorithmKind {
    PathRingTree,
    RootedGraph,
    GraphLogN,
    RootedTree,
    GraphNLogN,
};

// What a settled rooted-tree robot tells its parent when it shuttles up.
struct TreeReport {
    bool fully_dispersed = false;
    int num_robots_reqd = 0;
};

// One robot's phase-1 broadcast record, assembled from its pre-round state.
// Co-located robots all see the same records; there is nothing else to see.
struct Published {
    RobotLabel label = 0;
    std::optional<int> entry_port;  // port it entered this node through this round
    bool settled_here = false;      // assigned to this node and currently on it
    bool is_root = false;           // rooted-tree root robot
    bool exploring = false;         // in a state eligible to settle this round
    std::optional<int> parent_ptr;
    std::optional<RobotLabel> starting_node;
    std::optional<int> dist;
    std::optional<int> open_unassigned;  // rooted-tree: never-settled child ports
    std::optional<TreeReport> report;    // rooted-tree: shuttle report
};

// Everything a robot may read in the communication step: the degree of its
// node, its own entry port, and co-located broadcasts. No node identity, no
// global topology. Robots do know n and m.
struct LocalView {
    int degree = 0;
    std::optional<int> entry_port;
    const std::vector<Published>* here = nullptr;  // label-ascending, includes self
    int n = 0;
    long long m = 0;
};

struct Action {
    bool settle = false;
    std::optional<int> move_port;
};

// An algorithm emitting an impossible step (invalid port, desynchronized
// stage machine, table overflow). Never skipped silently.
struct SimulationFault : std::runtime_error {
    SimulationFault(int round_no, RobotLabel who, const std::string& what)
        : std::runtime_error("round " + std::to_string(round_no) + ", robot " + std::to_string(who) + ": " + what),
          round(round_no),
          robot(who) {}
    int round;
    RobotLabel robot;
};

struct Move {
    RobotLabel label = 0;
    int from = -1;
    int port = -1;
    int to = -1;
    bool operator==(const Move&) const = default;
};

struct RoundRecord {
    std::vector<Move> moves;                             // label-ascending
    std::vector<std::pair<RobotLabel, int>> settled;     // label-ascending
    long long bits_max = 0;
    bool operator==(const RoundRecord&) const = default;
};

struct Trace {
    AlgorithmKind algo{};
    int n = 0;
    long long m = 0;
    std::vector<int> initial;  // robot with label i+1 starts on initial[i]
    std::vector<RoundRecord> rounds;
    std::optional<int> dispersed_at;  // first round after which every node is assigned
    long long horizon = 0;
    bool operator==(const Trace&) const = default;
};

}  // namespace disperse
