#pragma once

// Time-series products of a run: sampled metric rows plus the final world
// snapshot for rendering and post-hoc checks.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "amronet/comm_graph.hpp"
#include "amronet/geometry.hpp"
#include "amronet/sim/events.hpp"
#include "amronet/sim/scenario.hpp"

namespace amronet {

struct RunSample {
    long step = 0;
    double time_s = 0.0;
    double coverage = 0.0;      // full network: stationary disks + movers
    int n_routers = 0;          // stationary nodes (bases + settled routers)
    int n_deployed = 0;         // bases + every router ever released/spawned
    int n_components = 0;       // comm-graph components over network nodes
    // Not exported to CSV: coverage restricted to stationary disks. Monotone
    // nondecreasing over a run; used by invariant checks and termination.
    double stationary_coverage = 0.0;
    // Not exported to CSV: the worst (largest) component count over the
    // stationary nodes sharing one base's status. 1 means every base's own
    // network is internally connected.
    int per_status_components = 0;
};

struct RunRecord {
    std::string scenario;
    std::uint64_t seed = 0;
    Algorithm algo = Algorithm::AgentAssisted;
    std::vector<RunSample> samples;

    const RunSample& final_sample() const {
        if (samples.empty()) throw std::logic_error("RunRecord: no samples");
        return samples.back();
    }
};

// Full outcome of one simulation run.
struct RunResult {
    RunRecord record;
    EventLog events;
    std::vector<NodeRecord> final_nodes;  // bases, routers, agents (ids stable)
    Rect bounds;
    std::vector<Rect> obstacles;
    double r_c = 0.0;
};

}  // namespace amronet
