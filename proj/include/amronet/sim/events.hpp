#pragma once

// Structured event log: every notable state transition a run produces, in
// order, for tests and post-hoc analysis.

#include <string>
#include <vector>

namespace amronet {

enum class EventKind {
    GreedyPlaced,       // agent released a router at its greedy spot
    ReferenceSwitched,  // agent's current reference changed
    StatusAdopted,      // agent took over another network's status label
    TriangleDeployed,   // a router was sent toward a triangular bridge goal
    TriangleResolved,   // a bridging router arrived (or gave up) and went stationary
    Frozen,             // a spreading router fixed itself as a reference
    ComponentsMerged,  // a bridge verifiably joined two components
    AgentBlocked,      // goal-seeking agent/router exhausted its dodge budget
    RouterDepleted,    // agent wanted to place but its router budget is empty
    InitWarning,       // scenario starts in a suspicious state (e.g. spawn area
                       // wider than the base reference's radius)
};

inline const char* event_kind_name(EventKind k) {
    switch (k) {
        case EventKind::GreedyPlaced: return "greedy_placed";
        case EventKind::ReferenceSwitched: return "reference_switched";
        case EventKind::StatusAdopted: return "status_adopted";
        case EventKind::TriangleDeployed: return "triangle_deployed";
        case EventKind::TriangleResolved: return "triangle_resolved";
        case EventKind::Frozen: return "frozen";
        case EventKind::ComponentsMerged: return "components_merged";
        case EventKind::AgentBlocked: return "agent_blocked";
        case EventKind::RouterDepleted: return "router_depleted";
        case EventKind::InitWarning: return "init_warning";
    }
    return "unknown";
}

struct Event {
    long step = 0;
    EventKind kind = EventKind::GreedyPlaced;
    int subject = -1;   // entity the event is about (router/agent id)
    int ref_a = -1;     // first involved reference, if any
    int ref_b = -1;     // second involved reference, if any
    std::string note;   // free-form detail
};

using EventLog = std::vector<Event>;

inline long count_events(const EventLog& log, EventKind k) {
    long n = 0;
    for (const Event& e : log)
        if (e.kind == k) ++n;
    return n;
}

}  // namespace amronet
