#pragma once

// Shared deployment machinery: the stationary reference network (incremental
// connectivity, disabled flags), the greedy release rule, and triangular
// bridge-point geometry.

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "amronet/comm_graph.hpp"
#include "amronet/geometry.hpp"

namespace amronet {

enum class TriangularStrategy { Global, Local };

inline const char* strategy_name(TriangularStrategy s) {
    return s == TriangularStrategy::Global ? "global" : "local";
}

// All stationary network nodes (base stations + settled routers). Positions
// never change and nodes are only added, so connectivity is maintained
// incrementally with a union-find instead of rebuilding graphs.
class StationaryNet {
  public:
    explicit StationaryNet(double r_c) : r_c_(r_c) {
        if (r_c <= 0.0) throw std::invalid_argument("StationaryNet: r_c must be positive");
    }

    double radius() const { return r_c_; }
    const std::vector<NodeRecord>& nodes() const { return nodes_; }
    int size() const { return static_cast<int>(nodes_.size()); }

    // Add a stationary reference node; links it to every node in range.
    // Returns how many distinct pre-existing components it attached to.
    int add(int id, NodeKind kind, const Point2& pos, int status) {
        if (index_.count(id)) throw std::invalid_argument("StationaryNet: duplicate id");
        const std::size_t me = dsu_.add();
        int linked = 0;
        for (std::size_t j = 0; j < nodes_.size(); ++j) {
            if (in_range(nodes_[j].position, pos, r_c_) && dsu_.unite(me, j)) ++linked;
        }
        nodes_.push_back({id, kind, pos, status, true});
        disabled_.push_back(0);
        index_[id] = nodes_.size() - 1;
        return linked;
    }

    bool has(int id) const { return index_.count(id) != 0; }

    const NodeRecord& node(int id) const { return nodes_[index_of(id)]; }

    bool same_component(int id_a, int id_b) const {
        return dsu_.same(index_of(id_a), index_of(id_b));
    }

    int component_count() const {
        std::map<std::size_t, bool> roots;
        for (std::size_t i = 0; i < nodes_.size(); ++i) roots[dsu_.find(i)] = true;
        return static_cast<int>(roots.size());
    }

    void set_disabled(int id) { disabled_[index_of(id)] = 1; }
    bool disabled(int id) const { return disabled_[index_of(id)] != 0; }

    std::vector<RangedReference> references_near(const Point2& p) const {
        return references_in_range(nodes_, p, r_c_);
    }

  private:
    std::size_t index_of(int id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw std::out_of_range("StationaryNet: unknown id");
        return it->second;
    }

    double r_c_;
    std::vector<NodeRecord> nodes_;
    std::vector<std::uint8_t> disabled_;
    std::map<int, std::size_t> index_;
    mutable UnionFind dsu_;
};

// Greedy release rule: place a router exactly when the LAST reference is
// about to slip out of range, i.e. every in-range reference sits in the outer
// shell beyond theta*r_c. No references in range means it is already too late
// to place a connected router, so the answer is no.
inline bool should_release(const std::vector<RangedReference>& refs, double theta, double r_c) {
    if (refs.empty()) return false;
    const double threshold = theta * r_c;
    for (const RangedReference& r : refs)
        if (r.dist < threshold) return false;
    return true;
}

// Greedy placement: the releaser's position nudged delta back toward the
// reference it is about to lose, so the new router is safely inside range.
inline Point2 greedy_place(const Point2& agent_pos, const Point2& ref_pos, double delta) {
    const Vec2 d = ref_pos - agent_pos;
    const double len = norm(d);
    if (len <= delta) return len == 0.0 ? agent_pos : ref_pos;
    return agent_pos + (delta / len) * d;
}

// Bridge point for two references of different components: on the
// perpendicular bisector of p_a p_b at distance sqrt(r_c^2 - (a/2)^2) from
// the midpoint, on the same side as `side`, hence at range exactly r_c from
// both references. Symmetric in (p_a, p_b).
inline Point2 triangular_goal(const Point2& p_a, const Point2& p_b, const Point2& side,
                              double r_c) {
    const Vec2 ab = p_b - p_a;
    const double a = norm(ab);
    if (a == 0.0) throw std::invalid_argument("triangular_goal: coincident references");
    if (a > 2.0 * r_c * (1.0 + 1e-9))
        throw std::invalid_argument("triangular_goal: references farther apart than 2*r_c");
    const Point2 mid = p_a + 0.5 * ab;
    const double d2 = r_c * r_c - 0.25 * a * a;
    const double d = d2 > 0.0 ? std::sqrt(d2) : 0.0;
    Vec2 n{-ab.y / a, ab.x / a};
    const double orient = dot(side - mid, n);
    if (orient < 0.0) {
        n = -1.0 * n;
    } else if (orient == 0.0) {
        // `side` exactly on the line: pick the upward-ish normal so the result
        // does not depend on the order of p_a and p_b.
        if (n.y < 0.0 || (n.y == 0.0 && n.x < 0.0)) n = -1.0 * n;
    }
    return mid + d * n;
}

// Outcome of a cross-status reference encounter.
struct TriangleDecision {
    bool deploy = false;
    Point2 goal;        // valid when deploy
    int old_ref = -1;   // endpoint of the encountering entity's own status
    int new_ref = -1;   // endpoint of the other status
};

// Gate a triangular deployment between old_ref (the entity's current
// reference) and new_ref (the just-encountered one of a different status).
// Global consults actual connectivity of the stationary net; Local uses the
// once-per-endpoint-pair disabled flags. Degenerate geometry (coincident or
// out-of-reach references) never deploys. Pure: marking endpoints disabled is
// the caller's commit-time job.
inline TriangleDecision on_new_reference(const StationaryNet& net, TriangularStrategy strategy,
                                         int old_ref_id, int new_ref_id, const Point2& side) {
    TriangleDecision out;
    out.old_ref = old_ref_id;
    out.new_ref = new_ref_id;
    if (strategy == TriangularStrategy::Global) {
        if (net.same_component(old_ref_id, new_ref_id)) return out;
    } else {
        if (net.disabled(old_ref_id) && net.disabled(new_ref_id)) return out;
    }
    const Point2& pa = net.node(old_ref_id).position;
    const Point2& pb = net.node(new_ref_id).position;
    const double a = distance(pa, pb);
    if (a == 0.0 || a > 2.0 * net.radius() * (1.0 + 1e-9)) return out;
    out.goal = triangular_goal(pa, pb, side, net.radius());
    out.deploy = true;
    return out;
}

}  // namespace amronet
