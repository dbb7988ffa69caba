#pragma once

// Unit-disk communication graph over network nodes, with union-find
// connectivity and deterministic component labeling.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "amronet/geometry.hpp"

namespace amronet {

// Relative slack on the squared-range test. Lattice generators emit
// coordinates with ~1e-13 relative rounding, so neighbor pairs at exactly r_c
// would otherwise drop their edge to FP noise. Distances that are genuinely
// beyond r_c (relative excess >~1e-10) still fail the test.
inline constexpr double kRangeSlack = 1e-12;

// Closed-disk range test: communication holds at distance exactly r_c.
inline bool in_range(const Point2& a, const Point2& b, double r_c) {
    return distance2(a, b) <= r_c * r_c * (1.0 + kRangeSlack);
}

enum class NodeKind : std::uint8_t { BaseStation, Router, Agent };

// Snapshot of one entity as the network sees it. `status` is the network/base
// index a node belongs to (-1 while unattached); `is_reference` marks
// stationary nodes that others may anchor on.
struct NodeRecord {
    int id = 0;
    NodeKind kind = NodeKind::Router;
    Point2 position;
    int status = -1;
    bool is_reference = false;
};

// Disjoint sets with path compression + union by rank.
class UnionFind {
  public:
    explicit UnionFind(std::size_t n = 0) : parent_(n), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t size() const { return parent_.size(); }

    std::size_t add() {
        parent_.push_back(parent_.size());
        rank_.push_back(0);
        return parent_.size() - 1;
    }

    std::size_t find(std::size_t a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }

    // Returns true if a and b were in different sets.
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        return true;
    }

    bool same(std::size_t a, std::size_t b) { return find(a) == find(b); }

  private:
    std::vector<std::size_t> parent_;
    std::vector<std::uint8_t> rank_;
};

// Immutable communication graph built from a node snapshot: an edge joins
// every pair within communication radius.
class CommGraph {
  public:
    CommGraph(std::vector<NodeRecord> nodes, double r_c)
        : nodes_(std::move(nodes)), r_c_(r_c), dsu_(nodes_.size()) {
        if (r_c_ <= 0.0) throw std::invalid_argument("CommGraph: r_c must be positive");
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            if (!index_by_id_.emplace(nodes_[i].id, i).second)
                throw std::invalid_argument("CommGraph: duplicate node id");
        }
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            for (std::size_t j = i + 1; j < nodes_.size(); ++j) {
                if (in_range(nodes_[i].position, nodes_[j].position, r_c_)) {
                    auto [u, v] = std::minmax(nodes_[i].id, nodes_[j].id);
                    edges_.emplace_back(u, v);
                    dsu_.unite(i, j);
                }
            }
        }
        std::sort(edges_.begin(), edges_.end());
    }

    double radius() const { return r_c_; }
    const std::vector<NodeRecord>& nodes() const { return nodes_; }

    // Edges as (min id, max id) pairs, lexicographically sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // Neighbor ids of one node, ascending.
    std::vector<int> neighbors(int id) const {
        const std::size_t i = index_of(id);
        std::vector<int> out;
        for (std::size_t j = 0; j < nodes_.size(); ++j) {
            if (j != i && in_range(nodes_[i].position, nodes_[j].position, r_c_))
                out.push_back(nodes_[j].id);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    bool same_component(int id_a, int id_b) const {
        return dsu_.same(index_of(id_a), index_of(id_b));
    }

    // Node id -> component label. Labels are 0..k-1 assigned by each
    // component's smallest node id, so they are stable across runs.
    std::map<int, int> components() const {
        std::vector<int> ids(nodes_.size());
        for (std::size_t i = 0; i < nodes_.size(); ++i) ids[i] = nodes_[i].id;
        std::sort(ids.begin(), ids.end());
        std::map<int, int> label;
        std::map<std::size_t, int> root_label;
        for (int id : ids) {
            const std::size_t root = dsu_.find(index_of(id));
            auto [it, fresh] = root_label.emplace(root, static_cast<int>(root_label.size()));
            label[id] = it->second;
        }
        return label;
    }

    int component_count() const {
        std::map<std::size_t, bool> roots;
        for (std::size_t i = 0; i < nodes_.size(); ++i) roots[dsu_.find(i)] = true;
        return static_cast<int>(roots.size());
    }

  private:
    std::size_t index_of(int id) const {
        auto it = index_by_id_.find(id);
        if (it == index_by_id_.end()) throw std::out_of_range("CommGraph: unknown node id");
        return it->second;
    }

    std::vector<NodeRecord> nodes_;
    double r_c_;
    std::vector<std::pair<int, int>> edges_;
    std::map<int, std::size_t> index_by_id_;
    mutable UnionFind dsu_;
};

// References (stationary anchor nodes) within r_c of p, sorted by distance
// then id so "nearest reference" is unambiguous even on ties.
struct RangedReference {
    int id = 0;
    double dist = 0.0;
    int status = -1;
    Point2 position;
};

inline std::vector<RangedReference> references_in_range(
    const std::vector<NodeRecord>& nodes, const Point2& p, double r_c) {
    std::vector<RangedReference> out;
    for (const NodeRecord& n : nodes) {
        if (!n.is_reference) continue;
        if (in_range(n.position, p, r_c))
            out.push_back({n.id, distance(n.position, p), n.status, n.position});
    }
    std::sort(out.begin(), out.end(), [](const RangedReference& a, const RangedReference& b) {
        if (a.dist != b.dist) return a.dist < b.dist;
        return a.id < b.id;
    });
    return out;
}

}  // namespace amronet
