// Communication graph: closed-disk range predicate, union-find, component
// labeling, and nearest-reference queries. Component counts are cross-checked
// against a plain breadth-first search.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <queue>
#include <stdexcept>
#include <vector>

#include "amronet/comm_graph.hpp"
#include "amronet/sim/rng.hpp"

using namespace amronet;
using Catch::Approx;

namespace {

// Independent component counter: breadth-first search over brute-force
// adjacency, using plain closed-disk distances.
int bfs_component_count(const std::vector<NodeRecord>& nodes, double r_c) {
    const std::size_t n = nodes.size();
    std::vector<int> seen(n, 0);
    int comps = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++comps;
        std::queue<std::size_t> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            const std::size_t i = q.front();
            q.pop();
            for (std::size_t j = 0; j < n; ++j) {
                if (!seen[j] && distance(nodes[i].position, nodes[j].position) <= r_c) {
                    seen[j] = 1;
                    q.push(j);
                }
            }
        }
    }
    return comps;
}

NodeRecord ref_node(int id, double x, double y, int status = 0) {
    return {id, NodeKind::Router, {x, y}, status, true};
}

}  // namespace

TEST_CASE("range predicate is a closed disk with relative slack") {
    CHECK(in_range({0.0, 0.0}, {4.0, 0.0}, 4.0));
    CHECK(in_range({0.0, 0.0}, {4.0 * (1.0 + 1e-13), 0.0}, 4.0));  // inside the slack
    CHECK_FALSE(in_range({0.0, 0.0}, {4.0 * (1.0 + 1e-9), 0.0}, 4.0));
    CHECK_FALSE(in_range({0.0, 0.0}, {4.001, 0.0}, 4.0));
    CHECK(in_range({1.0, 1.0}, {1.0, 1.0}, 0.5));
}

TEST_CASE("union-find merges exactly once per new link") {
    UnionFind uf;
    const std::size_t a = uf.add(), b = uf.add(), c = uf.add();
    CHECK_FALSE(uf.same(a, b));
    CHECK(uf.unite(a, b));
    CHECK_FALSE(uf.unite(a, b));  // already joined
    CHECK(uf.unite(b, c));
    CHECK(uf.same(a, c));
}

TEST_CASE("graph construction rejects duplicate ids") {
    std::vector<NodeRecord> nodes{ref_node(1, 0.0, 0.0), ref_node(1, 1.0, 0.0)};
    CHECK_THROWS_AS(CommGraph(nodes, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(CommGraph({ref_node(1, 0.0, 0.0)}, 0.0), std::invalid_argument);
}

TEST_CASE("edges come out sorted as (min,max) id pairs") {
    // Chain 3-1-2 with r_c=1.5: edges (1,3) and (1,2), no (2,3).
    std::vector<NodeRecord> nodes{ref_node(3, 0.0, 0.0), ref_node(1, 1.0, 0.0),
                                  ref_node(2, 2.0, 0.0)};
    const CommGraph g(nodes, 1.5);
    REQUIRE(g.edges().size() == 2);
    CHECK(g.edges()[0] == std::pair<int, int>(1, 2));
    CHECK(g.edges()[1] == std::pair<int, int>(1, 3));
    CHECK(g.neighbors(1) == std::vector<int>{2, 3});
    CHECK(g.neighbors(2) == std::vector<int>{1});
    CHECK(g.same_component(2, 3));
    CHECK_THROWS_AS(g.neighbors(99), std::out_of_range);
}

TEST_CASE("component labels are assigned by smallest member id") {
    std::vector<NodeRecord> nodes{
        ref_node(10, 0.0, 0.0), ref_node(11, 1.0, 0.0),   // pair A
        ref_node(2, 8.0, 8.0),                            // singleton B
        ref_node(5, 4.0, 4.0), ref_node(6, 4.5, 4.0),     // pair C
    };
    const CommGraph g(nodes, 1.2);
    CHECK(g.component_count() == 3);
    const std::map<int, int> label = g.components();
    // Smallest id overall (2) gets label 0, then 5's pair, then 10's.
    CHECK(label.at(2) == 0);
    CHECK(label.at(5) == 1);
    CHECK(label.at(6) == 1);
    CHECK(label.at(10) == 2);
    CHECK(label.at(11) == 2);
}

TEST_CASE("component counts agree with breadth-first search on random sets") {
    RngStream rng(7u, 0u);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform() * 40.0);
        const double r_c = rng.uniform(0.5, 3.0);
        std::vector<NodeRecord> nodes;
        for (int i = 0; i < n; ++i) {
            Point2 p{rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0)};
            // Keep every pairwise distance away from the r_c borderline so the
            // slack policy cannot make the two counters disagree.
            bool ok = true;
            for (const NodeRecord& q : nodes)
                if (std::abs(distance(p, q.position) - r_c) < 1e-6) ok = false;
            if (!ok) {
                --i;
                continue;
            }
            nodes.push_back(ref_node(i, p.x, p.y));
        }
        const CommGraph g(nodes, r_c);
        CHECK(g.component_count() == bfs_component_count(nodes, r_c));
    }
}

TEST_CASE("reference query filters non-references and sorts by distance then id") {
    std::vector<NodeRecord> nodes{
        ref_node(4, 3.0, 0.0),
        ref_node(2, 0.0, 3.0),                           // same distance as id 4
        {7, NodeKind::Agent, {0.1, 0.0}, 0, false},      // mover: never a reference
        ref_node(9, 1.0, 0.0),
        ref_node(3, 40.0, 0.0),                          // out of range
    };
    const std::vector<RangedReference> refs = references_in_range(nodes, {0.0, 0.0}, 5.0);
    REQUIRE(refs.size() == 3);
    CHECK(refs[0].id == 9);
    CHECK(refs[0].dist == Approx(1.0));
    CHECK(refs[1].id == 2);  // distance tie with 4 resolved by id
    CHECK(refs[2].id == 4);
    CHECK(refs[1].dist == Approx(3.0));
    CHECK(refs[2].position.x == Approx(3.0));
}
