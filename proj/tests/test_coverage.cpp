// Coverage accounting: the free-cell grid, permanent vs transient disk marks,
// and the exact union-of-disks area helpers. Grid results are checked against
// closed-form circle and lens areas.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "amronet/coverage.hpp"
#include "amronet/geometry.hpp"
#include "amronet/sim/rng.hpp"

using namespace amronet;
using Catch::Approx;

namespace {

// Closed-form area of the union of two radius-r disks at center distance d.
double two_disk_union(double r, double d) {
    const double pi = std::numbers::pi;
    if (d >= 2.0 * r) return 2.0 * pi * r * r;
    const double lens = 2.0 * r * r * std::acos(d / (2.0 * r)) -
                        0.5 * d * std::sqrt(4.0 * r * r - d * d);
    return 2.0 * pi * r * r - lens;
}

}  // namespace

TEST_CASE("coverage grid rejects degenerate setups") {
    const WorldMap map({0.0, 0.0, 4.0, 4.0});
    CHECK_THROWS_AS(CoverageGrid(map, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(CoverageGrid(map, -1.0), std::invalid_argument);
    // A map whose every cell center falls inside the obstacle has no free cells.
    const WorldMap walled({0.0, 0.0, 1.0, 1.0}, {{0.0, 0.0, 1.0, 1.0}});
    CHECK_THROWS_AS(CoverageGrid(walled, 1.0), std::invalid_argument);
}

TEST_CASE("grid counts free cells and ignores obstacle cells") {
    // 4x4 world, 1x1 cells, one 2x2 obstacle: 16 - 4 free cells.
    const WorldMap map({0.0, 0.0, 4.0, 4.0}, {{1.0, 1.0, 3.0, 3.0}});
    const CoverageGrid grid(map, 1.0);
    CHECK(grid.nx() == 4);
    CHECK(grid.ny() == 4);
    CHECK(grid.total_free() == 12);
    CHECK(grid.covered() == 0);
    CHECK(grid.center(0, 0).x == Approx(0.5));
    CHECK(grid.center(3, 2).y == Approx(2.5));
}

TEST_CASE("marking a disk twice adds nothing new") {
    const WorldMap map({0.0, 0.0, 4.0, 4.0});
    CoverageGrid grid(map, 1.0);
    const long fresh = grid.mark_disk({2.0, 2.0}, 1.1);
    CHECK(fresh == 4);  // the four centers at distance sqrt(0.5) from (2,2)
    CHECK(grid.covered() == 4);
    CHECK(grid.mark_disk({2.0, 2.0}, 1.1) == 0);
    CHECK(grid.fraction() == Approx(4.0 / 16.0));
    grid.clear();
    CHECK(grid.covered() == 0);
    CHECK(grid.mark_disk({2.0, 2.0}, 1.1) == 4);
}

TEST_CASE("transient counting never mutates the grid") {
    const WorldMap map({0.0, 0.0, 4.0, 4.0});
    CoverageGrid grid(map, 1.0);
    grid.mark_disk({0.5, 0.5}, 0.1);  // exactly its own cell
    REQUIRE(grid.covered() == 1);
    // Two overlapping probes: the probes share cells with each other (counted
    // once) and with the marked disk (not counted at all). Probe A reaches
    // (0,0),(1,0),(0,1); probe B reaches (1,0),(0,0),(2,0),(1,1); minus the
    // already-covered (0,0) that leaves 4 distinct cells.
    const std::vector<Point2> probes{{0.5, 0.5}, {1.5, 0.5}};
    CHECK(grid.count_transient(probes, 1.1) == 4);
    CHECK(grid.count_transient(probes, 1.1) == 4);  // replays identically
    CHECK(grid.covered() == 1);
    CHECK(grid.fraction_with(probes, 1.1) == Approx(5.0 / 16.0));
}

TEST_CASE("one disk over the whole map gives full coverage") {
    const WorldMap map({0.0, 0.0, 4.0, 4.0});
    CHECK(coverage_fraction(map, {{2.0, 2.0}}, 3.0) == Approx(1.0));
    CHECK(coverage_fraction(map, {}, 3.0) == 0.0);
}

TEST_CASE("grid coverage matches circle area on an empty map") {
    const WorldMap map({0.0, 0.0, 20.0, 20.0});
    const double r = 3.0;
    const double frac = coverage_fraction(map, {{10.0, 10.0}}, r);
    CHECK(frac == Approx(std::numbers::pi * r * r / 400.0).margin(1e-3));
}

TEST_CASE("coverage respects obstacles: only free cells count") {
    // Disk covers everything; obstacle removes a quarter of the map from the
    // denominator, so the fraction stays exactly 1.
    const WorldMap map({0.0, 0.0, 4.0, 4.0}, {{0.0, 0.0, 2.0, 2.0}});
    CHECK(coverage_fraction(map, {{2.0, 2.0}}, 5.0) == Approx(1.0));
    // A disk strictly inside the obstacle covers no free cell.
    CHECK(coverage_fraction(map, {{1.0, 1.0}}, 0.4) == 0.0);
}

TEST_CASE("exact union area: single disk and far/coincident pairs") {
    const double pi = std::numbers::pi;
    CHECK(union_disk_area({{0.0, 0.0}}, 2.0) == Approx(4.0 * pi));
    CHECK(union_disk_area({{0.0, 0.0}, {10.0, 0.0}}, 1.0) == Approx(2.0 * pi));
    CHECK(union_disk_area({{0.0, 0.0}, {2.0, 0.0}}, 1.0) == Approx(2.0 * pi));  // tangent
    CHECK(union_disk_area({}, 1.0) == 0.0);
}

TEST_CASE("exact union area: overlapping pair matches the lens formula") {
    CHECK(union_disk_area({{0.0, 0.0}, {1.0, 0.0}}, 1.0) ==
          Approx(5.054815608570829).epsilon(1e-12));
    for (double d : {0.1, 0.5, 1.3, 1.9}) {
        CHECK(union_disk_area({{0.0, 0.0}, {d, 0.0}}, 1.0) ==
              Approx(two_disk_union(1.0, d)).epsilon(1e-12));
    }
    // Coincident disks: union is one disk.
    CHECK(union_disk_area({{3.0, 3.0}, {3.0, 3.0}}, 1.5) ==
          Approx(std::numbers::pi * 2.25).epsilon(1e-12));
}

TEST_CASE("three-disk union falls back to a grid consistent with analytics") {
    const double pi = std::numbers::pi;
    // Three far-apart disks: the union is three full circles.
    const double far3 = union_disk_area({{0.0, 0.0}, {10.0, 0.0}, {0.0, 10.0}}, 1.0);
    CHECK(far3 == Approx(3.0 * pi).epsilon(5e-3));
    // Two overlapping + the grid path: agree with the closed form to grid error.
    const double grid2 = union_disk_area({{0.0, 0.0}, {1.0, 0.0}, {20.0, 20.0}}, 1.0);
    CHECK(grid2 == Approx(two_disk_union(1.0, 1.0) + pi).epsilon(5e-3));
}

TEST_CASE("grid and analytic coverage agree on random two-disk layouts") {
    const Rect bounds{0.0, 0.0, 30.0, 30.0};
    const WorldMap map(bounds);
    RngStream rng(42u, 0u);
    for (int trial = 0; trial < 25; ++trial) {
        const double r = rng.uniform(1.0, 3.0);
        const Point2 a{rng.uniform(r, 30.0 - r), rng.uniform(r, 30.0 - r)};
        const double d = rng.uniform(0.1, 2.5 * r);
        const double ang = rng.angle();
        Point2 b = a + d * unit_from_angle(ang);
        b.x = std::min(std::max(b.x, r), 30.0 - r);
        b.y = std::min(std::max(b.y, r), 30.0 - r);
        const double analytic = two_disk_union(r, distance(a, b)) / bounds.area();
        const double grid = coverage_fraction(map, {a, b}, r);
        CHECK(grid == Approx(analytic).margin(1e-3));
    }
}
