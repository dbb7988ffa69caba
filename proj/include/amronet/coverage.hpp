#pragma once

// Coverage metric: fraction of free space lying within communication radius of
// at least one network node, measured on a deterministic grid of cell centers.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "amronet/geometry.hpp"

namespace amronet {

// Same slack as the range test, so a grid cell center at distance exactly r
// from a node counts as covered.
inline constexpr double kCoverageSlack = 1e-12;

// Rasterized occupancy grid over the world. Cells are identified with their
// centers; a cell is free if its center is in free space, covered once any
// marked disk contains the center. Stationary disks accumulate monotonically;
// transient (moving) disks are counted through a stamp overlay so they never
// dirty the grid.
class CoverageGrid {
  public:
    CoverageGrid(const WorldMap& map, double cell_size) : bounds_(map.bounds()) {
        if (cell_size <= 0.0) throw std::invalid_argument("CoverageGrid: cell_size must be positive");
        nx_ = static_cast<int>(std::ceil(bounds_.width() / cell_size));
        ny_ = static_cast<int>(std::ceil(bounds_.height() / cell_size));
        if (nx_ < 1) nx_ = 1;
        if (ny_ < 1) ny_ = 1;
        dx_ = bounds_.width() / nx_;
        dy_ = bounds_.height() / ny_;
        free_.assign(static_cast<std::size_t>(nx_) * ny_, 0);
        covered_.assign(free_.size(), 0);
        stamp_.assign(free_.size(), 0);
        for (int j = 0; j < ny_; ++j) {
            for (int i = 0; i < nx_; ++i) {
                if (map.in_free_space(center(i, j))) {
                    free_[cell(i, j)] = 1;
                    ++n_free_;
                }
            }
        }
        if (n_free_ == 0) throw std::invalid_argument("CoverageGrid: no free cells");
    }

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    long total_free() const { return n_free_; }
    long covered() const { return n_covered_; }
    double fraction() const { return static_cast<double>(n_covered_) / n_free_; }

    Point2 center(int i, int j) const {
        return {bounds_.x0 + (i + 0.5) * dx_, bounds_.y0 + (j + 0.5) * dy_};
    }

    void clear() {
        std::fill(covered_.begin(), covered_.end(), 0);
        n_covered_ = 0;
    }

    // Permanently mark the disk of radius r at p; returns newly covered free cells.
    long mark_disk(const Point2& p, double r) {
        long fresh = 0;
        visit_disk(p, r, [&](std::size_t c) {
            if (free_[c] && !covered_[c]) {
                covered_[c] = 1;
                ++fresh;
            }
        });
        n_covered_ += fresh;
        return fresh;
    }

    // Free cells covered by the given disks but not by any marked disk.
    // Leaves the grid untouched; duplicate cells across disks count once.
    long count_transient(const std::vector<Point2>& centers, double r) const {
        ++stamp_id_;
        long extra = 0;
        for (const Point2& p : centers) {
            visit_disk(p, r, [&](std::size_t c) {
                if (free_[c] && !covered_[c] && stamp_[c] != stamp_id_) {
                    stamp_[c] = stamp_id_;
                    ++extra;
                }
            });
        }
        return extra;
    }

    double fraction_with(const std::vector<Point2>& centers, double r) const {
        return static_cast<double>(n_covered_ + count_transient(centers, r)) / n_free_;
    }

  private:
    std::size_t cell(int i, int j) const { return static_cast<std::size_t>(j) * nx_ + i; }

    template <typename Fn>
    void visit_disk(const Point2& p, double r, Fn&& fn) const {
        const double r2 = r * r * (1.0 + kCoverageSlack);
        const double rr = std::sqrt(r2);
        int i_lo = static_cast<int>(std::floor((p.x - rr - bounds_.x0) / dx_ - 0.5));
        int i_hi = static_cast<int>(std::ceil((p.x + rr - bounds_.x0) / dx_ - 0.5));
        i_lo = std::max(i_lo, 0);
        i_hi = std::min(i_hi, nx_ - 1);
        for (int i = i_lo; i <= i_hi; ++i) {
            const double cx = bounds_.x0 + (i + 0.5) * dx_;
            const double w2 = r2 - (cx - p.x) * (cx - p.x);
            if (w2 < 0.0) continue;
            const double half = std::sqrt(w2);
            int j_lo = static_cast<int>(std::ceil((p.y - half - bounds_.y0) / dy_ - 0.5));
            int j_hi = static_cast<int>(std::floor((p.y + half - bounds_.y0) / dy_ - 0.5));
            j_lo = std::max(j_lo, 0);
            j_hi = std::min(j_hi, ny_ - 1);
            for (int j = j_lo; j <= j_hi; ++j) fn(cell(i, j));
        }
    }

    Rect bounds_;
    int nx_ = 0, ny_ = 0;
    double dx_ = 0.0, dy_ = 0.0;
    std::vector<std::uint8_t> free_;
    std::vector<std::uint8_t> covered_;
    long n_free_ = 0;
    long n_covered_ = 0;
    mutable std::vector<std::uint32_t> stamp_;
    mutable std::uint32_t stamp_id_ = 0;
};

// One-shot coverage of a static node set; cell_size defaults to r_c/50, the
// resolution at which the grid metric agrees with exact disk areas to ~1e-3.
inline double coverage_fraction(const WorldMap& map, const std::vector<Point2>& nodes,
                                double r_c, double cell_size = 0.0) {
    if (cell_size <= 0.0) cell_size = r_c / 50.0;
    CoverageGrid grid(map, cell_size);
    for (const Point2& p : nodes) grid.mark_disk(p, r_c);
    return grid.fraction();
}

// Exact area of a union of equal disks for up to two disks (closed form via
// the lens formula); three or more fall back to a fine grid over the disks'
// bounding box. Meant as a reference value for tests and calibration.
inline double union_disk_area(const std::vector<Point2>& centers, double r) {
    using std::numbers::pi;
    if (r <= 0.0 || centers.empty()) return 0.0;
    if (centers.size() == 1) return pi * r * r;
    if (centers.size() == 2) {
        const double d = distance(centers[0], centers[1]);
        if (d >= 2.0 * r) return 2.0 * pi * r * r;
        const double lens = 2.0 * r * r * std::acos(d / (2.0 * r)) -
                            0.5 * d * std::sqrt(4.0 * r * r - d * d);
        return 2.0 * pi * r * r - lens;
    }
    Rect box{centers[0].x, centers[0].y, centers[0].x, centers[0].y};
    for (const Point2& c : centers) {
        box.x0 = std::min(box.x0, c.x - r);
        box.y0 = std::min(box.y0, c.y - r);
        box.x1 = std::max(box.x1, c.x + r);
        box.y1 = std::max(box.y1, c.y + r);
    }
    const double cell = r / 256.0;
    const int nx = static_cast<int>(std::ceil(box.width() / cell));
    const int ny = static_cast<int>(std::ceil(box.height() / cell));
    const double ddx = box.width() / nx, ddy = box.height() / ny;
    const double r2 = r * r;
    long inside = 0;
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const Point2 p{box.x0 + (i + 0.5) * ddx, box.y0 + (j + 0.5) * ddy};
            for (const Point2& c : centers) {
                if (distance2(p, c) <= r2) {
                    ++inside;
                    break;
                }
            }
        }
    }
    return inside * ddx * ddy;
}

}  // namespace amronet
