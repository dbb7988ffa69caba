#pragma once

// Planar primitives and the bounded world the simulation runs in: axis-aligned
// rectangular bounds, axis-aligned rectangular obstacles, and the point/segment/ray
// queries everything else is built on.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace amronet {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
    Vec2& operator*=(double s) { x *= s; y *= s; return *this; }
};

using Point2 = Vec2;

inline Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
inline Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
inline Vec2 operator*(Vec2 a, double s) { return a *= s; }
inline Vec2 operator*(double s, Vec2 a) { return a *= s; }

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double norm2(const Vec2& a) { return dot(a, a); }
inline double norm(const Vec2& a) { return std::sqrt(norm2(a)); }
inline double distance2(const Point2& a, const Point2& b) { return norm2(b - a); }
inline double distance(const Point2& a, const Point2& b) { return norm(b - a); }
inline Vec2 unit_from_angle(double theta) { return {std::cos(theta), std::sin(theta)}; }

// Axis-aligned rectangle, corners (x0,y0) <= (x1,y1).
struct Rect {
    double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;

    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    double area() const { return width() * height(); }
    bool valid() const { return x0 < x1 && y0 < y1; }

    // Closed containment (boundary counts as inside).
    bool contains(const Point2& p) const {
        return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1;
    }
    // Open containment (boundary does not count).
    bool interior_contains(const Point2& p) const {
        return p.x > x0 && p.x < x1 && p.y > y0 && p.y < y1;
    }
    // Closest point of the (closed) rectangle to p.
    Point2 clamp(const Point2& p) const {
        return {std::min(std::max(p.x, x0), x1), std::min(std::max(p.y, y0), y1)};
    }
    bool overlaps(const Rect& o) const {
        return x0 < o.x1 && o.x0 < x1 && y0 < o.y1 && o.y0 < y1;
    }
};

namespace detail {

// Liang-Barsky: clip parameter interval [t0,t1] of a + t*d against one
// half-plane constraint p*t <= q. Returns false if the interval empties.
inline bool clip_halfplane(double p, double q, double& t0, double& t1) {
    if (p == 0.0) return q >= 0.0;  // segment parallel to this edge
    double r = q / p;
    if (p < 0.0) {
        if (r > t1) return false;
        if (r > t0) t0 = r;
    } else {
        if (r < t0) return false;
        if (r < t1) t1 = r;
    }
    return true;
}

// Clip [t0,t1] of the parametric segment a + t*(b-a) to the closed rect.
inline bool clip_to_rect(const Rect& r, const Point2& a, const Point2& b,
                         double& t0, double& t1) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    return clip_halfplane(-dx, a.x - r.x0, t0, t1) &&
           clip_halfplane(dx, r.x1 - a.x, t0, t1) &&
           clip_halfplane(-dy, a.y - r.y0, t0, t1) &&
           clip_halfplane(dy, r.y1 - a.y, t0, t1);
}

}  // namespace detail

// True if the open segment (a,b) passes through the rectangle's interior.
// Touching or sliding along the boundary does not count.
inline bool segment_crosses_interior(const Rect& r, const Point2& a, const Point2& b) {
    double t0 = 0.0, t1 = 1.0;
    if (!detail::clip_to_rect(r, a, b, t0, t1) || t0 > t1) return false;
    const double tm = 0.5 * (t0 + t1);
    return r.interior_contains(a + tm * (b - a));
}

// Bounded world: rectangular bounds plus axis-aligned rectangular obstacles.
// Obstacles may touch but not degenerate; they must lie within the bounds.
class WorldMap {
  public:
    WorldMap(Rect bounds, std::vector<Rect> obstacles = {})
        : bounds_(bounds), obstacles_(std::move(obstacles)) {
        if (!bounds_.valid()) throw std::invalid_argument("WorldMap: degenerate bounds");
        for (const Rect& o : obstacles_) {
            if (!o.valid()) throw std::invalid_argument("WorldMap: degenerate obstacle");
            if (o.x0 < bounds_.x0 || o.x1 > bounds_.x1 || o.y0 < bounds_.y0 || o.y1 > bounds_.y1)
                throw std::invalid_argument("WorldMap: obstacle outside bounds");
        }
    }

    const Rect& bounds() const { return bounds_; }
    const std::vector<Rect>& obstacles() const { return obstacles_; }

    // Free space is the closed bounds minus open obstacle interiors, so points
    // on an obstacle edge or on the outer wall are free.
    bool in_free_space(const Point2& p) const {
        if (!bounds_.contains(p)) return false;
        for (const Rect& o : obstacles_)
            if (o.interior_contains(p)) return false;
        return true;
    }

    // Area of the free space. Obstacles may overlap each other; their union is
    // measured exactly by coordinate compression.
    double free_area() const {
        if (obstacles_.empty()) return bounds_.area();
        std::vector<double> xs, ys;
        xs.reserve(obstacles_.size() * 2);
        ys.reserve(obstacles_.size() * 2);
        for (const Rect& o : obstacles_) {
            xs.push_back(o.x0); xs.push_back(o.x1);
            ys.push_back(o.y0); ys.push_back(o.y1);
        }
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        std::sort(ys.begin(), ys.end());
        ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
        double blocked = 0.0;
        for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
            for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
                const Point2 c{0.5 * (xs[i] + xs[i + 1]), 0.5 * (ys[j] + ys[j + 1])};
                for (const Rect& o : obstacles_) {
                    if (o.interior_contains(c)) {
                        blocked += (xs[i + 1] - xs[i]) * (ys[j + 1] - ys[j]);
                        break;
                    }
                }
            }
        }
        return bounds_.area() - blocked;
    }

    // Would a straight move from a to b leave the bounds or cut through an
    // obstacle's interior? Endpoints on boundaries are fine.
    bool motion_blocked(const Point2& a, const Point2& b) const {
        if (!bounds_.contains(a) || !bounds_.contains(b)) return true;
        for (const Rect& o : obstacles_)
            if (segment_crosses_interior(o, a, b)) return true;
        return false;
    }

    // Distance from p along `heading` to the nearest wall (bounds or obstacle
    // interior), clamped to max_range. p must be in free space.
    double sense_range(const Point2& p, double heading, double max_range) const {
        const Vec2 dir = unit_from_angle(heading);
        const Point2 far = p + max_range * dir;
        double best = max_range;
        {
            // Exit time through the outer walls: clip the ray to the bounds.
            double t0 = 0.0, t1 = 1.0;
            if (detail::clip_to_rect(bounds_, p, far, t0, t1) && t1 >= t0)
                best = std::min(best, t1 * max_range);
            else
                return 0.0;  // p outside bounds; nothing sensible to report
        }
        for (const Rect& o : obstacles_) {
            double t0 = 0.0, t1 = 1.0;
            if (!detail::clip_to_rect(o, p, far, t0, t1) || t0 >= t1) continue;
            // Positive-length overlap; graze along an edge is not a hit.
            const double tm = 0.5 * (t0 + t1);
            if (o.interior_contains(p + tm * (far - p)))
                best = std::min(best, t0 * max_range);
        }
        return best;
    }

  private:
    Rect bounds_;
    std::vector<Rect> obstacles_;
};

}  // namespace amronet
