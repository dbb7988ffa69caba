#pragma once

// Replicate aggregation: mean and 95% confidence half-width via Student-t.

#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

namespace amronet {

struct Aggregate {
    double mean = 0.0;
    double half_width = 0.0;  // 95% CI half-width; 0 when n < 2 or variance 0
    int n = 0;
};

inline Aggregate aggregate(const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("aggregate: empty sample");
    Aggregate a;
    a.n = static_cast<int>(values.size());
    double sum = 0.0;
    for (double v : values) sum += v;
    a.mean = sum / a.n;
    if (a.n < 2) return a;
    double ss = 0.0;
    for (double v : values) ss += (v - a.mean) * (v - a.mean);
    const double sd = std::sqrt(ss / (a.n - 1));
    if (sd == 0.0) return a;
    boost::math::students_t_distribution<double> dist(a.n - 1);
    const double t = boost::math::quantile(dist, 0.975);
    a.half_width = t * sd / std::sqrt(static_cast<double>(a.n));
    return a;
}

}  // namespace amronet
