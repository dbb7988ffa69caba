#pragma once

// Replicate execution: one run per seed, concurrently where hardware allows.
// Runs share nothing mutable; results are collected by seed index, so the
// execution order can never change the output.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "amronet/exp/stats.hpp"
#include "amronet/sim/engine.hpp"
#include "amronet/sim/record.hpp"
#include "amronet/sim/scenario.hpp"

namespace amronet {

struct ReplicateSet {
    ScenarioSpec spec;
    std::vector<RunResult> runs;       // same order as spec.seeds
    Aggregate final_coverage;
    Aggregate final_routers;           // stationary node count at the end
    Aggregate final_deployed;          // bases + routers ever released
};

inline ReplicateSet run_replicates(const ScenarioSpec& spec) {
    spec.validate();
    ReplicateSet set;
    set.spec = spec;
    const std::size_t n = spec.seeds.size();
    set.runs.resize(n);

    const unsigned hw = std::thread::hardware_concurrency();
    const std::size_t workers = std::min<std::size_t>(n, hw > 0 ? hw : 1);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto work = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                set.runs[i] = run_scenario(spec, spec.seeds[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mu);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<double> cov, routers, deployed;
    for (const RunResult& r : set.runs) {
        const RunSample& last = r.record.final_sample();
        cov.push_back(last.coverage);
        routers.push_back(last.n_routers);
        deployed.push_back(last.n_deployed);
    }
    set.final_coverage = aggregate(cov);
    set.final_routers = aggregate(routers);
    set.final_deployed = aggregate(deployed);
    return set;
}

inline std::vector<RunRecord> records_of(const ReplicateSet& set) {
    std::vector<RunRecord> out;
    out.reserve(set.runs.size());
    for (const RunResult& r : set.runs) out.push_back(r.record);
    return out;
}

}  // namespace amronet
