#pragma once

// Scenario files: plain `key = value` lines, units spelled out in key names,
// '#' comments. Unknown keys are errors — silent typos must not change an
// experiment.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "amronet/sim/scenario.hpp"

namespace amronet {

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

inline double to_double(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing junk");
        return d;
    } catch (const std::exception&) {
        throw std::runtime_error("scenario: bad number '" + v + "' for " + key);
    }
}

inline long to_long(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        const long d = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing junk");
        return d;
    } catch (const std::exception&) {
        throw std::runtime_error("scenario: bad integer '" + v + "' for " + key);
    }
}

inline bool to_bool(const std::string& v, const std::string& key) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw std::runtime_error("scenario: bad boolean '" + v + "' for " + key);
}

}  // namespace detail

inline ScenarioSpec parse_scenario(std::istream& is, const std::string& origin = "<stream>") {
    ScenarioSpec spec;
    spec.base_positions.clear();
    long replicates = -1;
    std::vector<std::uint64_t> seeds;
    std::string line;
    long line_no = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw std::runtime_error(origin + ":" + std::to_string(line_no) + ": " + msg);
    };
    while (std::getline(is, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) fail("expected 'key = value'");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string value = detail::trim(line.substr(eq + 1));
        if (value.empty()) fail("empty value for " + key);
        const std::vector<std::string> toks = detail::split_ws(value);

        if (key == "name") {
            spec.name = value;
        } else if (key == "bounds_m") {
            if (toks.size() != 4) fail("bounds_m needs 4 numbers: x0 y0 x1 y1");
            spec.bounds = {detail::to_double(toks[0], key), detail::to_double(toks[1], key),
                           detail::to_double(toks[2], key), detail::to_double(toks[3], key)};
        } else if (key == "obstacle_m") {
            if (toks.size() != 4) fail("obstacle_m needs 4 numbers: x0 y0 x1 y1");
            spec.obstacles.push_back({detail::to_double(toks[0], key),
                                      detail::to_double(toks[1], key),
                                      detail::to_double(toks[2], key),
                                      detail::to_double(toks[3], key)});
        } else if (key == "base_m") {
            if (toks.size() != 2) fail("base_m needs 2 numbers: x y");
            spec.base_positions.push_back(
                {detail::to_double(toks[0], key), detail::to_double(toks[1], key)});
        } else if (key == "algorithm") {
            const auto a = parse_algorithm(value);
            if (!a) fail("unknown algorithm '" + value + "'");
            spec.algorithm = *a;
        } else if (key == "strategy") {
            if (value == "global") spec.strategy = TriangularStrategy::Global;
            else if (value == "local") spec.strategy = TriangularStrategy::Local;
            else fail("strategy must be global or local");
            spec.strategy_set = true;
        } else if (key == "agents_per_base") {
            spec.agents_per_base = static_cast<int>(detail::to_long(value, key));
        } else if (key == "total_routers") {
            spec.total_routers = detail::to_long(value, key);
        } else if (key == "spawn_half_extent_m") {
            spec.spawn_half_extent = detail::to_double(value, key);
        } else if (key == "r_c_m") {
            spec.r_c = detail::to_double(value, key);
        } else if (key == "dt_s") {
            spec.sim.dt = detail::to_double(value, key);
        } else if (key == "agent_speed_mps") {
            spec.sim.agent_speed = detail::to_double(value, key);
        } else if (key == "router_speed_mps") {
            spec.sim.router_speed = detail::to_double(value, key);
        } else if (key == "sonar_range_m") {
            spec.sim.sonar_range = detail::to_double(value, key);
        } else if (key == "ir_range_m") {
            spec.sim.ir_range = detail::to_double(value, key);
        } else if (key == "p_turn") {
            spec.sim.p_turn = detail::to_double(value, key);
        } else if (key == "max_avoid_steps") {
            spec.sim.max_avoid_steps = static_cast<int>(detail::to_long(value, key));
        } else if (key == "release_factor") {
            spec.sim.release_factor = detail::to_double(value, key);
        } else if (key == "place_back_off_m") {
            spec.sim.place_back_off = detail::to_double(value, key);
        } else if (key == "coverage_target") {
            spec.sim.coverage_target = detail::to_double(value, key);
        } else if (key == "max_steps") {
            spec.sim.max_steps = detail::to_long(value, key);
        } else if (key == "sample_interval") {
            spec.sim.sample_interval = detail::to_long(value, key);
        } else if (key == "replicates") {
            replicates = detail::to_long(value, key);
        } else if (key == "seeds") {
            for (const std::string& t : toks) seeds.push_back(std::stoull(t));
        } else if (key == "k_cover") {
            spec.force.k_cover = detail::to_double(value, key);
        } else if (key == "k_degree") {
            spec.force.k_degree = detail::to_double(value, key);
        } else if (key == "critical_degree") {
            spec.force.critical_degree = static_cast<int>(detail::to_long(value, key));
        } else if (key == "damping") {
            spec.force.damping = detail::to_double(value, key);
        } else if (key == "safety") {
            spec.force.safety = detail::to_double(value, key);
        } else if (key == "r_s_factor") {
            spec.force.r_s_factor = detail::to_double(value, key);
        } else if (key == "force_cap") {
            spec.force.force_cap = detail::to_double(value, key);
        } else if (key == "literal_signs") {
            spec.force.literal_signs = detail::to_bool(value, key);
        } else if (key == "freeze_disp") {
            spec.force.freeze_disp = detail::to_double(value, key);
        } else if (key == "freeze_steps") {
            spec.force.freeze_steps = static_cast<int>(detail::to_long(value, key));
        } else {
            fail("unknown key '" + key + "'");
        }
    }

    if (spec.base_positions.empty()) spec.base_positions.push_back({1.0, 1.0});
    if (!seeds.empty() && replicates >= 0 &&
        static_cast<long>(seeds.size()) != replicates)
        throw std::runtime_error(origin + ": seed list length (" +
                                 std::to_string(seeds.size()) + ") != replicates (" +
                                 std::to_string(replicates) + ")");
    if (seeds.empty()) {
        if (replicates < 0) replicates = 1;
        for (long i = 1; i <= replicates; ++i) seeds.push_back(static_cast<std::uint64_t>(i));
    }
    spec.seeds = std::move(seeds);
    spec.validate();
    return spec;
}

inline ScenarioSpec load_scenario(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("load_scenario: cannot read " + path);
    return parse_scenario(is, path);
}

}  // namespace amronet
