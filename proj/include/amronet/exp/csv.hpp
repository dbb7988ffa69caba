#pragma once

// CSV export/import of run records. Numbers are written with shortest
// round-trip formatting (std::to_chars), so exports are byte-stable and
// re-parsing reproduces the exact doubles.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include "amronet/sim/record.hpp"
#include "amronet/sim/scenario.hpp"

namespace amronet {

inline constexpr const char* kCsvHeader =
    "run_id,seed,algo,step,time_s,coverage,n_routers,n_deployed,n_components";

namespace detail {

inline std::string num_to_string(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) throw std::runtime_error("num_to_string: conversion failed");
    return std::string(buf, end);
}

inline double parse_double(const std::string& s) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw std::runtime_error("csv: bad number '" + s + "'");
    return v;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace detail

inline void export_csv(const std::vector<RunRecord>& records, std::ostream& os) {
    if (records.empty()) throw std::invalid_argument("export_csv: no records");
    os << kCsvHeader << '\n';
    for (std::size_t run = 0; run < records.size(); ++run) {
        const RunRecord& r = records[run];
        for (const RunSample& s : r.samples) {
            os << run << ',' << r.seed << ',' << algorithm_name(r.algo) << ',' << s.step << ','
               << detail::num_to_string(s.time_s) << ',' << detail::num_to_string(s.coverage)
               << ',' << s.n_routers << ',' << s.n_deployed << ',' << s.n_components << '\n';
        }
    }
}

inline void export_csv(const std::vector<RunRecord>& records, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("export_csv: cannot write " + path);
    export_csv(records, os);
    if (!os.good()) throw std::runtime_error("export_csv: write failed for " + path);
}

// Parse a CSV produced by export_csv back into records (grouped by run_id in
// file order). The per-run scenario name is not stored in the CSV.
inline std::vector<RunRecord> parse_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kCsvHeader) throw std::runtime_error("csv: unexpected header '" + line + "'");
    std::vector<RunRecord> out;
    long current_run = -1;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::vector<std::string> f = detail::split_csv_line(line);
        if (f.size() != 9) throw std::runtime_error("csv: bad field count in '" + line + "'");
        const long run_id = std::stol(f[0]);
        if (run_id != current_run) {
            if (run_id != current_run + 1)
                throw std::runtime_error("csv: run_id values must be contiguous");
            current_run = run_id;
            RunRecord r;
            r.seed = std::stoull(f[1]);
            const auto algo = parse_algorithm(f[2]);
            if (!algo) throw std::runtime_error("csv: unknown algorithm '" + f[2] + "'");
            r.algo = *algo;
            out.push_back(std::move(r));
        }
        RunSample s;
        s.step = std::stol(f[3]);
        s.time_s = detail::parse_double(f[4]);
        s.coverage = detail::parse_double(f[5]);
        s.n_routers = std::stoi(f[6]);
        s.n_deployed = std::stoi(f[7]);
        s.n_components = std::stoi(f[8]);
        out.back().samples.push_back(s);
    }
    if (out.empty()) throw std::runtime_error("csv: no data rows");
    return out;
}

inline std::vector<RunRecord> parse_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("parse_csv: cannot read " + path);
    return parse_csv(is);
}

}  // namespace amronet
