// Command-line front end: run scenarios or preset suites, dump pattern
// reference counts, and render snapshots.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "amronet/amronet.hpp"

namespace {

namespace fs = std::filesystem;
using namespace amronet;

void print_aggregate(const std::string& label, const Aggregate& a) {
    std::cout << "  " << label << ": " << a.mean << " +- " << a.half_width << " (n=" << a.n
              << ")\n";
}

void write_spec_outputs(const ReplicateSet& set, const fs::path& out_dir, bool csv, bool svg) {
    if (!csv && !svg) return;
    fs::create_directories(out_dir);
    if (csv) {
        const fs::path p = out_dir / (set.spec.name + ".csv");
        export_csv(records_of(set), p.string());
        std::cout << "  wrote " << p.string() << "\n";
    }
    if (svg && !set.runs.empty()) {
        const fs::path p = out_dir / (set.spec.name + "_seed" +
                                      std::to_string(set.runs.front().record.seed) + ".svg");
        export_snapshot(set.runs.front(), p.string());
        std::cout << "  wrote " << p.string() << "\n";
    }
}

ReplicateSet run_and_report(const ScenarioSpec& spec) {
    ReplicateSet set = run_replicates(spec);
    std::cout << spec.name << " [" << algorithm_name(spec.algorithm) << ", "
              << spec.seeds.size() << " seeds]\n";
    print_aggregate("final coverage", set.final_coverage);
    print_aggregate("stationary nodes", set.final_routers);
    print_aggregate("deployed (incl. bases)", set.final_deployed);
    return set;
}

void write_summary_csv(const std::vector<ReplicateSet>& sets, const fs::path& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    os << "name,algo,r_c,n_bases,agents_per_base,total_routers,n_seeds,"
          "mean_coverage,ci95_coverage,mean_routers,ci95_routers,"
          "mean_deployed,ci95_deployed\n";
    for (const ReplicateSet& s : sets) {
        os << s.spec.name << ',' << algorithm_name(s.spec.algorithm) << ',' << s.spec.r_c << ','
           << s.spec.base_positions.size() << ',' << s.spec.agents_per_base << ','
           << s.spec.total_routers << ',' << s.spec.seeds.size() << ',' << s.final_coverage.mean
           << ',' << s.final_coverage.half_width << ',' << s.final_routers.mean << ','
           << s.final_routers.half_width << ',' << s.final_deployed.mean << ','
           << s.final_deployed.half_width << '\n';
    }
    std::cout << "wrote " << path.string() << "\n";
}

PatternKind parse_kind(const std::string& s) {
    if (s == "rstrip") return PatternKind::RStrip;
    if (s == "hexagonal") return PatternKind::Hexagonal;
    if (s == "square") return PatternKind::Square;
    if (s == "triangular") return PatternKind::Triangular;
    throw CLI::ValidationError("kind", "expected rstrip|hexagonal|square|triangular");
}

void print_pattern_row(PatternKind kind, const std::string& name, const Rect& bounds,
                       double r_c) {
    const auto nodes = generate_pattern(kind, bounds, r_c);
    const int est = estimated_count(kind, bounds.area(), r_c);
    const MinCountResult mc = min_count_search(kind, bounds, r_c);
    std::cout << name << ": generated=" << nodes.size() << " estimated=" << est
              << " min_count=" << mc.count << " (coverage " << mc.coverage() << " at offset "
              << mc.offset.x << "," << mc.offset.y << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"AMRoNet: mobile router network deployment simulator"};
    app.require_subcommand(1);

    std::string scenario_path, preset_name, kind_str, out_file, snapshot_file;
    std::string out_dir = "out";
    std::optional<std::uint64_t> seed;
    bool want_csv = false, want_svg = false;
    std::vector<double> bounds_v = {0.0, 0.0, 32.0, 32.0};
    double rc = 4.0;

    CLI::App* cmd_run = app.add_subcommand("run", "run a scenario file's replicates");
    cmd_run->add_option("scenario", scenario_path, "scenario config file")->required();
    cmd_run->add_option("--seed", seed, "run only this seed");
    cmd_run->add_option("--out-dir", out_dir, "output directory");
    cmd_run->add_flag("--csv", want_csv, "write per-run CSV");
    cmd_run->add_flag("--svg", want_svg, "write a final-state snapshot");

    CLI::App* cmd_preset = app.add_subcommand("preset", "run a canned experiment suite");
    cmd_preset->add_option("name", preset_name, "fig5|fig5_obstacles|fig7|fig10|fig11")
        ->required();
    cmd_preset->add_option("--out-dir", out_dir, "output directory");
    cmd_preset->add_flag("--csv", want_csv, "write per-spec CSVs and a summary");
    cmd_preset->add_flag("--svg", want_svg, "write one snapshot per spec");

    CLI::App* cmd_patterns = app.add_subcommand("patterns", "static pattern reference counts");
    cmd_patterns->add_option("kind", kind_str, "rstrip|hexagonal|square|triangular|all")
        ->required();
    cmd_patterns->add_option("--rc", rc, "communication radius (m)");
    cmd_patterns->add_option("--bounds", bounds_v, "region x0 y0 x1 y1")->expected(4);
    cmd_patterns->add_option("--out", out_file, "write generated node list (x,y CSV)");

    CLI::App* cmd_cov = app.add_subcommand("coverage", "run one seed and report coverage");
    cmd_cov->add_option("scenario", scenario_path, "scenario config file")->required();
    cmd_cov->add_option("--seed", seed, "seed (default: first in the scenario)");
    cmd_cov->add_option("--snapshot", snapshot_file, "write an SVG of the final state");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_run->parsed()) {
            ScenarioSpec spec = load_scenario(scenario_path);
            if (seed) spec.seeds = {*seed};
            ReplicateSet set = run_and_report(spec);
            write_spec_outputs(set, out_dir, want_csv, want_svg);
        } else if (cmd_preset->parsed()) {
            std::vector<ReplicateSet> sets;
            for (const ScenarioSpec& spec : preset(preset_name))
                sets.push_back(run_and_report(spec));
            if (preset_name == "fig5") {
                const Rect region{0.0, 0.0, 32.0, 32.0};
                std::cout << "static pattern references (32x32):\n";
                for (double r : {4.0, 6.0, 8.0, 10.0}) {
                    std::cout << " r_c=" << r << "\n  ";
                    print_pattern_row(PatternKind::RStrip, "rstrip", region, r);
                    std::cout << "  ";
                    print_pattern_row(PatternKind::Hexagonal, "hexagonal", region, r);
                    std::cout << "  ";
                    print_pattern_row(PatternKind::Square, "square", region, r);
                    std::cout << "  ";
                    print_pattern_row(PatternKind::Triangular, "triangular", region, r);
                }
            }
            if (want_csv || want_svg) {
                fs::create_directories(out_dir);
                for (const ReplicateSet& s : sets)
                    write_spec_outputs(s, fs::path(out_dir) / preset_name, want_csv, want_svg);
                if (want_csv)
                    write_summary_csv(sets, fs::path(out_dir) / preset_name / "summary.csv");
            }
        } else if (cmd_patterns->parsed()) {
            const Rect bounds{bounds_v[0], bounds_v[1], bounds_v[2], bounds_v[3]};
            std::vector<std::pair<PatternKind, std::string>> kinds;
            if (kind_str == "all") {
                kinds = {{PatternKind::RStrip, "rstrip"},
                         {PatternKind::Hexagonal, "hexagonal"},
                         {PatternKind::Square, "square"},
                         {PatternKind::Triangular, "triangular"}};
            } else {
                kinds = {{parse_kind(kind_str), kind_str}};
            }
            for (const auto& [kind, name] : kinds) print_pattern_row(kind, name, bounds, rc);
            if (!out_file.empty() && kinds.size() == 1) {
                std::ofstream os(out_file);
                if (!os) throw std::runtime_error("cannot write " + out_file);
                os << "x,y\n";
                for (const Point2& p : generate_pattern(kinds[0].first, bounds, rc))
                    os << p.x << ',' << p.y << '\n';
                std::cout << "wrote " << out_file << "\n";
            }
        } else if (cmd_cov->parsed()) {
            ScenarioSpec spec = load_scenario(scenario_path);
            const std::uint64_t s = seed ? *seed : spec.seeds.front();
            const RunResult result = run_scenario(spec, s);
            const RunSample& last = result.record.final_sample();
            std::cout << spec.name << " seed " << s << ": coverage " << last.coverage
                      << ", stationary nodes " << last.n_routers << ", components "
                      << last.n_components << ", steps " << last.step << "\n";
            if (!snapshot_file.empty()) {
                export_snapshot(result, snapshot_file);
                std::cout << "wrote " << snapshot_file << "\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
