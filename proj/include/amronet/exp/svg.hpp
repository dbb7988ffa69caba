#pragma once

// Static SVG snapshots of a world state: bounds, obstacles, communication
// disks at 30% opacity, comm-graph edges, and nodes colored by connected
// component. Agents are drawn in neutral gray (they are not network nodes).

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "amronet/comm_graph.hpp"
#include "amronet/geometry.hpp"
#include "amronet/sim/record.hpp"

namespace amronet {

namespace detail {

inline std::string component_color(int label) {
    // Golden-angle hue walk: well separated for small label counts.
    const int hue = (label * 137) % 360;
    return "hsl(" + std::to_string(hue) + ",70%,45%)";
}

inline std::string fmt(double v) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << v;
    return os.str();
}

}  // namespace detail

inline void export_snapshot(const Rect& bounds, const std::vector<Rect>& obstacles,
                            const std::vector<NodeRecord>& nodes, double r_c,
                            std::ostream& os) {
    const double scale = 600.0 / std::max(bounds.width(), bounds.height());
    const double pad = r_c * scale;
    const double w = bounds.width() * scale + 2 * pad;
    const double h = bounds.height() * scale + 2 * pad;
    auto X = [&](double x) { return detail::fmt((x - bounds.x0) * scale + pad); };
    auto Y = [&](double y) { return detail::fmt((bounds.y1 - y) * scale + pad); };
    auto L = [&](double len) { return detail::fmt(len * scale); };

    std::vector<NodeRecord> network;
    for (const NodeRecord& n : nodes)
        if (n.kind != NodeKind::Agent) network.push_back(n);
    CommGraph graph(network, r_c);
    const std::map<int, int> comp = graph.components();
    auto color_of = [&](int id) { return detail::component_color(comp.at(id)); };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << detail::fmt(w)
       << "\" height=\"" << detail::fmt(h) << "\" viewBox=\"0 0 " << detail::fmt(w) << ' '
       << detail::fmt(h) << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<rect x=\"" << X(bounds.x0) << "\" y=\"" << Y(bounds.y1) << "\" width=\""
       << L(bounds.width()) << "\" height=\"" << L(bounds.height())
       << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    for (const Rect& o : obstacles) {
        os << "<rect x=\"" << X(o.x0) << "\" y=\"" << Y(o.y1) << "\" width=\"" << L(o.width())
           << "\" height=\"" << L(o.height()) << "\" fill=\"#999\" stroke=\"#555\"/>\n";
    }
    for (const NodeRecord& n : network) {
        os << "<circle cx=\"" << X(n.position.x) << "\" cy=\"" << Y(n.position.y) << "\" r=\""
           << L(r_c) << "\" fill=\"" << color_of(n.id) << "\" fill-opacity=\"0.3\"/>\n";
    }
    std::map<int, Point2> pos;
    for (const NodeRecord& n : network) pos[n.id] = n.position;
    for (const auto& [u, v] : graph.edges()) {
        os << "<line x1=\"" << X(pos[u].x) << "\" y1=\"" << Y(pos[u].y) << "\" x2=\""
           << X(pos[v].x) << "\" y2=\"" << Y(pos[v].y)
           << "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    }
    for (const NodeRecord& n : network) {
        if (n.kind == NodeKind::BaseStation) {
            const double s = 5.0;
            os << "<rect x=\"" << detail::fmt((n.position.x - bounds.x0) * scale + pad - s)
               << "\" y=\"" << detail::fmt((bounds.y1 - n.position.y) * scale + pad - s)
               << "\" width=\"" << detail::fmt(2 * s) << "\" height=\"" << detail::fmt(2 * s)
               << "\" fill=\"" << color_of(n.id) << "\" stroke=\"black\"/>\n";
        } else {
            os << "<circle cx=\"" << X(n.position.x) << "\" cy=\"" << Y(n.position.y)
               << "\" r=\"3.5\" fill=\"" << color_of(n.id) << "\" stroke=\"black\""
               << (n.is_reference ? "" : " stroke-dasharray=\"2,1\"") << "/>\n";
        }
    }
    for (const NodeRecord& n : nodes) {
        if (n.kind != NodeKind::Agent) continue;
        os << "<circle cx=\"" << X(n.position.x) << "\" cy=\"" << Y(n.position.y)
           << "\" r=\"3\" fill=\"#777\"/>\n";
    }
    os << "</svg>\n";
}

inline void export_snapshot(const RunResult& result, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("export_snapshot: cannot write " + path);
    export_snapshot(result.bounds, result.obstacles, result.final_nodes, result.r_c, os);
    if (!os.good()) throw std::runtime_error("export_snapshot: write failed for " + path);
}

}  // namespace amronet
