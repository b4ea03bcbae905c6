#include "cli/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>

namespace tropflux {

namespace {

struct Point {
    double x = 0, y = 0;
};

double to_double(const Scalar& s, const std::map<std::string, Scalar>& ones) {
    return s.substitute(ones).constant_value().get_d();
}

Point project(const std::vector<double>& v) {
    std::size_t g = v.size();
    Point p;
    for (std::size_t i = 0; i < g; ++i) {
        double a = g <= 2 ? std::numbers::pi / 2 * static_cast<double>(i) : std::numbers::pi * static_cast<double>(i) / g;
        p.x += v[i] * std::cos(a);
        p.y += v[i] * std::sin(a);
    }
    return p;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

}  // namespace

std::string plot_svg(const MetricGraph& g) {
    std::map<std::string, Scalar> ones;
    for (const auto& v : g.variables) ones[v] = Scalar(1);
    CycleBasis b = cycle_basis(g);
    AbelJacobi aj = abel_jacobi_cycle(g, b);

    std::vector<Point> verts;
    for (const auto& pos : aj.positions) {
        std::vector<double> v;
        for (const auto& x : pos) v.push_back(to_double(x, ones));
        verts.push_back(project(v));
    }
    struct Segment {
        Point from, to;
        std::string label;
    };
    std::vector<Segment> segs;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        IntVector d = edge_direction(b, static_cast<int>(e));
        double len = to_double(g.edges[e].length, ones);
        std::vector<double> v;
        for (const auto& x : d) v.push_back(x.get_d() * len);
        Point step = project(v);
        Point from = verts[g.edges[e].tail];
        segs.push_back({from, {from.x + step.x, from.y + step.y}, g.edges[e].name});
    }

    double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
    for (const auto& s : segs)
        for (const Point& p : {s.from, s.to}) {
            lo_x = std::min(lo_x, p.x), hi_x = std::max(hi_x, p.x);
            lo_y = std::min(lo_y, p.y), hi_y = std::max(hi_y, p.y);
        }
    const double size = 480, margin = 40;
    double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    double scale = (size - 2 * margin) / span;
    auto sx = [&](double x) { return margin + (x - lo_x) * scale; };
    auto sy = [&](double y) { return size - margin - (y - lo_y) * scale; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
       << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const auto& s = segs[i];
        const char* colour = kPalette[i % std::size(kPalette)];
        os << "<line x1=\"" << fmt(sx(s.from.x)) << "\" y1=\"" << fmt(sy(s.from.y)) << "\" x2=\"" << fmt(sx(s.to.x))
           << "\" y2=\"" << fmt(sy(s.to.y)) << "\" stroke=\"" << colour << "\" stroke-width=\"3\"/>\n";
        os << "<text x=\"" << fmt((sx(s.from.x) + sx(s.to.x)) / 2 + 4) << "\" y=\""
           << fmt((sy(s.from.y) + sy(s.to.y)) / 2 - 4) << "\" font-size=\"14\" fill=\"" << colour << "\">" << s.label
           << "</text>\n";
    }
    for (std::size_t v = 0; v < verts.size(); ++v) {
        os << "<circle cx=\"" << fmt(sx(verts[v].x)) << "\" cy=\"" << fmt(sy(verts[v].y)) << "\" r=\"4\" fill=\"black\"/>\n";
        os << "<text x=\"" << fmt(sx(verts[v].x) + 6) << "\" y=\"" << fmt(sy(verts[v].y) + 14)
           << "\" font-size=\"12\">" << g.vertices[v] << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace tropflux
