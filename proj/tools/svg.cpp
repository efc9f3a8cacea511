#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "cli.hpp"

namespace mcd::cli {

namespace {

constexpr double kCenter = 260.0;
constexpr double kRadius = 200.0;
constexpr double kLabelRadius = 224.0;

struct Point {
    double x;
    double y;
};

// Vertex 1 at the top, numbering clockwise.
Point at(const ModelParams &params, int vertex, double radius) {
    const double angle = -std::numbers::pi / 2 + 2 * std::numbers::pi * (vertex - 1) / params.vertex_count();
    return {kCenter + radius * std::cos(angle), kCenter + radius * std::sin(angle)};
}

std::ostream &operator<<(std::ostream &os, Point p) { return os << p.x << ',' << p.y; }

void line(std::ostream &os, const char *cls, const char *stroke, Point a, Point b) {
    os << "  <line class=\"" << cls << "\" x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << b.x << "\" y2=\""
       << b.y << "\" stroke=\"" << stroke << "\" stroke-width=\"2\"/>\n";
}

// Quadratic segments alternating to either side of the straight diameter.
void wave(std::ostream &os, Point a, Point b) {
    constexpr int kHalfWaves = 12;
    constexpr double kAmplitude = 7.0;
    const double dx = (b.x - a.x) / kHalfWaves;
    const double dy = (b.y - a.y) / kHalfWaves;
    const double len = std::hypot(dx, dy);
    const double nx = -dy / len * kAmplitude;
    const double ny = dx / len * kAmplitude;
    os << "  <path class=\"diameter red\" d=\"M " << a;
    for (int k = 0; k < kHalfWaves; ++k) {
        const double side = k % 2 == 0 ? 1.0 : -1.0;
        const Point ctrl{a.x + dx * (k + 0.5) + side * nx, a.y + dy * (k + 0.5) + side * ny};
        const Point end{a.x + dx * (k + 1), a.y + dy * (k + 1)};
        os << " Q " << ctrl << ' ' << end;
    }
    os << "\" fill=\"none\" stroke=\"red\" stroke-width=\"2\"/>\n";
}

}  // namespace

std::string render_svg(const ArcUniverse &universe, const ArcSet &set) {
    const ModelParams &params = universe.params();
    std::ostringstream os;
    os << std::fixed << std::setprecision(2);
    const double side = 2 * kCenter;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
       << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n";
    os << "  <polygon class=\"boundary\" points=\"";
    for (int v = 1; v <= params.vertex_count(); ++v) os << (v > 1 ? " " : "") << at(params, v, kRadius);
    os << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    for (int v = 1; v <= params.vertex_count(); ++v) {
        const Point p = at(params, v, kLabelRadius);
        os << "  <text class=\"label\" x=\"" << p.x << "\" y=\"" << p.y
           << "\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << v << "</text>\n";
    }
    set.for_each([&](std::size_t idx) {
        const PairedArc &arc = universe.arc(idx);
        if (arc.is_diameter()) {
            const Point a = at(params, arc.base(), kRadius);
            const Point b = at(params, arc.base() + params.big_n(), kRadius);
            if (arc.color() == Color::Red) {
                wave(os, a, b);
            } else {
                line(os, "diameter green", "green", a, b);
            }
            return;
        }
        for (const OrientedArc &rep : representatives(params, arc)) {
            line(os, "chord", "black", at(params, rep.from, kRadius), at(params, rep.to, kRadius));
        }
    });
    os << "</svg>\n";
    return os.str();
}

}  // namespace mcd::cli
