#include "tspn/svg.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "tspn/format.hpp"

namespace tspn {

namespace {

constexpr double kCanvas = 900.0;

struct Mapper {
    double x0, y1, s;  // world-to-pixel: flip y

    double px(double x) const { return (x - x0) * s; }
    double py(double y) const { return (y1 - y) * s; }
    std::string pt(Point p) const {
        return format_double(px(p.x)) + "," + format_double(py(p.y));
    }
};

void emit_segment(std::string& out, const Mapper& m, const Segment& s, const char* style) {
    out += "  <line x1=\"" + format_double(m.px(s.a.x)) + "\" y1=\"" +
           format_double(m.py(s.a.y)) + "\" x2=\"" + format_double(m.px(s.b.x)) + "\" y2=\"" +
           format_double(m.py(s.b.y)) + "\" " + style + "/>\n";
}

void emit_square(std::string& out, const Mapper& m, const AxisSquare& q, const char* style) {
    out += "  <rect x=\"" + format_double(m.px(q.corner.x)) + "\" y=\"" +
           format_double(m.py(q.corner.y + q.side)) + "\" width=\"" +
           format_double(q.side * m.s) + "\" height=\"" + format_double(q.side * m.s) + "\" " +
           style + "/>\n";
}

}  // namespace

std::string render_svg(const RunReport& rep, const Instance& inst) {
    double x0 = rep.pre.bounding.corner.x, x1 = x0 + rep.pre.bounding.side;
    double y0 = rep.pre.bounding.corner.y, y1 = y0 + rep.pre.bounding.side;
    for (const Disk& d : inst.disks) {
        x0 = std::min(x0, d.center.x - d.radius);
        x1 = std::max(x1, d.center.x + d.radius);
        y0 = std::min(y0, d.center.y - d.radius);
        y1 = std::max(y1, d.center.y + d.radius);
    }
    const double span = std::max(x1 - x0, y1 - y0);
    const double margin = 0.05 * span;
    const Mapper m{x0 - margin, y1 + margin, kCanvas / (span + 2 * margin)};

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"900\" height=\"900\" "
           "viewBox=\"0 0 900 900\">\n";
    out += "  <rect x=\"0\" y=\"0\" width=\"900\" height=\"900\" fill=\"#ffffff\"/>\n";

    // disks by partition class
    const auto emit_disks = [&](const std::vector<int>& idx, const char* fill) {
        for (int i : idx) {
            const Disk& d = inst.disks[i];
            out += "  <circle cx=\"" + format_double(m.px(d.center.x)) + "\" cy=\"" +
                   format_double(m.py(d.center.y)) + "\" r=\"" + format_double(d.radius * m.s) +
                   "\" fill=\"" + fill + "\" fill-opacity=\"0.35\" stroke=\"" + fill +
                   "\" stroke-width=\"1\"/>\n";
        }
    };
    emit_disks(rep.pre.partition.s1, "#74a9cf");
    emit_disks(rep.pre.partition.s2, "#fd8d3c");
    emit_disks(rep.pre.partition.s3, "#de2d26");

    for (const GridSquare& q : rep.grid.squares) {
        emit_square(out, m, q.cell, "fill=\"none\" stroke=\"#cccccc\" stroke-width=\"0.6\"");
    }
    for (int qi : rep.chosen_squares) {
        emit_square(out, m, rep.grid.squares[qi].cell,
                    "fill=\"#ffee8c\" fill-opacity=\"0.5\" stroke=\"#b8a000\" "
                    "stroke-width=\"0.8\"");
    }
    emit_square(out, m, rep.pre.bounding,
                "fill=\"none\" stroke=\"#333333\" stroke-width=\"1.2\" "
                "stroke-dasharray=\"6,4\"");

    for (const Segment& s : rep.pre.g1.segments()) {
        emit_segment(out, m, s, "stroke=\"#1b7837\" stroke-width=\"2\"");
    }
    for (const Segment& s : rep.pre.g2.segments()) {
        emit_segment(out, m, s, "stroke=\"#762a83\" stroke-width=\"1.5\"");
    }
    for (const Segment& s : rep.g3.segments()) {
        emit_segment(out, m, s, "stroke=\"#d7301f\" stroke-width=\"1.2\"");
    }

    for (const Point& p : rep.chosen_sentinel_points) {
        out += "  <circle cx=\"" + format_double(m.px(p.x)) + "\" cy=\"" +
               format_double(m.py(p.y)) + "\" r=\"3\" fill=\"#000000\"/>\n";
    }

    if (!rep.tour.vertices.empty()) {
        out += "  <polygon points=\"";
        for (std::size_t i = 0; i < rep.tour.vertices.size(); ++i) {
            if (i) out += " ";
            out += m.pt(rep.tour.vertices[i]);
        }
        out += "\" fill=\"none\" stroke=\"#0570b0\" stroke-width=\"1\" "
               "stroke-opacity=\"0.9\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

void write_svg_file(const RunReport& rep, const Instance& inst, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write svg file '" + path + "'");
    f << render_svg(rep, inst);
}

}  // namespace tspn
