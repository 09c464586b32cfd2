#ifndef FANSHIFT_RENDER_HPP
#define FANSHIFT_RENDER_HPP

// Deterministic SVG drawings: the Cantor fan, a Lelek-like fan, a star of
// Cantor fans, P and R, the relation H, the model space of X_H and the arc
// gluings of F_a. Coordinates are written with six decimals.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "fanshift/errors.hpp"
#include "fanshift/itinerary.hpp"
#include "fanshift/quotients.hpp"
#include "fanshift/relations.hpp"
#include "fanshift/xspace.hpp"

namespace fanshift {

inline std::string fmt6(double v) {
    char buf[64];
    if (std::abs(v) < 5e-7) v = 0.0;
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

// Minimal SVG writer. Model coordinates (x right, y up) in [x0,x1] x [y0,y1]
// are mapped onto a canvas of the given pixel size with a margin.
class Svg {
public:
    Svg(double width, double height, double x0, double x1, double y0, double y1, double margin = 20.0)
        : w_(width), h_(height), x0_(x0), x1_(x1), y0_(y0), y1_(y1), m_(margin) {}

    void open_group(const std::string& id, const std::string& stroke, double stroke_width = 1.0) {
        body_ += "<g id=\"" + id + "\" stroke=\"" + stroke + "\" stroke-width=\"" + fmt6(stroke_width) +
                 "\" fill=\"none\">\n";
    }
    void close_group() { body_ += "</g>\n"; }

    void line(double xa, double ya, double xb, double yb, const std::string& extra = "") {
        body_ += "<line x1=\"" + fmt6(X(xa)) + "\" y1=\"" + fmt6(Y(ya)) + "\" x2=\"" + fmt6(X(xb)) + "\" y2=\"" +
                 fmt6(Y(yb)) + "\"" + extra + "/>\n";
    }

    void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& extra = "") {
        std::string p;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            p += (i ? " " : "") + fmt6(X(pts[i].first)) + "," + fmt6(Y(pts[i].second));
        }
        body_ += "<polyline points=\"" + p + "\"" + extra + "/>\n";
    }

    void dot(double x, double y, double r, const std::string& fill) {
        body_ += "<circle cx=\"" + fmt6(X(x)) + "\" cy=\"" + fmt6(Y(y)) + "\" r=\"" + fmt6(r) + "\" fill=\"" + fill +
                 "\" stroke=\"none\"/>\n";
    }

    void text(double x, double y, const std::string& s, double size = 10.0) {
        body_ += "<text x=\"" + fmt6(X(x)) + "\" y=\"" + fmt6(Y(y)) + "\" font-size=\"" + fmt6(size) +
                 "\" font-family=\"sans-serif\" stroke=\"none\" fill=\"black\">" + s + "</text>\n";
    }

    std::string str(const std::string& title) const {
        return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
               fmt6(w_) + "\" height=\"" + fmt6(h_) + "\" viewBox=\"0 0 " + fmt6(w_) + " " + fmt6(h_) + "\">\n<title>" +
               title + "</title>\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n" + body_ + "</svg>\n";
    }

private:
    double X(double x) const { return m_ + (x - x0_) / (x1_ - x0_) * (w_ - 2 * m_); }
    double Y(double y) const { return h_ - m_ - (y - y0_) / (y1_ - y0_) * (h_ - 2 * m_); }

    double w_, h_, x0_, x1_, y0_, y1_, m_;
    std::string body_;
};

// Legs from the origin to (c, 1) over the depth-d Cantor net.
inline std::string render_cantor_fan(int depth) {
    Svg svg(600, 420, 0.0, 1.0, 0.0, 1.0);
    svg.open_group("legs", "black", 0.6);
    for (const auto& a : cantor_addresses(depth)) svg.line(0.5, 0.0, a.value() + 0.5 * std::pow(3.0, -depth), 1.0);
    svg.close_group();
    svg.dot(0.5, 0.0, 3.0, "black");
    return svg.str("Cantor fan, depth " + std::to_string(depth));
}

// Decorative Lelek-like fan: leg lengths from a van der Corput sequence so
// that the tips spread densely as depth grows.
inline std::string render_lelek_fan(int depth) {
    Svg svg(600, 420, 0.0, 1.0, 0.0, 1.0);
    svg.open_group("legs", "black", 0.5);
    const auto addresses = cantor_addresses(depth);
    for (std::size_t i = 0; i < addresses.size(); ++i) {
        double r = 0.0, f = 0.5;
        for (std::size_t n = i + 1; n; n >>= 1, f /= 2) r += f * static_cast<double>(n & 1u);
        const double c = addresses[i].value() + 0.5 * std::pow(3.0, -depth);
        const double len = 0.15 + 0.85 * r;
        svg.line(0.5, 0.0, 0.5 + (c - 0.5) * len, len);
    }
    svg.close_group();
    svg.dot(0.5, 0.0, 3.0, "black");
    return svg.str("Lelek-like fan (decorative), depth " + std::to_string(depth));
}

// Copies of the Cantor fan of diameter 2^-n around a common top.
inline std::string render_star(int depth, int copies = 6) {
    Svg svg(600, 600, -1.0, 1.0, -1.0, 1.0);
    const double pi = std::acos(-1.0);
    for (int n = 1; n <= copies; ++n) {
        svg.open_group("copy" + std::to_string(n), "black", 0.6);
        const double scale = 2.0 * std::ldexp(1.0, -n);
        const double axis = 2.0 * pi * (n - 1) / copies + pi / 2;
        const double spread = pi / copies * 0.8;
        for (const auto& a : cantor_addresses(depth)) {
            const double c = a.value() + 0.5 * std::pow(3.0, -depth);
            const double ang = axis + (c - 0.5) * spread;
            svg.line(0.0, 0.0, scale * std::cos(ang), scale * std::sin(ang));
        }
        svg.close_group();
    }
    svg.dot(0.0, 0.0, 3.0, "black");
    return svg.str("Star of Cantor fans, depth " + std::to_string(depth));
}

// P = C x [0,1] (left) and R = {(c, tau): tau <= c} (right).
inline std::string render_P_and_R(int depth) {
    Svg svg(900, 420, 0.0, 2.3, 0.0, 1.0);
    const auto addresses = cantor_addresses(depth);
    svg.open_group("P", "black", 0.6);
    for (const auto& a : addresses) svg.line(a.value(), 0.0, a.value(), 1.0);
    svg.close_group();
    svg.open_group("R", "black", 0.6);
    for (const auto& a : addresses) svg.line(1.3 + a.value(), 0.0, 1.3 + a.value(), a.value());
    svg.line(1.3, 0.0, 2.3, 1.0, " stroke-dasharray=\"3,3\" stroke=\"gray\"");
    svg.close_group();
    svg.text(0.45, -0.05, "P");
    svg.text(1.75, -0.05, "R");
    return svg.str("The spaces P and R, depth " + std::to_string(depth));
}

// H in embed coordinates: six families and the fixed point (1, 1).
inline std::string render_relation(int kmax, int samples = 64) {
    Svg svg(600, 600, 0.0, 1.0, 0.0, 1.0);
    auto curve = [&](int k, const PieceMap& piece) {
        std::vector<std::pair<double, double>> pts;
        for (int i = 0; i <= samples; ++i) {
            const XPoint x = XPoint::finite(k, static_cast<double>(i) / samples);
            pts.emplace_back(embed(x), embed(piece.apply(x)));
        }
        svg.polyline(pts);
    };
    svg.open_group("cube_root", "crimson");
    curve(1, PieceMap::cube_root());
    svg.close_group();
    svg.open_group("square", "darkorange");
    curve(2, PieceMap::square());
    svg.close_group();
    svg.open_group("up", "seagreen");
    for (int k = 1; k <= kmax; ++k) curve(k, PieceMap::up(k));
    svg.close_group();
    svg.open_group("down", "royalblue");
    for (int k = 2; k <= kmax; ++k) curve(k, PieceMap::down(k));
    svg.close_group();
    svg.open_group("identity", "purple");
    for (int k = 3; k <= kmax; ++k) curve(k, PieceMap::id(k));
    svg.close_group();
    svg.open_group("infinity", "black");
    svg.dot(1.0, 1.0, 3.0, "black");
    svg.close_group();
    return svg.str("The relation H on X, k <= " + std::to_string(kmax));
}

// Bundles C_k x [0, 2^-(2k-1)] with itinerary addresses of the given depth,
// plus the point (1, 0). Heights are drawn on a square-root scale.
inline std::string render_model_space(int depth, int kmax = 5) {
    Svg svg(700, 420, 0.0, 1.0, 0.0, 1.0);
    for (int k = 1; k <= kmax; ++k) {
        svg.open_group("bundle" + std::to_string(k), "black", 0.6);
        for (const auto& w : detail::interleaved_windows(k, depth)) {
            const double c = address_in_bundle(w, k, depth).value();
            svg.line(c, 0.0, c, std::sqrt(interval_diameter(k)));
        }
        svg.close_group();
    }
    svg.dot(1.0, 0.0, 3.0, "black");
    return svg.str("Model space of the Mahavier product, depth " + std::to_string(depth));
}

// Fan model of F_a in C x [0,1] (square-root height scale): legs, the host
// arcs M_{k^2+2} in bold, and each guest's tip joined to its gluing height
// on the host.
inline std::string render_gluing(const AParam& a, int depth) {
    const FanModel fan = build_fan(a, std::max(1, a.required_bundles()), depth);
    Svg svg(800, 420, 0.0, 1.0, 0.0, 1.0);
    svg.open_group("legs", "gray", 0.4);
    for (const auto& leg : fan.legs) svg.line(leg.c(), 0.0, leg.c(), std::sqrt(leg.length));
    svg.close_group();
    svg.open_group("hosts", "black", 1.6);
    for (const auto& g : fan.gluings) {
        const Leg& host = fan.legs[g.host];
        svg.line(host.c(), 0.0, host.c(), std::sqrt(host.length));
    }
    svg.close_group();
    svg.open_group("gluings", "crimson", 0.8);
    for (const auto& g : fan.gluings) {
        const Leg& host = fan.legs[g.host];
        const Leg& guest = fan.legs[g.guest];
        const double h = std::sqrt(guest.length);
        svg.line(guest.c(), h, host.c(), h, " stroke-dasharray=\"2,2\"");
        svg.dot(host.c(), h, 2.0, "crimson");
    }
    svg.close_group();
    return svg.str("Gluings of F_a for a = (" + a.to_string() + ")");
}

inline const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids{"fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "glue"};
    return ids;
}

inline std::string render_figure(const std::string& id, int depth, const AParam& a = AParam({1, 4})) {
    if (depth < 1 || depth > 12) throw DomainError("render: depth must lie in [1, 12]");
    if (id == "fig1") return render_cantor_fan(depth);
    if (id == "fig2") return render_lelek_fan(depth);
    if (id == "fig3") return render_star(depth);
    if (id == "fig4") return render_P_and_R(depth);
    if (id == "fig5") return render_relation(6);
    if (id == "fig6") return render_model_space(std::min(depth, 6));
    if (id == "glue") return render_gluing(a, std::min(depth, 3));
    throw UsageError("unknown figure id: " + id);
}

}  // namespace fanshift

#endif
