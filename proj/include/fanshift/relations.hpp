#ifndef FANSHIFT_RELATIONS_HPP
#define FANSHIFT_RELATIONS_HPP

// The closed relation H on X, its monotone pieces, and the three global
// homeomorphisms F1, F2, F3 whose graphs cover H.
//
//   H = {(t, t^(1/3)) : t in I_1} u {(t, (t-2)^2 + 2) : t in I_2}
//     u {(t, t+2) : t in I_k, k >= 1} u {(t, t-2) : t in I_k, k >= 2}
//     u {(t, t) : t in I_k, k >= 3} u {(inf, inf)}

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "fanshift/errors.hpp"
#include "fanshift/xspace.hpp"

namespace fanshift {

class PieceMap {
public:
    enum class Kind { CubeRoot, Square, Up, Down, Id, InfFix };

    static PieceMap cube_root() { return {Kind::CubeRoot, 1}; }
    static PieceMap square() { return {Kind::Square, 2}; }
    static PieceMap up(int k) {
        if (k < 1) throw DomainError("Up(k) needs k >= 1");
        return {Kind::Up, k};
    }
    static PieceMap down(int k) {
        if (k < 2) throw DomainError("Down(k) needs k >= 2");
        return {Kind::Down, k};
    }
    static PieceMap id(int k) {
        if (k < 3) throw DomainError("Id(k) needs k >= 3");
        return {Kind::Id, k};
    }
    static PieceMap inf_fix() { return {Kind::InfFix, 0}; }

    Kind kind() const { return kind_; }

    // Interval indices; 0 stands for {inf}.
    int domain() const { return k_; }
    int range() const {
        switch (kind_) {
            case Kind::Up: return k_ + 1;
            case Kind::Down: return k_ - 1;
            default: return k_;
        }
    }

    // Image of a local coordinate. Every piece maps 0 to 0 and 1 to 1.
    double forward_local(double u) const {
        switch (kind_) {
            case Kind::CubeRoot: return std::cbrt(u);
            case Kind::Square: return u * u;
            default: return u;
        }
    }

    double inverse_local(double v) const {
        switch (kind_) {
            case Kind::CubeRoot: return v * v * v;
            case Kind::Square: return std::sqrt(v);
            default: return v;
        }
    }

    XPoint apply(const XPoint& x) const {
        if (kind_ == Kind::InfFix) {
            if (!x.is_infinite()) throw DomainError("InfFix applied to " + x.to_string());
            return x;
        }
        if (x.index() != k_) {
            throw DomainError(name() + " applied outside its domain: " + x.to_string());
        }
        return XPoint::finite(range(), forward_local(x.local()));
    }

    XPoint apply_inverse(const XPoint& y) const {
        if (kind_ == Kind::InfFix) {
            if (!y.is_infinite()) throw DomainError("InfFix inverse applied to " + y.to_string());
            return y;
        }
        if (y.index() != range()) {
            throw DomainError(name() + " inverse applied outside its range: " + y.to_string());
        }
        return XPoint::finite(k_, inverse_local(y.local()));
    }

    std::string name() const {
        switch (kind_) {
            case Kind::CubeRoot: return "CubeRoot";
            case Kind::Square: return "Square";
            case Kind::Up: return "Up(" + std::to_string(k_) + ")";
            case Kind::Down: return "Down(" + std::to_string(k_) + ")";
            case Kind::Id: return "Id(" + std::to_string(k_) + ")";
            case Kind::InfFix: return "InfFix";
        }
        return "?";
    }

    friend bool operator==(const PieceMap&, const PieceMap&) = default;

private:
    PieceMap(Kind kind, int k) : kind_(kind), k_(k) {}

    Kind kind_;
    int k_;
};

// Pieces of H whose domain contains x, in a fixed order.
inline std::vector<PieceMap> pieces_from(const XPoint& x) {
    if (x.is_infinite()) return {PieceMap::inf_fix()};
    const int k = x.index();
    if (k == 1) return {PieceMap::cube_root(), PieceMap::up(1)};
    if (k == 2) return {PieceMap::down(2), PieceMap::square(), PieceMap::up(2)};
    return {PieceMap::down(k), PieceMap::id(k), PieceMap::up(k)};
}

// Pieces of H whose range contains y.
inline std::vector<PieceMap> pieces_into(const XPoint& y) {
    if (y.is_infinite()) return {PieceMap::inf_fix()};
    const int k = y.index();
    if (k == 1) return {PieceMap::cube_root(), PieceMap::down(2)};
    if (k == 2) return {PieceMap::up(1), PieceMap::square(), PieceMap::down(3)};
    return {PieceMap::up(k - 1), PieceMap::id(k), PieceMap::down(k + 1)};
}

namespace detail {

inline void insert_unique(std::vector<XPoint>& out, const XPoint& p, Tolerance tol) {
    for (const auto& q : out) {
        if (approx_equal(p, q, tol)) return;
    }
    out.push_back(p);
}

inline void sort_points(std::vector<XPoint>& v) {
    std::sort(v.begin(), v.end(), [](const XPoint& a, const XPoint& b) { return order(a, b) < 0; });
}

}  // namespace detail

inline bool in_H(const XPoint& x, const XPoint& y, Tolerance tol = default_tolerance) {
    if (x.is_infinite() || y.is_infinite()) return x.is_infinite() && y.is_infinite();
    for (const auto& piece : pieces_from(x)) {
        if (piece.range() != y.index()) continue;
        if (std::abs(piece.forward_local(x.local()) - y.local()) <= tol.eps_eq) return true;
    }
    return false;
}

// Vertical section {y : (x, y) in H}, deduplicated and sorted.
inline std::vector<XPoint> h_image(const XPoint& x, Tolerance tol = default_tolerance) {
    std::vector<XPoint> out;
    for (const auto& piece : pieces_from(x)) detail::insert_unique(out, piece.apply(x), tol);
    detail::sort_points(out);
    return out;
}

// Horizontal section {x : (x, y) in H}.
inline std::vector<XPoint> h_preimage(const XPoint& y, Tolerance tol = default_tolerance) {
    std::vector<XPoint> out;
    for (const auto& piece : pieces_into(y)) detail::insert_unique(out, piece.apply_inverse(y), tol);
    detail::sort_points(out);
    return out;
}

// ---------------------------------------------------------------------------
// Global homeomorphisms F1, F2, F3 with H = G(F1) u G(F2) u G(F3).
//
// F1: cube root on I_1, (t-2)^2+2 on I_2, identity elsewhere.
// F2: swaps I_{2j+1} and I_{2j+2} by +-2.
// F3: cube root on I_1, swaps I_{2j+2} and I_{2j+3} by +-2.

enum class GlobalMap { F1, F2, F3 };

inline constexpr GlobalMap all_global_maps[] = {GlobalMap::F1, GlobalMap::F2, GlobalMap::F3};

inline std::string to_string(GlobalMap g) {
    switch (g) {
        case GlobalMap::F1: return "F1";
        case GlobalMap::F2: return "F2";
        case GlobalMap::F3: return "F3";
    }
    return "?";
}

// The piece of H that g uses on the interval containing x.
inline PieceMap global_piece(GlobalMap g, const XPoint& x) {
    if (x.is_infinite()) return PieceMap::inf_fix();
    const int k = x.index();
    switch (g) {
        case GlobalMap::F1:
            if (k == 1) return PieceMap::cube_root();
            if (k == 2) return PieceMap::square();
            return PieceMap::id(k);
        case GlobalMap::F2:
            return (k % 2 == 1) ? PieceMap::up(k) : PieceMap::down(k);
        case GlobalMap::F3:
            if (k == 1) return PieceMap::cube_root();
            return (k % 2 == 0) ? PieceMap::up(k) : PieceMap::down(k);
    }
    throw DomainError("unknown global map");
}

inline XPoint global_apply(GlobalMap g, const XPoint& x) { return global_piece(g, x).apply(x); }

inline XPoint global_inverse(GlobalMap g, const XPoint& y) {
    if (y.is_infinite()) return y;
    const int k = y.index();
    switch (g) {
        case GlobalMap::F1:
            if (k == 1) return PieceMap::cube_root().apply_inverse(y);
            if (k == 2) return PieceMap::square().apply_inverse(y);
            return y;
        case GlobalMap::F2:
            // F2 is an involution.
            return global_apply(GlobalMap::F2, y);
        case GlobalMap::F3:
            if (k == 1) return PieceMap::cube_root().apply_inverse(y);
            return global_apply(GlobalMap::F3, y);
    }
    throw DomainError("unknown global map");
}

struct DecompositionReport {
    bool pass = true;
    long long points_checked = 0;
    std::optional<XPoint> counterexample;
    std::string detail;
};

namespace detail {

inline bool same_set(std::vector<XPoint> a, std::vector<XPoint> b, Tolerance tol) {
    std::vector<XPoint> ua, ub;
    for (const auto& p : a) insert_unique(ua, p, tol);
    for (const auto& p : b) insert_unique(ub, p, tol);
    if (ua.size() != ub.size()) return false;
    for (const auto& p : ua) {
        if (std::none_of(ub.begin(), ub.end(), [&](const XPoint& q) { return approx_equal(p, q, tol); })) {
            return false;
        }
    }
    return true;
}

}  // namespace detail

// Checks h_image(x) = {F1(x), F2(x), F3(x)} and the inverse analogue
// h_preimage(y) = {F1^-1(y), F2^-1(y), F3^-1(y)} on a uniform grid of
// samples_per_interval points in each I_k, k <= kmax, plus infinity.
inline DecompositionReport decomposition_check(int kmax, int samples_per_interval,
                                               Tolerance tol = default_tolerance) {
    if (kmax < 1) throw DomainError("decomposition_check: kmax must be >= 1");
    if (samples_per_interval < 1) throw DomainError("decomposition_check: samples must be >= 1");

    DecompositionReport report;
    auto check = [&](const XPoint& x) {
        ++report.points_checked;
        std::vector<XPoint> forward, backward;
        for (GlobalMap g : all_global_maps) {
            forward.push_back(global_apply(g, x));
            backward.push_back(global_inverse(g, x));
        }
        const auto image = h_image(x, tol);
        if (!detail::same_set(image, forward, tol)) {
            report.pass = false;
            report.counterexample = x;
            report.detail = "h_image differs from {F1,F2,F3}(x)";
            return false;
        }
        for (const auto& y : image) {
            if (!in_H(x, y, tol)) {
                report.pass = false;
                report.counterexample = x;
                report.detail = "image point not in H: " + y.to_string();
                return false;
            }
        }
        if (!detail::same_set(h_preimage(x, tol), backward, tol)) {
            report.pass = false;
            report.counterexample = x;
            report.detail = "h_preimage differs from {F1^-1,F2^-1,F3^-1}(x)";
            return false;
        }
        return true;
    };

    for (int k = 1; k <= kmax; ++k) {
        for (int i = 0; i < samples_per_interval; ++i) {
            const double u = samples_per_interval == 1
                                 ? 0.5
                                 : static_cast<double>(i) / (samples_per_interval - 1);
            if (!check(XPoint::finite(k, u))) return report;
        }
    }
    check(XPoint::infinity());
    return report;
}

}  // namespace fanshift

#endif
