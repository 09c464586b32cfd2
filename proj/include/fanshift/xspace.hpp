#ifndef FANSHIFT_XSPACE_HPP
#define FANSHIFT_XSPACE_HPP

// The compactum X = [0,1] u [2,3] u [4,5] u ... u {inf} and its metric.
//
// A finite point is stored as (k, u): interval index k >= 1 and local
// coordinate u in [0,1], so the ambient value is 2(k-1) + u in I_k.
// The metric pulls X back onto the model subset of [0,1] through the
// piecewise affine map sending I_k onto [q_{2k-2}, q_{2k-1}], where
// q_n = 1 - 2^-n, and infinity onto 1.

#include <cmath>
#include <compare>
#include <limits>
#include <string>

#include "fanshift/errors.hpp"

namespace fanshift {

struct Tolerance {
    double eps_eq = 1e-12;
};

inline constexpr Tolerance default_tolerance{};

class XPoint {
public:
    // Finite(k, u). Values of u within tol of [0,1] are clamped.
    static XPoint finite(int k, double u, Tolerance tol = default_tolerance) {
        if (k < 1) {
            throw DomainError("XPoint: interval index must be >= 1, got " + std::to_string(k));
        }
        if (!std::isfinite(u) || u < -tol.eps_eq || u > 1.0 + tol.eps_eq) {
            throw DomainError("XPoint: local coordinate outside [0,1]: " + std::to_string(u));
        }
        if (u < 0.0) u = 0.0;
        if (u > 1.0) u = 1.0;
        return XPoint(k, u);
    }

    static XPoint infinity() { return XPoint(0, 0.0); }

    // Point with the given ambient value 2(k-1)+u.
    static XPoint from_ambient(double t, Tolerance tol = default_tolerance) {
        if (std::isinf(t)) return infinity();
        const double k0 = std::floor(t / 2.0);
        double u = t - 2.0 * k0;
        int k = static_cast<int>(k0) + 1;
        if (u > 1.0 && u < 1.0 + tol.eps_eq) u = 1.0;
        if (u > 2.0 - tol.eps_eq) {
            ++k;
            u = 0.0;
        }
        return finite(k, u, tol);
    }

    bool is_infinite() const { return k_ == 0; }
    bool is_finite() const { return k_ != 0; }

    // Interval index; 0 for infinity.
    int index() const { return k_; }
    double local() const { return u_; }

    double ambient() const {
        return is_infinite() ? std::numeric_limits<double>::infinity() : 2.0 * (k_ - 1) + u_;
    }

    bool even_endpoint() const { return is_finite() && u_ == 0.0; }
    bool odd_endpoint() const { return is_finite() && u_ == 1.0; }

    friend bool operator==(const XPoint&, const XPoint&) = default;

    // Ambient order, infinity last.
    friend std::strong_ordering order(const XPoint& a, const XPoint& b) {
        if (a.is_infinite() || b.is_infinite()) {
            return a.is_infinite() <=> b.is_infinite();
        }
        if (a.k_ != b.k_) return a.k_ <=> b.k_;
        if (a.u_ < b.u_) return std::strong_ordering::less;
        if (a.u_ > b.u_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string to_string() const {
        if (is_infinite()) return "inf";
        return "(" + std::to_string(k_) + "," + std::to_string(u_) + ")";
    }

private:
    XPoint(int k, double u) : k_(k), u_(u) {}

    int k_;
    double u_;
};

// Equality with exact index match and u compared under tolerance.
inline bool approx_equal(const XPoint& a, const XPoint& b, Tolerance tol = default_tolerance) {
    if (a.index() != b.index()) return false;
    return std::abs(a.local() - b.local()) <= tol.eps_eq;
}

// q_n = 1 - 2^-n, exact in binary for n <= 52.
inline double q_value(int n) { return 1.0 - std::ldexp(1.0, -n); }

// Inverse of the model homeomorphism: X -> [0,1].
inline double embed(const XPoint& x) {
    if (x.is_infinite()) return 1.0;
    const int k = x.index();
    return q_value(2 * k - 2) + std::ldexp(x.local(), -(2 * k - 1));
}

// Inverse of embed on the model subset. Values in a gap between two
// interval images are projected to the nearest endpoint.
inline XPoint unembed(double e) {
    if (e >= 1.0) return XPoint::infinity();
    if (e <= 0.0) return XPoint::finite(1, 0.0);
    // e lies in [q_{2k-2}, q_{2k}) for k = floor(-log2(1-e)/2) + 1.
    int k = static_cast<int>(std::floor(-std::log2(1.0 - e) / 2.0)) + 1;
    if (k < 1) k = 1;
    while (k > 1 && e < q_value(2 * k - 2)) --k;
    while (e >= q_value(2 * k)) ++k;
    const double lo = q_value(2 * k - 2);
    const double mid = q_value(2 * k - 1);
    const double hi = q_value(2 * k);
    if (e <= mid) return XPoint::finite(k, std::ldexp(e - lo, 2 * k - 1));
    if (e - mid <= hi - e) return XPoint::finite(k, 1.0);
    return XPoint::finite(k + 1, 0.0);
}

inline double dist(const XPoint& x, const XPoint& y) { return std::abs(embed(y) - embed(x)); }

// diam(I_k) in the metric above.
inline double interval_diameter(int k) { return std::ldexp(1.0, -(2 * k - 1)); }

}  // namespace fanshift

#endif
