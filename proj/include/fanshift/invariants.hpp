#ifndef FANSHIFT_INVARIANTS_HPP
#define FANSHIFT_INVARIANTS_HPP

// End-points and JuMa sets of fan models, JuMa count profiles, certificates
// that F_a and F_b are not homeomorphic, Hausdorff distance, and a brute
// force metric oracle for the JuMa heights of a truncated planar model.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fanshift/errors.hpp"
#include "fanshift/quotients.hpp"

namespace fanshift {

struct Endpoint {
    std::size_t leg = 0;
    double height = 0.0;
};

namespace detail {

inline std::vector<char> guest_flags(const FanModel& fan) {
    std::vector<char> guest(fan.legs.size(), 0);
    for (const auto& g : fan.gluings) guest.at(g.guest) = 1;
    return guest;
}

}  // namespace detail

// Tips of the maximal legs; a glued guest's tip is interior to its host.
inline std::vector<Endpoint> endpoints(const FanModel& fan) {
    const auto guest = detail::guest_flags(fan);
    std::vector<Endpoint> out;
    for (std::size_t i = 0; i < fan.legs.size(); ++i) {
        if (!guest[i]) out.push_back({i, fan.legs[i].length});
    }
    return out;
}

// Heights on a leg where end-point sequences accumulate: the leg's own tip
// (a limit of the tips of its Cantor neighbours) and the tip height of every
// arc glued along it. Sorted increasingly; 0 never occurs.
inline std::vector<double> juma_heights(const FanModel& fan, std::size_t leg) {
    if (leg >= fan.legs.size()) throw IndexError("juma_heights: no such leg");
    std::set<double> h{fan.legs[leg].length};
    for (const auto& g : fan.gluings) {
        if (g.host == leg) h.insert(fan.legs[g.guest].length);
    }
    return {h.begin(), h.end()};
}

inline int juma_count(const FanModel& fan, std::size_t leg) {
    for (const auto& g : fan.gluings) {
        if (g.guest == leg) throw DomainError("juma_count: leg " + std::to_string(leg) + " is not an end-point leg");
    }
    return static_cast<int>(juma_heights(fan, leg).size());
}

// Multiset of JuMa counts over the end-points, as value -> multiplicity.
struct JumaProfile {
    std::map<int, std::size_t> counts;

    std::set<int> values() const {
        std::set<int> v;
        for (const auto& [c, n] : counts) v.insert(c);
        return v;
    }
    bool has(int value) const { return counts.count(value) != 0; }
    friend bool operator==(const JumaProfile&, const JumaProfile&) = default;
};

inline JumaProfile profile(const FanModel& fan) {
    JumaProfile p;
    for (const auto& e : endpoints(fan)) ++p.counts[juma_count(fan, e.leg)];
    return p;
}

inline int default_bundles(const AParam& a) { return std::max(1, a.required_bundles()); }

struct Certificate {
    int k = 0;        // least coordinate where a and b differ
    int value = 0;    // a JuMa count realised in one profile only
    bool in_a = true; // which profile realises it
    JumaProfile profile_a;
    JumaProfile profile_b;
};

// Builds both truncated fans over the same bundles and returns the least k
// with a_k != b_k together with a count value present in exactly one of the
// profiles (the host of block k carries a_k + 1 heights).
inline Certificate distinguish(const AParam& a, const AParam& b, int kmax, int depth) {
    if (kmax < 1) throw DomainError("distinguish: kmax must be >= 1");
    if (a.size() < kmax || b.size() < kmax) throw TruncationError("distinguish: parameters shorter than kmax");
    const AParam ta(std::vector<int>(a.values().begin(), a.values().begin() + kmax));
    const AParam tb(std::vector<int>(b.values().begin(), b.values().begin() + kmax));
    int k = 0;
    for (int i = 1; i <= kmax; ++i) {
        if (ta.at(i) != tb.at(i)) {
            k = i;
            break;
        }
    }
    if (k == 0) throw NotDistinguished("distinguish: a and b agree on the modeled coordinates; raise kmax");

    const int bundles = std::max(default_bundles(ta), default_bundles(tb));
    Certificate cert;
    cert.k = k;
    cert.profile_a = profile(build_fan(ta, bundles, depth));
    cert.profile_b = profile(build_fan(tb, bundles, depth));
    for (int candidate : {ta.at(k) + 1, tb.at(k) + 1}) {
        const bool ia = cert.profile_a.has(candidate);
        const bool ib = cert.profile_b.has(candidate);
        if (ia != ib) {
            cert.value = candidate;
            cert.in_a = ia;
            return cert;
        }
    }
    throw NotDistinguished("distinguish: profiles share every count near k = " + std::to_string(k));
}

// Profile over precomputed fans (avoids rebuilding in exhaustive sweeps).
inline Certificate distinguish_profiles(const AParam& a, const JumaProfile& pa, const AParam& b,
                                        const JumaProfile& pb) {
    const int kmax = std::min(a.size(), b.size());
    Certificate cert;
    for (int i = 1; i <= kmax; ++i) {
        if (a.at(i) != b.at(i)) {
            cert.k = i;
            break;
        }
    }
    if (cert.k == 0) throw NotDistinguished("distinguish: a and b agree on the modeled coordinates");
    cert.profile_a = pa;
    cert.profile_b = pb;
    for (int candidate : {a.at(cert.k) + 1, b.at(cert.k) + 1}) {
        if (pa.has(candidate) != pb.has(candidate)) {
            cert.value = candidate;
            cert.in_a = pa.has(candidate);
            return cert;
        }
    }
    throw NotDistinguished("distinguish: no separating count");
}

// ---------------------------------------------------------------------------
// Hausdorff distance between finite planar sets.

using Point2 = std::array<double, 2>;

inline double hausdorff_dist(const std::vector<Point2>& A, const std::vector<Point2>& B) {
    if (A.empty() || B.empty()) throw DomainError("hausdorff_dist: sets must be nonempty");
    auto directed = [](const std::vector<Point2>& X, const std::vector<Point2>& Y) {
        double worst = 0.0;
        for (const auto& x : X) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& y : Y) best = std::min(best, std::hypot(x[0] - y[0], x[1] - y[1]));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(directed(A, B), directed(B, A));
}

// Cone embedding of the fan model: height tau on the arc over c goes to
// (c tau, tau); the top is the origin.
inline Point2 cone_point(double c, double tau) { return {c * tau, tau}; }

// Samples of the arc A[v, x] for x = (c, h).
inline std::vector<Point2> arc_samples(double c, double h, int samples) {
    std::vector<Point2> out;
    for (int i = 0; i <= samples; ++i) out.push_back(cone_point(c, h * i / samples));
    return out;
}

// ---------------------------------------------------------------------------
// Metric oracle.

struct OracleOptions {
    int relative_bits = 10;  // grid spacing 2^-(s + relative_bits) on heights in (2^-(s+1), 2^-s]
    int refine_digits = 30;  // extra Cantor digits explored below each leg address
};

struct OracleDetection {
    std::size_t leg = 0;
    double height = 0.0;
};

namespace detail {

// Distance in the planar model C x [0,1] (L1 metric) with the gluings and the
// collapsed top applied: a point on a host below a guest's length may be
// represented on the guest, and any two points may pass through the top.
struct OracleGeometry {
    const FanModel& fan;
    std::vector<std::vector<std::size_t>> guests_of;  // host -> guests
    std::vector<char> guest;

    explicit OracleGeometry(const FanModel& f) : fan(f), guests_of(f.legs.size()), guest(guest_flags(f)) {
        for (const auto& g : f.gluings) guests_of[g.host].push_back(g.guest);
    }

    // Representatives (c, tau) of the point at height h on leg i.
    std::vector<std::pair<double, double>> reps(std::size_t i, double h) const {
        std::vector<std::pair<double, double>> r{{fan.legs[i].c(), h}};
        for (std::size_t g : guests_of[i]) {
            if (h <= fan.legs[g].length) r.emplace_back(fan.legs[g].c(), h);
        }
        return r;
    }
};

}  // namespace detail

// Brute force detection of accumulation points of end-points along a leg.
// The end-points of the planar model are the tips (c, length) of all arcs
// over the Cantor cylinder of every leg's address, except the tip of each
// glued guest's own arc. A grid point x on the leg is detected when some
// end-point other than x lies within the grid spacing of x; the search over
// end-points refines Cantor cylinders with a branch-and-bound on the lower
// bound |dc| + |dtau|. Detections are returned clustered: one height per run
// of consecutive detected grid points (the run's closest-approach height).
inline std::vector<double> juma_metric_oracle(const FanModel& fan, std::size_t leg, const OracleOptions& opt = {}) {
    if (leg >= fan.legs.size()) throw IndexError("juma_metric_oracle: no such leg");
    const detail::OracleGeometry geo(fan);

    double min_length = std::numeric_limits<double>::infinity();
    for (const auto& l : fan.legs) min_length = std::min(min_length, l.length);

    struct Cyl {
        double left;
        double width;
        int extra;
    };

    // Smallest model distance from (c, h) to an end-point other than the
    // point itself, capped at `cap`.
    auto nearest_endpoint = [&](double c, double h, double cap) {
        double best = cap;
        for (std::size_t j = 0; j < fan.legs.size(); ++j) {
            const Leg& other = fan.legs[j];
            const double dh = std::abs(h - other.length);
            if (dh >= best) continue;
            const double left = other.c();
            const double width = other.address.cylinder_width();
            // Branch and bound over sub-cylinders of the leg's address.
            std::vector<Cyl> stack{{left, width, 0}};
            while (!stack.empty()) {
                const Cyl cyl = stack.back();
                stack.pop_back();
                const double gap = c < cyl.left ? cyl.left - c : (c > cyl.left + cyl.width ? c - cyl.left - cyl.width : 0.0);
                if (gap + dh >= best) continue;
                if (cyl.extra == opt.refine_digits) {
                    // Leaf: its two extreme Cantor points are end-points.
                    for (double e : {cyl.left, cyl.left + cyl.width}) {
                        const bool self = (e == c && dh == 0.0);
                        const bool guest_tip = geo.guest[j] && e == left;
                        if (self || guest_tip) continue;
                        best = std::min(best, std::abs(e - c) + dh);
                    }
                    continue;
                }
                const double w = cyl.width / 3.0;
                stack.push_back({cyl.left + 2.0 * w, w, cyl.extra + 1});
                stack.push_back({cyl.left, w, cyl.extra + 1});
            }
        }
        return best;
    };

    const Leg& L = fan.legs[leg];
    std::vector<std::pair<double, double>> grid;  // (height, spacing)
    for (int s = 0;; ++s) {
        const double hi = std::ldexp(1.0, -s);
        const double lo = hi / 2.0;
        if (hi < min_length / 4.0) break;
        if (lo >= L.length) continue;
        const double spacing = std::ldexp(1.0, -(s + opt.relative_bits));
        for (double h = lo + spacing; h <= std::min(hi, L.length) + 1e-300; h += spacing) grid.emplace_back(h, spacing);
    }
    std::sort(grid.begin(), grid.end());

    std::vector<double> clusters;
    bool in_run = false;
    double run_best = 0.0, run_height = 0.0;
    for (const auto& [h, spacing] : grid) {
        double d = spacing;
        for (const auto& [c, tau] : geo.reps(leg, h)) d = std::min(d, nearest_endpoint(c, tau, spacing));
        // The top: any end-point via (c, tau) -> top -> (c', tau').
        d = std::min(d, h + min_length);
        const bool hit = d < spacing;
        if (hit) {
            if (!in_run || d < run_best) {
                run_best = d;
                run_height = h;
            }
            in_run = true;
        } else if (in_run) {
            clusters.push_back(run_height);
            in_run = false;
        }
    }
    if (in_run) clusters.push_back(run_height);
    return clusters;
}

struct OracleAgreement {
    bool agree = true;
    std::size_t legs_checked = 0;
    std::string detail;
};

// Compares juma_heights with the oracle on the given legs: each combinatorial
// height must match one detected cluster within tolerance `rel` relative to
// the height, and vice versa.
inline OracleAgreement compare_with_oracle(const FanModel& fan, const std::vector<std::size_t>& legs,
                                           const OracleOptions& opt = {}) {
    OracleAgreement r;
    const double rel = std::ldexp(1.0, -opt.relative_bits + 2);
    for (std::size_t leg : legs) {
        ++r.legs_checked;
        const auto comb = juma_heights(fan, leg);
        const auto orc = juma_metric_oracle(fan, leg, opt);
        bool ok = comb.size() == orc.size();
        for (std::size_t i = 0; ok && i < comb.size(); ++i) ok = std::abs(comb[i] - orc[i]) <= rel * comb[i];
        if (!ok) {
            r.agree = false;
            r.detail = "leg " + std::to_string(leg) + ": combinatorial " + std::to_string(comb.size()) +
                       " heights, oracle " + std::to_string(orc.size());
            return r;
        }
    }
    return r;
}

// Legs worth checking: every host and guest-free leg of each bundle's M arc,
// and the first and last leg of each bundle.
inline std::vector<std::size_t> oracle_legs(const FanModel& fan) {
    std::set<std::size_t> out;
    const auto guest = detail::guest_flags(fan);
    std::map<int, std::pair<std::size_t, std::size_t>> span;
    for (std::size_t i = 0; i < fan.legs.size(); ++i) {
        if (guest[i]) continue;
        if (fan.legs[i].m_index) out.insert(i);
        auto [it, fresh] = span.try_emplace(fan.legs[i].bundle, i, i);
        if (!fresh) it->second.second = i;
    }
    for (const auto& [k, ends] : span) {
        out.insert(ends.first);
        out.insert(ends.second);
    }
    return {out.begin(), out.end()};
}

}  // namespace fanshift

#endif
