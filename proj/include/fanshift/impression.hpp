#ifndef FANSHIFT_IMPRESSION_HPP
#define FANSHIFT_IMPRESSION_HPP

// Forward impressions of H, the dense family t^(2^m/3^n) + 2k, finite
// resolution density checks, and construction of a long itinerary whose
// shift orbit passes close to every element of a window-space net.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "fanshift/errors.hpp"
#include "fanshift/itinerary.hpp"
#include "fanshift/mahavier.hpp"
#include "fanshift/relations.hpp"
#include "fanshift/xspace.hpp"

namespace fanshift {

inline constexpr std::size_t default_bfs_cap = 1'000'000;

// u^(2^m / 3^n); exact key (m, n), value rounded once.
inline double power_family_value(double u, int m, int n) {
    if (u <= 0.0 || u >= 1.0) return u;
    const double exponent = std::ldexp(1.0, m) / std::pow(3.0, n);
    return std::exp(exponent * std::log(u));
}

// Points reachable from s along H-chains of at most `depth` steps. Finite
// states are tracked exactly as (k, m, n): the point Finite(k, u^(2^m/3^n))
// where u is the local coordinate of s.
inline std::vector<XPoint> forward_reachable(const XPoint& s, int depth, std::size_t cap = default_bfs_cap) {
    if (depth < 0) throw DomainError("forward_reachable: depth must be >= 0");
    if (s.is_infinite()) return {s};

    using Key = std::tuple<int, int, int>;
    std::set<Key> seen{{s.index(), 0, 0}};
    std::vector<Key> frontier{{s.index(), 0, 0}};
    for (int layer = 0; layer < depth && !frontier.empty(); ++layer) {
        std::vector<Key> next;
        for (const auto& [k, m, n] : frontier) {
            Key succ[3];
            int count = 0;
            if (k == 1) {
                succ[count++] = {1, m, n + 1};
                succ[count++] = {2, m, n};
            } else if (k == 2) {
                succ[count++] = {1, m, n};
                succ[count++] = {2, m + 1, n};
                succ[count++] = {3, m, n};
            } else {
                succ[count++] = {k - 1, m, n};
                succ[count++] = {k, m, n};
                succ[count++] = {k + 1, m, n};
            }
            for (int i = 0; i < count; ++i) {
                if (seen.insert(succ[i]).second) next.push_back(succ[i]);
            }
            if (seen.size() > cap) throw ResourceError("forward_reachable: BFS cap exceeded");
        }
        frontier = std::move(next);
    }

    std::vector<XPoint> out;
    out.reserve(seen.size());
    for (const auto& [k, m, n] : seen) {
        out.push_back(XPoint::finite(k, power_family_value(s.local(), m, n)));
    }
    std::sort(out.begin(), out.end(), [](const XPoint& a, const XPoint& b) { return order(a, b) < 0; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct SymbolicPoint {
    double t_base = 0.5;
    int m = 0;
    int n = 0;
    int k = 1;

    XPoint point() const { return XPoint::finite(k, power_family_value(t_base, m, n)); }

    // An H-chain from Finite(1, t_base) to point(): n cube roots, then m
    // squares on I_2, then k-1 steps up.
    Word witness() const {
        Word w;
        for (int i = 0; i < n; ++i) w.letters.emplace_back(1, 2);
        if (m > 0) {
            w.letters.emplace_back(1, 3);
            for (int i = 0; i < m; ++i) w.letters.emplace_back(2, 2);
            w.letters.emplace_back(2, 1);
        }
        for (int i = 1; i < k; ++i) w.letters.emplace_back(i, 3);
        return w;
    }

    // End point of the witness chain, evaluated letter by letter.
    XPoint replay() const {
        XPoint x = XPoint::finite(1, t_base);
        for (const auto& l : witness().letters) x = l.piece().apply(x);
        return x;
    }
};

inline std::vector<SymbolicPoint> symbolic_family(double t_base, int m_max, int n_max, int k_max) {
    if (!(t_base > 0.0 && t_base < 1.0)) throw DomainError("symbolic_family: base must lie in (0,1)");
    std::vector<SymbolicPoint> out;
    for (int m = 0; m <= m_max; ++m) {
        for (int n = 0; n <= n_max; ++n) {
            for (int k = 1; k <= k_max; ++k) out.push_back({t_base, m, n, k});
        }
    }
    return out;
}

// Dense seed set (0,1) u (2,3) u ...
inline bool in_dense_seed_set(const XPoint& x) { return x.is_finite() && x.local() > 0.0 && x.local() < 1.0; }

inline int default_k_cut(double eps) {
    return std::max(8, static_cast<int>(std::ceil(-std::log(eps) / std::log(4.0))) + 1);
}

struct DensityReport {
    bool pass = true;
    double eps = 0.0;
    int k_cut = 0;
    std::size_t net_size = 0;
    std::vector<XPoint> uncovered;
};

// Builds an eps/2-net of X in embed coordinates (the uniform net of [0,1]
// projected onto the model subset, restricted to I_1..I_kcut, plus infinity)
// and reports net points farther than eps from every element of S.
inline DensityReport eps_dense_check(const std::vector<XPoint>& S, double eps, int k_cut) {
    if (!(eps > 0.0)) throw DomainError("eps_dense_check: eps must be positive");
    if (k_cut < 1) throw DomainError("eps_dense_check: k_cut must be >= 1");
    DensityReport report;
    report.eps = eps;
    report.k_cut = k_cut;

    std::vector<double> values;
    values.reserve(S.size());
    for (const auto& s : S) values.push_back(embed(s));
    std::sort(values.begin(), values.end());

    auto covered = [&](double e) {
        auto it = std::lower_bound(values.begin(), values.end(), e);
        double best = std::numeric_limits<double>::infinity();
        if (it != values.end()) best = std::min(best, *it - e);
        if (it != values.begin()) best = std::min(best, e - *std::prev(it));
        return best <= eps;
    };

    std::vector<XPoint> net;
    const double step = eps / 2.0;
    const auto steps = static_cast<long long>(std::ceil(1.0 / step));
    for (long long i = 0; i <= steps; ++i) {
        const double e = std::min(1.0, static_cast<double>(i) * step);
        const XPoint p = unembed(e);
        if (p.is_infinite() || p.index() > k_cut) continue;
        if (!net.empty() && net.back() == p) continue;
        net.push_back(p);
    }
    net.push_back(XPoint::infinity());
    report.net_size = net.size();
    for (const auto& p : net) {
        if (!covered(embed(p))) report.uncovered.push_back(p);
    }
    report.pass = report.uncovered.empty();
    return report;
}

// ---------------------------------------------------------------------------
// Orbit construction.

struct WindowNet {
    std::vector<MPoint> points;  // each covers [-N, N]; may include the point at infinity
    std::vector<int> word_id;    // points with the same window word share an id; -1 for infinity
    int k_cut = 0;               // bundles >= k_cut are represented by the point at infinity
};

// Smallest K such that every point of L_k, k >= K, lies within `radius` of the
// point at infinity in the window metric.
inline int window_k_cut(double radius, const WindowConfig& cfg) {
    for (int K = 1;; ++K) {
        double worst = 0.0;
        for (int j = 0; j <= cfg.N; ++j) {
            const int lowest = std::max(K - j, 1);
            worst = std::max(worst, std::ldexp(1.0, -(2 * lowest - 2) - j));
        }
        if (worst <= radius) return K;
    }
}

// All admissible windows with letters at transitions -N..N-1 and base
// coordinate in I_k.
inline std::vector<Word> window_words(int k, const WindowConfig& cfg) {
    std::vector<Word> out;
    for (const auto& right : enumerate_words(k, cfg.N)) {
        std::vector<Letter> left;
        auto rec = [&](auto&& self, int front) -> void {
            if (static_cast<int>(left.size()) == cfg.N) {
                Word w;
                w.letters.assign(left.rbegin(), left.rend());
                w.letters.insert(w.letters.end(), right.letters.begin(), right.letters.end());
                w.offset = cfg.N;
                out.push_back(std::move(w));
                return;
            }
            for (const auto& l : letters_with_range(front)) {
                left.push_back(l);
                self(self, l.domain());
                left.pop_back();
            }
        };
        rec(rec, k);
    }
    return out;
}

// An eps/2-net of window space: for every window word of a bundle below the
// cut, the arc parameterised by its leftmost coordinate is sampled by
// bisection until consecutive samples are within eps/2 (every coordinate is
// monotone along the arc, so this bounds the gap everywhere between them).
inline WindowNet build_window_net(double eps, const WindowConfig& cfg) {
    if (!(eps > 0.0)) throw DomainError("build_window_net: eps must be positive");
    WindowNet net;
    net.k_cut = window_k_cut(eps / 2.0, cfg);
    int id = 0;
    for (int k = 1; k < net.k_cut; ++k) {
        for (const auto& w : window_words(k, cfg)) {
            const int entry = w.letters.front().domain();
            auto at = [&](double u) { return MPoint::from_anchor(w, -cfg.N, XPoint::finite(entry, u)); };
            std::vector<double> grid{0.0};
            auto refine = [&](auto&& self, double a, const MPoint& pa, double b, const MPoint& pb, int level) -> void {
                if (level > 1100 || dist_window(pa, pb, cfg) <= eps / 2.0) {
                    grid.push_back(b);
                    return;
                }
                const double mid = a + (b - a) / 2.0;
                const MPoint pm = at(mid);
                self(self, a, pa, mid, pm, level + 1);
                self(self, mid, pm, b, pb, level + 1);
            };
            refine(refine, 0.0, at(0.0), 1.0, at(1.0), 0);
            for (double u : grid) {
                net.points.push_back(at(u));
                net.word_id.push_back(id);
            }
            ++id;
        }
    }
    net.points.push_back(MPoint::all_infinity());
    net.word_id.push_back(-1);
    return net;
}

struct OrbitVisit {
    long long time = 0;          // shift count from the returned point
    std::size_t net_index = 0;
    double distance = 0.0;       // dist_window at that time
};

struct OrbitResult {
    MPoint orbit = MPoint::all_infinity();
    std::vector<OrbitVisit> log;  // one entry per net element
    std::size_t itinerary_length = 0;
};

struct OrbitOptions {
    std::size_t max_steering_steps = 200'000;
    std::size_t max_letters = 50'000'000;
};

namespace detail {

// Appends letters to an itinerary while tracking the current coordinate.
class ItineraryBuilder {
public:
    explicit ItineraryBuilder(XPoint start) : start_(start), current_(start) {}

    void push(const Letter& l) {
        current_ = l.piece().apply(current_);
        letters_.push_back(l);
    }

    // Moves through +-2 steps to I_target; the local coordinate is unchanged.
    void travel_to(int target) {
        while (current_.index() < target) push(Letter(current_.index(), 3));
        while (current_.index() > target) push(Letter(current_.index(), 1));
    }

    const XPoint& current() const { return current_; }
    long long size() const { return static_cast<long long>(letters_.size()); }

    MPoint finish() const { return MPoint::from_word(Word{letters_, 0}, start_); }

private:
    XPoint start_;
    XPoint current_;
    std::vector<Letter> letters_;
};

}  // namespace detail

// Concatenates connecting H-chains into one itinerary whose shift orbit comes
// within eps of every element of the net. Interval changes use +-2 steps;
// the local coordinate is steered by cube roots on I_1 and squares on I_2,
// which reach u^(2^m/3^n) for any m, n. The steering walk works on
// log(-log u) where the two moves are translations by log 2 and -log 3.
inline OrbitResult build_orbit(const WindowNet& net, double eps, const WindowConfig& cfg,
                               const OrbitOptions& opts = {}) {
    if (!(eps > 0.0)) throw DomainError("build_orbit: eps must be positive");
    const std::size_t count = net.points.size();
    std::vector<char> covered(count, 0);
    std::vector<OrbitVisit> visits(count);

    std::map<int, std::vector<std::size_t>> by_word;
    for (std::size_t i = 0; i < count; ++i) by_word[net.word_id[i]].push_back(i);

    detail::ItineraryBuilder path(XPoint::finite(1, 0.5));
    const int high = std::max(net.k_cut, 2) + cfg.N + 1;

    auto record = [&](long long time, const MPoint& window, int word) {
        for (std::size_t j : by_word[word]) {
            if (covered[j]) continue;
            const double d = dist_window(window, net.points[j], cfg);
            if (d <= eps) {
                covered[j] = 1;
                visits[j] = {time, j, d};
            }
        }
    };

    for (std::size_t target = 0; target < count; ++target) {
        if (covered[target]) continue;
        if (static_cast<std::size_t>(path.size()) > opts.max_letters) {
            throw ResourceError("build_orbit: itinerary exceeds the letter cap");
        }
        const MPoint& goal = net.points[target];
        if (goal.is_all_infinity()) {
            path.travel_to(high);
            for (int i = 0; i < 2 * cfg.N; ++i) path.push(Letter(high, 2));
            const long long time = path.size() - cfg.N;
            Word w;
            for (int i = 0; i < 2 * cfg.N; ++i) w.letters.emplace_back(high, 2);
            w.offset = cfg.N;
            const MPoint window = MPoint::from_word(w, path.current());
            const double d = dist_window(window, goal, cfg);
            if (d > eps) throw PathNotFound("build_orbit: cut bundle too low to approach infinity");
            covered[target] = 1;
            visits[target] = {time, target, d};
            continue;
        }

        Word w = goal.word();
        Word window_word;
        for (int j = -cfg.N; j < cfg.N; ++j) window_word.letters.push_back(w.at(j));
        window_word.offset = cfg.N;
        const int entry = window_word.letters.front().domain();
        const double goal_u = goal.coord(-cfg.N).local();
        const double goal_log = goal_u <= 0.0 ? std::numeric_limits<double>::infinity()
                                : goal_u >= 1.0 ? -std::numeric_limits<double>::infinity()
                                                : std::log(-std::log(goal_u));

        // Exponent gain of the window on the local coordinate: exit = entry^gain.
        double gain = 1.0;
        for (const auto& l : window_word.letters) {
            if (l.piece().kind() == PieceMap::Kind::Square) gain *= 2.0;
            if (l.piece().kind() == PieceMap::Kind::CubeRoot) gain /= 3.0;
        }
        const double floor_u = std::exp(std::log(1e-280) / std::max(gain, 1.0));

        // Walk on I_1 / I_2 until entering the window from here is close enough.
        if (path.current().index() > 2) path.travel_to(2);
        bool done = false;
        for (std::size_t step = 0; step <= opts.max_steering_steps; ++step) {
            const double u = path.current().local();
            const MPoint candidate = MPoint::from_anchor(window_word, -cfg.N, XPoint::finite(entry, u));
            const double exit_u = candidate.coord(cfg.N).local();
            if (exit_u > 0.0 && exit_u < 1.0 && dist_window(candidate, goal, cfg) <= eps) {
                path.travel_to(entry);
                const long long time = path.size() + cfg.N;
                for (const auto& l : window_word.letters) path.push(l);
                record(time, candidate, net.word_id[target]);
                done = true;
                break;
            }
            if (u <= 0.0 || u >= 1.0) break;
            const double here = std::log(-std::log(u));
            // Never let the walker saturate at 0 or 1, where both moves are stuck.
            const bool can_square = u * u > floor_u;
            const bool can_root = std::cbrt(u) < 1.0 - 1e-14;
            if ((here < goal_log && can_square) || !can_root) {
                // u too close to 1: square on I_2.
                path.travel_to(2);
                path.push(Letter(2, 2));
            } else {
                path.travel_to(1);
                path.push(Letter(1, 2));
            }
        }
        if (!done || !covered[target]) {
            throw PathNotFound("build_orbit: steering failed for net element " + std::to_string(target));
        }
    }

    OrbitResult result;
    result.orbit = path.finish();
    result.itinerary_length = static_cast<std::size_t>(path.size());
    result.log = std::move(visits);
    return result;
}

inline OrbitResult transitive_orbit_builder(double eps, const WindowConfig& cfg, const OrbitOptions& opts = {}) {
    return build_orbit(build_window_net(eps, cfg), eps, cfg, opts);
}

struct OrbitVerification {
    bool pass = true;
    std::size_t net_size = 0;
    std::size_t covered = 0;
    double coverage = 0.0;
    double max_two_sided = 0.0;
    double max_forward = 0.0;
};

// Recomputes every logged visit from the returned point with dist_window and
// with the one-sided metric on coordinates 0..N.
inline OrbitVerification verify_orbit(const OrbitResult& r, const WindowNet& net, double eps,
                                      const WindowConfig& cfg) {
    OrbitVerification v;
    v.net_size = net.points.size();
    std::vector<char> seen(net.points.size(), 0);
    for (const auto& visit : r.log) {
        if (visit.net_index >= net.points.size()) continue;
        const MPoint at = r.orbit.shifted(static_cast<int>(visit.time));
        const double two = dist_window(at, net.points[visit.net_index], cfg);
        const double fwd = dist_window_forward(at, net.points[visit.net_index], cfg);
        v.max_two_sided = std::max(v.max_two_sided, two);
        v.max_forward = std::max(v.max_forward, fwd);
        if (two <= eps && fwd <= eps) seen[visit.net_index] = 1;
    }
    v.covered = static_cast<std::size_t>(std::count(seen.begin(), seen.end(), 1));
    v.coverage = v.net_size ? static_cast<double>(v.covered) / static_cast<double>(v.net_size) : 1.0;
    v.pass = v.covered == v.net_size;
    return v;
}

}  // namespace fanshift

#endif
