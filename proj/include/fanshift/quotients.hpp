#ifndef FANSHIFT_QUOTIENTS_HPP
#define FANSHIFT_QUOTIENTS_HPP

// P = C x I, its image R under phi(c, t) = (c, c t), lifting maps of P to R,
// the relations identifying the top and gluing the arcs M_k, descent of maps
// to the quotient, and combinatorial fan models F_a with their stars.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fanshift/errors.hpp"
#include "fanshift/itinerary.hpp"
#include "fanshift/mahavier.hpp"
#include "fanshift/xspace.hpp"

namespace fanshift {

// A point of P = C x I: Cantor address (finite word over {0,2}) and height.
struct CPoint {
    CantorAddress c;
    double t = 0.0;

    double cv() const { return c.value(); }
};

inline bool is_vertex_fibre(const CPoint& p) { return p.cv() == 0.0; }

inline CPoint phi(const CPoint& p) { return {p.c, p.cv() * p.t}; }

// phi^-1 on R off the fibre c = 0; the vertex (0, 0) goes to (0, 0).
inline CPoint phi_inverse(const CPoint& p) {
    const double c = p.cv();
    if (c == 0.0) {
        if (p.t != 0.0) throw DomainError("phi_inverse: (0, t) with t > 0 is not in R");
        return p;
    }
    return {p.c, std::min(1.0, p.t / c)};
}

// R = phi(P) = {(c, tau) : 0 <= tau <= c}.
inline bool in_R(const CPoint& p, Tolerance tol = default_tolerance) {
    return p.t >= -tol.eps_eq && p.t <= p.cv() + tol.eps_eq;
}

// All 2^depth addresses of the given length, in increasing value.
inline std::vector<CantorAddress> cantor_addresses(int depth) {
    if (depth < 0 || depth > 24) throw DomainError("cantor_addresses: depth must lie in [0, 24]");
    std::vector<CantorAddress> out;
    const std::uint32_t count = 1u << depth;
    out.reserve(count);
    for (std::uint32_t bits = 0; bits < count; ++bits) {
        CantorAddress a;
        for (int i = depth - 1; i >= 0; --i) a.digits.push_back(((bits >> i) & 1u) ? 2 : 0);
        out.push_back(std::move(a));
    }
    return out;
}

// Grid of P: every address of the given depth times heights i / height_steps.
inline std::vector<CPoint> sample_P(int depth, int height_steps) {
    if (height_steps < 1) throw DomainError("sample_P: height_steps must be >= 1");
    std::vector<CPoint> out;
    for (const auto& a : cantor_addresses(depth)) {
        for (int i = 0; i <= height_steps; ++i) out.push_back({a, static_cast<double>(i) / height_steps});
    }
    return out;
}

using PMap = std::function<CPoint(const CPoint&)>;

struct LiftedMap {
    PMap f;

    // f_R = phi o f o phi^-1, with f_R(0, 0) = (0, 0).
    CPoint operator()(const CPoint& p) const {
        if (is_vertex_fibre(p)) return {p.c, 0.0};
        return phi(f(phi_inverse(p)));
    }
};

// Checks f({0} x I) in {0} x I and f((C \ {0}) x I) in (C \ {0}) x I on the
// samples; throws HypothesisViolated naming the first offending sample.
inline void check_lift_hypotheses(const PMap& f, const std::vector<CPoint>& samples) {
    for (const auto& p : samples) {
        const CPoint q = f(p);
        const bool from_zero = is_vertex_fibre(p);
        const bool to_zero = is_vertex_fibre(q);
        if (from_zero != to_zero) {
            throw HypothesisViolated("lift: f(" + p.c.to_string() + ", " + std::to_string(p.t) + ") = (" +
                                     q.c.to_string() + ", " + std::to_string(q.t) + ") crosses the fibre c = 0");
        }
    }
}

inline LiftedMap lift_f_R(PMap f, const std::vector<CPoint>& samples) {
    check_lift_hypotheses(f, samples);
    return LiftedMap{std::move(f)};
}

struct HlavnaReport {
    bool pass = true;
    bool surjective = true;
    bool injective = true;
    bool vertex_continuous = true;
    bool vertex_sequence_available = true;
    std::size_t samples = 0;
    double vertex_tail = 0.0;  // image norm at the end of the vertex sequence
    std::vector<std::string> witnesses;
};

namespace detail {

inline bool cpoint_less(const CPoint& a, const CPoint& b) {
    if (a.c != b.c) return a.c < b.c;
    return a.t < b.t;
}

inline bool cpoint_close(const CPoint& a, const CPoint& b, Tolerance tol) {
    return a.c == b.c && std::abs(a.t - b.t) <= tol.eps_eq;
}

inline std::string describe(const CPoint& p) { return "(" + p.c.to_string() + ", " + std::to_string(p.t) + ")"; }

inline void dedupe(std::vector<CPoint>& v, Tolerance tol) {
    std::sort(v.begin(), v.end(), cpoint_less);
    v.erase(std::unique(v.begin(), v.end(), [&](const CPoint& a, const CPoint& b) { return cpoint_close(a, b, tol); }),
            v.end());
}

// Surjectivity and injectivity of the sampled graph (domain -> image) on R.
inline void check_graph(const std::vector<std::pair<CPoint, CPoint>>& graph, HlavnaReport& r, Tolerance tol) {
    std::vector<CPoint> domain, image;
    for (const auto& [x, y] : graph) {
        domain.push_back(x);
        image.push_back(y);
    }
    std::vector<CPoint> sorted_image = image;
    std::sort(sorted_image.begin(), sorted_image.end(), cpoint_less);
    for (std::size_t i = 0; i + 1 < sorted_image.size(); ++i) {
        if (cpoint_close(sorted_image[i], sorted_image[i + 1], tol)) {
            r.injective = false;
            r.witnesses.push_back("collision at " + describe(sorted_image[i]));
            break;
        }
    }
    for (const auto& x : domain) {
        auto it = std::lower_bound(sorted_image.begin(), sorted_image.end(), CPoint{x.c, x.t - tol.eps_eq}, cpoint_less);
        if (it == sorted_image.end() || !cpoint_close(*it, x, tol)) {
            r.surjective = false;
            r.witnesses.push_back("no sampled preimage of " + describe(x));
            break;
        }
    }
}

}  // namespace detail

// Sampled checks on f_R for an explicit map f of P: the grid of depth
// `depth` and heights i / height_steps is pushed to R, f_R must permute it
// (surjective and injective on samples), and along c_n = 2/3^n with
// t_n = c_n / 2 the images must approach the vertex.
inline HlavnaReport check_hlavna(const PMap& f, int depth, int height_steps, double vertex_tol = 1e-3,
                                 Tolerance tol = default_tolerance) {
    const auto grid = sample_P(depth, height_steps);
    const LiftedMap fr = lift_f_R(f, grid);

    std::vector<CPoint> rs;
    for (const auto& p : grid) rs.push_back(phi(p));
    detail::dedupe(rs, tol);

    HlavnaReport r;
    r.samples = rs.size();
    std::vector<std::pair<CPoint, CPoint>> graph;
    for (const auto& x : rs) graph.emplace_back(x, fr(x));
    detail::check_graph(graph, r, tol);

    // The limit computation at the vertex: (c_n, t_n) -> (0, 0) in R.
    double tail = 0.0;
    for (int n = 1; n <= std::max(depth, 12); ++n) {
        CantorAddress a;
        a.digits.assign(static_cast<std::size_t>(n - 1), 0);
        a.digits.push_back(2);
        const CPoint x{a, a.value() / 2.0};
        const CPoint y = fr(x);
        tail = std::max(y.cv(), y.t);
    }
    r.vertex_tail = tail;
    const CPoint origin = fr(CPoint{CantorAddress{}, 0.0});
    if (origin.cv() != 0.0 || origin.t != 0.0) {
        r.vertex_continuous = false;
        r.witnesses.push_back("f_R(0,0) is not the vertex");
    }
    if (tail > vertex_tol) {
        r.vertex_continuous = false;
        r.witnesses.push_back("images along c_n -> 0 stay at norm " + std::to_string(tail));
    }
    r.pass = r.surjective && r.injective && r.vertex_continuous;
    return r;
}

// Same checks for a map of P known only on a finite invariant sample (a
// sampled graph x -> f(x) in P). Vertex continuity uses the sampled points
// of R within radius 3^-n <= vertex_tol of the vertex; when none lie that
// close it holds vacuously and vertex_sequence_available is false.
inline HlavnaReport check_hlavna(const std::vector<std::pair<CPoint, CPoint>>& f_graph, double vertex_tol = 1e-3,
                                 Tolerance tol = default_tolerance) {
    std::vector<CPoint> domain;
    for (const auto& [x, y] : f_graph) domain.push_back(x);
    std::map<std::pair<CantorAddress, double>, CPoint> table;
    for (const auto& [x, y] : f_graph) table[{x.c, x.t}] = y;
    PMap f = [&](const CPoint& p) {
        auto it = table.find({p.c, p.t});
        if (it == table.end()) throw DomainError("sampled map evaluated off its sample");
        return it->second;
    };
    check_lift_hypotheses(f, domain);
    const LiftedMap fr{f};

    HlavnaReport r;
    std::vector<std::pair<CPoint, CPoint>> graph;
    for (const auto& x : domain) {
        const CPoint rx = phi(x);
        graph.emplace_back(rx, is_vertex_fibre(x) ? CPoint{x.c, 0.0} : phi(f(x)));
    }
    std::sort(graph.begin(), graph.end(), [](const auto& a, const auto& b) { return detail::cpoint_less(a.first, b.first); });
    graph.erase(std::unique(graph.begin(), graph.end(),
                            [&](const auto& a, const auto& b) { return detail::cpoint_close(a.first, b.first, tol); }),
                graph.end());
    r.samples = graph.size();
    detail::check_graph(graph, r, tol);

    r.vertex_sequence_available = false;
    double tail = 0.0;
    for (int n = 1; n <= 40; ++n) {
        const double radius = std::pow(3.0, -n);
        if (radius > vertex_tol) continue;
        double worst = -1.0;
        for (const auto& [x, y] : graph) {
            if (std::max(x.cv(), x.t) <= radius) worst = std::max(worst, std::max(y.cv(), y.t));
        }
        if (worst < 0.0) break;
        r.vertex_sequence_available = true;
        tail = worst;
    }
    r.vertex_tail = tail;
    if (r.vertex_sequence_available && tail > vertex_tol) {
        r.vertex_continuous = false;
        r.witnesses.push_back("images near the vertex stay at norm " + std::to_string(tail));
    }
    r.pass = r.surjective && r.injective && r.vertex_continuous;
    return r;
}

// A point of the model space of X_H as a point of P: (address, height).
inline CPoint model_cpoint(const MPoint& p, int depth) {
    const ModelPoint m = model_map(p, depth);
    if (p.is_all_infinity()) {
        // (1, 0): the address 222... truncated at the model depth.
        CantorAddress a;
        a.digits.assign(static_cast<std::size_t>(std::max(depth, 1)), 2);
        return {a, 0.0};
    }
    return {m.address, m.tau};
}

// The shift transported into P by the model map, sampled on periodic points
// whose itineraries use only +-2 steps and identities (so the shift permutes
// the sample): every closed walk of length <= period_max on I_1..I_kmax,
// every rotation, and local coordinates i / height_steps.
inline std::vector<std::pair<CPoint, CPoint>> shift_conjugate_graph(int period_max, int kmax, int depth,
                                                                     int height_steps) {
    if (period_max < 2 || kmax < 2 || depth < 1 || height_steps < 1) {
        throw DomainError("shift_conjugate_graph: parameters out of range");
    }
    std::vector<std::vector<Letter>> cycles;
    std::vector<Letter> walk;
    auto rec = [&](auto&& self, int start, int at, int len) -> void {
        if (len > 0 && at == start) cycles.push_back(walk);
        if (len == period_max) return;
        for (const auto& l : letters_with_domain(at)) {
            const auto kind = l.piece().kind();
            if (kind == PieceMap::Kind::CubeRoot || kind == PieceMap::Kind::Square) continue;
            if (l.range() > kmax) continue;
            walk.push_back(l);
            self(self, start, l.range(), len + 1);
            walk.pop_back();
        }
    };
    for (int k = 1; k <= kmax; ++k) rec(rec, k, k, 0);

    const int half = depth / 2 + 2;
    std::vector<std::pair<CPoint, CPoint>> graph;
    for (const auto& cyc : cycles) {
        const int p = static_cast<int>(cyc.size());
        Word w;
        for (int j = -half - 1; j < half + 1; ++j) w.letters.push_back(cyc[static_cast<std::size_t>(((j % p) + p) % p)]);
        w.offset = half + 1;
        const int k = cyc.front().domain();
        for (int i = 0; i <= height_steps; ++i) {
            const MPoint x = MPoint::from_word(w, XPoint::finite(k, static_cast<double>(i) / height_steps));
            graph.emplace_back(model_cpoint(x, depth), model_cpoint(x.shift(), depth));
        }
    }
    // Cycles of a smaller period appear several times; keep one copy.
    std::sort(graph.begin(), graph.end(), [](const auto& a, const auto& b) { return detail::cpoint_less(a.first, b.first); });
    graph.erase(std::unique(graph.begin(), graph.end(),
                            [](const auto& a, const auto& b) { return detail::cpoint_close(a.first, b.first, {}); }),
                graph.end());
    return graph;
}

struct DensityTransfer {
    double eps_P = 0.0;  // sup over net of distance to the orbit in P (sup metric)
    double eps_R = 0.0;  // same for the phi-images in R
    bool bound_holds = true;  // eps_R <= 2 eps_P
};

// phi is 2-Lipschitz for the sup metric on P (|c1 t1 - c2 t2| <= |dc| + |dt|),
// so an eps-dense orbit of f in a sampled net gives a 2eps-dense orbit of f_R.
inline DensityTransfer density_transfer(const std::vector<CPoint>& orbit, const std::vector<CPoint>& net) {
    auto sup = [](const CPoint& a, const CPoint& b) { return std::max(std::abs(a.cv() - b.cv()), std::abs(a.t - b.t)); };
    DensityTransfer d;
    for (const auto& y : net) {
        double bp = std::numeric_limits<double>::infinity(), br = bp;
        const CPoint ry = phi(y);
        for (const auto& x : orbit) {
            bp = std::min(bp, sup(x, y));
            br = std::min(br, sup(phi(x), ry));
        }
        d.eps_P = std::max(d.eps_P, bp);
        d.eps_R = std::max(d.eps_R, br);
    }
    d.bound_holds = d.eps_R <= 2.0 * d.eps_P + 1e-15;
    return d;
}

// ---------------------------------------------------------------------------
// The relations on X_H.

class AParam {
public:
    AParam() = default;
    explicit AParam(std::vector<int> a) : a_(std::move(a)) {
        for (std::size_t i = 0; i < a_.size(); ++i) {
            const int k = static_cast<int>(i) + 1;
            if (a_[i] != 2 * k - 1 && a_[i] != 2 * k) {
                throw DomainError("AParam: a_" + std::to_string(k) + " must be " + std::to_string(2 * k - 1) +
                                  " or " + std::to_string(2 * k));
            }
        }
    }

    // Coordinate k from a bit: 0 -> 2k-1, 1 -> 2k.
    static AParam from_bits(std::uint32_t bits, int length) {
        std::vector<int> a;
        for (int k = 1; k <= length; ++k) a.push_back(2 * k - 1 + static_cast<int>((bits >> (k - 1)) & 1u));
        return AParam(std::move(a));
    }

    int size() const { return static_cast<int>(a_.size()); }
    int at(int k) const {
        if (k < 1 || k > size()) throw TruncationError("AParam: coordinate " + std::to_string(k) + " not modeled");
        return a_[static_cast<std::size_t>(k - 1)];
    }
    const std::vector<int>& values() const { return a_; }

    // Largest bundle touched by a gluing.
    int required_bundles() const {
        int m = 0;
        for (int k = 1; k <= size(); ++k) m = std::max(m, k * k + 2 + at(k));
        return m;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < a_.size(); ++i) s += (i ? "," : "") + std::to_string(a_[i]);
        return s;
    }

    friend bool operator==(const AParam&, const AParam&) = default;

private:
    std::vector<int> a_;
};

// m such that every known letter of p is f_{m,2} with m >= 3 (p lies in M_m).
inline std::optional<int> m_index(const MPoint& p) {
    if (p.is_all_infinity() || p.window_letters() == 0) return std::nullopt;
    const Word w = p.word();
    const int m = w.letters.front().domain();
    if (m < 3) return std::nullopt;
    for (const auto& l : w.letters) {
        if (!(l == Letter(m, 2))) return std::nullopt;
    }
    return m;
}

// Block of M_m: m = k^2 + 2 + i with 0 <= i <= 2k.
inline std::pair<int, int> m_block(int m) {
    int k = static_cast<int>(std::floor(std::sqrt(static_cast<double>(m - 2))));
    while (k * k > m - 2) --k;
    while ((k + 1) * (k + 1) <= m - 2) ++k;
    return {k, m - 2 - k * k};
}

// Model height p_2(phi_0(p)); 0 for the point at infinity.
inline double model_height(const MPoint& p) {
    if (p.is_all_infinity()) return 0.0;
    return std::ldexp(p.t0().local(), -(2 * p.base_interval() - 1));
}

inline bool in_top_class(const MPoint& p) { return p.is_all_infinity() || model_height(p) == 0.0; }

struct ClassKey {
    enum class Kind { Top, Glued, Singleton } kind = Kind::Singleton;
    int block = 0;        // k for Glued
    double height = 0.0;  // for Glued
};

// Gluing data for p when it lies on a glued arc (host or guest) of block k.
inline std::optional<std::pair<int, double>> glued_position(const MPoint& p, const AParam& a) {
    const auto m = m_index(p);
    if (!m) return std::nullopt;
    const auto [k, i] = m_block(*m);
    if (k < 1) return std::nullopt;
    if (k > a.size()) {
        throw TruncationError("sim_a: M_" + std::to_string(*m) + " lies beyond the modeled coordinates of a");
    }
    if (i > a.at(k)) return std::nullopt;
    return std::make_pair(k, model_height(p));
}

// x ~_a y: equal; both in the top class (height 0 or the point at infinity);
// or both on arcs glued in the same block k at equal model height. The last
// clause includes two guests of one host, which the transitive closure of
// the gluings forces.
inline bool sim_a(const MPoint& x, const MPoint& y, const AParam& a, Tolerance tol = default_tolerance) {
    if (same_point(x, y, tol)) return true;
    if (in_top_class(x) && in_top_class(y)) return true;
    if (in_top_class(x) || in_top_class(y)) return false;
    const auto mx = m_index(x);
    const auto my = m_index(y);
    if (!mx || !my) return false;
    if (m_block(*mx).first != m_block(*my).first) return false;
    const auto gx = glued_position(x, a);
    const auto gy = glued_position(y, a);
    if (!gx || !gy) return false;
    return std::abs(gx->second - gy->second) <= tol.eps_eq;
}

inline ClassKey class_of(const MPoint& p, const AParam& a) {
    ClassKey key;
    if (in_top_class(p)) {
        key.kind = ClassKey::Kind::Top;
        return key;
    }
    if (const auto g = glued_position(p, a)) {
        key.kind = ClassKey::Kind::Glued;
        key.block = g->first;
        key.height = g->second;
    }
    return key;
}

using XMap = std::function<MPoint(const MPoint&)>;

// f* on classes: [x] -> [f(x)].
struct ClassMap {
    XMap f;
    AParam a;

    MPoint representative_image(const MPoint& x) const { return f(x); }
    ClassKey operator()(const MPoint& x) const { return class_of(f(x), a); }
    bool same_class(const MPoint& x, const MPoint& y) const { return sim_a(f(x), f(y), a); }
};

// Verifies x ~ y <=> f(x) ~ f(y) on every sampled pair before descending.
inline ClassMap descend(XMap f, const AParam& a, const std::vector<MPoint>& samples) {
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const MPoint fi = f(samples[i]);
        for (std::size_t j = i; j < samples.size(); ++j) {
            const MPoint fj = f(samples[j]);
            const bool before = sim_a(samples[i], samples[j], a);
            const bool after = sim_a(fi, fj, a);
            if (before != after) {
                throw WellDefinednessError("descend: samples " + std::to_string(i) + " and " + std::to_string(j) +
                                           (before ? " are equivalent but their images are not"
                                                   : " are inequivalent but their images are equivalent"));
            }
        }
    }
    return ClassMap{std::move(f), a};
}

// ---------------------------------------------------------------------------
// Fan models.

struct Leg {
    int bundle = 0;
    CantorAddress address;
    double length = 0.0;
    int m_index = 0;  // m when the leg carries the arc M_m, 0 otherwise

    double c() const { return address.value(); }
};

struct Gluing {
    std::size_t host = 0;
    std::size_t guest = 0;
};

struct FanModel {
    std::string top = "v";
    std::vector<Leg> legs;
    std::vector<Gluing> gluings;
};

namespace detail {

// Every admissible window in bundle k with `depth` letters in interleaved
// order (transitions 0..r-1 and -l..-1 with r = ceil(depth/2), l = floor(depth/2)).
inline std::vector<Word> interleaved_windows(int k, int depth) {
    const int right = (depth + 1) / 2;
    const int left = depth / 2;
    std::vector<Word> out;
    const auto rights = enumerate_words(k, right);
    for (const auto& r : rights) {
        std::vector<Letter> prefix;
        auto rec = [&](auto&& self, int front) -> void {
            if (static_cast<int>(prefix.size()) == left) {
                Word w;
                w.letters.assign(prefix.rbegin(), prefix.rend());
                w.letters.insert(w.letters.end(), r.letters.begin(), r.letters.end());
                w.offset = left;
                out.push_back(std::move(w));
                return;
            }
            for (const auto& l : letters_with_range(front)) {
                prefix.push_back(l);
                self(self, l.domain());
                prefix.pop_back();
            }
        };
        rec(rec, k);
    }
    return out;
}

}  // namespace detail

// Legs: one per itinerary address of the given depth in each bundle
// k <= kmax_bundle, of length 2^-(2k-1). Gluings: for k <= |a| and
// i = 1..a_k the guest M_{k^2+2+i} lies along the host M_{k^2+2}.
inline FanModel build_fan(const AParam& a, int kmax_bundle, int depth) {
    if (kmax_bundle < 1) throw DomainError("build_fan: kmax_bundle must be >= 1");
    if (depth < 1) throw DomainError("build_fan: depth must be >= 1");
    if (a.required_bundles() > kmax_bundle) {
        throw DomainError("build_fan: kmax_bundle " + std::to_string(kmax_bundle) + " does not cover bundle " +
                          std::to_string(a.required_bundles()));
    }
    FanModel fan;
    std::map<int, std::size_t> m_leg;
    for (int k = 1; k <= kmax_bundle; ++k) {
        for (const auto& w : detail::interleaved_windows(k, depth)) {
            Leg leg;
            leg.bundle = k;
            leg.address = address_in_bundle(w, k, depth);
            leg.length = interval_diameter(k);
            if (k >= 3 && std::all_of(w.letters.begin(), w.letters.end(), [&](const Letter& l) { return l == Letter(k, 2); })) {
                leg.m_index = k;
                m_leg[k] = fan.legs.size();
            }
            fan.legs.push_back(std::move(leg));
        }
    }
    std::sort(fan.legs.begin(), fan.legs.end(), [](const Leg& x, const Leg& y) { return x.address < y.address; });
    m_leg.clear();
    for (std::size_t i = 0; i < fan.legs.size(); ++i) {
        if (fan.legs[i].m_index) m_leg[fan.legs[i].m_index] = i;
    }
    for (int k = 1; k <= a.size(); ++k) {
        const int host = k * k + 2;
        for (int i = 1; i <= a.at(k); ++i) fan.gluings.push_back({m_leg.at(host), m_leg.at(host + i)});
    }
    return fan;
}

// n copies of base sharing the top; copy n (1-based) is scaled by
// scale * 2^-n and its addresses are prefixed with 2^(n-1) 0, so the copies
// occupy disjoint Cantor cylinders.
inline FanModel star_of(const FanModel& base, int n_copies, double scale) {
    if (n_copies < 1) throw DomainError("star_of: n_copies must be >= 1");
    if (!(scale > 0.0)) throw DomainError("star_of: scale must be positive");
    FanModel star;
    star.top = base.top;
    for (int n = 1; n <= n_copies; ++n) {
        const std::size_t shift = star.legs.size();
        const double factor = scale * std::ldexp(1.0, -n);
        for (const auto& leg : base.legs) {
            Leg copy = leg;
            CantorAddress a;
            a.digits.assign(static_cast<std::size_t>(n - 1), 2);
            a.digits.push_back(0);
            a.digits.insert(a.digits.end(), leg.address.digits.begin(), leg.address.digits.end());
            copy.address = std::move(a);
            copy.length = leg.length * factor;
            star.legs.push_back(std::move(copy));
        }
        for (const auto& g : base.gluings) star.gluings.push_back({g.host + shift, g.guest + shift});
    }
    return star;
}

}  // namespace fanshift

#endif
