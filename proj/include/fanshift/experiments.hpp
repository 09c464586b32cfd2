#ifndef FANSHIFT_EXPERIMENTS_HPP
#define FANSHIFT_EXPERIMENTS_HPP

// Verification runs behind `fanshift verify <name>`: typed parameters with
// defaults, one runner per name, each producing a Report.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fanshift/errors.hpp"
#include "fanshift/impression.hpp"
#include "fanshift/invariants.hpp"
#include "fanshift/itinerary.hpp"
#include "fanshift/mahavier.hpp"
#include "fanshift/quotients.hpp"
#include "fanshift/relations.hpp"
#include "fanshift/report.hpp"
#include "fanshift/xspace.hpp"

namespace fanshift {

inline constexpr std::uint64_t default_seed = 20240601;

// ---------------------------------------------------------------------------
// Parameters.

struct ParamSpec {
    enum class Kind { Int, Double, IntList } kind;
    std::string fallback;
};

class Params {
public:
    Params(std::map<std::string, ParamSpec> spec, const std::map<std::string, std::string>& given) : spec_(std::move(spec)) {
        for (const auto& [key, value] : given) {
            if (!spec_.count(key)) throw UsageError("unknown parameter --" + key);
            values_[key] = value;
        }
        for (const auto& [key, s] : spec_) {
            if (!values_.count(key)) values_[key] = s.fallback;
            check(key);
        }
    }

    long long integer(const std::string& key) const { return parse_int(key, values_.at(key)); }
    double real(const std::string& key) const { return parse_double(key, values_.at(key)); }
    std::vector<int> list(const std::string& key) const {
        std::vector<int> out;
        std::stringstream ss(values_.at(key));
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!item.empty()) out.push_back(static_cast<int>(parse_int(key, item)));
        }
        return out;
    }

    json to_json() const {
        json j = json::object();
        for (const auto& [key, s] : spec_) {
            switch (s.kind) {
                case ParamSpec::Kind::Int: j[key] = integer(key); break;
                case ParamSpec::Kind::Double: j[key] = real(key); break;
                case ParamSpec::Kind::IntList: j[key] = list(key); break;
            }
        }
        return j;
    }

private:
    static long long parse_int(const std::string& key, const std::string& v) {
        std::size_t pos = 0;
        long long x = 0;
        try {
            x = std::stoll(v, &pos);
        } catch (const std::exception&) {
            throw UsageError("--" + key + ": not an integer: '" + v + "'");
        }
        if (pos != v.size()) throw UsageError("--" + key + ": not an integer: '" + v + "'");
        return x;
    }

    static double parse_double(const std::string& key, const std::string& v) {
        std::size_t pos = 0;
        double x = 0;
        try {
            x = std::stod(v, &pos);
        } catch (const std::exception&) {
            throw UsageError("--" + key + ": not a number: '" + v + "'");
        }
        if (pos != v.size() || !std::isfinite(x)) throw UsageError("--" + key + ": not a number: '" + v + "'");
        return x;
    }

    void check(const std::string& key) const {
        const auto& s = spec_.at(key);
        switch (s.kind) {
            case ParamSpec::Kind::Int:
                if (integer(key) <= 0 && key != "seed") throw UsageError("--" + key + " must be positive");
                if (integer(key) < 0) throw UsageError("--" + key + " must be non-negative");
                break;
            case ParamSpec::Kind::Double:
                if (!(real(key) > 0.0)) throw UsageError("--" + key + " must be positive");
                break;
            case ParamSpec::Kind::IntList:
                for (int v : list(key)) {
                    if (v <= 0) throw UsageError("--" + key + " entries must be positive");
                }
                break;
        }
    }

    std::map<std::string, ParamSpec> spec_;
    std::map<std::string, std::string> values_;
};

using Kind = ParamSpec::Kind;

// ---------------------------------------------------------------------------
// Runners.

namespace detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// A gluing parameter given on the command line; a malformed one is a usage error.
inline AParam a_param(const Params& p, const std::string& key) {
    try {
        return AParam(p.list(key));
    } catch (const DomainError& e) {
        throw UsageError("--" + key + ": " + e.what());
    }
}

}  // namespace detail

inline Report verify_decomposition(const Params& p) {
    Report r{"decomposition", p.to_json()};
    const auto d = decomposition_check(static_cast<int>(p.integer("kmax")), static_cast<int>(p.integer("samples")));
    r.pass = d.pass;
    r.witness({{"kind", "points_checked"}, {"value", d.points_checked}});
    if (d.counterexample) r.witness({{"kind", "counterexample"}, {"point", to_json(*d.counterexample)}, {"detail", d.detail}});
    return r;
}

struct DiamResult {
    bool interval_exact = true;
    std::vector<double> bound;       // per k
    std::vector<double> worst;       // per k, sampled max of dist_window
    std::vector<MPoint> worst_p, worst_q;
    bool sampled_within = true;
};

// diam(I_k) exactly for k <= kmax_interval; sampled max of dist_window over
// pairs drawn from the L_k windows (random itinerary, uniform height) for
// k <= kmax, against the bound 2^-(2k-1).
inline DiamResult diam_experiment(int kmax_interval, int kmax, int pairs, int N, std::uint64_t seed) {
    DiamResult res;
    for (int k = 1; k <= kmax_interval; ++k) {
        const double d = dist(XPoint::finite(k, 0.0), XPoint::finite(k, 1.0));
        if (d != std::ldexp(1.0, -(2 * k - 1)) || d != interval_diameter(k)) res.interval_exact = false;
    }
    std::mt19937_64 rng(seed);
    const WindowConfig cfg{N};
    for (int k = 1; k <= kmax; ++k) {
        const ProductStructure ps(k);
        std::uniform_real_distribution<double> height(0.0, ps.max_height());
        double worst = -1.0;
        MPoint wp = MPoint::all_infinity(), wq = MPoint::all_infinity();
        for (int i = 0; i < pairs; ++i) {
            const MPoint a = ps.pack(random_word(k, N, N, rng), height(rng));
            const MPoint b = ps.pack(random_word(k, N, N, rng), height(rng));
            const double d = dist_window(a, b, cfg);
            if (d > worst) {
                worst = d;
                wp = a;
                wq = b;
            }
        }
        res.bound.push_back(ps.max_height());
        res.worst.push_back(worst);
        res.worst_p.push_back(wp);
        res.worst_q.push_back(wq);
        if (worst > ps.max_height()) res.sampled_within = false;
    }
    return res;
}

inline Report verify_diam(const Params& p) {
    Report r{"diam", p.to_json()};
    const auto d = diam_experiment(static_cast<int>(p.integer("kinterval")), static_cast<int>(p.integer("kmax")),
                                   static_cast<int>(p.integer("pairs")), static_cast<int>(p.integer("N")),
                                   static_cast<std::uint64_t>(p.integer("seed")));
    r.witness({{"kind", "interval_diameters_exact"}, {"value", d.interval_exact}});
    for (std::size_t i = 0; i < d.worst.size(); ++i) {
        json w{{"kind", "window_pair"}, {"k", i + 1}, {"bound", d.bound[i]}, {"max_dist", d.worst[i]},
               {"within", d.worst[i] <= d.bound[i]}};
        if (d.worst[i] > d.bound[i]) {
            w["p"] = to_json(d.worst_p[i]);
            w["q"] = to_json(d.worst_q[i]);
        }
        r.witness(std::move(w));
    }
    r.pass = d.interval_exact && d.sampled_within;
    return r;
}

inline Report verify_cantor(const Params& p) {
    Report r{"cantor", p.to_json()};
    r.pass = true;
    for (int k = 1; k <= p.integer("kmax"); ++k) {
        const auto c = cantor_certificate(k, static_cast<int>(p.integer("length")));
        r.witness({{"kind", "bundle"},
                   {"k", k},
                   {"pass", c.pass},
                   {"words_checked", c.words_checked},
                   {"min_right_branching", c.min_right_branching},
                   {"min_left_branching", c.min_left_branching},
                   {"counts_match_recurrence", c.counts_match_recurrence}});
        r.pass = r.pass && c.pass;
    }
    return r;
}

// The points reached from s within `depth` steps together with the symbolic
// family of s.
inline std::vector<XPoint> impression_set(const XPoint& s, int depth, int m_max, int n_max, int k_max) {
    auto S = forward_reachable(s, depth);
    for (const auto& sp : symbolic_family(s.local(), m_max, n_max, k_max)) S.push_back(sp.point());
    return S;
}

inline Report verify_impression(const Params& p) {
    Report r{"impression", p.to_json()};
    const double t = p.real("seed-t");
    if (!(t > 0.0 && t < 1.0)) throw UsageError("--seed-t must lie in (0,1)");
    const double eps = p.real("eps");
    const int kcut = p.integer("kcut") > 0 ? static_cast<int>(p.integer("kcut")) : default_k_cut(eps);
    const auto S = impression_set(XPoint::finite(1, t), static_cast<int>(p.integer("depth")),
                                  static_cast<int>(p.integer("m")), static_cast<int>(p.integer("n")),
                                  static_cast<int>(p.integer("k")));
    const auto d = eps_dense_check(S, eps, kcut);
    r.pass = d.pass;
    r.witness({{"kind", "net"}, {"net_size", d.net_size}, {"set_size", S.size()}, {"k_cut", kcut}});
    for (const auto& u : d.uncovered) r.witness({{"kind", "uncovered"}, {"point", to_json(u)}, {"embed", embed(u)}});
    return r;
}

namespace detail {

// Cantor homeomorphism fixing 0: on the cylinder [2] flip the second digit.
inline CantorAddress flip_second_digit(CantorAddress a) {
    if (a.digits.size() >= 2 && a.digits[0] == 2) a.digits[1] = static_cast<std::uint8_t>(2 - a.digits[1]);
    return a;
}

inline json hlavna_json(const std::string& label, const HlavnaReport& h) {
    json w{{"kind", "lift"},
           {"map", label},
           {"pass", h.pass},
           {"surjective", h.surjective},
           {"injective", h.injective},
           {"vertex_continuous", h.vertex_continuous},
           {"vertex_sequence_available", h.vertex_sequence_available},
           {"samples", h.samples},
           {"vertex_tail", h.vertex_tail}};
    if (!h.witnesses.empty()) w["witnesses"] = h.witnesses;
    return w;
}

}  // namespace detail

// The example maps of P used for the lift checks.
inline PMap identity_map() {
    return [](const CPoint& x) { return x; };
}
inline PMap product_map() {
    return [](const CPoint& x) { return CPoint{detail::flip_second_digit(x.c), 1.0 - x.t}; };
}
// Sends the fibre over 2/3 (address 2) into the fibre c = 0.
inline PMap violating_map() {
    return [](const CPoint& x) {
        if (!x.c.digits.empty() && x.c.digits[0] == 2 &&
            std::all_of(x.c.digits.begin() + 1, x.c.digits.end(), [](auto d) { return d == 0; })) {
            CantorAddress z;
            z.digits.assign(x.c.digits.size(), 0);
            return CPoint{z, x.t};
        }
        return x;
    };
}

inline Report verify_hlavna(const Params& p) {
    Report r{"hlavna", p.to_json()};
    const int depth = static_cast<int>(p.integer("depth"));
    const int heights = static_cast<int>(p.integer("heights"));
    const auto id = check_hlavna(identity_map(), depth, heights);
    const auto prod = check_hlavna(product_map(), depth, heights);
    r.witness(detail::hlavna_json("identity", id));
    r.witness(detail::hlavna_json("flip x reflect", prod));

    bool rejected = false;
    std::string message;
    try {
        lift_f_R(violating_map(), sample_P(depth, heights));
    } catch (const HypothesisViolated& e) {
        rejected = true;
        message = e.what();
    }
    r.witness({{"kind", "hypothesis_check"}, {"map", "fibre 2/3 onto 0"}, {"rejected", rejected}, {"message", message}});

    const auto graph = shift_conjugate_graph(static_cast<int>(p.integer("period")), 5, 2 * depth, heights);
    const auto shift = check_hlavna(graph);
    r.witness(detail::hlavna_json("shift conjugate (periodic points)", shift));

    // Transfer of density through phi for the orbit built at eps, N.
    const double eps = p.real("eps");
    const WindowConfig cfg{static_cast<int>(p.integer("N"))};
    const auto net = build_window_net(eps, cfg);
    const auto orbit = build_orbit(net, eps, cfg);
    std::vector<CPoint> net_pts, orbit_pts;
    for (const auto& q : net.points) net_pts.push_back(model_cpoint(q, 2 * cfg.N));
    for (const auto& v : orbit.log) orbit_pts.push_back(model_cpoint(orbit.orbit.shifted(static_cast<int>(v.time)), 2 * cfg.N));
    const auto transfer = density_transfer(orbit_pts, net_pts);
    r.witness({{"kind", "density_transfer"}, {"eps_P", transfer.eps_P}, {"eps_R", transfer.eps_R},
               {"bound_holds", transfer.bound_holds}});

    r.pass = id.pass && prod.pass && rejected && shift.pass && transfer.bound_holds;
    return r;
}

// ---------------------------------------------------------------------------
// Shift compatibility of ~_a on sampled pairs.

struct QuotientSample {
    MPoint x = MPoint::all_infinity();
    MPoint y = MPoint::all_infinity();
    std::string kind;
};

namespace detail {

inline MPoint constant_point(int m, double u, int half) {
    Word w;
    w.letters.assign(static_cast<std::size_t>(2 * half), Letter(m, 2));
    w.offset = half;
    return MPoint::from_word(w, XPoint::finite(m, u));
}

}  // namespace detail

// Equivalent pairs: identical points, top-class pairs (height 0 or the point
// at infinity), host/guest and guest/guest pairs of every modeled block at a
// common dyadic height. Windows have `half` letters on each side.
template <class Rng>
std::vector<QuotientSample> equivalent_pairs(const AParam& a, int count, int half, Rng& rng) {
    std::vector<QuotientSample> out;
    std::uniform_int_distribution<int> kind(0, 3), bundle(1, std::max(3, a.required_bundles())), grid(1, 1 << 20);
    while (static_cast<int>(out.size()) < count) {
        switch (kind(rng)) {
            case 0: {
                const int k = bundle(rng);
                const double u = static_cast<double>(grid(rng)) / (1 << 20);
                const MPoint x = MPoint::from_word(random_word(k, half, half, rng), XPoint::finite(k, u));
                out.push_back({x, x, "identical"});
                break;
            }
            case 1: {
                const int k = bundle(rng);
                const MPoint x = MPoint::from_word(random_word(k, half, half, rng), XPoint::finite(k, 0.0));
                MPoint y = MPoint::all_infinity();
                if (rng() % 2) {
                    const int k2 = bundle(rng);
                    y = MPoint::from_word(random_word(k2, half, half, rng), XPoint::finite(k2, 0.0));
                }
                out.push_back({x, y, "top"});
                break;
            }
            default: {
                if (a.size() == 0) break;
                std::uniform_int_distribution<int> block(1, a.size());
                const int k = block(rng);
                const int host = k * k + 2;
                std::uniform_int_distribution<int> gi(0, a.at(k));
                int i = gi(rng), j = gi(rng);
                if (i == j) j = (j + 1) % (a.at(k) + 1);
                // Height on the shorter arc's dyadic grid.
                const int g = host + std::max(i, j);
                const double ug = static_cast<double>(grid(rng)) / (1 << 20);
                const double tau = std::ldexp(ug, -(2 * g - 1));
                const int mx = host + i, my = host + j;
                const MPoint x = detail::constant_point(mx, std::ldexp(tau, 2 * mx - 1), half);
                const MPoint y = detail::constant_point(my, std::ldexp(tau, 2 * my - 1), half);
                out.push_back({x, y, (i == 0 || j == 0) ? "host_guest" : "guest_guest"});
                break;
            }
        }
    }
    return out;
}

struct QuotientResult {
    bool pass = true;
    int equivalent_checked = 0;
    int random_checked = 0;
    int m_classes_checked = 0;
    std::vector<std::string> failures;
};

inline QuotientResult quotient_experiment(const AParam& a, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    QuotientResult res;
    const int half = 4;
    for (const auto& s : equivalent_pairs(a, samples, half, rng)) {
        ++res.equivalent_checked;
        const bool ok = sim_a(s.x, s.y, a) && sim_a(s.x.shift(), s.y.shift(), a) && sim_a(s.x.unshift(), s.y.unshift(), a);
        if (!ok) {
            res.pass = false;
            res.failures.push_back("equivalent pair (" + s.kind + ") not preserved");
        }
    }
    // Converse: arbitrary pairs keep their status under the shift.
    std::uniform_int_distribution<int> bundle(1, std::max(3, a.required_bundles()));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<MPoint> pool;
    for (int i = 0; i < samples; ++i) {
        const int k = bundle(rng);
        const double u = (rng() % 4 == 0) ? 0.0 : unit(rng);
        if (rng() % 3 == 0 && k >= 3) {
            pool.push_back(detail::constant_point(k, u, half));
        } else {
            pool.push_back(MPoint::from_word(random_word(k, half, half, rng), XPoint::finite(k, u)));
        }
    }
    for (std::size_t i = 0; i + 1 < pool.size(); i += 2) {
        ++res.random_checked;
        const bool before = sim_a(pool[i], pool[i + 1], a);
        if (before != sim_a(pool[i].shift(), pool[i + 1].shift(), a) ||
            before != sim_a(pool[i].unshift(), pool[i + 1].unshift(), a)) {
            res.pass = false;
            res.failures.push_back("pair " + std::to_string(i) + " changes status under the shift");
        }
    }
    // sigma* fixes every M_k class.
    std::vector<MPoint> m_points;
    for (int k = 1; k <= a.size(); ++k) {
        for (int i = 0; i <= a.at(k); ++i) {
            const int m = k * k + 2 + i;
            for (double u : {0.25, 0.5, 1.0}) m_points.push_back(detail::constant_point(m, u, half));
        }
    }
    const ClassMap star = descend([](const MPoint& x) { return x.shift(); }, a, m_points);
    for (const auto& x : m_points) {
        ++res.m_classes_checked;
        const ClassKey before = class_of(x, a);
        const ClassKey after = star(x);
        if (before.kind != after.kind || before.block != after.block || before.height != after.height ||
            !sim_a(x, star.representative_image(x), a)) {
            res.pass = false;
            res.failures.push_back("M class moved by the induced shift");
        }
    }
    return res;
}

inline Report verify_quotient(const Params& p) {
    Report r{"quotient", p.to_json()};
    const AParam a = detail::a_param(p, "a");
    const auto q = quotient_experiment(a, static_cast<int>(p.integer("samples")), static_cast<std::uint64_t>(p.integer("seed")));
    r.pass = q.pass;
    r.witness({{"kind", "counts"},
               {"equivalent_pairs", q.equivalent_checked},
               {"random_pairs", q.random_checked},
               {"m_classes", q.m_classes_checked}});
    for (std::size_t i = 0; i < q.failures.size() && i < 10; ++i) r.witness({{"kind", "failure"}, {"detail", q.failures[i]}});
    return r;
}

// Ten fans with at most three modeled coordinates, including the plain fan.
inline std::vector<AParam> juma_corpus() {
    return {AParam(),          AParam({1}),       AParam({2}),       AParam({1, 3}),    AParam({2, 4}),
            AParam({1, 4}),    AParam({2, 3}),    AParam({1, 3, 5}), AParam({2, 4, 6}), AParam({1, 4, 5})};
}

inline Report verify_juma(const Params& p) {
    Report r{"juma", p.to_json()};
    const int depth = static_cast<int>(p.integer("depth"));
    const int kmax = static_cast<int>(p.integer("kmax"));
    OracleOptions opt;
    opt.relative_bits = static_cast<int>(p.integer("grid-bits"));
    r.pass = true;
    for (const auto& full : juma_corpus()) {
        if (full.size() > kmax) continue;
        const FanModel fan = build_fan(full, std::max(3, full.required_bundles()), depth);
        const auto agreement = compare_with_oracle(fan, oracle_legs(fan), opt);
        json counts = json::object();
        for (const auto& [value, n] : profile(fan).counts) counts[std::to_string(value)] = n;
        r.witness({{"kind", "fan"},
                   {"a", full.values()},
                   {"legs", fan.legs.size()},
                   {"legs_checked", agreement.legs_checked},
                   {"agree", agreement.agree},
                   {"profile", counts},
                   {"detail", agreement.detail}});
        r.pass = r.pass && agreement.agree;
    }
    return r;
}

inline Report verify_distinguish(const Params& p) {
    Report r{"distinguish", p.to_json()};
    const AParam a = detail::a_param(p, "a");
    const AParam b = detail::a_param(p, "b");
    const int kmax = std::min(a.size(), b.size());
    try {
        const auto c = distinguish(a, b, kmax, static_cast<int>(p.integer("depth")));
        r.pass = true;
        json pa = json::object(), pb = json::object();
        for (const auto& [v, n] : c.profile_a.counts) pa[std::to_string(v)] = n;
        for (const auto& [v, n] : c.profile_b.counts) pb[std::to_string(v)] = n;
        r.witness({{"kind", "certificate"}, {"k", c.k}, {"value", c.value}, {"realised_in", c.in_a ? "a" : "b"},
                   {"profile_a", pa}, {"profile_b", pb}});
    } catch (const NotDistinguished& e) {
        r.pass = false;
        r.witness({{"kind", "not_distinguished"}, {"detail", e.what()}});
    }
    return r;
}

inline Report verify_orbit(const Params& p) {
    Report r{"orbit", p.to_json()};
    const double eps = p.real("eps");
    const WindowConfig cfg{static_cast<int>(p.integer("N"))};
    const auto net = build_window_net(eps, cfg);
    const auto orbit = build_orbit(net, eps, cfg);
    const auto v = verify_orbit(orbit, net, eps, cfg);
    r.pass = v.pass;
    r.witness({{"kind", "coverage"},
               {"net_size", v.net_size},
               {"covered", v.covered},
               {"coverage", v.coverage},
               {"max_two_sided", v.max_two_sided},
               {"max_forward", v.max_forward},
               {"itinerary_length", orbit.itinerary_length},
               {"k_cut", net.k_cut}});
    return r;
}

struct VerifyEntry {
    std::map<std::string, ParamSpec> spec;
    std::function<Report(const Params&)> run;
};

inline const std::map<std::string, VerifyEntry>& verify_registry() {
    static const std::map<std::string, VerifyEntry> reg = [] {
        using Spec = std::map<std::string, ParamSpec>;
        auto i = [](std::string v) { return ParamSpec{Kind::Int, std::move(v)}; };
        auto d = [](std::string v) { return ParamSpec{Kind::Double, std::move(v)}; };
        auto l = [](std::string v) { return ParamSpec{Kind::IntList, std::move(v)}; };
        const std::string seed = std::to_string(default_seed);
        std::map<std::string, VerifyEntry> m;
        m["decomposition"] = {Spec{{"kmax", i("8")}, {"samples", i("1000")}}, verify_decomposition};
        m["diam"] = {Spec{{"kinterval", i("20")}, {"kmax", i("6")}, {"pairs", i("1000")}, {"N", i("8")}, {"seed", i(seed)}},
                     verify_diam};
        m["cantor"] = {Spec{{"kmax", i("5")}, {"length", i("12")}}, verify_cantor};
        m["impression"] = {Spec{{"seed-t", d("0.5")},
                                {"eps", d("0.0625")},
                                {"depth", i("40")},
                                {"m", i("12")},
                                {"n", i("12")},
                                {"k", i("8")},
                                {"kcut", i("8")}},
                           verify_impression};
        m["hlavna"] = {Spec{{"depth", i("8")}, {"heights", i("16")}, {"period", i("4")}, {"eps", d("0.125")}, {"N", i("2")}},
                       verify_hlavna};
        m["quotient"] = {Spec{{"a", l("1,4,5")}, {"samples", i("1000")}, {"seed", i(seed)}}, verify_quotient};
        m["juma"] = {Spec{{"kmax", i("3")}, {"depth", i("2")}, {"grid-bits", i("10")}}, verify_juma};
        m["distinguish"] = {Spec{{"a", l("1,4,5")}, {"b", l("2,4,5")}, {"depth", i("4")}}, verify_distinguish};
        m["orbit"] = {Spec{{"eps", d("0.125")}, {"N", i("2")}},
                      [](const Params& p) { return verify_orbit(p); }};
        return m;
    }();
    return reg;
}

// Runs a named verification with the given raw parameters; timings are
// recorded only on request so that reports stay byte-identical.
inline Report run_verify(const std::string& name, const std::map<std::string, std::string>& given, bool timings = false) {
    const auto& reg = verify_registry();
    auto it = reg.find(name);
    if (it == reg.end()) throw UsageError("unknown verification: " + name);
    const Params params(it->second.spec, given);
    detail::Stopwatch sw;
    Report r = it->second.run(params);
    if (timings) r.timings["total_seconds"] = sw.seconds();
    return r;
}

}  // namespace fanshift

#endif
