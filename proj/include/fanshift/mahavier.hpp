#ifndef FANSHIFT_MAHAVIER_HPP
#define FANSHIFT_MAHAVIER_HPP

// Finite windows of points of the two-sided Mahavier product X_H, the shift,
// the truncated product metric, the product structure of the slices L_k and
// the model map into the union of C_k x [0, 2^-(2k-1)] plus (1, 0).

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fanshift/errors.hpp"
#include "fanshift/itinerary.hpp"
#include "fanshift/relations.hpp"
#include "fanshift/xspace.hpp"

namespace fanshift {

struct WindowConfig {
    int N = 8;
};

// A point of X_H known on a finite window of coordinates. The canonical data
// is the itinerary window and the base coordinate t0; the coordinate tuple is
// derived once at construction and shared between shifted copies.
class MPoint {
public:
    static MPoint all_infinity() { return MPoint(); }

    static MPoint from_word(const Word& w, const XPoint& t0) { return from_anchor(w, 0, t0); }

    // Builds the point whose coordinate with relative index j equals x.
    static MPoint from_anchor(const Word& w, int j, const XPoint& x) {
        if (!is_admissible(w)) throw DomainError("MPoint: word not admissible: " + w.to_string());
        if (x.is_infinite()) throw DomainError("MPoint: finite window anchored at infinity");
        const int n = static_cast<int>(w.letters.size());
        const int anchor = j + w.offset;
        if (anchor < 0 || anchor > n) throw IndexError("MPoint: anchor outside the window");
        auto storage = std::make_shared<Storage>();
        storage->letters = w.letters;
        storage->coords.assign(static_cast<std::size_t>(n) + 1, x);
        for (int i = anchor; i < n; ++i) {
            storage->coords[i + 1] = w.letters[i].piece().apply(storage->coords[i]);
        }
        for (int i = anchor - 1; i >= 0; --i) {
            storage->coords[i] = w.letters[i].piece().apply_inverse(storage->coords[i + 1]);
        }
        return MPoint(std::move(storage), w.offset);
    }

    bool is_all_infinity() const { return data_ == nullptr; }
    bool is_finite() const { return data_ != nullptr; }

    int first_coord() const { return is_finite() ? -base_ : std::numeric_limits<int>::min(); }
    int last_coord() const {
        return is_finite() ? static_cast<int>(data_->letters.size()) - base_ : std::numeric_limits<int>::max();
    }
    bool has_coord(int j) const { return is_all_infinity() || (j >= first_coord() && j <= last_coord()); }
    bool has_transition(int j) const { return is_all_infinity() || (j >= first_coord() && j < last_coord()); }
    bool covers(int n) const { return has_coord(-n) && has_coord(n); }

    XPoint coord(int j) const {
        if (is_all_infinity()) return XPoint::infinity();
        if (!has_coord(j)) {
            throw IndexError("MPoint: coordinate " + std::to_string(j) + " outside window [" +
                             std::to_string(first_coord()) + ", " + std::to_string(last_coord()) + "]");
        }
        return data_->coords[static_cast<std::size_t>(j + base_)];
    }

    XPoint t0() const { return coord(0); }

    // Letter governing coordinate j -> j+1.
    Letter letter(int j) const {
        if (is_all_infinity()) throw DomainError("MPoint: the point at infinity has no itinerary");
        if (!has_transition(j)) throw IndexError("MPoint: no letter at transition " + std::to_string(j));
        return data_->letters[static_cast<std::size_t>(j + base_)];
    }

    Word word() const {
        if (is_all_infinity()) throw DomainError("MPoint: the point at infinity has no itinerary");
        return Word{data_->letters, base_};
    }

    std::size_t window_letters() const { return is_finite() ? data_->letters.size() : 0; }

    int base_interval() const { return is_finite() ? t0().index() : 0; }

    // shift^n (n may be negative). The known window moves with the offset.
    MPoint shifted(int n = 1) const {
        if (is_all_infinity()) return *this;
        const int target = base_ + n;
        if (target < 0 || target > static_cast<int>(data_->letters.size())) {
            throw WindowExhausted("MPoint: shift by " + std::to_string(n) + " leaves the known window");
        }
        return MPoint(data_, target);
    }

    MPoint shift() const {
        if (is_finite() && base_ == static_cast<int>(data_->letters.size())) {
            throw WindowExhausted("MPoint: no transition to the right of coordinate 0");
        }
        return shifted(1);
    }

    MPoint unshift() const {
        if (is_finite() && base_ == 0) throw WindowExhausted("MPoint: no transition to the left of coordinate 0");
        return shifted(-1);
    }

    // Grows the window by one letter on the given side.
    MPoint extended(const Letter& l, Side side) const {
        if (is_all_infinity()) return *this;
        auto storage = std::make_shared<Storage>(*data_);
        int base = base_;
        if (side == Side::Right) {
            const XPoint last = storage->coords.back();
            if (l.domain() != last.index()) throw DomainError("MPoint: right extension does not chain");
            storage->letters.push_back(l);
            storage->coords.push_back(l.piece().apply(last));
        } else {
            const XPoint first = storage->coords.front();
            if (l.range() != first.index()) throw DomainError("MPoint: left extension does not chain");
            storage->letters.insert(storage->letters.begin(), l);
            storage->coords.insert(storage->coords.begin(), l.piece().apply_inverse(first));
            ++base;
        }
        return MPoint(std::move(storage), base);
    }

private:
    struct Storage {
        std::vector<Letter> letters;
        std::vector<XPoint> coords;  // coords.size() == letters.size() + 1
    };

    MPoint() = default;
    MPoint(std::shared_ptr<const Storage> data, int base) : data_(std::move(data)), base_(base) {}

    std::shared_ptr<const Storage> data_;
    int base_ = 0;
};

// Coordinates agree (under tolerance) and letters agree on the common window.
inline bool same_point(const MPoint& p, const MPoint& q, Tolerance tol = default_tolerance) {
    if (p.is_all_infinity() || q.is_all_infinity()) return p.is_all_infinity() && q.is_all_infinity();
    const int lo = std::max(p.first_coord(), q.first_coord());
    const int hi = std::min(p.last_coord(), q.last_coord());
    for (int j = lo; j <= hi; ++j) {
        if (!approx_equal(p.coord(j), q.coord(j), tol)) return false;
        if (j < hi && !(p.letter(j) == q.letter(j))) return false;
    }
    return true;
}

// Truncated product metric max_{|j| <= N} d(x_j, y_j) / 2^|j|. The omitted
// tail contributes at most 2^-(N+1).
inline double dist_window(const MPoint& p, const MPoint& q, const WindowConfig& cfg) {
    if (!p.covers(cfg.N) || !q.covers(cfg.N)) throw IndexError("dist_window: window does not cover [-N, N]");
    double best = 0.0;
    for (int j = -cfg.N; j <= cfg.N; ++j) {
        best = std::max(best, std::ldexp(dist(p.coord(j), q.coord(j)), -std::abs(j)));
    }
    return best;
}

// One-sided variant over coordinates 0..N, the metric of X_H^+.
inline double dist_window_forward(const MPoint& p, const MPoint& q, const WindowConfig& cfg) {
    if (!p.has_coord(cfg.N) || !q.has_coord(cfg.N)) throw IndexError("dist_window_forward: window too short");
    double best = 0.0;
    for (int j = 0; j <= cfg.N; ++j) best = std::max(best, std::ldexp(dist(p.coord(j), q.coord(j)), -j));
    return best;
}

inline constexpr double truncation_error_bound(const WindowConfig& cfg) { return 1.0 / double(2LL << cfg.N); }

// L_k ~ K_k x [0, 2^-(2k-1)] via t0 = 2^(2k-1) t + 2k - 2.
class ProductStructure {
public:
    explicit ProductStructure(int k) : k_(k) {
        if (k < 1) throw DomainError("ProductStructure: k must be >= 1");
    }

    int k() const { return k_; }
    double max_height() const { return interval_diameter(k_); }

    MPoint pack(const Word& w, double t) const {
        if (!(t >= 0.0 && t <= max_height())) {
            throw RangeError("pack: height " + std::to_string(t) + " outside [0, 2^-(2k-1)]");
        }
        if (!w.has_transition(0) || w.at(0).domain() != k_) {
            throw DomainError("pack: offset-0 letter does not start in I_k");
        }
        return MPoint::from_word(w, XPoint::finite(k_, std::ldexp(t, 2 * k_ - 1)));
    }

    std::pair<Word, double> unpack(const MPoint& p) const {
        if (p.is_all_infinity() || p.base_interval() != k_) throw DomainError("unpack: point not in L_k");
        return {p.word(), std::ldexp(p.t0().local(), -(2 * k_ - 1))};
    }

private:
    int k_;
};

inline ProductStructure product_structure(int k) { return ProductStructure(k); }

struct ModelPoint {
    CantorAddress address;  // empty for the point at infinity
    double c = 1.0;
    double tau = 0.0;
    int bundle = 0;  // 0 for the point at infinity
};

// Model map: a finite point of L_k goes to (address in C_k, height of its
// base coordinate), the point at infinity goes to (1, 0). depth is the number
// of letters encoded (negative: the whole window).
inline ModelPoint model_map(const MPoint& p, int depth = -1) {
    ModelPoint m;
    if (p.is_all_infinity()) return m;
    const int k = p.base_interval();
    m.bundle = k;
    m.address = address_in_bundle(p.word(), k, depth);
    m.c = m.address.value();
    m.tau = std::ldexp(p.t0().local(), -(2 * k - 1));
    return m;
}

// A uniformly random admissible window with `left` letters before and `right`
// letters from transition 0 on, starting in I_k.
template <class Rng>
Word random_word(int k, int left, int right, Rng& rng) {
    auto pick = [&](const std::vector<Letter>& v) {
        std::uniform_int_distribution<std::size_t> d(0, v.size() - 1);
        return v[d(rng)];
    };
    Word w;
    if (right > 0) {
        w.letters.push_back(pick(letters_with_domain(k)));
        for (int i = 1; i < right; ++i) w.letters.push_back(pick(letters_with_domain(w.letters.back().range())));
    }
    int front = k;
    if (!w.letters.empty()) front = w.letters.front().domain();
    std::vector<Letter> prefix;
    for (int i = 0; i < left; ++i) {
        prefix.push_back(pick(letters_with_range(front)));
        front = prefix.back().domain();
    }
    w.letters.insert(w.letters.begin(), prefix.rbegin(), prefix.rend());
    w.offset = left;
    return w;
}

}  // namespace fanshift

#endif
