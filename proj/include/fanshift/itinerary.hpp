#ifndef FANSHIFT_ITINERARY_HPP
#define FANSHIFT_ITINERARY_HPP

// Symbolic layer: the alphabet of partial maps f_{l,j}, admissible words,
// cylinder enumeration and Cantor-set addresses for itineraries.
//
// f_{l,1}: I_l -> I_{l-1} (t-2), f_{l,2}: I_l -> I_l, f_{l,3}: I_l -> I_{l+1}.
// f_{1,2} is the cube root, f_{2,2} the square, f_{l,2} (l >= 3) the
// identity. f_{1,1} is identified with f_{1,2}.

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fanshift/errors.hpp"
#include "fanshift/relations.hpp"

namespace fanshift {

class Letter {
public:
    Letter(int ell, int j) : ell_(ell), j_(j) {
        if (ell < 1) throw DomainError("Letter: ell must be >= 1");
        if (j < 1 || j > 3) throw DomainError("Letter: j must be 1, 2 or 3");
        if (ell == 1 && j == 1) j_ = 2;
    }

    int ell() const { return ell_; }
    int j() const { return j_; }
    int domain() const { return ell_; }
    int range() const { return ell_ + j_ - 2; }

    PieceMap piece() const {
        switch (j_) {
            case 1: return PieceMap::down(ell_);
            case 3: return PieceMap::up(ell_);
            default:
                if (ell_ == 1) return PieceMap::cube_root();
                if (ell_ == 2) return PieceMap::square();
                return PieceMap::id(ell_);
        }
    }

    bool is_identity() const { return j_ == 2 && ell_ >= 3; }

    std::string to_string() const {
        return "f" + std::to_string(ell_) + "," + std::to_string(j_);
    }

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;

private:
    int ell_;
    int j_;
};

// Letters whose domain is I_k, sorted.
inline std::vector<Letter> letters_with_domain(int k) {
    if (k < 1) throw DomainError("letters_with_domain: k must be >= 1");
    if (k == 1) return {Letter(1, 2), Letter(1, 3)};
    return {Letter(k, 1), Letter(k, 2), Letter(k, 3)};
}

// Letters whose range is I_k, sorted.
inline std::vector<Letter> letters_with_range(int k) {
    if (k < 1) throw DomainError("letters_with_range: k must be >= 1");
    std::vector<Letter> out;
    if (k >= 2) out.emplace_back(k - 1, 3);
    out.emplace_back(k, 2);
    out.emplace_back(k + 1, 1);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool chains(const Letter& a, const Letter& b) { return a.range() == b.domain(); }

// A finite window of an itinerary. letters[offset] governs the transition
// from coordinate 0 to coordinate 1; letters[i] governs i-offset -> i-offset+1.
struct Word {
    std::vector<Letter> letters;
    int offset = 0;

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    // Relative transition indices covered: [first_transition, last_transition].
    int first_transition() const { return -offset; }
    int last_transition() const { return static_cast<int>(letters.size()) - 1 - offset; }

    bool has_transition(int j) const {
        return j >= first_transition() && j <= last_transition();
    }
    const Letter& at(int j) const {
        if (!has_transition(j)) throw IndexError("Word: no letter at transition " + std::to_string(j));
        return letters[static_cast<std::size_t>(j + offset)];
    }

    // Interval index of coordinate 0.
    int base_domain() const {
        if (offset < static_cast<int>(letters.size())) return letters[offset].domain();
        if (offset > 0) return letters[offset - 1].range();
        throw IndexError("Word: empty word has no base interval");
    }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < letters.size(); ++i) {
            if (i) s += " ";
            if (static_cast<int>(i) == offset) s += ";";
            s += letters[i].to_string();
        }
        return s + "]";
    }
};

inline bool is_admissible(const Word& w) {
    if (w.offset < 0 || w.offset > static_cast<int>(w.letters.size())) return false;
    for (std::size_t i = 0; i + 1 < w.letters.size(); ++i) {
        if (!chains(w.letters[i], w.letters[i + 1])) return false;
    }
    return true;
}

enum class Side { Left, Right };

inline std::vector<Letter> extensions(const Word& w, Side side) {
    if (w.empty()) throw DomainError("extensions: empty word");
    if (side == Side::Right) return letters_with_domain(w.letters.back().range());
    return letters_with_range(w.letters.front().domain());
}

// Number of admissible words of length n starting in I_k.
inline std::uint64_t count_words(int k, int n) {
    static thread_local std::map<std::pair<int, int>, std::uint64_t> memo;
    if (n == 0) return 1;
    const auto key = std::make_pair(k, n);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (const auto& l : letters_with_domain(k)) total += count_words(l.range(), n - 1);
    memo.emplace(key, total);
    return total;
}

inline constexpr std::uint64_t default_enumeration_cap = 1'000'000;

// All admissible words of length n (offset 0) whose first letter has domain k,
// in lexicographic order.
inline std::vector<Word> enumerate_words(int k, int n, std::uint64_t cap = default_enumeration_cap) {
    if (k < 1 || n < 1) throw DomainError("enumerate_words: need k >= 1 and n >= 1");
    const auto expected = count_words(k, n);
    if (expected > cap) {
        throw ResourceError("enumerate_words: " + std::to_string(expected) + " words exceed cap " +
                            std::to_string(cap));
    }
    std::vector<Word> out;
    out.reserve(expected);
    Word current;
    auto rec = [&](auto&& self, int domain) -> void {
        if (static_cast<int>(current.letters.size()) == n) {
            out.push_back(current);
            return;
        }
        for (const auto& l : letters_with_domain(domain)) {
            current.letters.push_back(l);
            self(self, l.range());
            current.letters.pop_back();
        }
    };
    rec(rec, k);
    return out;
}

struct CantorCertificate {
    bool pass = true;
    int k = 0;
    int max_length = 0;
    std::uint64_t words_checked = 0;
    int min_right_branching = 3;
    int min_left_branching = 3;
    bool counts_match_recurrence = true;
    std::string detail;
};

// Every admissible word of length <= n starting in I_k has at least two
// admissible extensions on each side, so no cylinder isolates a point.
inline CantorCertificate cantor_certificate(int k, int n) {
    if (k < 1 || n < 1) throw DomainError("cantor_certificate: need k >= 1 and n >= 1");
    CantorCertificate cert;
    cert.k = k;
    cert.max_length = n;
    std::vector<std::uint64_t> per_length(static_cast<std::size_t>(n) + 1, 0);
    Word current;
    const int left = static_cast<int>(letters_with_range(k).size());
    auto rec = [&](auto&& self, int domain) -> void {
        for (const auto& l : letters_with_domain(domain)) {
            current.letters.push_back(l);
            const int right = static_cast<int>(letters_with_domain(l.range()).size());
            cert.min_right_branching = std::min(cert.min_right_branching, right);
            cert.min_left_branching = std::min(cert.min_left_branching, left);
            ++cert.words_checked;
            ++per_length[current.letters.size()];
            if (static_cast<int>(current.letters.size()) < n) self(self, l.range());
            current.letters.pop_back();
        }
    };
    rec(rec, k);
    for (int len = 1; len <= n; ++len) {
        if (per_length[static_cast<std::size_t>(len)] != count_words(k, len)) {
            cert.counts_match_recurrence = false;
            cert.detail = "count mismatch at length " + std::to_string(len);
        }
    }
    cert.pass = cert.counts_match_recurrence && cert.min_right_branching >= 2 &&
                cert.min_left_branching >= 2;
    return cert;
}

// ---------------------------------------------------------------------------
// Cantor addresses: finite ternary words over {0, 2}.

struct CantorAddress {
    std::vector<std::uint8_t> digits;

    double value() const {
        double v = 0.0, scale = 1.0;
        for (auto d : digits) {
            scale /= 3.0;
            v += d * scale;
        }
        return v;
    }

    // Width of the cylinder of infinite continuations.
    double cylinder_width() const { return std::pow(3.0, -static_cast<double>(digits.size())); }

    bool is_prefix_of(const CantorAddress& other) const {
        return digits.size() <= other.digits.size() &&
               std::equal(digits.begin(), digits.end(), other.digits.begin());
    }

    std::string to_string() const {
        std::string s;
        for (auto d : digits) s += static_cast<char>('0' + d);
        return s;
    }

    friend bool operator==(const CantorAddress&, const CantorAddress&) = default;
    friend auto operator<=>(const CantorAddress&, const CantorAddress&) = default;
};

namespace detail {

inline void append_rank(CantorAddress& a, std::size_t rank, std::size_t choices) {
    if (choices == 2) {
        a.digits.push_back(rank == 0 ? 0 : 2);
    } else {
        // 0 -> 00, 1 -> 02, 2 -> 20: a prefix-free code.
        a.digits.push_back(rank == 2 ? 2 : 0);
        a.digits.push_back(rank == 1 ? 2 : 0);
    }
}

inline std::size_t rank_of(const std::vector<Letter>& choices, const Letter& l) {
    auto it = std::find(choices.begin(), choices.end(), l);
    if (it == choices.end()) throw DomainError("letter " + l.to_string() + " is not an admissible choice");
    return static_cast<std::size_t>(it - choices.begin());
}

}  // namespace detail

// Transition indices in encoding order: 0, 1, -1, 2, -2, ...
inline std::vector<int> interleaved_transitions(const Word& w) {
    std::vector<int> order;
    const int lo = w.first_transition();
    const int hi = w.last_transition();
    if (w.has_transition(0)) order.push_back(0);
    for (int d = 1; d <= std::max(hi, -lo); ++d) {
        if (d <= hi) order.push_back(d);
        if (-d >= lo) order.push_back(-d);
    }
    return order;
}

// Address of the itinerary window w in the Cantor set, relative to bundle k.
// Each letter is encoded by its rank among the admissible choices given the
// letters already encoded: two choices use one digit, three use two. Letters
// are encoded in the order 0, 1, -1, 2, -2, ..., so growing a window
// symmetrically (or a one-sided word on the right) only appends digits.
// depth limits the number of letters encoded; negative means all.
inline CantorAddress cantor_address(const Word& w, int k, int depth = -1) {
    if (!is_admissible(w)) throw DomainError("cantor_address: word not admissible");
    if (!w.has_transition(0)) throw DomainError("cantor_address: word has no letter at transition 0");
    if (w.at(0).domain() != k) throw DomainError("cantor_address: offset-0 letter not in bundle k");
    CantorAddress a;
    int used = 0;
    for (int j : interleaved_transitions(w)) {
        if (depth >= 0 && used >= depth) break;
        std::vector<Letter> choices;
        if (j == 0) {
            choices = letters_with_domain(k);
        } else if (j > 0) {
            choices = letters_with_domain(w.at(j - 1).range());
        } else {
            choices = letters_with_range(w.at(j + 1).domain());
        }
        detail::append_rank(a, detail::rank_of(choices, w.at(j)), choices.size());
        ++used;
    }
    return a;
}

// C_k = C n [c_k, d_k]: the points of C whose ternary expansion starts with
// k-1 twos followed by a zero. c_1 = 0, d_1 = 1/3, c_{k+1} = d_k + 3^-k,
// d_{k+1} = c_{k+1} + 3^-(k+1).
inline double bundle_left(int k) {
    double c = 0.0;
    for (int i = 1; i < k; ++i) c += 2.0 * std::pow(3.0, -i);
    return c;
}
inline double bundle_right(int k) { return bundle_left(k) + std::pow(3.0, -k); }

inline CantorAddress bundle_prefix(int k) {
    CantorAddress a;
    a.digits.assign(static_cast<std::size_t>(k - 1), 2);
    a.digits.push_back(0);
    return a;
}

// Address of a word's point in C_k (bundle prefix followed by the itinerary code).
inline CantorAddress address_in_bundle(const Word& w, int k, int depth = -1) {
    CantorAddress a = bundle_prefix(k);
    const auto code = cantor_address(w, k, depth);
    a.digits.insert(a.digits.end(), code.digits.begin(), code.digits.end());
    return a;
}

}  // namespace fanshift

#endif
