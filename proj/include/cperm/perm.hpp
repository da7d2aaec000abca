#ifndef CPERM_PERM_HPP
#define CPERM_PERM_HPP

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cperm {

/*
 * Elements of the wreath product G_{r,n} = Z_r wr S_n: pairs (z, tau) of a
 * color vector z in Z_r^n and a permutation tau of {1..n}.  In window form
 * position i carries the letter tau(i)^[z_i], a digit decorated with a
 * color.  The rn letters are totally ordered by the color order
 *
 *   1^[r-1] < ... < n^[r-1] < ... < 1^[1] < ... < n^[1] < 1^[0] < ... < n^[0]
 *
 * (higher colors first, digits ascending within a color, plain digits on
 * top).  All statistics below compare letters in this order.
 *
 * Internally positions and digits are 0-based; printing is 1-based.
 */
class ColoredPermutation {
public:
    // colors[i] = color at window position i; tau[i] = 0-based image of i.
    ColoredPermutation(int r, std::vector<int> colors, std::vector<int> tau)
        : r_(r), colors_(std::move(colors)), tau_(std::move(tau)) {
        if (r_ < 1) throw std::invalid_argument("ColoredPermutation: r must be >= 1");
        if (colors_.size() != tau_.size())
            throw std::invalid_argument("ColoredPermutation: size mismatch");
        std::vector<char> seen(tau_.size(), 0);
        for (std::size_t i = 0; i < tau_.size(); ++i) {
            if (colors_[i] < 0 || colors_[i] >= r_)
                throw std::invalid_argument("ColoredPermutation: color out of range");
            if (tau_[i] < 0 || tau_[i] >= static_cast<int>(tau_.size()) || seen[tau_[i]])
                throw std::invalid_argument("ColoredPermutation: tau is not a bijection");
            seen[tau_[i]] = 1;
        }
    }

    static ColoredPermutation identity(int r, int n) {
        std::vector<int> tau(n);
        std::iota(tau.begin(), tau.end(), 0);
        return ColoredPermutation(r, std::vector<int>(n, 0), std::move(tau), unchecked_tag{});
    }

    // Window notation, 1-based digits: {{digit, color}, ...}.
    static ColoredPermutation from_one_line(int r, const std::vector<std::pair<int, int>>& window) {
        std::vector<int> colors, tau;
        colors.reserve(window.size());
        tau.reserve(window.size());
        for (const auto& [digit, color] : window) {
            tau.push_back(digit - 1);
            colors.push_back(color);
        }
        return ColoredPermutation(r, std::move(colors), std::move(tau));
    }

    int r() const { return r_; }
    int n() const { return static_cast<int>(tau_.size()); }
    int color(int i) const { return colors_[i]; }
    int tau(int i) const { return tau_[i]; }
    const std::vector<int>& colors() const { return colors_; }
    const std::vector<int>& tau() const { return tau_; }

    bool is_identity() const {
        for (int i = 0; i < n(); ++i)
            if (colors_[i] != 0 || tau_[i] != i) return false;
        return true;
    }

    bool operator==(const ColoredPermutation&) const = default;

    // Lexicographic by tau one-line form, then by color vector; the order
    // the enumeration stream produces.
    bool operator<(const ColoredPermutation& o) const {
        if (tau_ != o.tau_) return tau_ < o.tau_;
        return colors_ < o.colors_;
    }

    // "3^[1] 1^[2] 2^[1] 4^[2]" for ((1,2,1,2),(3,1,2,4)) in G_{3,4}.
    std::string to_string() const {
        std::ostringstream os;
        for (int i = 0; i < n(); ++i) {
            if (i) os << ' ';
            os << tau_[i] + 1 << "^[" << colors_[i] << "]";
        }
        return os.str();
    }

    struct unchecked_tag {};
    ColoredPermutation(int r, std::vector<int> colors, std::vector<int> tau, unchecked_tag)
        : r_(r), colors_(std::move(colors)), tau_(std::move(tau)) {}

private:
    int r_;
    std::vector<int> colors_;
    std::vector<int> tau_;
};

// Statistics of one element: the exponent triple it contributes to the
// distribution polynomial u^fix v^exc_a w^csum.
struct StatTriple {
    int fix = 0;
    int exc_a = 0;
    int csum = 0;
    bool operator==(const StatTriple&) const = default;
};

// Parameters (r, s, n, m): the group G_{r,s,n} (s | r) restricted to
// elements with sigma^m = 1.
struct GroupSpec {
    int r = 1;
    int s = 1;
    int n = 0;
    int m = 1;

    GroupSpec(int r_, int s_, int n_, int m_) : r(r_), s(s_), n(n_), m(m_) {
        if (r < 1 || s < 1 || m < 1 || n < 0)
            throw std::invalid_argument("GroupSpec: parameters out of range");
        if (r % s != 0)
            throw std::invalid_argument("GroupSpec: s must divide r");
    }
};

// Group law of G_{r,n}:
//   (z, tau) . (z', tau') = ((z_i + z'_{tau^-1(i)})_i, tau o tau')
// with the color addition mod r.
inline ColoredPermutation compose(const ColoredPermutation& a, const ColoredPermutation& b) {
    if (a.r() != b.r() || a.n() != b.n())
        throw std::invalid_argument("compose: mismatched r or n");
    const int n = a.n();
    std::vector<int> a_inv(n);
    for (int i = 0; i < n; ++i) a_inv[a.tau(i)] = i;
    std::vector<int> colors(n), tau(n);
    for (int i = 0; i < n; ++i) {
        colors[i] = (a.color(i) + b.color(a_inv[i])) % a.r();
        tau[i] = a.tau(b.tau(i));
    }
    return ColoredPermutation(a.r(), std::move(colors), std::move(tau),
                              ColoredPermutation::unchecked_tag{});
}

inline ColoredPermutation power(const ColoredPermutation& a, long long m) {
    if (m < 0) throw std::invalid_argument("power: negative exponent");
    ColoredPermutation acc = ColoredPermutation::identity(a.r(), a.n());
    for (long long i = 0; i < m; ++i) acc = compose(acc, a);
    return acc;
}

inline int csum(const ColoredPermutation& a) {
    int total = 0;
    for (int i = 0; i < a.n(); ++i) total += a.color(i);
    return total;
}

inline int fix_count(const ColoredPermutation& a) {
    int total = 0;
    for (int i = 0; i < a.n(); ++i)
        if (a.tau(i) == i) ++total;
    return total;
}

// A-excedances: positions i in {1..n-1} whose image letter beats i in the
// color order.  Every colored letter is below every plain digit, so this
// means: the image is uncolored and tau(i) > i.  Returned 1-based.
inline std::vector<int> exc_a_set(const ColoredPermutation& a) {
    std::vector<int> set;
    for (int i = 0; i + 1 < a.n(); ++i)
        if (a.color(i) == 0 && a.tau(i) > i) set.push_back(i + 1);
    return set;
}

inline int exc_a(const ColoredPermutation& a) {
    return static_cast<int>(exc_a_set(a).size());
}

// Full excedance number of the extended bijection on all rn letters of the
// colored alphabet.  The element maps the letter i^[c] to tau(i)^[z_i + c];
// letters are compared in the color order.  Deliberately computed by
// iterating all rn letters, not via the r*exc_a + csum identity, which is
// checked against this elsewhere.
inline int exc_full(const ColoredPermutation& a) {
    const int r = a.r(), n = a.n();
    // (digit, color) letter comparison in the color order
    auto less = [](int d1, int c1, int d2, int c2) {
        if (c1 != c2) return c1 > c2;
        return d1 < d2;
    };
    int total = 0;
    for (int c = 0; c < r; ++c)
        for (int i = 0; i < n; ++i) {
            int image_digit = a.tau(i);
            int image_color = (a.color(i) + c) % r;
            if (less(i, c, image_digit, image_color)) ++total;
        }
    return total;
}

inline int exc_clr(const ColoredPermutation& a) { return a.r() * exc_a(a) + csum(a); }

inline StatTriple stats(const ColoredPermutation& a) {
    return StatTriple{fix_count(a), exc_a(a), csum(a)};
}

// Membership in the reflection subgroup G_{r,s,n}: color sum divisible by s.
inline bool is_member(const ColoredPermutation& a, int s) {
    if (s < 1 || a.r() % s != 0)
        throw std::invalid_argument("is_member: s must divide r");
    return csum(a) % s == 0;
}

// Cycle type of the underlying permutation, as a sorted multiset.
inline std::vector<int> cycle_lengths(const ColoredPermutation& a) {
    std::vector<int> lengths;
    std::vector<char> seen(a.n(), 0);
    for (int i = 0; i < a.n(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = a.tau(j)) {
            seen[j] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

// sigma^m = 1 iff every cycle of tau has length d dividing m and the cycle's
// color sum t satisfies r | t*(m/d): the d-th power of a colored d-cycle
// paints every symbol with the full cycle color sum.  O(n), no composing.
// Cross-checked exhaustively against literal power-and-compare in the tests.
inline bool order_divides(const ColoredPermutation& a, long long m) {
    if (m < 1) throw std::invalid_argument("order_divides: m must be >= 1");
    std::vector<char> seen(a.n(), 0);
    for (int i = 0; i < a.n(); ++i) {
        if (seen[i]) continue;
        long long d = 0, t = 0;
        for (int j = i; !seen[j]; j = a.tau(j)) {
            seen[j] = 1;
            ++d;
            t += a.color(j);
        }
        if (m % d != 0) return false;
        if ((t * (m / d)) % a.r() != 0) return false;
    }
    return true;
}

} // namespace cperm

#endif
