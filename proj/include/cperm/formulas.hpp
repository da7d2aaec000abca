#ifndef CPERM_FORMULAS_HPP
#define CPERM_FORMULAS_HPP

#include <stdexcept>
#include <vector>

#include "cperm/mpoly.hpp"
#include "cperm/numeric.hpp"
#include "cperm/series.hpp"

namespace cperm {

/*
 * Closed forms for the distribution of (fix, exc_a, csum) over the elements
 * of G_{r,s,n} whose m-th power is the identity:
 *
 *   H_{r,s,n}^{(m)}(u,v,w) = sum over those sigma of
 *                            u^fix(sigma) v^exc_a(sigma) w^csum(sigma).
 *
 * The EGF over n of the s = 1 case is an exponential of an explicit
 * polynomial in x (each cycle length d | m contributes one term), and the
 * general s is obtained by keeping the terms whose w-exponent is divisible
 * by s.  Every formula in this header is certified against the exhaustive
 * oracle by the verification suites.
 */

// Triangular table of Eulerian numbers A_{d,k} (permutations of [d] with
// k-1 excedances), built from
//   A_{d,k} = k A_{d-1,k} + (d-k+1) A_{d-1,k-1},   A_{0,0} = 1,
// with A_{d,k} = 0 outside 0 <= k <= d and for k = 0 < d.  A_{d-1,k} also
// counts the d-cycles of S_d with exactly k excedances.
class EulerianTable {
public:
    explicit EulerianTable(int dmax) : rows_(static_cast<std::size_t>(dmax) + 1) {
        if (dmax < 0) throw std::invalid_argument("EulerianTable: negative bound");
        rows_[0] = {BigInt(1)};
        for (int d = 1; d <= dmax; ++d) {
            rows_[d].assign(static_cast<std::size_t>(d) + 1, BigInt(0));
            for (int k = 1; k <= d; ++k)
                rows_[d][k] = k * at(d - 1, k) + (d - k + 1) * at(d - 1, k - 1);
        }
    }

    int dmax() const { return static_cast<int>(rows_.size()) - 1; }

    BigInt at(int d, int k) const {
        if (d < 0 || k < 0 || k > d) return 0;
        if (d > dmax()) throw std::invalid_argument("EulerianTable: d above table bound");
        if (k == 0) return d == 0 ? BigInt(1) : BigInt(0);
        return rows_[d][k];
    }

private:
    std::vector<std::vector<BigInt>> rows_;
};

inline BigInt eulerian(int d, int k) {
    if (d < 0 || k < 0 || k > d) return 0;
    return EulerianTable(d).at(d, k);
}

// U^{(i)}_{base,t}: the coefficient of x^t in
//   (x + x^2 + ... + x^(r-1))^i * (1 + x + ... + x^(r-1))^base.
// It counts colorings, with colors 0..r-1 and total t, of base+i symbols of
// which i are required to take a nonzero color.
//
// Two independent evaluation routes are provided.  u_coeff_expand multiplies
// the factors out; u_coeff_altsum evaluates the alternating double sum
//   sum_j (-1)^(i-j) C(i,j) sum_l (-1)^l C(base+j, l) C(base+j+t-lr-1, t-lr)
// obtained from (1-x^r)^(base+j) / (1-x)^(base+j).  They must agree
// everywhere, including the degenerate r = 1 case where the first factor is
// an empty sum; the verification grid pins this down.
inline BigInt u_coeff_expand(int r, int base, int i, int t) {
    if (r < 1 || base < 0 || i < 0) throw std::invalid_argument("u_coeff: bad parameters");
    if (t < 0) return 0;
    std::vector<BigInt> acc{BigInt(1)};
    auto mul_factor = [&](int lo) {
        // multiply acc by x^lo + ... + x^(r-1)
        std::vector<BigInt> out(acc.size() + r - 1, BigInt(0));
        for (std::size_t a = 0; a < acc.size(); ++a) {
            if (acc[a] == 0) continue;
            for (int e = lo; e <= r - 1; ++e) out[a + e] += acc[a];
        }
        acc = std::move(out);
    };
    for (int rep = 0; rep < i; ++rep) mul_factor(1);
    for (int rep = 0; rep < base; ++rep) mul_factor(0);
    return t < static_cast<int>(acc.size()) ? acc[t] : BigInt(0);
}

inline BigInt u_coeff_altsum(int r, int base, int i, int t) {
    if (r < 1 || base < 0 || i < 0) throw std::invalid_argument("u_coeff: bad parameters");
    if (t < 0) return 0;
    BigInt total = 0;
    for (int j = 0; j <= i; ++j) {
        BigInt inner = 0;
        for (int l = 0; l * r <= t; ++l) {
            BigInt term = binomial(base + j, l) *
                          binomial(base + j + t - l * r - 1, t - l * r);
            inner += (l % 2 == 0) ? term : -term;
        }
        BigInt outer = binomial(i, j) * inner;
        total += ((i - j) % 2 == 0) ? outer : -outer;
    }
    return total;
}

inline BigInt u_coeff(int r, int base, int i, int t) { return u_coeff_altsum(r, base, i, t); }

// Contribution of one cycle of length d (d | m, d >= 2) to the exponent of
// the EGF:
//   A_{m,d}(v,w) = sum_{k=1}^{d-1} A_{d-1,k} sum_{i=0}^{k} C(k,i) v^(k-i)
//                  sum_t U^{(i)}_{d-k,t} w^t,
// where t runs over 0 <= t <= d(r-1) with r | t*(m/d) (the color sum a
// cycle may carry while its m-th power stays trivial).
inline MPoly cycle_poly(int m, int d, int r) {
    if (d < 2 || m % d != 0)
        throw std::invalid_argument("cycle_poly: d must be a divisor of m with d >= 2");
    if (r < 1) throw std::invalid_argument("cycle_poly: r must be >= 1");
    const long long quot = m / d;
    EulerianTable table(d - 1);
    MPoly out;
    for (int k = 1; k <= d - 1; ++k) {
        const BigInt a = table.at(d - 1, k);
        if (a == 0) continue;
        for (int i = 0; i <= k; ++i) {
            const BigInt choose = binomial(k, i);
            for (int t = 0; t <= d * (r - 1); ++t) {
                if ((t * quot) % r != 0) continue;
                BigInt c = a * choose * u_coeff(r, d - k, i, t);
                if (c != 0) out.add_term({0, k - i, t}, BigRat(c));
            }
        }
    }
    return out;
}

// Colors a single fixed point may carry: sum of u*w^t over 0 <= t < r with
// r | t*m.
inline MPoly fixed_point_factor(int r, int m) {
    MPoly out;
    for (int t = 0; t < r; ++t)
        if ((static_cast<long long>(t) * m) % r == 0) out.add_term({1, 0, t}, 1);
    return out;
}

// EGF of H_{r,1,n}^{(m)} over n:  exp{ x * fixed_point_factor +
// sum_{d | m, d >= 2} x^d/d! * cycle_poly(m,d,r) }.
inline EgfSeries h_egf(int r, int m, int trunc) {
    if (r < 1 || m < 1) throw std::invalid_argument("h_egf: r and m must be >= 1");
    EgfSeries expo(trunc);
    if (trunc >= 1) expo.set_coeff(1, fixed_point_factor(r, m));
    for (int d = 2; d <= m && d <= trunc; ++d)
        if (m % d == 0)
            expo.set_coeff(d, cycle_poly(m, d, r).scaled(BigRat(1, factorial(d))));
    return expo.exp();
}

// lambda_{r,p}(w) = sum_{i=0}^{p-1} w^(ir/p) when p | r, else 1: the colors
// available to a fixed point when m = p is prime.
inline MPoly lambda_poly(int r, long long p) {
    if (!is_prime(p)) throw std::invalid_argument("lambda_poly: p must be prime");
    if (r < 1) throw std::invalid_argument("lambda_poly: r must be >= 1");
    if (r % p != 0) return MPoly::constant(1);
    MPoly out;
    for (long long i = 0; i < p; ++i)
        out.add_term({0, 0, static_cast<int>(i * (r / p))}, 1);
    return out;
}

// Prime-order specialization of h_egf: the only cycle length d >= 2
// dividing a prime p is p itself, and the color-sum condition collapses to
// t being a multiple of r.  Assembled independently of cycle_poly so the
// equality with h_egf is a real consistency check.
inline EgfSeries h_egf_prime(int r, long long p, int trunc) {
    if (!is_prime(p)) throw std::invalid_argument("h_egf_prime: p must be prime");
    if (r < 1) throw std::invalid_argument("h_egf_prime: r must be >= 1");
    EgfSeries expo(trunc);
    if (trunc >= 1) expo.set_coeff(1, MPoly::u() * lambda_poly(r, p));
    if (p <= trunc) {
        EulerianTable table(static_cast<int>(p) - 1);
        MPoly cycle_term;
        for (int k = 1; k <= p - 1; ++k) {
            const BigInt a = table.at(static_cast<int>(p) - 1, k);
            for (int i = 0; i <= k; ++i) {
                const BigInt choose = binomial(k, i);
                const int tmax = (static_cast<int>(p) - k + i) * (r - 1);
                for (int t = 0; t <= tmax; t += r) {
                    BigInt c = a * choose * u_coeff(r, static_cast<int>(p) - k, i, t);
                    if (c != 0) cycle_term.add_term({0, k - i, t}, BigRat(c));
                }
            }
        }
        expo.set_coeff(static_cast<int>(p),
                       cycle_term.scaled(BigRat(1, factorial(p))));
    }
    return expo.exp();
}

// H_{r,s,n}^{(m)}(u,v,w): extract the x^n coefficient of the r,1 EGF and
// keep the terms with w-exponent divisible by s.
inline MPoly h_poly(int r, int s, int m, int n, int trunc = -1) {
    if (r < 1 || s < 1 || r % s != 0)
        throw std::invalid_argument("h_poly: s must divide r");
    if (n < 0) throw std::invalid_argument("h_poly: n must be >= 0");
    if (trunc < n) trunc = n;
    return h_egf(r, m, trunc).extract(n).filtered_w_mod(s);
}

// Closed form of the m = 2 EGF for all s | r.  An involution is built from
// plain fixed points (u), fixed points colored r/2 when r is even (u w^(r/2)),
// and 2-cycles contributing v + (r-1) w^r each.  Writing E for
// exp(ux + x^2 (v + (r-1) w^r) / 2):
//   - r odd:                     every involution already has csum divisible
//                                by r, so the filter is vacuous: E.
//   - r even, s | r/2:           the filter is again vacuous:
//                                exp(ux (1 + w^(r/2)) + x^2 (...) / 2).
//   - r even, s does not divide r/2:  exactly the involutions with an even
//                                number of colored fixed points survive,
//                                which replaces exp(ux w^(r/2)) by its even
//                                part: E * cosh(ux w^(r/2)).
// The last two conditions are complementary: s | r always makes s | k*(r/2)
// equivalent to 2 | k when s does not divide r/2.
inline EgfSeries h2_closed(int r, int s, int trunc) {
    if (r < 1 || s < 1 || r % s != 0)
        throw std::invalid_argument("h2_closed: s must divide r");
    MPoly pair_term = MPoly::v() + MPoly::w(r).scaled(BigRat(r - 1));
    EgfSeries expo(trunc);
    const bool even = r % 2 == 0;
    const bool filter_vacuous = !even || (r / 2) % s == 0;
    if (trunc >= 1) {
        MPoly fp = MPoly::u();
        if (even && filter_vacuous) fp += MPoly::u() * MPoly::w(r / 2);
        expo.set_coeff(1, fp);
    }
    if (trunc >= 2) expo.set_coeff(2, pair_term.scaled(BigRat(1, 2)));
    EgfSeries result = expo.exp();
    if (even && !filter_vacuous) {
        EgfSeries cosh(trunc);
        for (int k = 0; 2 * k <= trunc; ++k)
            cosh.set_coeff(2 * k, MPoly::monomial({2 * k, 0, r * k},
                                                  BigRat(1, factorial(2 * k))));
        result = result * cosh;
    }
    return result;
}

inline void require_cosh_regime(int r, int s, const char* who) {
    if (r < 1 || s < 1 || r % s != 0)
        throw std::invalid_argument(std::string(who) + ": s must divide r");
    if (r % 2 != 0 || (r / 2) % s == 0)
        throw std::invalid_argument(std::string(who) +
                                    ": needs r even with s not dividing r/2; "
                                    "other regimes are covered by h_poly");
}

// Fully expanded H_{r,s,n}^{(2)} in the cosh regime:
//   sum over k1 + 2 k2 + 2 k3 = n of
//     n! / (k1! (2 k2)! k3! 2^k3) * u^(k1+2k2) w^(r k2) (v + (r-1) w^r)^k3,
// with k1 plain fixed points, 2 k2 colored fixed points and k3 2-cycles.
// The multinomial times 2^-k3 counts the ways to split [n] that way, so
// every expanded coefficient is a nonnegative integer; this is asserted.
inline MPoly h2_coefficient_formula(int r, int s, int n) {
    require_cosh_regime(r, s, "h2_coefficient_formula");
    if (n < 0) throw std::invalid_argument("h2_coefficient_formula: n must be >= 0");
    const BigInt nfact = factorial(n);
    MPoly out;
    for (int k3 = 0; 2 * k3 <= n; ++k3) {
        for (int k2 = 0; 2 * k2 + 2 * k3 <= n; ++k2) {
            const int k1 = n - 2 * k2 - 2 * k3;
            BigRat base(nfact, factorial(k1) * factorial(2 * k2) * factorial(k3) *
                                   int_pow(2, k3));
            BigInt ways = to_integer(base);
            for (int l = 0; l <= k3; ++l) {
                BigInt c = ways * binomial(k3, l) * int_pow(BigInt(r - 1), k3 - l);
                if (c != 0)
                    out.add_term({k1 + 2 * k2, l, r * k2 + r * (k3 - l)}, BigRat(c));
            }
        }
    }
    return out;
}

// Number of involutions in the cosh regime with exactly k absolute fixed
// points and exc_a = l.
inline BigInt count_fix_exca(int r, int s, int n, int k, int l) {
    require_cosh_regime(r, s, "count_fix_exca");
    if (n < 0) throw std::invalid_argument("count_fix_exca: n must be >= 0");
    if (k < 0 || l < 0 || k > n || (n - k) % 2 != 0) return 0;
    const int k3 = (n - k) / 2;
    if (l > k3) return 0;
    const BigInt nfact = factorial(n);
    BigInt total = 0;
    for (int k2 = 0; 2 * k2 <= k; ++k2) {
        const int k1 = k - 2 * k2;
        BigRat term(nfact * binomial(k3, l) * int_pow(BigInt(r - 1), k3 - l),
                    factorial(k1) * factorial(2 * k2) * factorial(k3) * int_pow(2, k3));
        total += to_integer(term);
    }
    return total;
}

// Number of involutions in the cosh regime with colored excedance number k.
// A 2-cycle contributes r to exc_clr whichever of its r colorings is taken
// (r * exc_a for the plain one, csum = r otherwise), and a colored fixed
// point pair contributes r as well, so k = r * (k2 + k3) and each 2-cycle
// carries a free factor of r colorings:
//   sum over k1 + 2 k2 + 2 k3 = n, r (k2 + k3) = k of
//     n! / (k1! (2 k2)! k3!) * (r/2)^k3.
inline BigInt count_excclr(int r, int s, int n, int k) {
    require_cosh_regime(r, s, "count_excclr");
    if (n < 0) throw std::invalid_argument("count_excclr: n must be >= 0");
    if (k < 0 || k % r != 0) return 0;
    const int q = k / r;
    if (2 * q > n) return 0;
    const int k1 = n - 2 * q;
    const BigInt nfact = factorial(n);
    BigInt total = 0;
    for (int k3 = 0; k3 <= q; ++k3) {
        const int k2 = q - k3;
        BigRat term(nfact * int_pow(BigInt(r), k3),
                    factorial(k1) * factorial(2 * k2) * factorial(k3) * int_pow(2, k3));
        total += to_integer(term);
    }
    return total;
}

// H_{r,1,n}^{(m)} straight from the recurrence obtained by tracking the
// cycle of the largest digit (no series exponential):
//   H_n = H_{n-1} * fixed_point_factor
//         + sum_{d | m, d >= 2} C(n-1, d-1) A_{m,d}(v,w) H_{n-d}.
inline MPoly h_recurrence(int r, int m, int n) {
    if (r < 1 || m < 1) throw std::invalid_argument("h_recurrence: r and m must be >= 1");
    if (n < 0) throw std::invalid_argument("h_recurrence: n must be >= 0");
    const MPoly fp = fixed_point_factor(r, m);
    std::vector<std::pair<int, MPoly>> cycle_terms;
    for (int d = 2; d <= m && d <= n; ++d)
        if (m % d == 0) cycle_terms.emplace_back(d, cycle_poly(m, d, r));
    std::vector<MPoly> h(static_cast<std::size_t>(n) + 1);
    h[0] = MPoly::constant(1);
    for (int j = 1; j <= n; ++j) {
        MPoly acc = h[j - 1] * fp;
        for (const auto& [d, poly] : cycle_terms)
            if (d <= j)
                acc += (h[j - d] * poly).scaled(BigRat(binomial(j - 1, d - 1)));
        h[j] = std::move(acc);
    }
    return h[n];
}

} // namespace cperm

#endif
