#ifndef CPERM_VERIFY_HPP
#define CPERM_VERIFY_HPP

#include <algorithm>
#include <functional>
#include <iterator>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cperm/formulas.hpp"
#include "cperm/oracle.hpp"
#include "cperm/perm.hpp"

namespace cperm {

// Verification grids: every closed form is replayed against the exhaustive
// oracle (or against an independent second route) cell by cell.  The CLI
// `verify` subcommand and the acceptance suite both run these.

struct CellResult {
    std::string cell;
    bool pass = true;
    std::string detail;
};

namespace detail {

inline void report(std::vector<CellResult>& out, const std::string& cell, bool ok,
                   const std::string& why = "") {
    out.push_back({cell, ok, ok ? "" : why});
}

inline std::string poly_pair(const MPoly& got, const MPoly& want) {
    return "got " + got.to_string() + " expected " + want.to_string();
}

inline ColoredPermutation random_element(int r, int n, std::mt19937& rng) {
    std::vector<int> tau(n);
    std::iota(tau.begin(), tau.end(), 0);
    std::shuffle(tau.begin(), tau.end(), rng);
    std::vector<int> colors(n);
    std::uniform_int_distribution<int> color(0, r - 1);
    for (auto& c : colors) c = color(rng);
    return ColoredPermutation(r, std::move(colors), std::move(tau),
                              ColoredPermutation::unchecked_tag{});
}

} // namespace detail

// Walk all of G_{r,n}: an exponent divisible by every element order makes
// the order filter vacuous (cycle lengths divide lcm(1..n), color sums need
// the extra factor r).
inline void for_each_group_element(int r, int n,
                                   const std::function<void(const ColoredPermutation&)>& fn) {
    long long m = 1;
    for (int i = 2; i <= n; ++i) m = std::lcm<long long>(m, i);
    m *= r;
    enumerate(EnumerationPlan(GroupSpec(r, 1, n, static_cast<int>(m)), 1'000'000'000), fn);
}

// Group axioms on random triples and the csum homomorphism.
inline std::vector<CellResult> run_axiom_suite(int rmax = 4, int nmax = 5,
                                               int trials = 120,
                                               unsigned seed = 20240801u) {
    std::vector<CellResult> out;
    std::mt19937 rng(seed);

    for (int r = 1; r <= rmax; ++r)
        for (int n = 0; n <= nmax; ++n) {
            std::ostringstream cell;
            cell << "axioms r=" << r << " n=" << n;
            bool ok = true;
            std::string why;
            for (int trial = 0; trial < trials && ok; ++trial) {
                auto a = detail::random_element(r, n, rng);
                auto b = detail::random_element(r, n, rng);
                auto c = detail::random_element(r, n, rng);
                if (compose(compose(a, b), c) != compose(a, compose(b, c))) {
                    ok = false;
                    why = "associativity fails at " + a.to_string() + " | " +
                          b.to_string() + " | " + c.to_string();
                    break;
                }
                // underlying permutation of the product is the composed tau
                auto ab = compose(a, b);
                for (int i = 0; i < n; ++i)
                    if (ab.tau(i) != a.tau(b.tau(i))) { ok = false; why = "tau of product"; }
                if ((csum(a) + csum(b)) % r != csum(ab) % r) {
                    ok = false;
                    why = "csum homomorphism fails at " + a.to_string() + " | " + b.to_string();
                }
                // inverse via order search
                int order = 1;
                auto p = a;
                while (!p.is_identity()) { p = compose(p, a); ++order; }
                if (!compose(a, power(a, order - 1)).is_identity()) {
                    ok = false;
                    why = "inverse via power(order-1) fails at " + a.to_string();
                }
            }
            detail::report(out, cell.str(), ok, why);
        }
    return out;
}

// Color-order identity exc = r*exc_a + csum for every element, exhaustively,
// plus Exc_A contained in the classical excedance set of |sigma|.
inline std::vector<CellResult> run_statistic_identity_suite(int rmax = 3, int nmax = 4) {
    std::vector<CellResult> out;
    for (int r = 1; r <= rmax; ++r)
        for (int n = 0; n <= nmax; ++n) {
            std::ostringstream cell;
            cell << "exc-identity r=" << r << " n=" << n;
            bool ok = true;
            std::string why;
            for_each_group_element(r, n, [&](const ColoredPermutation& sigma) {
                if (!ok) return;
                if (exc_full(sigma) != exc_clr(sigma)) {
                    ok = false;
                    why = "exc(sigma) != r*exc_a + csum at " + sigma.to_string();
                }
                for (int i : exc_a_set(sigma))
                    if (sigma.tau(i - 1) <= i - 1) {
                        ok = false;
                        why = "A-excedance outside Exc(|sigma|) at " + sigma.to_string();
                    }
            });
            detail::report(out, cell.str(), ok, why);
        }
    return out;
}

// order_divides against literal power-and-compare, exhaustively.
inline std::vector<CellResult> run_order_divides_suite(int rmax = 3, int nmax = 4,
                                                       int mmax = 6) {
    std::vector<CellResult> out;
    for (int r = 1; r <= rmax; ++r)
        for (int n = 0; n <= nmax; ++n) {
            std::ostringstream cell;
            cell << "order-divides r=" << r << " n=" << n;
            bool ok = true;
            std::string why;
            for_each_group_element(r, n, [&](const ColoredPermutation& sigma) {
                if (!ok) return;
                for (int m = 1; m <= mmax; ++m)
                    if (order_divides(sigma, m) != power(sigma, m).is_identity()) {
                        ok = false;
                        why = "order_divides mismatch at " + sigma.to_string() +
                              " m=" + std::to_string(m);
                    }
            });
            detail::report(out, cell.str(), ok, why);
        }
    return out;
}

// The worked one-element anchors.
inline std::vector<CellResult> run_anchor_suite() {
    std::vector<CellResult> out;
    {
        auto star = ColoredPermutation::from_one_line(3, {{2, 0}, {1, 1}, {3, 2}});
        bool ok = exc_full(star) == 6 && csum(star) == 3 && exc_a(star) == 1 &&
                  exc_clr(star) == 6;
        detail::report(out, "anchor star-element", ok,
                       "expected exc=6 csum=3 exc_a=1 on " + star.to_string());
    }
    {
        auto a = ColoredPermutation::from_one_line(3, {{1, 1}, {3, 2}, {2, 0}, {4, 2}});
        auto b = ColoredPermutation::from_one_line(3, {{1, 1}, {3, 2}, {4, 0}, {2, 2}});
        bool ok = csum(a) == 5 && fix_count(a) == 2 && exc_a(a) == 0 &&
                  cycle_lengths(a) == std::vector<int>{1, 1, 2} &&
                  csum(b) == 5 && exc_a_set(b) == std::vector<int>{3} &&
                  exc_clr(b) == 8;
        detail::report(out, "anchor csum/exc_a examples", ok,
                       "csum=5/fix=2 on " + a.to_string() + ", Exc_A={3} on " +
                           b.to_string());
    }
    return out;
}

// Everything perm_core: axioms, statistic identity, order cross-check,
// anchors.
inline std::vector<CellResult> run_group_suite(int rmax = 4, int nmax = 5,
                                               int trials = 120,
                                               unsigned seed = 20240801u) {
    std::vector<CellResult> out = run_axiom_suite(rmax, nmax, trials, seed);
    auto append = [&out](std::vector<CellResult> cells) {
        out.insert(out.end(), std::make_move_iterator(cells.begin()),
                   std::make_move_iterator(cells.end()));
    };
    append(run_statistic_identity_suite(std::min(rmax, 3), std::min(nmax, 4)));
    append(run_order_divides_suite(std::min(rmax, 3), std::min(nmax, 4)));
    append(run_anchor_suite());
    return out;
}

// d-cycles of S_d with k excedances are counted by the Eulerian number
// A_{d-1,k}; also the table symmetry A_{d,k} = A_{d,d+1-k} and row sums d!.
inline std::vector<CellResult> run_euler_suite(int dmax = 7) {
    std::vector<CellResult> out;
    EulerianTable table(std::max(dmax, 10));
    for (int d = 1; d <= dmax; ++d) {
        std::ostringstream cell;
        cell << "cyclic-exc d=" << d;
        auto counted = brute_cyclic_exc(d);
        bool ok = true;
        std::string why;
        for (int k = 0; k <= d; ++k) {
            BigInt want = table.at(d - 1, k);
            BigInt got = counted.count(k) ? BigInt(counted.at(k)) : BigInt(0);
            if (want != got) {
                ok = false;
                why = "k=" + std::to_string(k) + " got " + got.str() + " expected " +
                      want.str();
                break;
            }
        }
        for (const auto& [k, c] : counted)
            if (k > d) { ok = false; why = "excedance count above d"; }
        detail::report(out, cell.str(), ok, why);
    }
    {
        bool ok = true;
        std::string why;
        for (int d = 1; d <= 10 && ok; ++d) {
            BigInt row_sum = 0;
            for (int k = 1; k <= d; ++k) {
                row_sum += table.at(d, k);
                if (table.at(d, k) != table.at(d, d + 1 - k)) {
                    ok = false;
                    why = "symmetry fails at d=" + std::to_string(d);
                }
            }
            if (row_sum != factorial(d)) {
                ok = false;
                why = "row sum != d! at d=" + std::to_string(d);
            }
        }
        detail::report(out, "eulerian table d<=10", ok, why);
    }
    return out;
}

// The alternating double sum for U^{(i)}_{base,t} against literal expansion
// of the defining product, including the degenerate r = 1 case.
inline std::vector<CellResult> run_ucoeff_suite(int rmax = 5, int basemax = 5,
                                                int imax = 5, int tmax = 25) {
    std::vector<CellResult> out;
    for (int r = 1; r <= rmax; ++r)
        for (int base = 0; base <= basemax; ++base) {
            std::ostringstream cell;
            cell << "ucoeff r=" << r << " base=" << base;
            bool ok = true;
            std::string why;
            for (int i = 0; i <= imax && ok; ++i)
                for (int t = 0; t <= tmax && ok; ++t) {
                    BigInt direct = u_coeff_expand(r, base, i, t);
                    BigInt alt = u_coeff_altsum(r, base, i, t);
                    if (direct != alt) {
                        ok = false;
                        why = "i=" + std::to_string(i) + " t=" + std::to_string(t) +
                              " expand " + direct.str() + " altsum " + alt.str();
                    }
                }
            detail::report(out, cell.str(), ok, why);
        }
    return out;
}

// The main equivalence: theorem-side h_poly against the exhaustive oracle,
// for every (r, s, m, n) in the grid that fits under the element cap.
inline std::vector<CellResult> run_theorem_suite(int rmax = 4,
                                                 const std::vector<int>& mset = {1, 2, 3, 4, 6},
                                                 int nmax = 6,
                                                 long long cap = 5'000'000) {
    std::vector<CellResult> out;
    for (int r = 1; r <= rmax; ++r)
        for (int s = 1; s <= r; ++s) {
            if (r % s != 0) continue;
            for (int m : mset)
                for (int n = 0; n <= nmax; ++n) {
                    std::ostringstream cell;
                    cell << "theorem r=" << r << " s=" << s << " m=" << m << " n=" << n;
                    if (group_size(r, n) > cap) {
                        detail::report(out, cell.str() + " (skipped: above cap)", true);
                        continue;
                    }
                    try {
                        MPoly formula = h_poly(r, s, m, n);
                        MPoly oracle = brute_h(GroupSpec(r, s, n, m), cap);
                        bool ok = formula == oracle && formula.is_nonneg_integral();
                        detail::report(out, cell.str(), ok,
                                       detail::poly_pair(formula, oracle));
                    } catch (const std::exception& e) {
                        detail::report(out, cell.str(), false, e.what());
                    }
                }
        }
    return out;
}

// Prime-m specialization must reproduce the general EGF coefficient for
// coefficient.
inline std::vector<CellResult> run_prime_suite(const std::vector<long long>& pset = {2, 3, 5},
                                               int rmax = 6, int trunc = 8) {
    std::vector<CellResult> out;
    for (long long p : pset)
        for (int r = 1; r <= rmax; ++r) {
            std::ostringstream cell;
            cell << "prime p=" << p << " r=" << r;
            bool ok = true;
            std::string why;
            try {
                EgfSeries general = h_egf(r, static_cast<int>(p), trunc);
                EgfSeries special = h_egf_prime(r, p, trunc);
                ok = general == special;
                if (!ok)
                    for (int n = 0; n <= trunc; ++n)
                        if (general.coeff(n) != special.coeff(n)) {
                            why = "first mismatch at x^" + std::to_string(n);
                            break;
                        }
            } catch (const std::exception& e) {
                ok = false;
                why = e.what();
            }
            detail::report(out, cell.str(), ok, why);
        }
    return out;
}

// The proof-side recurrence against the exponential closed form.
inline std::vector<CellResult> run_recurrence_suite(int rmax = 4,
                                                    const std::vector<int>& mset = {2, 3, 4, 6},
                                                    int nmax = 7) {
    std::vector<CellResult> out;
    for (int r = 1; r <= rmax; ++r)
        for (int m : mset) {
            std::ostringstream cell;
            cell << "recurrence r=" << r << " m=" << m;
            bool ok = true;
            std::string why;
            try {
                EgfSeries series = h_egf(r, m, nmax);
                for (int n = 0; n <= nmax && ok; ++n) {
                    MPoly rec = h_recurrence(r, m, n);
                    MPoly ext = series.extract(n);
                    if (rec != ext) {
                        ok = false;
                        why = "n=" + std::to_string(n) + ": " + detail::poly_pair(rec, ext);
                    }
                }
            } catch (const std::exception& e) {
                ok = false;
                why = e.what();
            }
            detail::report(out, cell.str(), ok, why);
        }
    return out;
}

// m = 2 closed form (three-case) against the filtered theorem extraction.
inline std::vector<CellResult> run_m2_suite(int rmax = 6, int nmax = 6) {
    std::vector<CellResult> out;
    for (int r = 1; r <= rmax; ++r)
        for (int s = 1; s <= r; ++s) {
            if (r % s != 0) continue;
            std::ostringstream cell;
            cell << "m2-closed r=" << r << " s=" << s;
            bool ok = true;
            std::string why;
            try {
                EgfSeries closed = h2_closed(r, s, nmax);
                for (int n = 0; n <= nmax && ok; ++n) {
                    MPoly lhs = closed.extract(n);
                    MPoly rhs = h_poly(r, s, 2, n);
                    if (lhs != rhs || !lhs.is_nonneg_integral()) {
                        ok = false;
                        why = "n=" + std::to_string(n) + ": " + detail::poly_pair(lhs, rhs);
                    }
                }
            } catch (const std::exception& e) {
                ok = false;
                why = e.what();
            }
            detail::report(out, cell.str(), ok, why);
        }
    return out;
}

// The three explicit m = 2 corollaries in the cosh regime (r even, s | r,
// s not dividing r/2): the expanded polynomial, the fixed-point/excedance
// counter and the colored-excedance counter, each against both the closed
// form and the oracle.
inline std::vector<CellResult> run_corollaries_suite(int rmax = 6, int nmax = 6,
                                                     long long cap = 40'000'000) {
    std::vector<CellResult> out;
    for (int r = 2; r <= rmax; r += 2) {
        std::vector<int> regime;
        for (int s = 1; s <= r; ++s)
            if (r % s == 0 && (r / 2) % s != 0) regime.push_back(s);
        if (regime.empty()) continue;
        for (int n = 0; n <= nmax; ++n) {
            if (group_size(r, n) > cap) {
                std::ostringstream cell;
                cell << "corollaries r=" << r << " n=" << n;
                detail::report(out, cell.str() + " (skipped: above cap)", true);
                continue;
            }
            // one shared pass over the involutions of G_{r,n}
            std::map<int, MPoly> oracle_poly;
            std::map<int, std::map<std::pair<int, int>, BigInt>> fix_exca;
            std::map<int, std::map<int, BigInt>> excclr;
            enumerate(EnumerationPlan(GroupSpec(r, 1, n, 2), cap),
                      [&](const ColoredPermutation& sigma) {
                          StatTriple st = stats(sigma);
                          int clr = exc_clr(sigma);
                          for (int s : regime) {
                              if (st.csum % s != 0) continue;
                              oracle_poly[s].add_term({st.fix, st.exc_a, st.csum}, 1);
                              fix_exca[s][{st.fix, st.exc_a}] += 1;
                              excclr[s][clr] += 1;
                          }
                      });
            for (int s : regime) {
                std::ostringstream cell;
                cell << "corollaries r=" << r << " s=" << s << " n=" << n;
                bool ok = true;
                std::string why;
                try {
                MPoly expanded = h2_coefficient_formula(r, s, n);
                MPoly closed = h2_closed(r, s, n).extract(n);
                MPoly oracle = oracle_poly[s];
                if (expanded != closed) {
                    ok = false;
                    why = "expansion vs closed: " + detail::poly_pair(expanded, closed);
                } else if (expanded != oracle) {
                    ok = false;
                    why = "expansion vs oracle: " + detail::poly_pair(expanded, oracle);
                }
                for (int k = 0; k <= n + 2 && ok; ++k)
                    for (int l = 0; l <= n / 2 + 2 && ok; ++l) {
                        BigInt formula = count_fix_exca(r, s, n, k, l);
                        auto it = fix_exca[s].find({k, l});
                        BigInt truth = it == fix_exca[s].end() ? BigInt(0) : it->second;
                        if (formula != truth) {
                            ok = false;
                            why = "count_fix_exca(k=" + std::to_string(k) +
                                  ",l=" + std::to_string(l) + ") got " + formula.str() +
                                  " oracle " + truth.str();
                        }
                    }
                for (int k = 0; k <= r * n + r && ok; ++k) {
                    BigInt formula = count_excclr(r, s, n, k);
                    auto it = excclr[s].find(k);
                    BigInt truth = it == excclr[s].end() ? BigInt(0) : it->second;
                    if (formula != truth) {
                        ok = false;
                        why = "count_excclr(k=" + std::to_string(k) + ") got " +
                              formula.str() + " oracle " + truth.str();
                    }
                }
                } catch (const std::exception& e) {
                    ok = false;
                    why = e.what();
                }
                detail::report(out, cell.str(), ok, why);
            }
        }
    }
    return out;
}

// Exactness of the rational pipeline: every extracted polynomial across the
// formula grids has nonnegative integer coefficients.
inline std::vector<CellResult> run_integrality_suite(int nmax = 6, int trunc = 8) {
    std::vector<CellResult> out;
    for (int r = 1; r <= 4; ++r)
        for (int m : {1, 2, 3, 4, 6}) {
            std::ostringstream cell;
            cell << "integrality theorem r=" << r << " m=" << m;
            bool ok = true;
            std::string why;
            try {
                for (int s = 1; s <= r && ok; ++s) {
                    if (r % s != 0) continue;
                    for (int n = 0; n <= nmax && ok; ++n) {
                        MPoly h = h_poly(r, s, m, n); // extract() rejects fractions
                        if (!h.is_nonneg_integral()) {
                            ok = false;
                            why = "negative coefficient at s=" + std::to_string(s) +
                                  " n=" + std::to_string(n);
                        }
                    }
                }
            } catch (const std::exception& e) {
                ok = false;
                why = e.what();
            }
            detail::report(out, cell.str(), ok, why);
        }
    for (long long p : {2, 3, 5}) {
        std::ostringstream cell;
        cell << "integrality prime p=" << p;
        bool ok = true;
        std::string why;
        try {
            for (int r = 1; r <= 6 && ok; ++r) {
                EgfSeries series = h_egf_prime(r, p, trunc);
                for (int n = 0; n <= trunc && ok; ++n)
                    if (!series.extract(n).is_nonneg_integral()) {
                        ok = false;
                        why = "r=" + std::to_string(r) + " n=" + std::to_string(n);
                    }
            }
        } catch (const std::exception& e) {
            ok = false;
            why = e.what();
        }
        detail::report(out, cell.str(), ok, why);
    }
    {
        bool ok = true;
        std::string why;
        try {
            for (int r = 1; r <= 6 && ok; ++r)
                for (int s = 1; s <= r && ok; ++s) {
                    if (r % s != 0) continue;
                    EgfSeries closed = h2_closed(r, s, nmax);
                    for (int n = 0; n <= nmax && ok; ++n)
                        if (!closed.extract(n).is_nonneg_integral()) {
                            ok = false;
                            why = "r=" + std::to_string(r) + " s=" + std::to_string(s) +
                                  " n=" + std::to_string(n);
                        }
                }
        } catch (const std::exception& e) {
            ok = false;
            why = e.what();
        }
        detail::report(out, "integrality m2-closed", ok, why);
    }
    return out;
}

} // namespace cperm

#endif
