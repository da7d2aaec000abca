#ifndef CPERM_ORACLE_HPP
#define CPERM_ORACLE_HPP

#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "cperm/mpoly.hpp"
#include "cperm/perm.hpp"

namespace cperm {

// Ground truth by exhaustion: walk all of G_{r,n}, keep the elements of
// G_{r,s,n} with sigma^m = 1, and sum whatever is asked for.  Certification
// depends on the walk being exhaustive, so oversized requests are refused
// loudly instead of truncated.

struct EnumerationPlan {
    GroupSpec spec;
    long long element_cap = 5'000'000;

    explicit EnumerationPlan(GroupSpec s, long long cap = 5'000'000)
        : spec(s), element_cap(cap) {}
};

struct EnumerationCapError : std::runtime_error {
    BigInt required;
    explicit EnumerationCapError(const BigInt& req)
        : std::runtime_error("enumeration refused: |G_{r,n}| = " + req.str() +
                             " exceeds the element cap; rerun with a cap of at least " +
                             req.str()),
          required(req) {}
};

inline BigInt group_size(int r, int n) { return int_pow(BigInt(r), n) * factorial(n); }

// Yields every element of G_{r,n} that lies in G_{r,s,n} and satisfies
// sigma^m = 1, exactly once, ordered lexicographically by the one-line form
// of tau and then by the color vector.
inline void enumerate(const EnumerationPlan& plan,
                      const std::function<void(const ColoredPermutation&)>& yield) {
    const int r = plan.spec.r, s = plan.spec.s, n = plan.spec.n, m = plan.spec.m;
    const BigInt total = group_size(r, n);
    if (total > plan.element_cap) throw EnumerationCapError(total);

    std::vector<int> tau(n);
    std::iota(tau.begin(), tau.end(), 0);
    do {
        std::vector<int> colors(n, 0);
        while (true) {
            ColoredPermutation sigma(r, colors, tau, ColoredPermutation::unchecked_tag{});
            if (is_member(sigma, s) && order_divides(sigma, m)) yield(sigma);
            // odometer on the color vector, last digit fastest
            int i = n - 1;
            while (i >= 0 && colors[i] == r - 1) colors[i--] = 0;
            if (i < 0) break;
            ++colors[i];
        }
    } while (std::next_permutation(tau.begin(), tau.end()));
}

inline long long enumerate_count(const EnumerationPlan& plan) {
    long long count = 0;
    enumerate(plan, [&](const ColoredPermutation&) { ++count; });
    return count;
}

// The distribution polynomial sum over sigma of u^fix v^exc_a w^csum,
// summed over the enumerated set.
inline MPoly brute_h(const EnumerationPlan& plan) {
    MPoly h;
    enumerate(plan, [&](const ColoredPermutation& sigma) {
        StatTriple st = stats(sigma);
        h.add_term({st.fix, st.exc_a, st.csum}, 1);
    });
    return h;
}

inline MPoly brute_h(const GroupSpec& spec, long long cap = 5'000'000) {
    return brute_h(EnumerationPlan(spec, cap));
}

// Number of d-cycles of S_d with each classical excedance count.
inline std::map<int, long long> brute_cyclic_exc(int d) {
    if (d < 1 || d > 8) throw std::invalid_argument("brute_cyclic_exc: need 1 <= d <= 8");
    std::map<int, long long> by_exc;
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        // single cycle through all d symbols?
        int len = 1;
        for (int j = perm[0]; j != 0; j = perm[j]) ++len;
        if (len != d) continue;
        int exc = 0;
        for (int i = 0; i < d; ++i)
            if (perm[i] > i) ++exc;
        ++by_exc[exc];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return by_exc;
}

// Count of enumerated elements satisfying a predicate over the statistics
// triple and the colored excedance number.
inline long long brute_count(const EnumerationPlan& plan,
                             const std::function<bool(const StatTriple&, int)>& pred) {
    long long count = 0;
    enumerate(plan, [&](const ColoredPermutation& sigma) {
        if (pred(stats(sigma), exc_clr(sigma))) ++count;
    });
    return count;
}

} // namespace cperm

#endif
