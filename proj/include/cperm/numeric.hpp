#ifndef CPERM_NUMERIC_HPP
#define CPERM_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cperm {

// All counting in this library is exact: coefficients and counts are
// arbitrary-precision integers, intermediate series coefficients are
// arbitrary-precision rationals.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline bool is_integer(const BigRat& q) { return denominator(q) == 1; }

// Requires an integral value; the name shows up in stack traces when a
// formula produced a fractional coefficient where an integer was due.
inline BigInt to_integer(const BigRat& q) {
    if (!is_integer(q))
        throw std::logic_error("cperm: expected integral value, got " +
                               numerator(q).str() + "/" + denominator(q).str());
    return numerator(q);
}

inline BigInt factorial(long long n) {
    BigInt f = 1;
    for (long long i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt int_pow(const BigInt& base, unsigned long long e) {
    BigInt acc = 1, b = base;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

// Binomial coefficient for arbitrary integer upper index (the alternating
// sums below need C(-1, 0) = 1 and friends): C(n, k) = n(n-1)...(n-k+1)/k!
// for k >= 0, and 0 for k < 0.  Each partial product of j consecutive
// integers is divisible by j!, so the running division is exact.
inline BigInt binomial(long long n, long long k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (n >= 0 && k > n) return 0;
    BigInt acc = 1;
    for (long long i = 0; i < k; ++i) {
        acc *= BigInt(n - i);
        acc /= (i + 1);
    }
    return acc;
}

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace cperm

#endif
