#ifndef CPERM_SERIES_HPP
#define CPERM_SERIES_HPP

#include <stdexcept>
#include <vector>

#include "cperm/mpoly.hpp"

namespace cperm {

// Truncated exponential generating function in x with MPoly coefficients.
// Entry n holds [x^n], i.e. P_n / n! as an exact rational polynomial; the
// integer polynomial P_n is recovered by extract(n).
class EgfSeries {
public:
    explicit EgfSeries(int trunc) : coeffs_(static_cast<std::size_t>(trunc) + 1) {
        if (trunc < 0) throw std::invalid_argument("EgfSeries: negative truncation");
    }

    static EgfSeries one(int trunc) {
        EgfSeries s(trunc);
        s.coeffs_[0] = MPoly::constant(1);
        return s;
    }

    int trunc() const { return static_cast<int>(coeffs_.size()) - 1; }

    const MPoly& coeff(int n) const {
        check_index(n);
        return coeffs_[static_cast<std::size_t>(n)];
    }
    void set_coeff(int n, MPoly p) {
        check_index(n);
        coeffs_[static_cast<std::size_t>(n)] = std::move(p);
    }

    friend EgfSeries operator+(const EgfSeries& a, const EgfSeries& b) {
        a.check_same_trunc(b);
        EgfSeries out(a.trunc());
        for (int n = 0; n <= a.trunc(); ++n)
            out.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
        return out;
    }

    // Cauchy product, truncated.
    friend EgfSeries operator*(const EgfSeries& a, const EgfSeries& b) {
        a.check_same_trunc(b);
        EgfSeries out(a.trunc());
        for (int i = 0; i <= a.trunc(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (int j = 0; i + j <= a.trunc(); ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return out;
    }

    EgfSeries scaled(const BigRat& c) const {
        EgfSeries out(trunc());
        for (int n = 0; n <= trunc(); ++n) out.coeffs_[n] = coeffs_[n].scaled(c);
        return out;
    }

    EgfSeries derivative() const {
        if (trunc() == 0) throw std::invalid_argument("derivative: truncation 0");
        EgfSeries out(trunc() - 1);
        for (int n = 1; n <= trunc(); ++n)
            out.coeffs_[n - 1] = coeffs_[n].scaled(BigRat(n));
        return out;
    }

    // exp(f) for f with zero constant term, via the defining ODE
    // g' = f' g, g(0) = 1, solved coefficient by coefficient:
    //   n*g_n = sum_{j=1..n} j*f_j*g_{n-j}.
    EgfSeries exp() const {
        if (!coeffs_[0].is_zero())
            throw std::domain_error("series exp: nonzero constant term");
        EgfSeries g(trunc());
        g.coeffs_[0] = MPoly::constant(1);
        for (int n = 1; n <= trunc(); ++n) {
            MPoly acc;
            for (int j = 1; j <= n; ++j) {
                if (coeffs_[j].is_zero()) continue;
                acc += coeffs_[j].scaled(BigRat(j)) * g.coeffs_[n - j];
            }
            g.coeffs_[n] = acc.scaled(BigRat(1, n));
        }
        return g;
    }

    // n! * [x^n]; the result must have integer coefficients, anything else
    // means a formula upstream is broken.
    MPoly extract(int n) const {
        check_index(n);
        MPoly p = coeffs_[static_cast<std::size_t>(n)].scaled(BigRat(factorial(n)));
        if (!p.is_integral())
            throw std::logic_error("series extract: non-integer coefficient at x^" +
                                   std::to_string(n) + ": " + p.to_string());
        return p;
    }

    bool operator==(const EgfSeries&) const = default;

private:
    void check_index(int n) const {
        if (n < 0 || n > trunc())
            throw std::invalid_argument("EgfSeries: index above truncation");
    }
    void check_same_trunc(const EgfSeries& o) const {
        if (trunc() != o.trunc())
            throw std::invalid_argument("EgfSeries: truncation mismatch");
    }

    std::vector<MPoly> coeffs_;
};

inline EgfSeries series_mul(const EgfSeries& f, const EgfSeries& g) { return f * g; }
inline EgfSeries series_exp(const EgfSeries& f) { return f.exp(); }
inline MPoly series_extract(const EgfSeries& f, int n) { return f.extract(n); }

} // namespace cperm

#endif
