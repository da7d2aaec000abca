#ifndef CPERM_MPOLY_HPP
#define CPERM_MPOLY_HPP

#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "cperm/numeric.hpp"

namespace cperm {

// Exponent triple of a monomial u^u_exp * v^v_exp * w^w_exp.
// Ordered lexicographically by (u_exp, v_exp, w_exp); this order is the
// canonical term order used for iteration, printing and serialization.
struct Monomial {
    int u_exp = 0;
    int v_exp = 0;
    int w_exp = 0;
    auto operator<=>(const Monomial&) const = default;
};

// Sparse polynomial in u, v, w over exact rationals.  Zero coefficients are
// never stored, so equality is plain map equality.
class MPoly {
public:
    using TermMap = std::map<Monomial, BigRat>;

    MPoly() = default;

    static MPoly constant(const BigRat& c) {
        MPoly p;
        if (c != 0) p.terms_.emplace(Monomial{}, c);
        return p;
    }
    static MPoly constant(long long c) { return constant(BigRat(c)); }

    static MPoly monomial(const Monomial& m, const BigRat& c) {
        MPoly p;
        if (c != 0) p.terms_.emplace(m, c);
        return p;
    }

    static MPoly u(int e = 1) { return monomial({e, 0, 0}, 1); }
    static MPoly v(int e = 1) { return monomial({0, e, 0}, 1); }
    static MPoly w(int e = 1) { return monomial({0, 0, e}, 1); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    BigRat coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? BigRat(0) : it->second;
    }

    MPoly& operator+=(const MPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator-(const MPoly& a) { return MPoly() - a; }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                out.add_term({ma.u_exp + mb.u_exp, ma.v_exp + mb.v_exp,
                              ma.w_exp + mb.w_exp},
                             ca * cb);
        return out;
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly scaled(const BigRat& c) const {
        MPoly out;
        if (c == 0) return out;
        for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
        return out;
    }

    void add_term(const Monomial& m, const BigRat& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Keeps exactly the terms whose w-exponent is divisible by s; this is
    // how the distribution over the index-s reflection subgroup is cut out
    // of the full colored-permutation distribution.
    MPoly filtered_w_mod(int s) const {
        if (s < 1) throw std::invalid_argument("filtered_w_mod: s must be >= 1");
        MPoly out;
        for (const auto& [m, c] : terms_)
            if (m.w_exp % s == 0) out.terms_.emplace(m, c);
        return out;
    }

    BigRat eval_ones() const {
        BigRat total = 0;
        for (const auto& [m, c] : terms_) total += c;
        return total;
    }

    bool is_integral() const {
        for (const auto& [m, c] : terms_)
            if (!is_integer(c)) return false;
        return true;
    }

    bool is_nonneg_integral() const {
        for (const auto& [m, c] : terms_)
            if (!is_integer(c) || c < 0) return false;
        return true;
    }

    bool operator==(const MPoly&) const = default;

    // Canonical rendering: terms in ascending (u,v,w)-lex order, explicit
    // '*' between factors, '^' for exponents > 1.  E.g. "3*u*v + u^3".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            BigRat a = c;
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool has_var = m.u_exp || m.v_exp || m.w_exp;
            bool coeff_shown = !has_var || a != 1;
            if (coeff_shown) {
                os << numerator(a).str();
                if (!is_integer(a)) os << "/" << denominator(a).str();
            }
            bool need_star = coeff_shown;
            auto put = [&](const char* name, int e) {
                if (e == 0) return;
                if (need_star) os << "*";
                os << name;
                if (e > 1) os << "^" << e;
                need_star = true;
            };
            put("u", m.u_exp);
            put("v", m.v_exp);
            put("w", m.w_exp);
        }
        return os.str();
    }

private:
    TermMap terms_;
};

inline MPoly mp_add(const MPoly& p, const MPoly& q) { return p + q; }
inline MPoly mp_mul(const MPoly& p, const MPoly& q) { return p * q; }
inline MPoly mp_scale(const MPoly& p, const BigRat& c) { return p.scaled(c); }
inline MPoly mp_filter_w_mod(const MPoly& p, int s) { return p.filtered_w_mod(s); }

} // namespace cperm

#endif
