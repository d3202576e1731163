#pragma once

// Exact Laurent polynomials in t with integer coefficients, plus the
// symmetric quantum integers [m]_t used by the forest formula.

#include <map>

#include "gln/core.hpp"

namespace gln {

struct Laurent {
    std::map<Int, Int> c;  // exponent -> coefficient, zero coefficients removed

    static Laurent monomial(Int exp, Int coeff = 1) {
        Laurent p;
        if (coeff != 0) p.c[exp] = coeff;
        return p;
    }
    static Laurent one() { return monomial(0, 1); }

    bool is_zero() const { return c.empty(); }
    bool operator==(const Laurent& o) const { return c == o.c; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    void add_term(Int exp, Int coeff) {
        auto it = c.find(exp);
        if (it == c.end()) {
            if (coeff != 0) c[exp] = coeff;
        } else {
            it->second += coeff;
            if (it->second == 0) c.erase(it);
        }
    }

    Laurent operator+(const Laurent& o) const {
        Laurent r = *this;
        for (auto [e, v] : o.c) r.add_term(e, v);
        return r;
    }
    Laurent operator*(const Laurent& o) const {
        Laurent r;
        for (auto [e1, v1] : c)
            for (auto [e2, v2] : o.c) r.add_term(e1 + e2, v1 * v2);
        return r;
    }

    Int eval(Int t) const {  // exact evaluation at a nonzero integer (t = +-1 in practice)
        require(t == 1 || t == -1, "evaluation only at t = +-1");
        Int s = 0;
        for (auto [e, v] : c) s += (t == 1 || e % 2 == 0) ? v : -v;
        return s;
    }

    Int top_degree() const {
        require(!c.empty(), "zero polynomial has no degree");
        return c.rbegin()->first;
    }
    Int low_degree() const {
        require(!c.empty(), "zero polynomial has no degree");
        return c.begin()->first;
    }

    std::string str() const {
        if (c.empty()) return "0";
        std::string s;
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            auto [e, v] = *it;
            if (!s.empty()) s += (v > 0) ? " + " : " - ";
            else if (v < 0) s += "-";
            Int a = v < 0 ? -v : v;
            std::string term;
            if (e == 0) term = std::to_string(a);
            else {
                if (a != 1) term = std::to_string(a) + "*";
                term += "t";
                if (e != 1) term += "^" + std::to_string(e);
            }
            s += term;
        }
        return s;
    }
};

// exact division, throws if the remainder is nonzero
inline Laurent divide_exact(const Laurent& num, const Laurent& den) {
    require(!den.is_zero(), "division by the zero polynomial");
    if (num.is_zero()) return Laurent{};
    Laurent rem = num, quot;
    Int dlead = den.top_degree();
    Int dcoef = den.c.rbegin()->second;
    Int min_exp = num.low_degree() - den.low_degree();  // lowest possible quotient exponent
    while (!rem.is_zero() && rem.top_degree() - dlead >= min_exp) {
        Int e = rem.top_degree() - dlead;
        Int v = rem.c.rbegin()->second;
        require(v % dcoef == 0, "non-exact polynomial division");
        Int q = v / dcoef;
        quot.add_term(e, q);
        rem = rem + Laurent::monomial(e, -q) * den;
    }
    require(rem.is_zero(), "non-exact polynomial division");
    return quot;
}

// symmetric quantum integer [m]_t = t^{m-1} + t^{m-3} + .. + t^{1-m}
inline Laurent quantum_int(Int m) {
    require(m >= 0, "quantum integer of a negative number");
    Laurent p;
    for (Int j = 0; j < m; ++j) p.add_term(m - 1 - 2 * j, 1);
    return p;
}

inline Laurent quantum_factorial(Int m) {
    Laurent p = Laurent::one();
    for (Int k = 2; k <= m; ++k) p = p * quantum_int(k);
    return p;
}

}  // namespace gln
