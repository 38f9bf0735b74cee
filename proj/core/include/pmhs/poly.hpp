#pragma once
// Minimal dense univariate polynomials over the exact rationals.
//
// Coefficient vector convention: p[j] is the coefficient of x^j; the zero
// polynomial is the empty vector.  Used for power-sum polynomials in the
// upper summation bound and for the symbolic geometric-sum machinery.

#include <vector>

#include "pmhs/rational.hpp"

namespace pmhs {

using Poly = std::vector<Rational>;

inline Poly poly_zero() { return {}; }
inline Poly poly_const(const Rational& c) { return c == 0 ? Poly{} : Poly{c}; }
inline Poly poly_monomial(long deg, const Rational& c = 1) {
    Poly p(static_cast<std::size_t>(deg) + 1, Rational(0));
    p.back() = c;
    return p;
}

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    poly_trim(out);
    return out;
}

inline Poly poly_scale(const Poly& a, const Rational& c) {
    if (c == 0) return {};
    Poly out = a;
    for (auto& x : out) x *= c;
    return out;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    poly_trim(out);
    return out;
}

inline Rational poly_eval(const Poly& p, const Rational& x) {
    Rational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

}  // namespace pmhs
