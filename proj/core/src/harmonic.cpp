#include "pmhs/harmonic.hpp"

namespace pmhs {

Rational reciprocal_power(long n, long s) {
    if (n == 0) {
        if (s > 0) throw input_error("reciprocal_power: 0 with positive exponent");
        return s == 0 ? Rational(1) : Rational(0);  // 0^0 = 1, 0^{|s|} = 0
    }
    if (n < 0) {
        // (-m)^{-s} handled via sign and |n|; needed by reflection identities.
        Rational base = reciprocal_power(-n, s);
        return (s % 2 == 0) ? base : -base;
    }
    if (s >= 0) return Rational(1, pow_int(Int(n), s));
    return Rational(pow_int(Int(n), -s));
}

Rational hsum_letters(const std::vector<std::function<Rational(long)>>& chi,
                      long lower, long upper, bool allow_zero_first) {
    const int d = static_cast<int>(chi.size());
    if (d == 0) return 1;
    // F[j] = sum over admissible chains n_1 < ... < n_j <= current n of the
    // partial products; chi is display order so position j (1-based from the
    // inside) uses chi[d - j].
    std::vector<Rational> F(static_cast<std::size_t>(d) + 1, Rational(0));
    F[0] = 1;
    if (allow_zero_first) {
        if (lower != 0)
            throw input_error("hsum_letters: allow_zero_first requires lower bound 0");
        if (upper > 0) {  // index 0 must itself lie inside the window
            Rational c0 = chi[static_cast<std::size_t>(d - 1)](0);
            F[1] += c0;
        }
    }
    for (long n = lower + 1; n < upper; ++n) {
        for (int j = d; j >= 1; --j) {
            const Rational c = chi[static_cast<std::size_t>(d - j)](n);
            if (c == 0) continue;
            if (F[static_cast<std::size_t>(j - 1)] == 0) continue;
            F[static_cast<std::size_t>(j)] += F[static_cast<std::size_t>(j - 1)] * c;
        }
    }
    return F[static_cast<std::size_t>(d)];
}

namespace {
std::vector<std::function<Rational(long)>> power_letters(const Composition& s) {
    std::vector<std::function<Rational(long)>> chi;
    chi.reserve(s.s.size());
    for (long e : s.s)
        chi.push_back([e](long n) { return reciprocal_power(n, e); });
    return chi;
}
}  // namespace

Rational hsum(const Composition& s, long N) { return hsum_window(s, 0, N); }

Rational hsum_window(const Composition& s, long M, long N) {
    return hsum_letters(power_letters(s), M, N, false);
}

Rational hsum_tilde(const Composition& s, long N) {
    if (s.s.empty()) return 1;
    if (s.inner() > 0)
        throw input_error("hsum_tilde: innermost entry must be <= 0 to allow n_1 = 0");
    return hsum_letters(power_letters(s), 0, N, true);
}

Rational hsum_excluded(const Composition& s, long N, const Int& M) {
    return hsum_window_excluded(s, 0, N, M);
}

Rational hsum_window_excluded(const Composition& s, long lower, long upper, const Int& M) {
    if (M < 1) throw input_error("hsum_window_excluded: modulus must be >= 1");
    std::vector<std::function<Rational(long)>> chi;
    chi.reserve(s.s.size());
    for (long e : s.s)
        chi.push_back([e, M](long n) {
            if (Int(n) % M == 0) return Rational(0);
            return reciprocal_power(n, e);
        });
    return hsum_letters(chi, lower, upper, false);
}

namespace {
Rational congruent_rec(const Composition& s, int pos, long prev, long N, const Int& q,
                       const std::vector<bool>& constrained) {
    const int d = s.depth();
    if (pos == d) return 1;
    // pos counts from the inside: variable n_{pos+1}, entry s[d-1-pos]
    const long e = s.s[static_cast<std::size_t>(d - 1 - pos)];
    Rational acc = 0;
    for (long n = prev + 1; n < N; ++n) {
        if (constrained[static_cast<std::size_t>(pos)] && (Int(n - prev) % q) != 0) continue;
        Rational c = reciprocal_power(n, e);
        if (c == 0) continue;
        acc += c * congruent_rec(s, pos + 1, n, N, q, constrained);
    }
    return acc;
}
}  // namespace

Rational hsum_congruent(const Composition& s, long N, const Int& q,
                        const std::vector<bool>& constrained) {
    if (q < 1) throw input_error("hsum_congruent: modulus must be >= 1");
    if (constrained.size() != s.s.size())
        throw input_error("hsum_congruent: constraint list must match depth");
    if (s.s.empty()) return 1;
    return congruent_rec(s, 0, 0, N, q, constrained);
}

Poly tilde_poly(const std::vector<long>& l) {
    // T_0 = 1 (empty product).  T_j(N) = sum_{m=0}^{N-1} m^{l_j} T_{j-1}(m),
    // processed from the innermost exponent (last entry) outwards.
    for (long e : l)
        if (e < 0) throw input_error("tilde_poly: exponents must be >= 0");
    Poly T = poly_const(1);
    for (std::size_t idx = l.size(); idx-- > 0;) {
        // multiply by m^{l_idx}
        Poly Q = poly_mul(T, poly_monomial(l[idx]));
        // summation operator: sum_{m=0}^{N-1} m^j  ->  power-sum polynomial
        Poly S = poly_zero();
        for (std::size_t j = 0; j < Q.size(); ++j) {
            if (Q[j] == 0) continue;
            for (long u = 1; u <= static_cast<long>(j) + 1; ++u) {
                Rational c = power_sum_coeff(static_cast<long>(j), u);
                if (c == 0) continue;
                Poly t = poly_monomial(u, c * Q[j]);
                S = poly_add(S, t);
            }
        }
        T = S;
    }
    return T;
}

Rational tilde_value(const std::vector<long>& l, long N) {
    return poly_eval(tilde_poly(l), Rational(N));
}

Rational finite_mzv_rational(const Composition& s, const Int& p, long k, long a) {
    if (!s.all_positive())
        throw input_error("finite_mzv_rational: entries must be positive");
    if (p < 2 || k < 1 || a < 0) throw input_error("finite_mzv_rational: bad parameters");
    Int pk = pow_int(p, k);
    Int lower = Int(a) * pk;
    Int upper = (Int(a) + 1) * pk;
    if (upper > Int(1000000)) throw input_error("finite_mzv_rational: window too large");
    Rational h = hsum_window(s, static_cast<long>(lower), static_cast<long>(upper));
    return Rational(pow_int(pk, s.weight())) * h;
}

PAdicApprox finite_mzv(const Composition& s, const Int& p, long k, long a, long rel_prec) {
    return PAdicApprox::from_rational(p, finite_mzv_rational(s, p, k, a), rel_prec);
}

}  // namespace pmhs
