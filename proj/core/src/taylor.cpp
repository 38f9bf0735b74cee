#include "pmhs/taylor.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "pmhs/harmonic.hpp"
#include "pmhs/profile.hpp"

namespace pmhs {

namespace {

constexpr long WORK_PREC = 64;

PAdicApprox embed(const Int& p, const Rational& x) {
    return PAdicApprox::from_rational(p, x, WORK_PREC);
}

PAdicApprox ball(const Int& p, long m) {
    if (m >= INF_PREC) return PAdicApprox::exact_zero(p);
    return PAdicApprox::zero_mod(p, m);
}

long bitlen(long x) {
    return static_cast<long>(std::bit_width(static_cast<unsigned long long>(x)));
}

long to_small(const Int& p) { return p.convert_to<long>(); }

/// Certified minimum of  fl(u) + k*u  over all u > from_u.  Every floor fed
/// in dominates  u - 2 - 4*bitlen(6u), so past the scanned horizon E the
/// summand is at least  (1+k)E - 18 - 4*bitlen(E)  and growing; the scan is
/// closed once that bound dominates the scanned minimum.
long tail_env_floor(long from_u, long k, const std::function<long(long)>& fl) {
    long E = std::max(from_u + 1, static_cast<long>(64)) + 64;
    long best = INF_PREC;
    for (long u = from_u + 1; u <= E; ++u) best = std::min(best, sat_add(fl(u), k * u));
    long beyond = (1 + k) * E - 18 - 4 * bitlen(E);
    if (beyond < best) throw calc_error("taylor tail bound: scan horizon too small");
    return best;
}

}  // namespace

PAdicApprox limit_zeta1(const SolvedSeries& X, long m) {
    if (m < 2 || m > X.cap1)
        throw input_error("limit_zeta1: weight outside the solved depth-1 cap");
    Rational denom = Rational(1) - Rational(pow_int(X.p, X.k * m));
    return X.zeta(Composition({m})).scale(Rational(1) / denom);
}

SolvedSeries climb_tower(const SolvedSeries& F, long k) {
    if (k < 1) throw input_error("climb_tower: level must be >= 1");
    if (F.k != 1) throw input_error("climb_tower: expects a level-one series");
    SolvedSeries X = F;
    Rational pr{F.p};
    for (long j = 1; j < k; ++j)
        X.S = DepthTwoSeries<PAdicApprox>::compose(X.S.tau(pr), F.S);
    X.k = k;
    return X;
}

TaylorCoeffs taylor_geometric(const SolvedSeries& X, long s, long max_u) {
    if (s < 2) throw input_error("taylor_geometric: exponent must be >= 2");
    if (max_u <= s || max_u > X.cap1)
        throw input_error("taylor_geometric: coefficient range must satisfy s < max_u <= cap");
    const Int& p = X.p;
    TaylorCoeffs T;
    T.p = p;
    T.s = s;
    T.max_u = max_u;
    T.route = TaylorRoute::geometric;
    T.c.assign(static_cast<std::size_t>(max_u + 1), PAdicApprox::exact_zero(p));

    bool even = (s % 2 == 0);
    // c_0 telescopes the one-level brackets:  - sum_{L >= 0} b_L / (p^{s+L} - 1),
    // with  b_L = (-1)^{s+1} binom(s+L-1, L) zeta(s+L)  for L >= 1 and
    // b_0 = -(1 + (-1)^s) zeta(s);  rewriting through the limit values gives
    //   -(1+(-1)^s) lim(s)  +  (-1)^{s+1} sum_{L>=1} binom(s+L-1, L) lim(s+L).
    Rational sgn = (s % 2 == 0) ? Rational(-1) : Rational(1);  // (-1)^{s+1}
    PAdicApprox c0 = PAdicApprox::exact_zero(p);
    if (even) c0 = limit_zeta1(X, s).scale(Rational(-2));
    for (long L = 1; s + L <= X.cap1; ++L)
        c0 = c0 + limit_zeta1(X, s + L).scale(sgn * Rational(binom(Int(s + L - 1), L)));
    // Discarded weights m > cap carry coefficient valuation at least the
    // certified profile floor.
    long tail0 = tail_env_floor(X.cap1, 0, [&](long m) { return coeff_val_lower(m, 1, p); });
    T.c[0] = c0 + ball(p, tail0);

    // 1 <= u < s vanish identically; u = s is  (1+(-1)^s) lim(s).
    if (even) T.c[static_cast<std::size_t>(s)] = limit_zeta1(X, s).scale(Rational(2));
    for (long u = s + 1; u <= max_u; ++u)
        T.c[static_cast<std::size_t>(u)] =
            limit_zeta1(X, u).scale(sgn * Rational(-1) * Rational(binom(Int(u - 1), u - s)));
    return T;
}

TaylorCoeffs taylor_elementary(const Int& p, long s, long max_u, long l_cut) {
    if (s < 2) throw input_error("taylor_elementary: exponent must be >= 2");
    if (max_u <= s || max_u > s + l_cut + 1)
        throw input_error("taylor_elementary: coefficient range needs a deeper l truncation");
    if (l_cut + 1 > 256) throw input_error("taylor_elementary: l truncation too deep");
    TaylorCoeffs T;
    T.p = p;
    T.s = s;
    T.max_u = max_u;
    T.route = TaylorRoute::elementary;
    T.c.assign(static_cast<std::size_t>(max_u + 1), PAdicApprox::exact_zero(p));

    long pl = to_small(p);
    // Exact rational inputs: single-block window sums H_p(m) and the
    // power-sum polynomial coefficients.  The level-k value expands as
    //   sum_l p^{s+l} binom(-s, l) H_p(s+l) sum_{u=1}^{l+1} B^l_u
    //       (1 - x^{u+s}) / (1 - p^{u+s}),       x = p^k,
    // so the constant term collects  +1/(1-p^{u+s})  and the x^{s+u}
    // coefficient collects  -B^l_u/(1-p^{u+s}).
    std::vector<Rational> hp(static_cast<std::size_t>(s + l_cut + 1), Rational(0));
    for (long m = s; m <= s + l_cut; ++m) hp[static_cast<std::size_t>(m)] = hsum(Composition({m}), pl);

    Rational c0(0);
    std::vector<Rational> cu(static_cast<std::size_t>(max_u + 1), Rational(0));
    for (long l = 0; l <= l_cut; ++l) {
        Rational outer = Rational(pow_int(p, s + l)) * Rational(binom(Int(-s), l)) *
                         hp[static_cast<std::size_t>(s + l)];
        if (outer == 0) continue;
        for (long u = 1; u <= l + 1; ++u) {
            Rational inner = outer * power_sum_coeff(l, u) /
                             (Rational(1) - Rational(pow_int(p, u + s)));
            c0 += inner;
            if (s + u <= max_u) cu[static_cast<std::size_t>(s + u)] -= inner;
        }
    }
    // Discarded l > l_cut: each summand has valuation at least
    // (s + l) + v_p(power-sum coefficient), nondecreasing in l.
    long ltail = sat_add(s + l_cut + 1, power_sum_coeff_val_lower(l_cut + 1, p));
    T.c[0] = embed(p, c0) + ball(p, ltail);
    for (long u = s + 1; u <= max_u; ++u)
        T.c[static_cast<std::size_t>(u)] =
            embed(p, cu[static_cast<std::size_t>(u)]) + ball(p, ltail);
    // T.c[s] stays the exact zero: every x^{s+u} term above has u >= 1.
    return T;
}

PAdicApprox taylor_partial_sum(const TaylorCoeffs& T, long k) {
    if (k < 1) throw input_error("taylor_partial_sum: level must be >= 1");
    const Int& p = T.p;
    PAdicApprox acc = PAdicApprox::exact_zero(p);
    for (long u = 0; u <= T.max_u; ++u) {
        const PAdicApprox& cu = T.c[static_cast<std::size_t>(u)];
        if (cu.is_exact_zero()) continue;
        acc = acc + cu.scale(Rational(pow_int(p, k * u)));
    }
    // Route-specific valuation floor for every discarded coefficient.
    std::function<long(long)> fl;
    if (T.route == TaylorRoute::geometric) {
        Int p_ = p;
        fl = [p_](long u) { return coeff_val_lower(u, 1, p_); };
    } else {
        Int p_ = p;
        long s_ = T.s;
        fl = [p_, s_](long u) {
            // c_u folds l >= u - s - 1 with summand valuation
            // (s + l) + v_p(power-sum coefficient), nondecreasing in l.
            return sat_add(u - 1, power_sum_coeff_val_lower(u - s_ - 1, p_));
        };
    }
    return acc + ball(p, tail_env_floor(T.max_u, k, fl));
}

}  // namespace pmhs
