#pragma once
// Certified elementary valuation bounds.
//
// Everything here is computed with exact integer arithmetic — no floating
// point.  "log_p" bounds are obtained by comparing integer powers, so every
// returned bound is a *proved* inequality, suitable for use in truncation
// certificates:
//
//   * logp_floor(x, p)  = floor(log_p x)        (largest a with p^a <= x)
//   * logp_ceil(x, p)   = ceil(log_p x)         (smallest a with x <= p^a)
//   * logp_upper_sixteenths(x, p) = minimal a with x^16 <= p^a, so that
//     log_p(x) <= a/16 — a sharper upper bound used in the series
//     coefficient profile below.
//
// coeff_val_lower(n, d, p) is a certified integer lower bound for
//     n + d - 1 - 2 d log_p(2 d n),
// the valuation profile of weight-n, depth-d coefficients of the
// Frobenius-type generating series (uniform in the Frobenius power).
//
// binom_val_upper(n, p) bounds the p-valuation of any binomial coefficient
// with top n: by Kummer's carry count, v_p(binom(n, k)) <= floor(log_p n).

#include "pmhs/rational.hpp"

namespace pmhs {

long logp_floor(const Int& x, const Int& p);
long logp_ceil(const Int& x, const Int& p);
long logp_upper_sixteenths(const Int& x, const Int& p);

/// Certified integer lower bound for n + d - 1 - 2 d log_p(2 d n).
long coeff_val_lower(long n, long d, const Int& p);

/// Upper bound for v_p(binom(n, k)) valid for every 0 <= k <= n.
long binom_val_upper(long n, const Int& p);

/// Certified lower bound for the valuation of the coefficient of N^u in the
/// power-sum polynomial sum_{n<N} n^l (see power_sum_coeff): the coefficient
/// is binom(l+1,u) B_{l+1-u} / (l+1), and v_p(B_m) >= -1 (von Staudt -
/// Clausen), so the bound is -1 - floor(log_p(l+1)).
long power_sum_coeff_val_lower(long l, const Int& p);

}  // namespace pmhs
