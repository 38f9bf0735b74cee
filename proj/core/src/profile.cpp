#include "pmhs/profile.hpp"

namespace pmhs {

long logp_floor(const Int& x, const Int& p) {
    if (x < 1 || p < 2) throw input_error("logp_floor: requires x >= 1, p >= 2");
    long a = 0;
    Int pw = 1;
    while (pw * p <= x) {
        pw *= p;
        ++a;
    }
    return a;
}

long logp_ceil(const Int& x, const Int& p) {
    if (x < 1 || p < 2) throw input_error("logp_ceil: requires x >= 1, p >= 2");
    long a = 0;
    Int pw = 1;
    while (pw < x) {
        pw *= p;
        ++a;
    }
    return a;
}

long logp_upper_sixteenths(const Int& x, const Int& p) {
    if (x < 1 || p < 2) throw input_error("logp_upper_sixteenths: requires x >= 1, p >= 2");
    Int x16 = pow_int(x, 16);
    long a = 0;
    Int pw = 1;
    while (pw < x16) {
        pw *= p;
        ++a;
    }
    return a;  // minimal a with x^16 <= p^a
}

long coeff_val_lower(long n, long d, const Int& p) {
    if (n < 1 || d < 1) throw input_error("coeff_val_lower: requires n, d >= 1");
    // n + d - 1 - 2 d log_p(2 d n) >= n + d - 1 - 2 d * (a/16)
    // with a = logp_upper_sixteenths(2 d n).  Floor of the exact rational.
    long a = logp_upper_sixteenths(Int(2) * d * n, p);
    Rational bound = Rational(n + d - 1) - Rational(2 * d * a, 16);
    Int num = rat_num(bound), den = rat_den(bound);
    // floor for possibly negative rationals
    Int q = num / den;
    if (q * den > num) --q;
    return static_cast<long>(q);
}

long binom_val_upper(long n, const Int& p) {
    if (n < 0) throw input_error("binom_val_upper: negative top");
    if (n <= 1) return 0;
    // Kummer: v_p(binom(n,k)) = number of carries when adding k and n-k in
    // base p, which is at most the number of base-p digits of n minus... at
    // most floor(log_p n) + 1 positions can carry, but a carry out of the top
    // digit would exceed n; the count is bounded by floor(log_p n).
    return logp_floor(Int(n), p);
}

long power_sum_coeff_val_lower(long l, const Int& p) {
    if (l < 0) throw input_error("power_sum_coeff_val_lower: negative power");
    return -1 - logp_floor(Int(l + 1), p);
}

}  // namespace pmhs
