#pragma once
// Certified p-adic arithmetic.
//
// A PAdicApprox is not a number: it is a *set* of p-adic numbers, namely a
// ball the true value is guaranteed to lie in.  Three states are possible:
//
//   * exact zero      — the rational number 0, known exactly; p-agnostic
//                       (prime() == 0 unless a prime was attached).
//   * zero class      — the ball p^m Z_p: "vanishes at least to order m".
//                       Nothing is known beyond the bound; abs_prec() == m.
//   * unit class      — the ball p^v (u + p^r Z_p) with 0 < u < p^r and
//                       p ∤ u: the valuation is exactly v and the leading r
//                       digits are known; abs_prec() == v + r.
//
// Every operation computes the *worst-case* resulting ball exactly: the ball
// returned always contains the true result, and precision bookkeeping never
// relies on heuristics.  In particular, cancellation in addition shrinks the
// certified precision exactly as the ulp algebra dictates, and a sum whose
// known digits all cancel collapses to a zero class.
//
// Precisions are exponents of p (absolute precision M means "known modulo
// p^M").  INF_PREC is the saturating stand-in for infinite precision.

#include <string>

#include "pmhs/rational.hpp"
#include "pmhs/util.hpp"

namespace pmhs {

/// Saturating "infinite" precision sentinel (safe to add small offsets to).
inline constexpr long INF_PREC = (1L << 60);

/// x + y clamped at INF_PREC (treats anything >= INF_PREC as infinite).
inline long sat_add(long x, long y) {
    if (x >= INF_PREC || y >= INF_PREC) return INF_PREC;
    return x + y;
}

class PAdicApprox {
public:
    /// Default-constructed value is the exact zero (p-agnostic).
    PAdicApprox() = default;

    static PAdicApprox exact_zero(const Int& p = 0);
    /// The ball p^m Z_p ("zero to order at least m").
    static PAdicApprox zero_mod(const Int& p, long m);
    /// The ball p^v (u + p^r Z_p); u is reduced mod p^r and the class is
    /// canonicalized (u divisible by p folds into v, u == 0 into zero_mod).
    static PAdicApprox make(const Int& p, long v, const Int& u, long r);
    /// Reduce a rational with v_p(x) = v to the ball p^v (x/p^v + p^r Z_p),
    /// i.e. keep r relative digits.  x == 0 gives the exact zero.
    static PAdicApprox from_rational(const Int& p, const Rational& x, long r);
    /// Reduce a rational modulo p^M (absolute precision).  If v_p(x) >= M
    /// the result is the zero class mod p^M.
    static PAdicApprox from_rational_abs(const Int& p, const Rational& x, long M);

    bool is_exact_zero() const { return state_ == State::ExactZero; }
    bool is_zero_class() const { return state_ == State::ZeroClass; }
    bool is_unit_class() const { return state_ == State::UnitClass; }
    /// True if the ball contains 0 (exact zero or zero class).
    bool may_be_zero() const { return state_ != State::UnitClass; }

    /// The attached prime; 0 for a p-agnostic exact zero.
    const Int& prime() const { return p_; }

    /// Exact valuation; only meaningful for the unit class (throws otherwise).
    long valuation() const;
    /// Certified lower bound on the valuation of every element of the ball
    /// (INF_PREC for the exact zero).
    long val_min() const;
    /// Absolute precision: the ball is c + p^{abs_prec()} Z_p for its center c.
    long abs_prec() const;
    /// Relative precision r of a unit class (throws otherwise).
    long rel_prec() const;
    /// Unit digits u of a unit class (throws otherwise).
    const Int& unit() const;

    /// Center of the ball as an exact rational u * p^v (0 for zero states).
    Rational center() const;

    PAdicApprox operator-() const;
    PAdicApprox operator+(const PAdicApprox& o) const;
    PAdicApprox operator-(const PAdicApprox& o) const;
    PAdicApprox operator*(const PAdicApprox& o) const;
    /// Division; the divisor must be a certified unit class (else calc_error).
    PAdicApprox operator/(const PAdicApprox& o) const;
    PAdicApprox& operator+=(const PAdicApprox& o) { return *this = *this + o; }
    PAdicApprox& operator-=(const PAdicApprox& o) { return *this = *this - o; }
    PAdicApprox& operator*=(const PAdicApprox& o) { return *this = *this * o; }
    PAdicApprox& operator/=(const PAdicApprox& o) { return *this = *this / o; }

    /// Multiply by an exact rational (exact: no precision loss beyond the
    /// valuation shift).
    PAdicApprox scale(const Rational& q) const;
    /// Integer power (e >= 0 always allowed; e < 0 requires a unit class).
    PAdicApprox pow(long e) const;

    /// Intersect with the knowledge "valuation >= m" (used when an outside
    /// argument certifies extra vanishing).  Returns the sharpened ball.
    PAdicApprox sharpen_val(long m) const;

    /// Forget digits: widen to absolute precision at most M.
    PAdicApprox truncate_abs(long M) const;

    /// Human-readable form, e.g. "5^2 * (73 + O(5^3))", "O(5^4)", "0".
    std::string str() const;

    struct Compare {
        enum class Status { Equal, Differ, Undecided };
        Status status;
        /// For Equal: the modulus the equality is certified at (>= query M).
        /// For Undecided: the largest modulus at which equality *is* certified.
        /// For Differ: the exact valuation of the (nonzero) difference.
        long available;
    };
    /// Tri-state containment test of (*this - o) in p^M Z_p.
    Compare eq_mod(const PAdicApprox& o, long M) const;
    Compare eq_mod_rational(const Rational& x, long M) const;

private:
    enum class State { ExactZero, ZeroClass, UnitClass };
    State state_ = State::ExactZero;
    Int p_ = 0;
    long v_ = 0;   // UnitClass: exact valuation.  ZeroClass: order bound m.
    Int u_ = 0;    // UnitClass only: digits, 0 < u < p^r, p ∤ u.
    long r_ = 0;   // UnitClass only: relative precision, >= 1.

    void require_same_prime(const PAdicApprox& o) const;
};

/// Spec'd convenience: reduce x to r relative digits at p.
inline PAdicApprox padic_reduce(const Rational& x, const Int& p, long r) {
    return PAdicApprox::from_rational(p, x, r);
}

}  // namespace pmhs
