#pragma once
// Exact integer / rational arithmetic helpers.
//
// The whole library computes over arbitrary-precision integers (Int) and
// rationals (Rational); no floating point is used anywhere.  This header
// collects the small number-theoretic utilities everything else builds on:
// p-adic valuations, factorials, binomial coefficients with arbitrary
// (possibly negative) integer tops, and Bernoulli numbers.
//
// Conventions:
//   * binom(t, k) for integer t and k >= 0 is t(t-1)...(t-k+1)/k!, so e.g.
//     binom(-2, 3) = -4.  binom(t, k) = 0 for k < 0.
//   * bernoulli(n) uses the convention bernoulli(1) = -1/2 (so the classical
//     power-sum formulas hold without sign fixes).
//   * vp(x, p) is the exponent of p in x; vp(0, p) is an error (callers deal
//     with zero explicitly).

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "pmhs/util.hpp"

namespace pmhs {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Int rat_den(const Rational& x) { return boost::multiprecision::denominator(x); }

/// Render as "n" or "n/d" (lowest terms, d > 0).
std::string rat_str(const Rational& x);

/// Parse "n" or "n/d".  Throws input_error on malformed input or d == 0.
Rational rat_parse(const std::string& s);

/// b^e for e >= 0.
Int pow_int(const Int& b, long e);

/// p-adic valuation of a nonzero integer.  Throws input_error on x == 0 or
/// p < 2.
long vp(const Int& x, const Int& p);

/// p-adic valuation of a nonzero rational (may be negative).
long vp(const Rational& x, const Int& p);

/// n! for n >= 0 (memoized).
const Int& factorial(long n);

/// Binomial coefficient with arbitrary integer top: t(t-1)...(t-k+1)/k!.
/// Returns 0 for k < 0.
Int binom(const Int& t, long k);

/// Convenience overload for small tops.
inline Int binom(long t, long k) { return binom(Int(t), k); }

/// Bernoulli number B_n with B_1 = -1/2.  Memoized; supported for
/// 0 <= n <= 256 (larger arguments throw input_error — nothing in this
/// library needs them and the cap keeps the memo table bounded).
const Rational& bernoulli(long n);

/// Coefficient of the power-sum polynomial: sum_{n=0}^{N-1} n^l is a
/// polynomial in N of degree l+1 with zero constant term; this returns the
/// coefficient of N^u, namely binom(l+1, u) * B_{l+1-u} / (l+1), for
/// 1 <= u <= l+1 (and 0 outside that range).
Rational power_sum_coeff(long l, long u);

}  // namespace pmhs
