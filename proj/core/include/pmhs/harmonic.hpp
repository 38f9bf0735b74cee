#pragma once
// Exact evaluation of multiple harmonic sums and their variants.
//
// The basic object is
//
//     H_N(s_d, ..., s_1) = sum over 0 < n_1 < ... < n_d < N of
//                          prod_i n_i^{-s_i}
//
// (composition listed outermost entry first, see composition.hpp), together
// with:
//   * window sums H_{M<N} with M < n_1 and n_d < N;
//   * "tilde" sums whose innermost index starts at 0 (used with entries
//     <= 0, i.e. monomial factors; 0^0 = 1);
//   * sums excluding multiples of a fixed modulus;
//   * congruence-chained sums with n_i ≡ n_{i-1} (mod q) on selected gaps
//     (n_0 = 0);
//   * the power-sum polynomial in the upper bound N for monomial entries;
//   * finite multiple zeta values (p^k)^{s_1+...+s_d} H_{a p^k < (a+1) p^k}.
//
// All evaluators are exact over the rationals.  The main evaluator runs a
// prefix dynamic program in O(N * d) coefficient operations, not a naive
// enumeration of chains.

#include <functional>
#include <vector>

#include "pmhs/composition.hpp"
#include "pmhs/padic.hpp"
#include "pmhs/poly.hpp"
#include "pmhs/rational.hpp"

namespace pmhs {

/// n^{-s} for any integer s and n >= 1.  For n == 0 only s <= 0 is defined
/// (0^0 = 1, 0^{positive power} = 0); s > 0 at n == 0 throws input_error.
Rational reciprocal_power(long n, long s);

/// Generic evaluator: per-position factors chi (display order, chi[0] is the
/// outermost factor, applied to n_d).  Sums over
/// lower < n_1 < ... < n_d < upper; if allow_zero_first, the innermost index
/// additionally takes the value 0 (with factor chi_inner(0)), provided
/// lower <= 0.  A factor returning 0 at some n simply kills chains through n.
Rational hsum_letters(const std::vector<std::function<Rational(long)>>& chi,
                      long lower, long upper, bool allow_zero_first = false);

/// H_N(s) over 0 < n_1 < ... < n_d < N.
Rational hsum(const Composition& s, long N);

/// Window sum over M < n_1 < ... < n_d < N.
Rational hsum_window(const Composition& s, long M, long N);

/// Tilde sum over 0 <= n_1 < ... < n_d < N (innermost entry must be <= 0).
Rational hsum_tilde(const Composition& s, long N);

/// H_N(s) skipping every index divisible by M (M >= 1; M == 1 gives 0).
Rational hsum_excluded(const Composition& s, long N, const Int& M);

/// Window sum skipping indices divisible by M.
Rational hsum_window_excluded(const Composition& s, long lower, long upper, const Int& M);

/// Congruence-chained sum: with n_0 = 0, require n_i ≡ n_{i-1} (mod q) for
/// every i (1-based, innermost first) with constrained[i-1] set.  Direct
/// nested summation; constrained must have length depth.
Rational hsum_congruent(const Composition& s, long N, const Int& q,
                        const std::vector<bool>& constrained);

/// The polynomial P with P(N) = sum over 0 <= n_1 < ... < n_d < N of
/// prod n_i^{l_i}, for monomial exponents l = (l_d, ..., l_1), all >= 0,
/// listed outermost first.
Poly tilde_poly(const std::vector<long>& l);

/// Value of tilde_poly at integer N (cross-checkable against hsum_tilde).
Rational tilde_value(const std::vector<long>& l, long N);

/// Finite multiple zeta value as an exact rational:
/// (p^k)^{weight} * H_{a p^k < (a+1) p^k}(s); requires positive entries.
Rational finite_mzv_rational(const Composition& s, const Int& p, long k, long a);

/// The same value as a p-adic ball with rel_prec kept digits.
PAdicApprox finite_mzv(const Composition& s, const Int& p, long k, long a, long rel_prec);

}  // namespace pmhs
