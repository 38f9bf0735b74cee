#pragma once
// Expansion of the normalized prime-power window sums along the level
// variable.  For a fixed exponent s the level-k value
//
//     (p^k)^s H_{p^k}(s)
//
// is a power series  c_0 + sum_{u >= 1} c_u x^u  in  x = p^k.  The
// coefficients are computed by two independent routes:
//
//   * geometric — from the solved series: the one-level transfer brackets
//     telescope along the tower, so each c_u is a binomial multiple of a
//     limit zeta value  zeta((m)) / (1 - p^{k m});
//   * elementary — from exact window sums over a single prime block folded
//     against power-sum polynomial coefficients, with every input rational.
//
// Coefficients with 1 <= u < s vanish identically; c_s is a certified
// near-zero (it is a multiple of the weight-s zeta value that vanishes for
// even s).  Partial sums carry a certified p-adic tail bound, so evaluating
// at a level k reproduces the exact window value to certified precision.
#include <vector>

#include "pmhs/padic.hpp"
#include "pmhs/pmzv.hpp"

namespace pmhs {

/// Limit of the depth-1 zeta values along the level tower.  For a series at
/// level k the weight-m limit equals  zeta((m)) / (1 - p^{k m});  the value
/// is independent of the level the series was solved or raised to, because
/// the normalization removes the level dependence exactly.
PAdicApprox limit_zeta1(const SolvedSeries& X, long m);

/// Raise a level-1 solved series to level k by iterated scaled
/// composition: each step composes the weight-scaled current series with
/// the level-1 series, exactly the one-level tower identity.
SolvedSeries climb_tower(const SolvedSeries& F, long k);

/// Which derivation produced a coefficient table (the routes carry
/// different certified tail profiles).
enum class TaylorRoute { geometric, elementary };

/// Certified Taylor coefficients of  x -> (p^k)^s H_{p^k}(s)  at x = 0,
/// stored for u = 0..max_u.  Entries with 1 <= u < s are exact zeros.
struct TaylorCoeffs {
    Int p;
    long s = 0;
    long max_u = 0;
    TaylorRoute route = TaylorRoute::geometric;
    std::vector<PAdicApprox> c;  // c[u], u = 0..max_u
};

/// Coefficients from the solved series (limit zeta values).  Requires
/// 2 <= s and s < max_u <= depth-1 cap of X.
TaylorCoeffs taylor_geometric(const SolvedSeries& X, long s, long max_u);

/// Coefficients from exact rationals: single-block window sums, power-sum
/// polynomial coefficients, and geometric level sums, truncating the inner
/// binomial expansion at l <= l_cut with a certified tail ball.  Requires
/// 2 <= s, s < max_u <= s + l_cut + 1.
TaylorCoeffs taylor_elementary(const Int& p, long s, long max_u, long l_cut);

/// Partial sum  sum_{u <= max_u} c_u (p^k)^u  plus a certified ball
/// covering every discarded index u > max_u, from the route's coefficient
/// valuation floor.
PAdicApprox taylor_partial_sum(const TaylorCoeffs& T, long k);

}  // namespace pmhs
