#pragma once
// Strictly increasing geometric power sums
//
//     G_k(A, X) = sum over 0 <= w_1 < ... < w_d <= k-1 of
//                 prod_i X_i^{w_i} A_i(w_i)
//
// with exact rational ratios X_i and exact-rational polynomial weights
// A_i(w).  Index order: A[0], X[0] attach to the innermost (smallest) index
// w_1.
//
// Two evaluators are provided:
//   * geometric_sum_direct — O(k * d) dynamic program, always defined;
//   * geometric_sum — closed form whose cost is independent of k, built from
//     the symbolic algebra of the Euler operator D = X d/dX acting on
//     (X^W - 1)/(X - 1).  Terms are kept as c(W) * (X^W)^e / (X-1)^b with
//     c a polynomial; applying D maps (e, b, c) to (e, b, (eW - b) c) +
//     (e, b+1, -b c).  Collapsing the innermost index produces a sum of the
//     same shape in one fewer variable with modified weight polynomial and
//     the axis ratio X_1^e X_2.  Any axis ratio equal to 1 is a pole of the
//     closed form and raises pole_error("pole"); the direct evaluator
//     remains the reference there.

#include <vector>

#include "pmhs/poly.hpp"
#include "pmhs/rational.hpp"
#include "pmhs/util.hpp"

namespace pmhs {

/// x^e for e >= 0.
Rational rational_pow(const Rational& x, long e);

Rational geometric_sum_direct(const std::vector<Poly>& A,
                              const std::vector<Rational>& X, long k);

Rational geometric_sum(const std::vector<Poly>& A,
                       const std::vector<Rational>& X, long k);

}  // namespace pmhs
