#pragma once
// Certified computation of the p-adic zeta coefficients of the inverse
// Frobenius-type series from exact harmonic-sum data.
//
// The window-transfer identity
//
//     (acting series at scale N) ∘ N^{weight} H_N  =  (p^k N)^{weight} H_{p^k N}
//
// expands, at a composition s, into the exact rational point values plus
// bracket sums of the symmetrized acting series multiplied by powers of N.
// Running it over a grid of scales N gives an exact linear system for the
// unknown brackets; the truncation tail of each bracket sum is controlled by
// the proved valuation profile of the series coefficients, so every solved
// value comes with a certified absolute p-adic precision: the true value is
// guaranteed to lie in the returned ball.
//
// Depth 1 solves for the brackets b_L(s) at words e_0^L e_1 e_0^{s-1} e_1 and
// converts them to depth-1 zeta values; depth 2 solves for the three-e_1
// brackets with the known depth-1 contributions subtracted, then extracts the
// two-e_1 coefficient table weight by weight from an exact-rank row system.
// The filled tables power the action provider used by the verifications.
//
// All arithmetic is exact (rationals) or certified (p-adic balls); nothing is
// floated and no precision is ever sampled.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pmhs/composition.hpp"
#include "pmhs/depth2.hpp"
#include "pmhs/haraction.hpp"
#include "pmhs/padic.hpp"
#include "pmhs/profile.hpp"
#include "pmhs/rational.hpp"

namespace pmhs {

// ---------------------------------------------------------------------------
// Certified valuation floors
// ---------------------------------------------------------------------------

/// Certified lower bound for v_p of the symmetrized-series bracket at any
/// word of the given weight with e1s occurrences of the second letter
/// (e1s in {1, 2, 3}), valid for both Frobenius directions: minimum over the
/// conjugation splits of the coefficient-profile bounds.  May be negative at
/// small weights (the bound is conservative, never unsound).
long sym_word_floor(long weight, long e1s, const Int& p);

/// Monotone envelope: min over all weights w >= min_weight of
/// sym_word_floor(w, e1s, p).  Certified by a linear-growth cutoff argument,
/// so the scan provably covers the minimum.
long sym_floor_env(long min_weight, long e1s, const Int& p);

/// Certified lower bound for v_p of sum_{j >= 0} N^j * (bracket at a word of
/// weight first_weight + j with e1s e_1's), where step_val = v_p(N) >= 0:
/// min over j of (j * step_val + sym_word_floor(first_weight + j, e1s, p)).
long lsum_tail_floor(const Int& p, long e1s, long first_weight, long step_val);

// ---------------------------------------------------------------------------
// Exact linear algebra over the rationals
// ---------------------------------------------------------------------------

using RatMat = std::vector<std::vector<Rational>>;

/// Exact inverse by Gauss-Jordan elimination with partial pivoting; throws
/// calc_error if the matrix is singular.
RatMat rat_inverse(const RatMat& A);

// ---------------------------------------------------------------------------
// Depth-1 solver
// ---------------------------------------------------------------------------

struct Depth1Solve {
    Int p;
    long k = 1;
    long s = 2;      // base exponent of the solved family
    long l_max = 0;  // leading exponents 0..l_max solved for
    /// Certified bracket values b_L at words e_0^L e_1 e_0^{s-1} e_1 of the
    /// symmetrized inverse-direction series, L = 0..l_max.
    std::vector<PAdicApprox> b;
    /// Certified depth-1 zeta values by weight derived from the brackets:
    /// weight s (only when s is even) from b_0, weight s+L from b_L.  Even
    /// weights are checked to vanish within their certificate and stored as
    /// certified zero balls.
    std::map<long, PAdicApprox> zeta;
};

/// Solve the depth-1 window-transfer system on the scale grid N = 1..l_max+1.
/// Requires s >= 2, k >= 1, l_max >= 1.  Throws calc_error if a certified
/// invariant (vanishing of the odd-s or even-weight combinations) fails
/// beyond its certificate — that would mean an unsound table upstream.
Depth1Solve solve_depth1(const Int& p, long k, long s, long l_max);

// ---------------------------------------------------------------------------
// The solved series
// ---------------------------------------------------------------------------

/// Coefficient tables, through at most two e_1's, of one solved series with
/// certified p-adic coefficients.  `inverse_direction` tells which Frobenius
/// direction the tables describe (the solver produces the inverse direction;
/// the composition inverse produces the forward one).  The depth-1 table is
/// filled through weight cap1 and the pair table through total weight
/// cap2 <= cap1 (cap2 == 0 means no pair data).
struct SolvedSeries {
    Int p;
    long k = 1;
    bool inverse_direction = true;
    int cap1 = 0;
    int cap2 = 0;
    DepthTwoSeries<PAdicApprox> S;

    /// Zeta value at a composition: (-1)^depth times the series coefficient.
    PAdicApprox zeta(const Composition& c) const;
};

/// Solve the depth-1 (and, when cap2 > 0, depth-2) tables of the inverse
/// direction series at (p, k).  l_extra enlarges every truncation beyond its
/// default (used by the soundness audit, which doubles truncations).
/// grid_extra enlarges the solve grids themselves (re-solve stability).
SolvedSeries solve_series(const Int& p, long k, int cap1, int cap2, long l_extra = 0,
                          long grid_extra = 0);

/// Composition-inverse a solved series (flips inverse_direction).
SolvedSeries invert_series(const SolvedSeries& F);

// ---------------------------------------------------------------------------
// Bracket provider for the action walker
// ---------------------------------------------------------------------------

/// Brackets of the symmetrized solved series, twisted by the scale
/// automorphism at N: bracket values are multiplied by N^{weight-1}, and
/// `lsum` returns the certified truncated leading sum plus a tail ball from
/// the valuation profile.  Queries are limited to at most three e_1's (that
/// is, action inputs of depth at most 2).
class SolvedBrackets final : public SymBrackets<PAdicApprox> {
public:
    SolvedBrackets(const SolvedSeries& F, long N = 1);

    PAdicApprox bracket(const Composition& c, long rho) const override;
    PAdicApprox lsum(const Composition& c, long rho) const override;

private:
    const SolvedSeries& F_;
    long N_;
    long vpN_;
};

// ---------------------------------------------------------------------------
// Sigma point / shifted-window values from the solved series
// ---------------------------------------------------------------------------

/// The sigma-point value of a solved series at a composition, with window
/// shift a >= 0: the leading-exponent bracket sum of the symmetrized series
/// over the shift-expanded template.  For the inverse-direction series at
/// (p, k) this equals the weight-normalized window sum
/// (p^k)^{weight} H_{a p^k < (a+1) p^k} to the certified precision.
PAdicApprox sigma_value(const SolvedSeries& F, const Composition& parts, long a = 0);

// ---------------------------------------------------------------------------
// Verifications against exact data
// ---------------------------------------------------------------------------

struct VerifyOutcome {
    bool pass = false;
    /// Absolute precision the comparison was certified at.
    long achieved = 0;
    std::string note;
};

/// Window-transfer check at scale N and shift a for one composition of depth
/// <= 2: rebuilds (p^k N)^{wt} times the exact shifted window sum from the
/// solved brackets and the exact lower-scale data, and compares with the
/// independently computed exact value modulo p^prec.  For a > 0 requires
/// p > (a+1) N (shift reduction needs the small window to stay clear of p).
VerifyOutcome verify_transfer_instance(const SolvedSeries& F, long N, long a,
                                       const Composition& c, long prec);

/// Direct reconstruction of the exact one-level harmonic value H_p(parts)
/// (depth <= 2) from the solved zeta values via the weight-untwisted
/// closed-form series; compares modulo p^prec.  Requires k == 1.
VerifyOutcome verify_closedform_instance(const SolvedSeries& F, const Composition& parts,
                                         long prec);

/// Action consistency: acting with the forward-direction series on the
/// sigma point of the inverse-direction one returns the trivial point.
VerifyOutcome verify_action_roundtrip(const SolvedSeries& Finv, const SolvedSeries& Ffwd,
                                      const Composition& c, long prec);

}  // namespace pmhs
