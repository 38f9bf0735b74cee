#pragma once
// Decomposition identities for windowed multiple harmonic sums.
//
// Every function here evaluates one side of a structural identity through an
// *independent* computational path (reindexing, splitting, series expansion),
// so that comparing against the direct chain enumeration is a genuine
// cross-check and, for the p-adic engines, yields certified congruences.
//
// Exact engines (return the same rational the direct sum produces):
//   reflected_window        index negation n -> -n, tuple reversed
//   translated_window_exact index shift n -> n + M for monomial entries
//   window_split            single interior cut point (below / at / above)
//   window_multicut         several interior cut points at once
//   digit_cutpoints         base-p digit walk of N, cut points in (0, N)
//   product_window          H over (0, N*M) from length-N windows and anchors
//   valuation_pattern_sum   window (0, p^k) regrouped by valuation pattern
//   fermat_exponent_sum     window (0, p): exponents s -> s - p^{r-1}(p-1)
//
// Certified p-adic engines (return a ball guaranteed to contain the exact
// value; the ball's absolute precision carries the truncation certificate):
//   translated_window_taylor  index shift by M with p-adic binomial series
//   finite_mzv_shifted        normalized window a p^k < n < (a+1) p^k from the
//                             base window 0 < n < p^k
//   residue_split_depth1      (p^k N)^s H_{p^k N}(s) from data at N and p^k
//   residue_split_depth2      depth-2 analogue (four anchor patterns)
//   digit_expansion_depth1    H_N(s) from windows of prime-power length

#include <vector>

#include "pmhs/composition.hpp"
#include "pmhs/harmonic.hpp"
#include "pmhs/padic.hpp"

namespace pmhs {

/// H_{M<N}(s) computed as (-1)^{sum s_i} * H_{-N<-M}(s reversed).
Rational reflected_window(const Composition& s, long M, long N);

/// H_{M<M+N}(s) for nonpositive entries (monomial summands), via the exact
/// binomial expansion of (n + M)^{-s_i}.
Rational translated_window_exact(const Composition& s, long M, long N);

/// H_{M<N}(s) via one interior cut point C: every chain index is below C,
/// equal to C, or above C.  Requires M <= C <= N.
Rational window_split(const Composition& s, long M, long C, long N);

/// H_{M<N}(s) via several interior cut points (strictly increasing, all in
/// (M, N)).  Chain indices are distributed over the open subwindows and the
/// cut points themselves (each cut point used by at most one index).
Rational window_multicut(const Composition& s, long M, const std::vector<long>& cuts,
                         long N);

/// Base-p digit walk of N: partial sums of a_j p^j (digits processed from the
/// most significant down) that land strictly inside (0, N).
std::vector<long> digit_cutpoints(long N, long p);

/// H_{NM}(s) (window 0 < n < N*M) computed by classifying every chain index
/// as an anchor (a multiple q*N) or as a member of a level-q gap window
/// (qN, (q+1)N), and summing over admissible level assignments.
Rational product_window(const Composition& s, long N, long M);

/// H_{p^k}(s) regrouped by the valuation pattern (v_p(n_1), ..., v_p(n_d)):
/// each index is written n = p^v m with p not dividing m, and the unit parts
/// are enumerated directly under the induced mixed-radix constraints.
Rational valuation_pattern_sum(const Composition& s, long p, long k);

/// The integer obtained from H_p(s) by replacing every n^{-s_i} with
/// n^{E - s_i}, E = p^{r-1}(p-1).  Congruent to H_p(s) modulo p^r.
Rational fermat_exponent_sum(const Composition& s, long p, long r);

/// H_{M<M+N}(s) for positive entries via the p-adic binomial series
/// (n + M)^{-s} = sum_l binom(-s,l) M^l n^{-s-l}.  Requires
/// v_p(M) > v_p(n) for every n in (0, N).  Summands with l_1+...+l_d <= lmax
/// are accumulated exactly; the certified tail bound uses
/// v(term) >= (sum l_i)(v_p(M) - lambda) - (sum s_i) lambda with
/// lambda = max_{0<n<N} v_p(n).
PAdicApprox translated_window_taylor(const Composition& s, const Int& p, long M,
                                     long N, long lmax);

/// (p^k)^{wt} H_{a p^k < (a+1) p^k}(s) as a shift of the base window:
/// sum_l prod a^{l_i} binom(-s_i, l_i) (p^k)^{wt + sum l} H_{p^k}(s + l).
PAdicApprox finite_mzv_shifted(const Composition& s, const Int& p, long k, long a,
                               long lmax);

/// (p^k N)^s H_{p^k N}(s), depth 1, from the residue decomposition
/// n = q p^k + r:  N^s H_N(s) + sum_l binom(-s,l) N^s T_N(l) (p^k)^{s+l}
/// H_{p^k}(s+l), where T_N(l) = sum_{0<=q<N} q^l.  Tail terms have
/// valuation >= s + l.
PAdicApprox residue_split_depth1(long s, const Int& p, long k, long N, long lmax);

/// (p^k N)^{s_1+s_2} H_{p^k N}(s_2, s_1), depth 2, from the four anchor
/// patterns of the residue decomposition of (n_1, n_2).
PAdicApprox residue_split_depth2(const Composition& s, const Int& p, long k, long N,
                                 long lmax);

/// H_N(s), depth 1, from base-p digit windows: cut at the digit walk points,
/// split every digit window at interior multiples of its prime-power length,
/// and expand each translated window by the p-adic binomial series.
PAdicApprox digit_expansion_depth1(long s, const Int& p, long N, long lmax);

}  // namespace pmhs
