#include "pmhs/decomp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "pmhs/profile.hpp"

namespace pmhs {

namespace {

constexpr long WINDOW_GUARD = 1000000;   // largest window any engine enumerates
constexpr long PREC_CLAMP = 256;         // cap on claimed absolute precision

/// Wrap a truncated sum into a ball of absolute precision M (clamped so digit
/// extraction stays cheap; widening is always sound).  A zero center must
/// stay a zero *class*: the discarded tail need not vanish.
PAdicApprox ball(const Int& p, const Rational& x, long M) {
    long m = std::min(M, PREC_CLAMP);
    if (x == 0) return PAdicApprox::zero_mod(p, m);
    return PAdicApprox::from_rational_abs(p, x, m);
}

/// Display-order slice [first, last) of a composition.
Composition slice(const Composition& s, int first, int last) {
    return Composition(std::vector<long>(s.s.begin() + first, s.s.begin() + last));
}

/// Sub-composition covering chain positions [pos, pos + count) counted from
/// the innermost index: display indices [d - pos - count, d - pos).
Composition chain_block(const Composition& s, int pos, int count) {
    const int d = s.depth();
    return slice(s, d - pos - count, d - pos);
}

/// Entry at chain position pos (0-based from the innermost index).
long chain_entry(const Composition& s, int pos) {
    return s.s[static_cast<std::size_t>(s.depth() - 1 - pos)];
}

/// All l = (l_1, ..., l_d) with l_i >= 0 and sum <= lmax.
void for_each_lvector(int d, long lmax, const std::function<void(const std::vector<long>&)>& fn) {
    std::vector<long> l(static_cast<std::size_t>(d), 0);
    std::function<void(int, long)> rec = [&](int i, long left) {
        if (i == d) {
            fn(l);
            return;
        }
        for (long v = 0; v <= left; ++v) {
            l[static_cast<std::size_t>(i)] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, lmax);
}

/// Largest v_p(n) over 0 < n < N (0 for an empty range).
long max_val_below(long N, const Int& p) {
    if (N <= 2) return 0;
    return logp_floor(Int(N - 1), p);
}

}  // namespace

Rational reflected_window(const Composition& s, long M, long N) {
    long sign_exp = 0;
    for (long e : s.s) sign_exp += e;
    std::vector<long> rev(s.s.rbegin(), s.s.rend());
    Rational v = hsum_window(Composition(rev), -N, -M);
    return sign_exp % 2 == 0 ? v : -v;
}

Rational translated_window_exact(const Composition& s, long M, long N) {
    for (long e : s.s)
        if (e > 0)
            throw input_error("translated_window_exact: entries must be <= 0");
    const int d = s.depth();
    std::vector<long> l(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) l[static_cast<std::size_t>(i)] = -s.s[static_cast<std::size_t>(i)];
    Rational total = 0;
    // enumerate j with 0 <= j_i <= l_i
    std::vector<long> j(static_cast<std::size_t>(d), 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == d) {
            Rational coef = 1;
            std::vector<long> inner(static_cast<std::size_t>(d));
            for (int t = 0; t < d; ++t) {
                auto ti = static_cast<std::size_t>(t);
                coef *= Rational(binom(Int(l[ti]), j[ti])) *
                        Rational(pow_int(Int(M), l[ti] - j[ti]));
                inner[ti] = -j[ti];
            }
            if (coef != 0) total += coef * hsum(Composition(inner), N);
            return;
        }
        for (long v = 0; v <= l[static_cast<std::size_t>(i)]; ++v) {
            j[static_cast<std::size_t>(i)] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return total;
}

Rational window_split(const Composition& s, long M, long C, long N) {
    if (C < M || C > N) throw input_error("window_split: cut point outside window");
    const int d = s.depth();
    Rational total = 0;
    for (int j = 0; j <= d; ++j) {          // indices strictly below C
        for (int eps = 0; eps <= 1; ++eps) {  // one index equal to C?
            if (j + eps > d) continue;
            if (eps == 1 && (C <= M || C >= N)) continue;  // C itself not in window
            Composition inner = chain_block(s, 0, j);
            Composition outer = slice(s, 0, d - j - eps);
            Rational term = hsum_window(inner, M, C);
            if (term == 0) continue;
            if (eps == 1) {
                term *= reciprocal_power(C, chain_entry(s, j));
                if (term == 0) continue;
            }
            term *= hsum_window(outer, C, N);
            total += term;
        }
    }
    return total;
}

Rational window_multicut(const Composition& s, long M, const std::vector<long>& cuts,
                         long N) {
    const int r = static_cast<int>(cuts.size());
    for (int i = 0; i < r; ++i) {
        if (cuts[static_cast<std::size_t>(i)] <= M || cuts[static_cast<std::size_t>(i)] >= N)
            throw input_error("window_multicut: cut point outside open window");
        if (i > 0 && cuts[static_cast<std::size_t>(i - 1)] >= cuts[static_cast<std::size_t>(i)])
            throw input_error("window_multicut: cut points must increase strictly");
    }
    std::vector<long> pts;
    pts.push_back(M);
    for (long c : cuts) pts.push_back(c);
    pts.push_back(N);
    const int d = s.depth();
    // slots in increasing order: interval 0, cut 1, interval 1, ..., cut r,
    // interval r (2r+1 slots); positions are filled innermost first.
    std::function<Rational(int, int)> rec = [&](int slot, int pos) -> Rational {
        if (slot == 2 * r + 1) return pos == d ? Rational(1) : Rational(0);
        Rational acc = 0;
        if (slot % 2 == 1) {  // cut point slot: occupied by at most one index
            acc += rec(slot + 1, pos);
            if (pos < d) {
                long cut = pts[static_cast<std::size_t>((slot + 1) / 2)];
                Rational v = reciprocal_power(cut, chain_entry(s, pos));
                if (v != 0) acc += v * rec(slot + 1, pos + 1);
            }
        } else {  // open interval slot
            int u = slot / 2;
            long lo = pts[static_cast<std::size_t>(u)];
            long hi = pts[static_cast<std::size_t>(u) + 1];
            for (int c = 0; pos + c <= d; ++c) {
                Rational w = hsum_window(chain_block(s, pos, c), lo, hi);
                if (w == 0) continue;
                acc += w * rec(slot + 1, pos + c);
            }
        }
        return acc;
    };
    return rec(0, 0);
}

std::vector<long> digit_cutpoints(long N, long p) {
    if (N < 1 || p < 2) throw input_error("digit_cutpoints: need N >= 1, p >= 2");
    std::vector<long> powers;  // digit contributions a_j p^j, most significant first
    long n = N;
    long pj = 1;
    while (pj <= n / p) pj *= p;
    while (pj >= 1) {
        long digit = n / pj;
        if (digit > 0) powers.push_back(digit * pj);
        n -= digit * pj;
        if (pj == 1) break;
        pj /= p;
    }
    std::vector<long> out;
    long S = 0;
    for (long c : powers) {
        S += c;
        if (S > 0 && S < N) out.push_back(S);
    }
    return out;
}

Rational product_window(const Composition& s, long N, long M) {
    if (N < 1 || M < 1) throw input_error("product_window: factors must be >= 1");
    if (N * M > WINDOW_GUARD) throw input_error("product_window: window too large");
    const int d = s.depth();
    // memoized gap-window sums keyed by (display start, length, level)
    std::map<std::tuple<int, int, long>, Rational> memo;
    auto gap_sum = [&](int pos, int count, long q) -> const Rational& {
        auto key = std::make_tuple(d - pos - count, count, q);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Rational v = hsum_window(chain_block(s, pos, count), q * N, (q + 1) * N);
        return memo.emplace(key, std::move(v)).first->second;
    };
    // rec(pos, gq, aq): fill chain positions >= pos; the next gap run must
    // have level >= gq, the next anchor level >= aq.
    std::function<Rational(int, long, long)> rec = [&](int pos, long gq, long aq) -> Rational {
        if (pos == d) return 1;
        Rational acc = 0;
        for (long q = aq; q <= M - 1; ++q) {  // anchor n = q N
            Rational v = reciprocal_power(q * N, chain_entry(s, pos));
            if (v == 0) continue;
            acc += v * rec(pos + 1, q, q + 1);
        }
        for (long q = gq; q <= M - 1; ++q) {  // gap run at level q
            for (int c = 1; pos + c <= d; ++c) {
                const Rational& w = gap_sum(pos, c, q);
                if (w == 0) continue;
                acc += w * rec(pos + c, q + 1, q + 1);
            }
        }
        return acc;
    };
    return rec(0, 0, 1);
}

Rational valuation_pattern_sum(const Composition& s, long p, long k) {
    if (p < 2 || k < 1) throw input_error("valuation_pattern_sum: need p >= 2, k >= 1");
    Int pk = pow_int(Int(p), k);
    if (pk > WINDOW_GUARD) throw input_error("valuation_pattern_sum: window too large");
    const int d = s.depth();
    if (d == 0) return 1;
    std::vector<long> v(static_cast<std::size_t>(d), 0);
    Rational total = 0;
    // for a fixed valuation pattern, enumerate unit parts m_i with
    // p not dividing m_i, 0 < m_i < p^{k - v_i}, and p^{v_i} m_i increasing
    std::function<Rational(int, long)> units = [&](int pos, long prev) -> Rational {
        if (pos == d) return 1;
        long vi = v[static_cast<std::size_t>(pos)];
        long pv = static_cast<long>(pow_int(Int(p), vi));
        long bound = static_cast<long>(pow_int(Int(p), k - vi));
        Rational acc = 0;
        for (long m = prev / pv + 1; m < bound; ++m) {
            if (m % p == 0) continue;
            Rational val = reciprocal_power(m, chain_entry(s, pos));
            Rational rest = units(pos + 1, pv * m);
            if (rest == 0) continue;
            acc += val * rest;
        }
        return acc;
    };
    std::function<void(int)> patterns = [&](int i) {
        if (i == d) {
            Rational factor = 1;
            for (int t = 0; t < d; ++t)
                factor *= reciprocal_power(static_cast<long>(pow_int(Int(p), v[static_cast<std::size_t>(t)])),
                                           chain_entry(s, t));
            Rational inner = units(0, 0);
            if (inner != 0) total += factor * inner;
            return;
        }
        for (long vi = 0; vi <= k - 1; ++vi) {
            v[static_cast<std::size_t>(i)] = vi;
            patterns(i + 1);
        }
    };
    patterns(0);
    return total;
}

Rational fermat_exponent_sum(const Composition& s, long p, long r) {
    if (p < 2 || r < 1) throw input_error("fermat_exponent_sum: need p >= 2, r >= 1");
    long E = static_cast<long>(pow_int(Int(p), r - 1)) * (p - 1);
    std::vector<long> swapped;
    for (long e : s.s) swapped.push_back(e - E);
    return hsum(Composition(swapped), p);
}

PAdicApprox translated_window_taylor(const Composition& s, const Int& p, long M,
                                     long N, long lmax) {
    if (!s.all_positive())
        throw input_error("translated_window_taylor: entries must be positive");
    if (M == 0) throw input_error("translated_window_taylor: shift must be nonzero");
    if (p < 2 || N < 0 || lmax < 0)
        throw input_error("translated_window_taylor: bad parameters");
    if (N > WINDOW_GUARD) throw input_error("translated_window_taylor: window too large");
    const int d = s.depth();
    if (N <= 1 || d == 0)
        return ball(p, d == 0 ? Rational(1) : Rational(0), PREC_CLAMP);
    long lambda = max_val_below(N, p);
    long vM = vp(Int(M), p);
    if (vM < lambda + 1)
        throw input_error("translated_window_taylor: shift valuation too small");
    Rational total = 0;
    for_each_lvector(d, lmax, [&](const std::vector<long>& l) {
        Rational coef = 1;
        std::vector<long> shifted(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) {
            auto ii = static_cast<std::size_t>(i);
            coef *= Rational(binom(Int(-s.s[ii]), l[ii])) * Rational(pow_int(Int(M), l[ii]));
            shifted[ii] = s.s[ii] + l[ii];
        }
        if (coef == 0) return;
        Rational h = hsum(Composition(shifted), N);
        if (h != 0) total += coef * h;
    });
    long tail = (lmax + 1) * (vM - lambda) - s.weight() * lambda;
    return ball(p, total, tail);
}

PAdicApprox finite_mzv_shifted(const Composition& s, const Int& p, long k, long a,
                               long lmax) {
    if (!s.all_positive() || p < 2 || k < 1 || a < 0)
        throw input_error("finite_mzv_shifted: bad parameters");
    Int pk = pow_int(p, k);
    if (pk > WINDOW_GUARD) throw input_error("finite_mzv_shifted: window too large");
    long pkl = static_cast<long>(pk);
    Rational norm(pow_int(pk, s.weight()));
    if (a == 0) return ball(p, Rational(norm) * hsum(s, pkl), PREC_CLAMP);
    PAdicApprox w = translated_window_taylor(s, p, a * pkl, pkl, lmax);
    return w.scale(norm);
}

PAdicApprox residue_split_depth1(long s, const Int& p, long k, long N, long lmax) {
    if (s < 1 || p < 2 || k < 1 || N < 1 || lmax < 0)
        throw input_error("residue_split_depth1: bad parameters");
    Int pk = pow_int(p, k);
    if (pk > WINDOW_GUARD) throw input_error("residue_split_depth1: window too large");
    long P = static_cast<long>(pk);
    Rational Ns(pow_int(Int(N), s));
    Rational total = Ns * hsum(Composition({s}), N);
    for (long l = 0; l <= lmax; ++l) {
        Rational coef = Rational(binom(Int(-s), l)) * Ns * tilde_value({l}, N);
        if (coef == 0) continue;
        Rational block = Rational(pow_int(pk, s + l)) * hsum(Composition({s + l}), P);
        total += coef * block;
    }
    return ball(p, total, s + lmax + 1);
}

PAdicApprox residue_split_depth2(const Composition& s, const Int& p, long k, long N,
                                 long lmax) {
    if (s.depth() != 2 || !s.all_positive() || p < 2 || k < 1 || N < 1 || lmax < 0)
        throw input_error("residue_split_depth2: bad parameters");
    Int pk = pow_int(p, k);
    if (pk > WINDOW_GUARD) throw input_error("residue_split_depth2: window too large");
    long P = static_cast<long>(pk);
    const long s2 = s.s[0], s1 = s.s[1];
    const long w = s1 + s2;
    Rational Nw(pow_int(Int(N), w));

    // both indices on anchors
    Rational total = Nw * hsum(s, N);

    for (long l2 = 0; l2 <= lmax; ++l2) {  // inner index anchored, outer expanded
        Rational coef = Rational(binom(Int(-s2), l2)) * Nw;
        Rational mixed = hsum(Composition({-l2, s1}), N) + hsum(Composition({s1 - l2}), N);
        Rational block = Rational(pow_int(pk, s2 + l2)) * hsum(Composition({s2 + l2}), P);
        total += coef * mixed * block;
    }
    for (long l1 = 0; l1 <= lmax; ++l1) {  // outer index anchored, inner expanded
        Rational coef = Rational(binom(Int(-s1), l1)) * Nw;
        Rational mixed = hsum_tilde(Composition({s2, -l1}), N);
        Rational block = Rational(pow_int(pk, s1 + l1)) * hsum(Composition({s1 + l1}), P);
        total += coef * mixed * block;
    }
    for (long l1 = 0; l1 <= lmax; ++l1) {  // neither index anchored
        for (long l2 = 0; l1 + l2 <= lmax; ++l2) {
            Rational coef = Rational(binom(Int(-s1), l1) * binom(Int(-s2), l2)) * Nw;
            if (coef == 0) continue;
            Rational ppow(pow_int(pk, w + l1 + l2));
            // same level: strict chain of residues within one window
            Rational same = tilde_value({l1 + l2}, N) *
                            hsum(Composition({s2 + l2, s1 + l1}), P);
            // different levels: independent windows
            Rational diff = hsum_tilde(Composition({-l2, -l1}), N) *
                            hsum(Composition({s1 + l1}), P) * hsum(Composition({s2 + l2}), P);
            total += coef * ppow * (same + diff);
        }
    }
    long lambdaN = max_val_below(N, p);
    long tail = lmax + 1 + std::min({s2 - s1 * lambdaN, s1 - s2 * lambdaN, w});
    return ball(p, total, tail);
}

PAdicApprox digit_expansion_depth1(long s, const Int& p, long N, long lmax) {
    if (s < 1 || p < 2 || N < 1 || lmax < 0)
        throw input_error("digit_expansion_depth1: bad parameters");
    long pl = static_cast<long>(p);
    std::vector<long> cuts = digit_cutpoints(N, pl);
    Rational total = 0;
    long tail = INF_PREC;
    for (long c : cuts) total += reciprocal_power(c, s);
    std::vector<long> pts;
    pts.push_back(0);
    for (long c : cuts) pts.push_back(c);
    pts.push_back(N);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        long S = pts[i];
        long len = pts[i + 1] - S;  // a * p^j with p not dividing a
        long j = vp(Int(len), p);
        long pj = static_cast<long>(pow_int(p, j));
        long a = len / pj;
        for (long b = 1; b < a; ++b) total += reciprocal_power(S + b * pj, s);
        if (pj == 1) continue;  // unit subwindows are empty
        for (long b = 0; b < a; ++b) {
            long T = S + b * pj;
            if (T == 0) {
                total += hsum(Composition({s}), pj);
                continue;
            }
            long vT = vp(Int(T), p);
            long lambda = j - 1;
            Rational Tpow = 1;
            for (long l = 0; l <= lmax; ++l) {
                Rational coef = Rational(binom(Int(-s), l)) * Tpow;
                total += coef * hsum(Composition({s + l}), pj);
                Tpow *= Rational(T);
            }
            tail = std::min(tail, (lmax + 1) * (vT - lambda) - s * lambda);
        }
    }
    return ball(p, total, tail);
}

}  // namespace pmhs
