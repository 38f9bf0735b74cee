#include "pmhs/pmzv.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "pmhs/geometric.hpp"
#include "pmhs/harmonic.hpp"

namespace pmhs {

namespace {

// Relative digits used when embedding exact rationals; far beyond any
// certificate this module can produce, so it never binds.
constexpr long WORK_PREC = 64;

PAdicApprox embed(const Int& p, const Rational& x) {
    return PAdicApprox::from_rational(p, x, WORK_PREC);
}

long to_long(const Int& x) { return x.convert_to<long>(); }

Rational ipow(long base, long e) { return Rational(pow_int(Int(base), e)); }

Composition comp1(long s) { return Composition(std::vector<long>{s}); }
Composition comp2(long s2, long s1) { return Composition(std::vector<long>{s2, s1}); }

/// Ball 0 + p^m Z_p, collapsing an infinite floor to the exact zero.
PAdicApprox ball(const Int& p, long m) {
    if (m >= INF_PREC) return PAdicApprox::exact_zero(p);
    return PAdicApprox::zero_mod(p, m);
}

/// Crude certified lower bound below every profile quantity this module
/// scans (coefficient floors for depth <= 2 and symmetrized-word floors for
/// up to three e_1's): w - 2 - 4*bitlen(6w) <= w - 2 - 4*log2(6w), and each
/// scanned function is >= its weight minus at most 4*log2(6*weight) plus a
/// constant no worse than -2.
long crude_floor(long w) {
    long bits = 0;
    long x = 6 * w;
    while (x > 0) {
        ++bits;
        x >>= 1;
    }
    return w - 2 - 4 * bits;
}

/// Certified minimum of f(m) over all m >= m0, for f >= crude_floor - slack
/// pointwise.  Sound because for m >= 64 and m' >= m, crude_floor(m') >=
/// crude_floor(m) - 4 (the linear term outruns the bit-length term), so once
/// crude_floor(m) - 4 - slack reaches the best seen value no later m can
/// improve it.  f may return INF_PREC to skip a point.
long env_scan(long m0, const std::function<long(long)>& f, long slack = 0) {
    long best = INF_PREC;
    for (long m = m0;; ++m) {
        long v = f(m);
        if (v < best) best = v;
        if (m >= 64 && m >= m0 + 8 && best < INF_PREC && crude_floor(m) - 4 - slack >= best)
            return best;
        if (m > m0 + 100000) throw calc_error("env_scan: failed to close");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Certified valuation floors
// ---------------------------------------------------------------------------

long sym_word_floor(long weight, long e1s, const Int& p) {
    if (e1s < 1 || e1s > 3) throw input_error("sym_word_floor: e1 count must be 1..3");
    if (weight < e1s) throw input_error("sym_word_floor: weight below e1 count");
    const long INF = INF_PREC;
    // Coefficient profile of either Frobenius direction: pure-e0 words and
    // weight-1 words vanish; otherwise the proved lower bound applies.
    auto prof = [&](long n, long d) -> long {
        if (d == 0) return n == 0 ? 0 : INF;
        if (n < d || n == 1) return INF;
        return coeff_val_lower(n, d, p);
    };
    long best = INF;
    for (long n1 = 0; n1 + 1 <= weight; ++n1) {
        long n2 = weight - 1 - n1;
        for (long d1 = 0; d1 <= e1s - 1; ++d1) {
            long a = prof(n1, d1);
            if (a >= INF) continue;
            long b = prof(n2, e1s - 1 - d1);
            if (b >= INF) continue;
            best = std::min(best, a + b);
        }
    }
    return best;
}

long sym_floor_env(long min_weight, long e1s, const Int& p) {
    long m0 = std::max(min_weight, e1s);
    return env_scan(m0, [&](long m) { return sym_word_floor(m, e1s, p); });
}

long lsum_tail_floor(const Int& p, long e1s, long first_weight, long step_val) {
    if (step_val < 0) throw input_error("lsum_tail_floor: negative step valuation");
    long m0 = std::max(first_weight, e1s);
    return env_scan(m0, [&](long m) {
        long f = sym_word_floor(m, e1s, p);
        if (f >= INF_PREC) return INF_PREC;
        return sat_add(f, (m - first_weight) * step_val);
    });
}

// ---------------------------------------------------------------------------
// Exact linear algebra
// ---------------------------------------------------------------------------

RatMat rat_inverse(const RatMat& A) {
    const std::size_t n = A.size();
    for (const auto& row : A)
        if (row.size() != n) throw input_error("rat_inverse: matrix not square");
    RatMat M(A);
    RatMat I(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && M[piv][col] == 0) ++piv;
        if (piv == n) throw calc_error("rat_inverse: singular matrix");
        std::swap(M[piv], M[col]);
        std::swap(I[piv], I[col]);
        const Rational d = M[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            M[col][j] /= d;
            I[col][j] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || M[r][col] == 0) continue;
            const Rational f = M[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                M[r][j] -= f * M[col][j];
                I[r][j] -= f * I[col][j];
            }
        }
    }
    return I;
}

// ---------------------------------------------------------------------------
// Harmonic-value cache (exact rationals, one table per upper bound)
// ---------------------------------------------------------------------------

namespace {

/// Exact H_upper values for depth <= 2 and weight <= wmax, built once per
/// upper bound: depth 1 directly, depth 2 through running prefix sums so a
/// whole table costs O(wmax^2 * upper) ring operations.
class HsumCache {
public:
    explicit HsumCache(long wmax) : wmax_(wmax) {}

    Rational get(const Composition& c, long upper) {
        if (c.depth() == 0) return Rational(1);
        if (c.depth() > 2) return hsum(c, upper);  // not cached, not hot
        Table& t = table(upper);
        if (c.depth() == 1) {
            long s = c.s[0];
            if (s < 1 || s > wmax_) return hsum(c, upper);
            return t.d1[static_cast<std::size_t>(s)];
        }
        long a = c.s[0], b = c.s[1];
        if (a < 1 || b < 1 || a + b > wmax_) return hsum(c, upper);
        return t.d2[key(a, b)];
    }

private:
    struct Table {
        std::vector<Rational> d1;                // index s = 1..wmax
        std::map<std::pair<long, long>, Rational> d2;
    };

    static std::pair<long, long> key(long a, long b) { return {a, b}; }

    Table& table(long upper) {
        auto it = tables_.find(upper);
        if (it != tables_.end()) return it->second;
        Table t;
        t.d1.assign(static_cast<std::size_t>(wmax_) + 1, Rational(0));
        // prefix[s][m] = H_m(s) for the current m while sweeping m upward.
        std::vector<std::vector<Rational>> prefix(
            static_cast<std::size_t>(wmax_) + 1,
            std::vector<Rational>(static_cast<std::size_t>(std::max<long>(upper, 1)),
                                  Rational(0)));
        for (long m = 1; m < upper; ++m) {
            for (long s = 1; s <= wmax_; ++s) {
                Rational prev = (m >= 2) ? prefix[s][m - 1] : Rational(0);
                prefix[s][m] = prev + Rational(Int(1), pow_int(Int(m), s));
            }
        }
        for (long s = 1; s <= wmax_; ++s)
            t.d1[static_cast<std::size_t>(s)] = (upper >= 2) ? prefix[s][upper - 1] : Rational(0);
        for (long a = 1; a + 1 <= wmax_; ++a) {
            for (long b = 1; a + b <= wmax_; ++b) {
                Rational acc(0);
                for (long m = 2; m < upper; ++m)
                    acc += Rational(Int(1), pow_int(Int(m), a)) * prefix[b][m - 1];
                t.d2[key(a, b)] = acc;
            }
        }
        return tables_.emplace(upper, std::move(t)).first->second;
    }

    long wmax_;
    std::map<long, Table> tables_;
};

/// The point c' -> N^{wt(c')} H_N(c') over every quotient composition the
/// action walker can request below a depth <= 2 composition c.
HarPoint<PAdicApprox> window_point_for(const Int& p, long N, const Composition& c,
                                       HsumCache& cache) {
    HarPoint<PAdicApprox> h;
    auto put = [&](const Composition& q) {
        if (h.has(q)) return;
        h.set(q, embed(p, Rational(pow_int(Int(N), q.weight())) * cache.get(q, N)));
    };
    put(Composition());
    long top = std::max<long>(c.weight(), 1);
    for (long x = 1; x <= top; ++x) put(comp1(x));
    if (c.depth() == 2) {
        for (long x = 1; x <= c.s[0]; ++x)
            for (long y = 1; y <= c.s[1]; ++y) put(comp2(x, y));
    }
    return h;
}

}  // namespace

// ---------------------------------------------------------------------------
// Depth-1 solver
// ---------------------------------------------------------------------------

Depth1Solve solve_depth1(const Int& p, long k, long s, long l_max) {
    if (s < 2 || k < 1 || l_max < 1)
        throw input_error("solve_depth1: need s >= 2, k >= 1, l_max >= 1");
    const long M = l_max + 1;
    const long pk = to_long(pow_int(p, k));
    RatMat A(static_cast<std::size_t>(M), std::vector<Rational>(static_cast<std::size_t>(M)));
    std::vector<PAdicApprox> rhs;
    rhs.reserve(static_cast<std::size_t>(M));
    for (long N = 1; N <= M; ++N) {
        for (long L = 0; L <= l_max; ++L)
            A[N - 1][L] = ipow(N, s + L);
        const long PN = pk * N;
        Rational exact = ipow(PN, s) * hsum(comp1(s), PN) - ipow(N, s) * hsum(comp1(s), N);
        long vpN = vp(Int(N), p);
        long tail = sat_add((s + l_max + 1) * vpN, lsum_tail_floor(p, 2, s + l_max + 2, vpN));
        rhs.push_back(embed(p, exact) + ball(p, tail));
    }
    RatMat inv = rat_inverse(A);
    Depth1Solve out;
    out.p = p;
    out.k = k;
    out.s = s;
    out.l_max = l_max;
    for (long L = 0; L <= l_max; ++L) {
        PAdicApprox acc = PAdicApprox::exact_zero(p);
        for (long j = 0; j < M; ++j) {
            if (inv[L][j] == 0) continue;
            acc = acc + rhs[j].scale(inv[L][j]);
        }
        out.b.push_back(acc);
    }
    // Leading bracket: b_0 = -(1 + (-1)^s) * zeta(s).
    if (s % 2 != 0) {
        if (!out.b[0].may_be_zero())
            throw calc_error("solve_depth1: odd-exponent leading bracket fails to vanish");
    } else {
        out.zeta[s] = out.b[0].scale(Rational(-1, 2));
        if (!out.zeta[s].may_be_zero())
            throw calc_error("solve_depth1: even-weight zeta value fails to vanish");
    }
    // Higher brackets: b_L = (-1)^{s+1} C(L+s-1, L) zeta(s+L) for L >= 1.
    for (long L = 1; L <= l_max; ++L) {
        long w = s + L;
        Rational C = Rational(binom(Int(L + s - 1), L));
        Rational sc = (s % 2 == 0 ? Rational(-1) : Rational(1)) / C;
        PAdicApprox z = out.b[static_cast<std::size_t>(L)].scale(sc);
        if (w % 2 == 0 && !z.may_be_zero())
            throw calc_error("solve_depth1: even-weight zeta value fails to vanish");
        out.zeta[w] = z;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Bracket provider
// ---------------------------------------------------------------------------

SolvedBrackets::SolvedBrackets(const SolvedSeries& F, long N) : F_(F), N_(N) {
    if (N < 1) throw input_error("SolvedBrackets: scale must be >= 1");
    vpN_ = vp(Int(N), F.p);
}

namespace {

PAdicApprox twist_by(const PAdicApprox& x, long N, long e) {
    if (N == 1 || e == 0) return x;
    return x.scale(ipow(N, e));
}

}  // namespace

PAdicApprox SolvedBrackets::bracket(const Composition& c, long rho) const {
    if (!c.all_positive()) throw input_error("SolvedBrackets: entries must be >= 1");
    if (rho < 0) throw input_error("SolvedBrackets: rho must be >= 0");
    const Int& p = F_.p;
    long d = c.depth();
    long W = c.weight() + rho;  // word weight
    if (d == 0) return PAdicApprox::exact_zero(p);
    if (d == 1) {
        // sym coefficient at e_0^{s-1} e_1 e_0^rho: the unit iff s==1, rho==0.
        if (c.s[0] == 1 && rho == 0) return F_.S.unit;
        return PAdicApprox::exact_zero(p);
    }
    if (d == 2) {
        long c0 = c.s[0], c1 = c.s[1];
        if (c1 + rho <= F_.cap1 && c0 + c1 - 1 <= F_.cap1)
            return twist_by(F_.S.sym2(c0 - 1, c1, rho), N_, W - 1);
        return twist_by(ball(p, sym_word_floor(W, 2, p)), N_, W - 1);
    }
    if (d == 3) {
        long c0 = c.s[0], c1 = c.s[1], c2 = c.s[2];
        if (c1 + c2 + rho <= F_.cap2 && c0 + c1 + c2 - 1 <= F_.cap2)
            return twist_by(F_.S.sym3(c0 - 1, c1, c2, rho), N_, W - 1);
        return twist_by(ball(p, sym_word_floor(W, 3, p)), N_, W - 1);
    }
    throw input_error("SolvedBrackets: compositions beyond depth 3 are not supported");
}

PAdicApprox SolvedBrackets::lsum(const Composition& c, long rho) const {
    if (!c.all_positive()) throw input_error("SolvedBrackets: entries must be >= 1");
    if (rho < 0) throw input_error("SolvedBrackets: rho must be >= 0");
    const Int& p = F_.p;
    long d = c.depth();
    if (d == 0) {
        // sum over L of the coefficient at e_0^L e_1 e_0^rho: exactly the
        // unit at L = 0 when rho == 0, zero otherwise.
        return rho == 0 ? F_.S.unit : PAdicApprox::exact_zero(p);
    }
    if (d == 1) {
        long s = c.s[0];
        long w0 = s + rho + 1;  // word weight at L = 0
        if (s + rho > F_.cap1)
            return ball(p, sat_add((w0 - 1) * vpN_, lsum_tail_floor(p, 2, w0, vpN_)));
        if (rho > 0)  // only the L = 0 term is nonzero
            return twist_by(F_.S.sym2(0, s, rho), N_, w0 - 1);
        PAdicApprox acc = PAdicApprox::exact_zero(p);
        for (long L = 0; s + L <= F_.cap1; ++L)
            acc = acc + twist_by(F_.S.sym2(L, s, rho), N_, L + s + rho);
        long L0 = F_.cap1 - s + 1;
        acc = acc + ball(p, sat_add((s + L0) * vpN_, lsum_tail_floor(p, 2, s + L0 + 1, vpN_)));
        return acc;
    }
    if (d == 2) {
        long s2 = c.s[0], s1 = c.s[1];
        long w0 = s2 + s1 + rho + 1;
        long all_floor = sat_add((w0 - 1) * vpN_, lsum_tail_floor(p, 3, w0, vpN_));
        if (s2 + s1 + rho > F_.cap2) return ball(p, all_floor);
        PAdicApprox acc = PAdicApprox::exact_zero(p);
        for (long L = 0; L + s2 + s1 <= F_.cap2; ++L)
            acc = acc + twist_by(F_.S.sym3(L, s2, s1, rho), N_, L + s2 + s1 + rho);
        long L0 = F_.cap2 - s2 - s1 + 1;
        long w1 = L0 + s2 + s1 + rho + 1;
        acc = acc + ball(p, sat_add((w1 - 1) * vpN_, lsum_tail_floor(p, 3, w1, vpN_)));
        return acc;
    }
    throw input_error("SolvedBrackets: leading sums beyond depth 2 are not supported");
}

// ---------------------------------------------------------------------------
// The solved series
// ---------------------------------------------------------------------------

PAdicApprox SolvedSeries::zeta(const Composition& c) const {
    long d = c.depth();
    if (d == 0) return S.unit;
    if (d == 1) return S.coeff1(c.s[0]).scale(Rational(-1));
    if (d == 2) return S.coeff2(c.s[0], c.s[1]);
    throw input_error("SolvedSeries::zeta: depth beyond 2 is not tabulated");
}

namespace {

/// Provider that reports the leading sum at one masked composition (at
/// rho == 0) as exactly zero; used to move every known action term to the
/// right-hand side of the bracket solve.
class MaskedBrackets final : public SymBrackets<PAdicApprox> {
public:
    MaskedBrackets(const SolvedBrackets& base, Composition masked)
        : base_(base), masked_(std::move(masked)) {}

    PAdicApprox bracket(const Composition& c, long rho) const override {
        return base_.bracket(c, rho);
    }
    PAdicApprox lsum(const Composition& c, long rho) const override {
        if (rho == 0 && c == masked_) return PAdicApprox::exact_zero();
        return base_.lsum(c, rho);
    }

private:
    const SolvedBrackets& base_;
    Composition masked_;
};

/// Sharpen a solved table entry with the certified valuation floor for its
/// slot.  When the floor exceeds the entry's certified precision the entry
/// carries no digit information beyond "divisible", so replacing it by the
/// floor ball loses nothing and tightens every downstream fold.  A unit-class
/// entry whose exact valuation sits below the floor contradicts the
/// certificate outright.
PAdicApprox clamp_to_floor(const PAdicApprox& v, long floor_v, const Int& p) {
    if (v.is_exact_zero()) return v;
    if (!v.may_be_zero()) {
        if (v.valuation() < floor_v)
            throw calc_error("solved coefficient contradicts its valuation floor");
        return v;
    }
    if (v.abs_prec() < floor_v) return ball(p, floor_v);
    return v;
}

/// Fill every missing two-e_1 table slot up to the full weight cap with the
/// certified profile ball, and raise every stored entry (single and pair)
/// that certifies fewer digits than its profile floor, so whole-series
/// operations (composition, inversion, scaling) can read the table through
/// the cap and stay sound at the best certified precision.
void pad_pairs(SolvedSeries& F) {
    for (long m = 2; m <= F.cap1; ++m) {
        auto it = F.S.d1.find(m);
        if (it != F.S.d1.end())
            it->second = clamp_to_floor(it->second, coeff_val_lower(m, 1, F.p), F.p);
    }
    for (long n = 2; n <= F.cap1; ++n) {
        long floor_v = coeff_val_lower(n, 2, F.p);
        for (long a = 1; a <= n - 1; ++a) {
            auto it = F.S.d2.find({a, n - a});
            if (it == F.S.d2.end())
                F.S.d2[{a, n - a}] = ball(F.p, floor_v);
            else
                it->second = clamp_to_floor(it->second, floor_v, F.p);
        }
    }
}

/// Indicator series for the weight-n pair coefficients: the x-th series has
/// a 1 at the pair (x, n-x) and 0 at every other weight-n pair, so its
/// padded-word accessor reads off the rational structure constant with which
/// that pair enters a padded two-e_1 word of total weight n.
std::vector<DepthTwoSeries<Rational>> pair_indicators(long n) {
    std::vector<DepthTwoSeries<Rational>> out;
    out.reserve(static_cast<std::size_t>(n - 1));
    for (long x = 1; x <= n - 1; ++x) {
        DepthTwoSeries<Rational> ind(static_cast<int>(n), Rational(1));
        for (long u = 1; u <= n - 1; ++u)
            ind.d2[{u, n - u}] = (u == x) ? Rational(1) : Rational(0);
        out.push_back(std::move(ind));
    }
    return out;
}

}  // namespace

SolvedSeries solve_series(const Int& p, long k, int cap1, int cap2, long l_extra,
                          long grid_extra) {
    if (cap1 < 2) throw input_error("solve_series: depth-1 cap must be >= 2");
    if (cap2 > cap1) throw input_error("solve_series: pair cap cannot exceed depth-1 cap");
    if (cap2 == 1) cap2 = 0;
    if (l_extra < 0 || grid_extra < 0) throw input_error("solve_series: negative enlargement");

    SolvedSeries F;
    F.p = p;
    F.k = k;
    F.inverse_direction = true;
    F.cap1 = cap1;
    F.cap2 = 0;  // raised as pair weights are filled
    F.S.cap = cap1;
    F.S.unit = embed(p, Rational(1));

    // Depth-1 table from one solve at base exponent 2.
    long l1 = (cap1 - 2) + l_extra + grid_extra;
    Depth1Solve d1 = solve_depth1(p, k, 2, std::max<long>(l1, 1));
    for (long m = 2; m <= cap1; ++m)
        F.S.d1[m] = clamp_to_floor(d1.zeta.at(m).scale(Rational(-1)),
                                   coeff_val_lower(m, 1, p), p);

    if (cap2 < 2) {
        pad_pairs(F);
        return F;
    }

    const long pk = to_long(pow_int(p, k));
    HsumCache cache(cap2);
    // Solved leading-sum brackets per pair: (s2,s1) -> values for L = 0..l2.
    std::map<std::pair<long, long>, std::vector<PAdicApprox>> Bhat;

    for (long n = 2; n <= cap2; ++n) {
        // --- bracket solves for every pair of weight n ---
        for (long s2 = 1; s2 <= n - 1; ++s2) {
            long s1 = n - s2;
            Composition c = comp2(s2, s1);
            long l2 = (cap2 - n) + l_extra + grid_extra;
            long M2 = l2 + 1;
            RatMat A(static_cast<std::size_t>(M2),
                     std::vector<Rational>(static_cast<std::size_t>(M2)));
            std::vector<PAdicApprox> rhs;
            rhs.reserve(static_cast<std::size_t>(M2));
            for (long N = 1; N <= M2; ++N) {
                for (long L = 0; L <= l2; ++L) A[N - 1][L] = ipow(N, n + L);
                long PN = pk * N;
                PAdicApprox target =
                    embed(p, ipow(PN, n) * cache.get(c, PN));
                SolvedBrackets base(F, N);
                MaskedBrackets masked(base, c);
                HarPoint<PAdicApprox> h = window_point_for(p, N, c, cache);
                PAdicApprox known = har_act_value<PAdicApprox>(masked, h, c);
                long vpN = vp(Int(N), p);
                long tail =
                    sat_add((n + l2 + 1) * vpN, lsum_tail_floor(p, 3, n + l2 + 2, vpN));
                rhs.push_back(target - known + ball(p, tail));
            }
            RatMat inv = rat_inverse(A);
            std::vector<PAdicApprox> B;
            B.reserve(static_cast<std::size_t>(M2));
            for (long L = 0; L <= l2; ++L) {
                PAdicApprox acc = PAdicApprox::exact_zero(p);
                for (long j = 0; j < M2; ++j) {
                    if (inv[L][j] == 0) continue;
                    acc = acc + rhs[j].scale(inv[L][j]);
                }
                B.push_back(acc);
            }
            Bhat[{s2, s1}] = std::move(B);
        }

        // --- extract the weight-n pair coefficients ---
        // Unknowns x_{(a, n-a)}, a = 1..n-1.  Each solved bracket B_L(s2,s1)
        // with L + s2 + s1 = n yields one affine row:
        //   [L==0] x_{(s2,s1)} + (-1)^n * reduction(padded pair word)
        //     = B_L(s2,s1) - (series inverse at e_0^L e_1 e_0^{s2-1}) * coeff(s1).
        long cols = n - 1;
        std::vector<DepthTwoSeries<Rational>> inds = pair_indicators(n);
        std::vector<std::vector<Rational>> C;
        std::vector<PAdicApprox> r;
        Rational parity = (n % 2 == 0) ? Rational(1) : Rational(-1);
        for (long w = n; w >= 2; --w) {
            long L = n - w;
            for (long s2 = 1; s2 <= w - 1; ++s2) {
                long s1 = w - s2;
                const auto& B = Bhat.at({s2, s1});
                if (static_cast<std::size_t>(L) >= B.size()) continue;
                std::vector<Rational> row(static_cast<std::size_t>(cols), Rational(0));
                if (L == 0) row[static_cast<std::size_t>(s2 - 1)] += 1;
                for (long x = 1; x <= cols; ++x) {
                    Rational coef = inds[static_cast<std::size_t>(x - 1)].padded2(s1 - 1, s2 - 1, L);
                    if (coef != 0) row[static_cast<std::size_t>(x - 1)] += parity * coef;
                }
                PAdicApprox rv = B[static_cast<std::size_t>(L)];
                if (s1 >= 2) {
                    // subtract (inverse-series coefficient) * (depth-1 coefficient)
                    rv = rv - F.S.inv1(L, s2 - 1) * F.S.coeff1(s1);
                }
                C.push_back(std::move(row));
                r.push_back(std::move(rv));
            }
        }
        // Select cols independent rows.  A selected row contributes digits
        // bounded by (its certified precision) - (pivot valuation), so prefer
        // rows maximising that difference: unit-most pivots on the
        // best-certified right-hand sides.
        std::vector<std::vector<Rational>> E = C;
        std::vector<bool> used(C.size(), false);
        std::vector<std::size_t> selected;
        for (long col = 0; col < cols; ++col) {
            std::size_t bestr = C.size();
            long bestscore = 0;
            for (std::size_t ri = 0; ri < E.size(); ++ri) {
                if (used[ri] || E[ri][static_cast<std::size_t>(col)] == 0) continue;
                long score = r[ri].abs_prec() - vp(E[ri][static_cast<std::size_t>(col)], F.p);
                if (bestr == C.size() || score > bestscore) {
                    bestr = ri;
                    bestscore = score;
                }
            }
            if (bestr == C.size())
                throw calc_error("solve_series: pair extraction system is rank-deficient");
            used[bestr] = true;
            selected.push_back(bestr);
            const Rational piv = E[bestr][static_cast<std::size_t>(col)];
            for (std::size_t ri = 0; ri < E.size(); ++ri) {
                if (used[ri] || E[ri][static_cast<std::size_t>(col)] == 0) continue;
                const Rational f = E[ri][static_cast<std::size_t>(col)] / piv;
                for (long j = 0; j < cols; ++j)
                    E[ri][static_cast<std::size_t>(j)] -=
                        f * E[bestr][static_cast<std::size_t>(j)];
            }
        }
        RatMat sub(static_cast<std::size_t>(cols));
        for (long i = 0; i < cols; ++i) sub[i] = C[selected[static_cast<std::size_t>(i)]];
        RatMat sinv = rat_inverse(sub);
        std::vector<PAdicApprox> x;
        for (long i = 0; i < cols; ++i) {
            PAdicApprox acc = PAdicApprox::exact_zero(p);
            for (long j = 0; j < cols; ++j) {
                if (sinv[i][j] == 0) continue;
                acc = acc + r[selected[static_cast<std::size_t>(j)]].scale(sinv[i][j]);
            }
            x.push_back(acc);
        }
        // Every unselected row must be satisfied within its ball.
        for (std::size_t ri = 0; ri < C.size(); ++ri) {
            if (used[ri]) continue;
            PAdicApprox res = r[ri].scale(Rational(-1));
            for (long j = 0; j < cols; ++j) {
                if (C[ri][static_cast<std::size_t>(j)] == 0) continue;
                res = res + x[static_cast<std::size_t>(j)].scale(C[ri][static_cast<std::size_t>(j)]);
            }
            if (!res.may_be_zero())
                throw calc_error("solve_series: pair extraction residual fails to vanish");
        }
        long floor_n = coeff_val_lower(n, 2, p);
        for (long a = 1; a <= n - 1; ++a)
            F.S.d2[{a, n - a}] =
                clamp_to_floor(x[static_cast<std::size_t>(a - 1)], floor_n, p);
        F.cap2 = static_cast<int>(n);
    }
    pad_pairs(F);
    return F;
}

SolvedSeries invert_series(const SolvedSeries& F) {
    SolvedSeries G = F;
    G.S = DepthTwoSeries<PAdicApprox>::compose_inverse(F.S);
    G.inverse_direction = !F.inverse_direction;
    return G;
}

// ---------------------------------------------------------------------------
// Sigma point values
// ---------------------------------------------------------------------------

PAdicApprox sigma_value(const SolvedSeries& F, const Composition& parts, long a) {
    if (!parts.all_positive()) throw input_error("sigma_value: entries must be >= 1");
    if (a < 0) throw input_error("sigma_value: shift must be >= 0");
    const Int& p = F.p;
    long d = parts.depth();
    if (d == 0) return F.S.unit;
    if (d > 2) throw input_error("sigma_value: depth beyond 2 is not supported");
    SolvedBrackets prov(F, 1);
    if (a == 0) return prov.lsum(parts, 0);
    long w = parts.weight();
    long e = d + 1;  // e_1 count of the bracket words
    long va = vp(Int(a), p);
    long cap = (d == 1) ? F.cap1 : F.cap2;
    long lmax = std::max<long>(4, cap - w);
    PAdicApprox acc = PAdicApprox::exact_zero(p);
    if (d == 1) {
        long s = parts.s[0];
        for (long l = 0; l <= lmax; ++l)
            acc = acc + prov.lsum(comp1(s + l), 0).scale(Rational(binom(Int(-s), l)) * ipow(a, l));
    } else {
        long s2 = parts.s[0], s1 = parts.s[1];
        for (long l2 = 0; l2 <= lmax; ++l2)
            for (long l1 = 0; l1 <= lmax; ++l1)
                acc = acc + prov.lsum(comp2(s2 + l2, s1 + l1), 0)
                                .scale(Rational(binom(Int(-s2), l2)) *
                                       Rational(binom(Int(-s1), l1)) * ipow(a, l1 + l2));
    }
    // Tail over shift exponents beyond lmax: each omitted term is a bracket
    // sum of words of weight >= w + lmax + 2, scaled by a^{total shift}.
    long tail = env_scan(
        w + lmax + 2,
        [&](long m) {
            long f = lsum_tail_floor(p, e, m, 0);
            if (f >= INF_PREC) return INF_PREC;
            return sat_add(f, (m - w - 1) * va);
        },
        /*slack=*/8);
    return acc + ball(p, tail);
}

// ---------------------------------------------------------------------------
// Verifications
// ---------------------------------------------------------------------------

namespace {

VerifyOutcome outcome_from(const PAdicApprox::Compare& cmp, long prec) {
    VerifyOutcome out;
    out.achieved = cmp.available;
    switch (cmp.status) {
        case PAdicApprox::Compare::Status::Equal:
            out.pass = true;
            break;
        case PAdicApprox::Compare::Status::Differ:
            out.pass = false;
            out.note = "values differ within certified precision";
            break;
        case PAdicApprox::Compare::Status::Undecided:
            out.pass = false;
            out.note = "certified precision below requested modulus";
            break;
    }
    if (out.pass && cmp.available < prec) {
        out.pass = false;
        out.note = "certified precision below requested modulus";
    }
    return out;
}

/// Bracket part of the depth-1 window transfer at scale Z:
/// sum over L of Z^{t+L} (bracket at e_0^L e_1 e_0^{t-1} e_1) =
/// (p^k Z)^t H_{p^k Z}(t) - Z^t H_Z(t).
PAdicApprox bracket_part1(const SolvedSeries& F, long Z, long t) {
    SolvedBrackets prov(F, Z);
    return prov.lsum(comp1(t), 0);
}

/// Same at depth 2: (p^k Z)^{wt} H_{p^k Z}(c) - Z^{wt} H_Z(c) for a pair c,
/// computed as the full action value minus its trivial term.
PAdicApprox bracket_part2(const SolvedSeries& F, long Z, const Composition& c,
                          HsumCache& cache) {
    SolvedBrackets prov(F, Z);
    HarPoint<PAdicApprox> h = window_point_for(F.p, Z, c, cache);
    PAdicApprox act = har_act_value<PAdicApprox>(prov, h, c);
    return act - h.at(c);
}

}  // namespace

VerifyOutcome verify_transfer_instance(const SolvedSeries& F, long N, long a,
                                       const Composition& c, long prec) {
    if (!c.all_positive() || c.depth() < 1 || c.depth() > 2)
        throw input_error("verify_transfer_instance: composition depth must be 1 or 2");
    if (N < 1 || a < 0) throw input_error("verify_transfer_instance: bad window");
    const Int& p = F.p;
    const long pk = to_long(pow_int(p, F.k));
    const long PN = pk * N;
    const long w = c.weight();
    HsumCache cache(std::max<long>(F.cap2, w));

    if (a == 0) {
        SolvedBrackets prov(F, N);
        HarPoint<PAdicApprox> h = window_point_for(p, N, c, cache);
        PAdicApprox act = har_act_value<PAdicApprox>(prov, h, c);
        PAdicApprox target = embed(p, ipow(PN, w) * cache.get(c, PN));
        return outcome_from(act.eq_mod(target, prec), prec);
    }

    const long vN = vp(Int(N), p);
    const long va = vp(Int(a), p);
    const long k = F.k;
    PAdicApprox target =
        embed(p, ipow(PN, w) * hsum_window(c, a * PN, (a + 1) * PN));

    if (c.depth() == 1) {
        long s = c.s[0];
        long lmax = std::max<long>(prec + 2, 4);
        PAdicApprox acc = embed(p, ipow(N, s) * hsum_window(c, a * N, (a + 1) * N));
        for (long l = 0; l <= lmax; ++l)
            acc = acc +
                  bracket_part1(F, N, s + l).scale(Rational(binom(Int(-s), l)) * ipow(a, l));
        // Elementary binomial tail: v >= s(1+vN) + (l)(1+va+vN) for the
        // omitted exponents l > lmax.
        acc = acc + ball(p, s * (1 + vN) + (lmax + 1) * (1 + va + vN));
        return outcome_from(acc.eq_mod(target, prec), prec);
    }

    // Depth 2.  The shifted window splits by divisibility of each index by
    // p^k; multiples reduce exactly to the small window, mixed terms to
    // solved depth-1 bracket parts at scales y < N, and the unit-unit block
    // to solved pair bracket parts.
    if (to_long(p) <= N)
        throw input_error("verify_transfer_instance: shifted pair check needs p > N");
    long s2 = c.s[0], s1 = c.s[1];
    long lmax = std::max<long>(prec + 2, 4);
    PAdicApprox acc = embed(p, ipow(N, w) * hsum_window(c, a * N, (a + 1) * N));

    // Mixed block, inner index a multiple: prefactor N^{s1} (aN+y)^{-s1}.
    for (long y = 1; y <= N - 1; ++y) {
        Rational pref = ipow(N, s1) / Rational(pow_int(Int(a * N + y), s1));
        PAdicApprox inner = PAdicApprox::exact_zero(p);
        for (long l2 = 0; l2 <= lmax; ++l2) {
            long t2 = s2 + l2;
            PAdicApprox u = bracket_part1(F, N, t2) -
                            bracket_part1(F, y, t2).scale(rational_pow(Rational(Int(N), Int(y)), t2));
            inner = inner + u.scale(Rational(binom(Int(-s2), l2)) * ipow(a, l2));
        }
        inner = inner + ball(p, s2 * (1 + vN) + (lmax + 1) * (1 + va + vN));
        acc = acc + inner.scale(pref);
    }
    // Mixed block, outer index a multiple: prefactor N^{s2} (aN+y)^{-s2}.
    for (long y = 1; y <= N - 1; ++y) {
        Rational pref = ipow(N, s2) / Rational(pow_int(Int(a * N + y), s2));
        PAdicApprox inner = PAdicApprox::exact_zero(p);
        for (long l1 = 0; l1 <= lmax; ++l1) {
            long t1 = s1 + l1;
            inner = inner + bracket_part1(F, y, t1)
                                .scale(rational_pow(Rational(Int(N), Int(y)), t1) *
                                       Rational(binom(Int(-s1), l1)) * ipow(a, l1));
        }
        inner = inner + ball(p, s1 * (1 + vN) + (lmax + 1) * (1 + va + vN));
        acc = acc + inner.scale(pref);
    }
    // Unit-unit block.
    for (long l2 = 0; l2 <= lmax; ++l2) {
        for (long l1 = 0; l1 <= lmax; ++l1) {
            long t2 = s2 + l2, t1 = s1 + l1;
            PAdicApprox uu = bracket_part2(F, N, comp2(t2, t1), cache);
            for (long y = 1; y <= N - 1; ++y) {
                Rational ry = Rational(Int(N), Int(y));
                uu = uu - bracket_part1(F, y, t1).scale(rational_pow(ry, t1 + t2));
                uu = uu - bracket_part1(F, N, t2).scale(rational_pow(ry, t1));
                uu = uu + bracket_part1(F, y, t2).scale(rational_pow(ry, t1 + t2));
            }
            acc = acc + uu.scale(Rational(binom(Int(-s2), l2)) * Rational(binom(Int(-s1), l1)) *
                                 ipow(a, l1 + l2));
        }
    }
    acc = acc + ball(p, w * (1 + vN) + (lmax + 1) * (1 + va + vN));
    return outcome_from(acc.eq_mod(target, prec), prec);
}

VerifyOutcome verify_closedform_instance(const SolvedSeries& F, const Composition& parts,
                                         long prec) {
    if (F.k != 1)
        throw input_error("verify_closedform_instance: only the single-power level");
    if (!parts.all_positive() || parts.depth() < 1 || parts.depth() > 2)
        throw input_error("verify_closedform_instance: depth must be 1 or 2");
    const Int& p = F.p;
    const long pl = to_long(p);
    auto ztilde1 = [&](long m) {
        return F.zeta(comp1(m)).scale(Rational(1) / Rational(pow_int(p, m)));
    };
    auto ztilde2 = [&](long x, long y) {
        return F.zeta(comp2(x, y)).scale(Rational(1) / Rational(pow_int(p, x + y)));
    };
    // Weight-normalized depth-1 sum: sum over l of p^l C(l+s-1, l)
    // ztilde(s+l), with the profile tail beyond the table.
    auto lfold1 = [&](long s) {
        PAdicApprox acc = PAdicApprox::exact_zero(p);
        for (long l = 0; s + l <= F.cap1; ++l)
            acc = acc + ztilde1(s + l).scale(Rational(pow_int(p, l)) *
                                             Rational(binom(Int(l + s - 1), l)));
        long tail = env_scan(F.cap1 + 1,
                             [&](long m) { return coeff_val_lower(m, 1, p) - s; },
                             /*slack=*/s + 4);
        return acc + ball(p, tail);
    };
    if (parts.depth() == 1) {
        long s = parts.s[0];
        Rational sign = (s % 2 == 0) ? Rational(1) : Rational(-1);
        PAdicApprox approx =
            ztilde1(s).scale(Rational(-1)) + lfold1(s).scale(-sign);
        PAdicApprox target = embed(p, hsum(parts, pl));
        return outcome_from(approx.eq_mod(target, prec), prec);
    }
    long s2 = parts.s[0], s1 = parts.s[1];
    long w = s2 + s1;
    // Trailing term: the pair value itself.
    PAdicApprox T2 = ztilde2(s2, s1);
    // Middle term: (-1)^{s2} (depth-1 fold at s2) * ztilde(s1).
    Rational sg2 = (s2 % 2 == 0) ? Rational(1) : Rational(-1);
    PAdicApprox T1 = (lfold1(s2) * ztilde1(s1)).scale(sg2);
    // Leading term: (-1)^{s1+s2} double fold into the pair table.
    PAdicApprox T0 = PAdicApprox::exact_zero(p);
    for (long l1 = 0; l1 <= F.cap2 - w; ++l1) {
        for (long l2 = 0; l1 + l2 <= F.cap2 - w; ++l2) {
            T0 = T0 + ztilde2(s1 + l1, s2 + l2)
                          .scale(Rational(pow_int(p, l1 + l2)) *
                                 Rational(binom(Int(l1 + s1 - 1), l1)) *
                                 Rational(binom(Int(l2 + s2 - 1), l2)));
        }
    }
    long tail0 = env_scan(F.cap2 + 1,
                          [&](long m) { return coeff_val_lower(m, 2, p) - w; },
                          /*slack=*/w + 4);
    T0 = T0 + ball(p, tail0);
    Rational sg0 = ((s1 + s2) % 2 == 0) ? Rational(1) : Rational(-1);
    PAdicApprox approx = T2 + T1 + T0.scale(sg0);
    PAdicApprox target = embed(p, hsum(parts, pl));
    return outcome_from(approx.eq_mod(target, prec), prec);
}

VerifyOutcome verify_action_roundtrip(const SolvedSeries& Finv, const SolvedSeries& Ffwd,
                                      const Composition& c, long prec) {
    if (Finv.p != Ffwd.p || Finv.k != Ffwd.k)
        throw input_error("verify_action_roundtrip: mismatched series");
    if (!c.all_positive() || c.depth() < 1 || c.depth() > 2)
        throw input_error("verify_action_roundtrip: depth must be 1 or 2");
    const Int& p = Finv.p;
    // Point of exact weight-normalized window values (the image of the
    // trivial point under the inverse direction).
    HarPoint<PAdicApprox> h;
    h.set(Composition(), embed(p, Rational(1)));
    long top = std::max<long>(c.weight(), 1);
    for (long x = 1; x <= top; ++x)
        h.set(comp1(x), embed(p, finite_mzv_rational(comp1(x), p, Finv.k, 0)));
    if (c.depth() == 2) {
        for (long x = 1; x <= c.s[0]; ++x)
            for (long y = 1; y <= c.s[1]; ++y)
                h.set(comp2(x, y), embed(p, finite_mzv_rational(comp2(x, y), p, Finv.k, 0)));
    }
    SolvedBrackets prov(Ffwd, 1);
    PAdicApprox act = har_act_value<PAdicApprox>(prov, h, c);
    return outcome_from(act.eq_mod_rational(Rational(0), prec), prec);
}

}  // namespace pmhs
