#pragma once
// Truncated noncommutative series known through words with at most two
// occurrences of the second letter.
//
// A unit-constant-term series f with f[e_0] = f[e_1] = 0 that is group-like
// (shuffle character) up to the working precision is determined, over that
// range, by its values on composition words: pure e_0^m words vanish for
// m >= 1, and a trailing e_0 block is removed by the shuffle relation
//
//     0 = <f, e_0^b sh u>   (b >= 1, u a composition word)
//
// which rewrites f[u e_0^b] as an integer combination of pure composition
// coefficients of the same weight.  This type stores the two tables
//
//     d1[m]      = f[e_0^{m-1} e_1]                     (weight m >= 2)
//     d2[(a,b)]  = f[e_0^{a-1} e_1 e_0^{b-1} e_1]       (weight a+b >= 2)
//
// and derives padded coefficients, the concatenation antipode on this range,
// the brackets of the symmetrized series f^{-1} e_1 f at up to three e_1's,
// the scaling automorphism, and the twisted composition g ∘ f = g·f(e0,
// g^{-1}e1g) together with its inverse — everything restricted to outputs
// with at most two e_1's, which is closed under these operations (a product
// coefficient at such a word only reads inputs of the same kind).
//
// The scalar type K is exact rationals (oracle tests) or certified p-adic
// balls (solver output); K{} must be the exact zero and `unit` an exact 1.

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "pmhs/coeff.hpp"
#include "pmhs/geometric.hpp"
#include "pmhs/rational.hpp"
#include "pmhs/util.hpp"

namespace pmhs {

template <class K>
struct DepthTwoSeries {
    int cap = 0;  // inclusive weight cap
    K unit{};     // exact multiplicative unit of K
    std::map<long, K> d1;
    std::map<std::pair<long, long>, K> d2;

    DepthTwoSeries() = default;
    DepthTwoSeries(int cap_, K unit_) : cap(cap_), unit(std::move(unit_)) {}

    /// f[e_0^{m-1} e_1]; weight-1 coefficient is identically zero.
    K coeff1(long m) const {
        check_weight(m);
        if (m == 1) return K{};
        auto it = d1.find(m);
        if (it == d1.end()) throw input_error("DepthTwoSeries: missing depth-1 weight " + std::to_string(m));
        return it->second;
    }

    /// f[e_0^{a-1} e_1 e_0^{b-1} e_1] for the display pair (a, b), a, b >= 1.
    K coeff2(long a, long b) const {
        check_weight(a + b);
        if (a < 1 || b < 1) throw input_error("DepthTwoSeries: pair entries must be >= 1");
        auto it = d2.find({a, b});
        if (it == d2.end())
            throw input_error("DepthTwoSeries: missing pair " + std::to_string(a) + "," +
                              std::to_string(b));
        return it->second;
    }

    /// f[e_0^a e_1 e_0^b]  (one e_1, b trailing): (-1)^b C(a+b, b) f[e_0^{a+b} e_1].
    K padded1(long a, long b) const {
        check_weight(a + b + 1);
        K base = coeff1(a + b + 1);
        Rational c = Rational(binom(a + b, b));
        if (b % 2 != 0) c = -c;
        return CoeffOps<K>::scale(base, c);
    }

    /// f[e_0^{a1} e_1 e_0^{a2} e_1 e_0^b]  (two e_1's, b trailing), by
    /// stripping the trailing block with the shuffle relation.
    K padded2(long a1, long a2, long b) const {
        check_weight(a1 + a2 + b + 2);
        if (b == 0) return coeff2(a1 + 1, a2 + 1);
        auto key = std::make_tuple(a1, a2, b);
        auto it = pad2_cache_.find(key);
        if (it != pad2_cache_.end()) return it->second;
        // 0 = sum over b1+b2+b3 = b of C(a1+b1,b1) C(a2+b2,b2) f[e_0^{a1+b1}
        // e_1 e_0^{a2+b2} e_1 e_0^{b3}]; isolate the b3 = b term (coeff 1).
        K acc{};
        for (long b3 = 0; b3 < b; ++b3)
            for (long b1 = 0; b1 <= b - b3; ++b1) {
                long b2 = b - b3 - b1;
                K t = padded2(a1 + b1, a2 + b2, b3);
                Rational c = Rational(binom(a1 + b1, b1)) * Rational(binom(a2 + b2, b2));
                acc = acc + CoeffOps<K>::scale(t, c);
            }
        K out = CoeffOps<K>::scale(acc, Rational(-1));
        pad2_cache_.emplace(key, out);
        return out;
    }

    /// Concatenation antipode at one e_1: f^{-1}[e_0^l e_1 e_0^a]
    /// = (-1)^{l+1+a} f[e_0^a e_1 e_0^l].
    K inv1(long l, long a) const {
        K v = padded1(a, l);
        return ((l + 1 + a) % 2 != 0) ? CoeffOps<K>::scale(v, Rational(-1)) : v;
    }

    /// Antipode at two e_1's: f^{-1}[e_0^l e_1 e_0^a e_1 e_0^b]
    /// = (-1)^{l+a+b} f[e_0^b e_1 e_0^a e_1 e_0^l].
    K inv2(long l, long a, long b) const {
        K v = padded2(b, a, l);
        return ((l + a + b) % 2 != 0) ? CoeffOps<K>::scale(v, Rational(-1)) : v;
    }

    /// Brackets of the symmetrized series f^{-1} e_1 f, split at the letter
    /// the conjugation inserts.  One e_1: word e_0^l e_1 e_0^r.
    K sym1(long l, long r) const {
        if (l == 0 && r == 0) return unit;
        return K{};
    }

    /// Two e_1's: word e_0^l e_1 e_0^{s-1} e_1 e_0^r  (s >= 1).
    K sym2(long l, long s, long r) const {
        K acc{};
        if (l == 0) acc = acc + padded1(s - 1, r);
        if (r == 0) acc = acc + inv1(l, s - 1);
        return acc;
    }

    /// Three e_1's: word e_0^l e_1 e_0^{s2-1} e_1 e_0^{s1-1} e_1 e_0^r.
    K sym3(long l, long s2, long s1, long r) const {
        K acc{};
        if (l == 0) acc = acc + padded2(s2 - 1, s1 - 1, r);
        acc = acc + inv1(l, s2 - 1) * padded1(s1 - 1, r);
        if (r == 0) acc = acc + inv2(l, s2 - 1, s1 - 1);
        return acc;
    }

    /// Scaling automorphism: weight-n coefficients scaled by lambda^n.
    DepthTwoSeries tau(const Rational& lambda) const {
        DepthTwoSeries out(cap, unit);
        for (const auto& [m, v] : d1) out.d1[m] = CoeffOps<K>::scale(v, rational_pow(lambda, m));
        for (const auto& [ab, v] : d2)
            out.d2[ab] = CoeffOps<K>::scale(v, rational_pow(lambda, ab.first + ab.second));
        return out;
    }

    /// Twisted composition g ∘ f = g · f(e0, g^{-1} e1 g) restricted to at
    /// most two e_1's; both inputs must share cap and have the tables filled
    /// through it.
    static DepthTwoSeries compose(const DepthTwoSeries& g, const DepthTwoSeries& f) {
        if (g.cap != f.cap) throw input_error("DepthTwoSeries::compose: cap mismatch");
        DepthTwoSeries out(g.cap, g.unit);
        for (long n = 2; n <= g.cap; ++n) out.d1[n] = g.coeff1(n) + f.coeff1(n);
        for (long n = 2; n <= g.cap; ++n)
            for (long c1 = 1; c1 < n; ++c1) {
                long c2 = n - c1;
                out.d2[{c1, c2}] = compose_pair(g, f, c1, c2);
            }
        return out;
    }

    /// Composition inverse (g with g ∘ f = 1): depth-1 negates; the
    /// two-e_1 table is isolated weight by weight from the product formula.
    static DepthTwoSeries compose_inverse(const DepthTwoSeries& f) {
        DepthTwoSeries g(f.cap, f.unit);
        for (long n = 2; n <= f.cap; ++n) g.d1[n] = CoeffOps<K>::scale(f.coeff1(n), Rational(-1));
        for (long n = 2; n <= f.cap; ++n)
            for (long c1 = 1; c1 < n; ++c1) {
                long c2 = n - c1;
                g.d2[{c1, c2}] = K{};  // placeholder so compose_pair can read it
            }
        for (long n = 2; n <= f.cap; ++n)
            for (long c1 = 1; c1 < n; ++c1) {
                long c2 = n - c1;
                // (g ∘ f)[w] = g[w] + rest(w); rest only reads g's depth-1
                // data and the already-final f tables, so one pass suffices.
                K rest = compose_pair(g, f, c1, c2) - g.coeff2(c1, c2);
                g.d2[{c1, c2}] = CoeffOps<K>::scale(rest, Rational(-1));
            }
        return g;
    }

private:
    mutable std::map<std::tuple<long, long, long>, K> pad2_cache_;

    void check_weight(long n) const {
        if (n < 1 || n > cap)
            throw input_error("DepthTwoSeries: weight " + std::to_string(n) +
                              " outside cap " + std::to_string(cap));
    }

    // (g ∘ f) at the two-e_1 word e_0^{c1-1} e_1 e_0^{c2-1} e_1.
    static K compose_pair(const DepthTwoSeries& g, const DepthTwoSeries& f, long c1, long c2) {
        K acc = g.coeff2(c1, c2) + f.coeff2(c1, c2) + f.coeff1(c1) * g.coeff1(c2);
        // a single slot of f absorbs both letters through the conjugated
        // letter's two-e_1 bracket g^{-1}[e_0^{c1-1-a} e_1 e_0^{c2-1}]
        for (long a = 0; a <= c1 - 1; ++a) {
            K t = f.coeff1(a + 1) * g.inv1(c1 - 1 - a, c2 - 1);
            acc = acc + t;
        }
        // leading factor of g ends inside the middle run
        for (long j = 0; j <= c2 - 1; ++j) {
            K t = g.padded1(c1 - 1, j) * f.coeff1(c2 - j);
            acc = acc + t;
        }
        return acc;
    }
};

}  // namespace pmhs
