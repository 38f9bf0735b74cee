#pragma once
// The twisted (Ihara-type) composition of noncommutative series, and the
// associated "one-variable" images.
//
// For series f, g with unit constant term, the composition is
//
//     g ∘ f  =  g · f(e0, g^{-1} e1 g)
//
// (concatenation products; substitution replaces every e1 by the conjugate
// g^{-1} e1 g and keeps e0).  On group-like series this is an associative
// group law with unit 1; tau(lambda) is an automorphism of it.
//
// sym(f) = f^{-1} e1 f is the conjugated letter itself.  It is primitive
// when f is group-like, vanishes on pure-e0 words, and intertwines the
// composition with substitution:
//
//     sym(g ∘ f) = (sym f)(e0, sym g)
//
// — note the order: the *left* composition factor g enters through the
// e1-slots.  sym_ihara_action(h2, h1) below computes h1(e0, h2); a second,
// independent implementation enumerates subword covers directly and is used
// to cross-check the first.

#include "pmhs/series.hpp"

namespace pmhs {

/// g ∘ f = g · f(e0, g^{-1} e1 g).
template <class K>
NCSeries<K> ihara_action(const NCSeries<K>& g, const NCSeries<K>& f) {
    if (g.cap() != f.cap()) throw input_error("ihara_action: cap mismatch");
    const int cap = g.cap();
    // one = exact multiplicative unit compatible with K (for Rational this is
    // 1; for p-adic balls it is u/u at the working precision of g's constant
    // term).
    K c = g.coeff(Word::empty());
    K one = CoeffOps<K>::inv(c) * c;
    NCSeries<K> E1 = NCSeries<K>::letter(cap, 1, one);
    NCSeries<K> ginv = g.inverse();
    NCSeries<K> conj = ginv.concat_mul(E1).concat_mul(g);
    NCSeries<K> E0 = NCSeries<K>::letter(cap, 0, one);
    return g.concat_mul(subst(f, E0, conj));
}

/// sym(f) = f^{-1} e1 f.
template <class K>
NCSeries<K> sym_series(const NCSeries<K>& f) {
    const int cap = f.cap();
    K c = f.coeff(Word::empty());
    K one = CoeffOps<K>::inv(c) * c;
    NCSeries<K> E1 = NCSeries<K>::letter(cap, 1, one);
    return f.inverse().concat_mul(E1).concat_mul(f);
}

/// h1(e0, h2) — the composition rule on sym-images: with h1 = sym f and
/// h2 = sym g this equals sym(g ∘ f).  h2 must have zero constant term.
template <class K>
NCSeries<K> sym_ihara_action(const NCSeries<K>& h2, const NCSeries<K>& h1) {
    if (h2.cap() != h1.cap()) throw input_error("sym_ihara_action: cap mismatch");
    const int cap = h1.cap();
    // Need a nonzero coefficient to build the exact unit for the letter e0;
    // fall back to Rational-style construction via scale of a found unit.
    // Simplest robust choice: scale e0's coefficient from h1 or h2 if
    // available, else the result is h1's constant term alone.
    K one{};
    bool found = false;
    for (int n = 0; n <= cap && !found; ++n) {
        for (std::uint64_t b = 0; b < (std::uint64_t(1) << n) && !found; ++b) {
            const K& x = h1.coeff(Word{n, b});
            if (!CoeffOps<K>::exact_zero(x)) {
                try {
                    one = CoeffOps<K>::inv(x) * x;
                    found = true;
                } catch (const calc_error&) {
                }
            }
        }
    }
    if (!found) {
        if (h1.is_zero()) return NCSeries<K>(cap);
        throw calc_error("sym_ihara_action: no invertible coefficient to build a unit");
    }
    NCSeries<K> E0 = NCSeries<K>::letter(cap, 0, one);
    return subst(h1, E0, h2);
}

/// Independent implementation of h1(e0, h2) by direct enumeration: for each
/// output word w, sum over tuples of disjoint nonempty segments of w
/// (left-to-right, adjacency allowed, pure-e0 segments allowed) that cover
/// every e1 of w; the quotient word replaces each segment by e1 and keeps
/// the letters outside segments (all e0); the term is
/// h1[quotient] * prod h2[segment].
template <class K>
NCSeries<K> sym_ihara_action_subword(const NCSeries<K>& h2, const NCSeries<K>& h1) {
    if (h2.cap() != h1.cap()) throw input_error("sym_ihara_action_subword: cap mismatch");
    const int cap = h1.cap();
    NCSeries<K> out(cap);
    out.coeff(Word::empty()) = h1.coeff(Word::empty());

    // Recursive enumeration over positions of w: at each position either
    // (a) leave it outside all segments (only allowed for e0), or (b) start
    // a segment here and choose its end.  `partial` is the product of the
    // h2[segment] factors so far; `has_partial` distinguishes the empty
    // product (so no explicit multiplicative unit of K is ever needed).
    struct Walker {
        const NCSeries<K>& h1;
        const NCSeries<K>& h2;
        Word w;
        K total{};
        void go(int pos, Word quotient, const K& partial, bool has_partial) {
            if (pos == w.len) {
                const K& c = h1.coeff(quotient);
                if (!CoeffOps<K>::exact_zero(c))
                    total = total + (has_partial ? partial * c : c);
                return;
            }
            if (w.letter(pos) == 0)
                go(pos + 1, concat(quotient, Word::e0()), partial, has_partial);
            for (int end = pos + 1; end <= w.len; ++end) {
                // segment = positions [pos, end)
                Word seg = w.suffix(w.len - pos).prefix(end - pos);
                const K& c = h2.coeff(seg);
                if (CoeffOps<K>::exact_zero(c)) continue;
                go(end, concat(quotient, Word::e1()),
                   has_partial ? partial * c : c, true);
            }
        }
    };

    for (int n = 1; n <= cap; ++n) {
        for (std::uint64_t b = 0; b < (std::uint64_t(1) << n); ++b) {
            Word w{n, b};
            Walker walk{h1, h2, w, K{}};
            walk.go(0, Word::empty(), K{}, false);
            out.coeff(w) = walk.total;
        }
    }
    return out;
}

/// tau(lambda) as an operation on series (weight-n block scaled by
/// lambda^n); an automorphism of the composition on group-likes.
template <class K>
NCSeries<K> tau_twist(const NCSeries<K>& f, const Rational& lambda) {
    return f.tau(lambda);
}

/// Composition inverse: the series h with h ∘ f = f ∘ h = 1.  Computed by
/// the weight-triangular fixed point h = [f(e0, h^{-1} e1 h)]^{-1}: each
/// sweep extends correctness by at least one weight, so cap sweeps suffice.
template <class K>
NCSeries<K> ihara_inverse(const NCSeries<K>& f) {
    const int cap = f.cap();
    K c = f.coeff(Word::empty());
    K one = CoeffOps<K>::inv(c) * c;
    NCSeries<K> E0 = NCSeries<K>::letter(cap, 0, one);
    NCSeries<K> E1 = NCSeries<K>::letter(cap, 1, one);
    NCSeries<K> h = NCSeries<K>::unit(cap, one);
    for (int sweep = 0; sweep < cap; ++sweep) {
        NCSeries<K> conj = h.inverse().concat_mul(E1).concat_mul(h);
        h = subst(f, E0, conj).inverse();
    }
    return h;
}

}  // namespace pmhs
