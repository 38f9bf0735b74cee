// Tests for the action of truncated series on harmonic-sum points.
//
// The independent oracle is the verified series-level substitution h1(e0, h2):
// for a series F whose bracket at e_0^L e_1 (word of c) depends only on c,
// the acted point's value at c equals the substituted series' bracket at
// e_0^Λ e_1 (word of c), where the leading-exponent sum is truncated at the
// room Λ the finite word offers.  The closed forms at depth 1 and 2 and the
// graded/twist identities are re-derived independently inside the tests.

#include <map>
#include <random>
#include <vector>

#include "doctest.h"
#include "pmhs/geometric.hpp"
#include "pmhs/haraction.hpp"
#include "pmhs/ihara.hpp"
#include "pmhs/series.hpp"

using pmhs::Composition;
using pmhs::HarPoint;
using pmhs::NCSeries;
using pmhs::Rational;
using pmhs::SeriesSymBrackets;
using pmhs::Word;

namespace {

Composition comp(std::initializer_list<long> e) { return Composition(std::vector<long>(e)); }

// e_0^L e_1 (word of c): the template word with explicit leading exponent.
Word lead_word(long L, const Composition& c) {
    return concat(Word::e0_pow(static_cast<int>(L)), concat(Word::e1(), c.word()));
}

Rational rnd_small(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
    return Rational(num(rng)) / den(rng);
}

// A random point with entries on every composition of weight <= wmax,
// including a stored entry at the empty composition (default 1).
HarPoint<Rational> random_point(long wmax, std::mt19937_64& rng, Rational empty_value = 1) {
    HarPoint<Rational> h;
    for (const Composition& c : pmhs::compositions_up_to_weight(wmax)) {
        if (c.depth() == 0)
            h.set(c, empty_value);
        else
            h.set(c, rnd_small(rng));
    }
    return h;
}

// Brackets of an explicit series with the leading-exponent sum truncated at
// lmax instead of the weight cap (used to match the room a finite word
// offers in the substitution oracle).
struct CappedBrackets : pmhs::SymBrackets<Rational> {
    const NCSeries<Rational>& S;
    long lmax;
    CappedBrackets(const NCSeries<Rational>& s, long l) : S(s), lmax(l) {}

    Rational bracket(const Composition& c, long rho) const override {
        long w = c.weight() + rho;
        if (c.depth() == 0 || w > S.cap()) return 0;
        return S.coeff(concat(c.word(), Word::e0_pow(static_cast<int>(rho))));
    }
    Rational lsum(const Composition& c, long rho) const override {
        Rational acc = 0;
        for (long L = 0; L <= lmax; ++L) {
            std::vector<long> e;
            e.push_back(L + 1);
            e.insert(e.end(), c.s.begin(), c.s.end());
            acc += bracket(Composition(e), rho);
        }
        return acc;
    }
};

// Weight-n coefficients scaled by N^{n-1} — how the scaling automorphism of
// the composition transforms a symmetrized series.
NCSeries<Rational> twist_sym(const NCSeries<Rational>& S, long N) {
    NCSeries<Rational> out(S.cap());
    for (int n = 1; n <= S.cap(); ++n) {
        Rational f = pmhs::rational_pow(Rational(N), n - 1);
        for (std::uint64_t b = 0; b < (std::uint64_t(1) << n); ++b) {
            Word w{n, b};
            out.coeff(w) = S.coeff(w) * f;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("symmetrized brackets of a reduced grouplike series") {
    std::mt19937_64 rng(2026'08'01);
    const int cap = 8;
    NCSeries<Rational> g = pmhs::random_grouplike(cap, rng, /*tilde_subgroup=*/true);
    NCSeries<Rational> S = pmhs::sym_series(g);
    SeriesSymBrackets<Rational> B(S);

    // the letter itself carries coefficient 1
    CHECK(B.bracket(comp({1}), 0) == 1);
    // depth-1 brackets with any padding vanish when g has no weight-1 part
    for (long lam = 0; lam <= 4; ++lam)
        for (long rho = 0; rho <= 4; ++rho)
            if (lam + rho >= 1) CHECK(B.bracket(comp({lam + 1}), rho) == 0);
    // so the leading sums over depth-1 templates collapse
    CHECK(B.lsum(Composition(), 0) == 1);
    for (long rho = 1; rho <= 4; ++rho) CHECK(B.lsum(Composition(), rho) == 0);

    // sigma_point = leading sums, against a direct loop over words
    std::vector<Composition> comps = pmhs::compositions_up_to_weight(4);
    HarPoint<Rational> sig = pmhs::sigma_point(B, comps);
    for (const Composition& c : comps) {
        if (c.depth() == 0) continue;
        Rational direct = 0;
        for (long L = 0; L + 1 + c.weight() <= cap; ++L) direct += S.coeff(lead_word(L, c));
        CHECK(sig.at(c) == direct);
    }
}

TEST_CASE("full action: closed form at depth 1") {
    std::mt19937_64 rng(411);
    const int cap = 8;
    NCSeries<Rational> g = pmhs::random_grouplike(cap, rng, true);
    NCSeries<Rational> S = pmhs::sym_series(g);
    SeriesSymBrackets<Rational> B(S);
    HarPoint<Rational> h = random_point(7, rng);

    for (long s1 = 1; s1 <= 5; ++s1) {
        Rational expect = h.at(comp({s1})) + B.lsum(comp({s1}), 0);
        CHECK(pmhs::har_act_value(B, h, comp({s1})) == expect);
    }
}

TEST_CASE("full action: closed form at depth 2") {
    std::mt19937_64 rng(412);
    const int cap = 8;
    NCSeries<Rational> g = pmhs::random_grouplike(cap, rng, true);
    NCSeries<Rational> S = pmhs::sym_series(g);
    SeriesSymBrackets<Rational> B(S);
    HarPoint<Rational> h = random_point(7, rng);

    for (long s2 = 1; s2 <= 3; ++s2)
        for (long s1 = 1; s1 <= 3; ++s1) {
            Rational expect = h.at(comp({s2, s1})) + B.lsum(comp({s2, s1}), 0);
            for (long r2 = 0; r2 <= s2 - 1; ++r2)
                expect += h.at(comp({s2 - r2})) * B.bracket(comp({r2 + 1, s1}), 0);
            for (long r1 = 0; r1 <= s1 - 1; ++r1)
                expect += h.at(comp({s1 - r1})) * B.lsum(comp({s2}), r1);
            CHECK(pmhs::har_act_value(B, h, comp({s2, s1})) == expect);
        }
}

TEST_CASE("graded action: closed forms at depths 1 and 2") {
    std::mt19937_64 rng(413);
    const int cap = 8;
    NCSeries<Rational> g = pmhs::random_grouplike(cap, rng, true);
    NCSeries<Rational> S = pmhs::sym_series(g);
    SeriesSymBrackets<Rational> B(S);
    HarPoint<Rational> h = random_point(7, rng);

    // The identity part lives at grade 0 only; each grade-t part collects the
    // covers whose segments have total (weight - 1) equal to t.
    for (long t = 0; t <= 7; ++t) {
        for (long s1 = 1; s1 <= 4; ++s1) {
            Rational expect = (t == 0) ? h.at(comp({s1})) : Rational(0);
            if (t >= s1) expect += B.bracket(comp({t - s1 + 1, s1}), 0);
            CHECK(pmhs::har_act_value(B, h, comp({s1}), t) == expect);
        }
        for (long s2 = 1; s2 <= 3; ++s2)
            for (long s1 = 1; s1 <= 3; ++s1) {
                Rational expect = (t == 0) ? h.at(comp({s2, s1})) : Rational(0);
                if (t >= s1 + s2) expect += B.bracket(comp({t - s1 - s2 + 1, s2, s1}), 0);
                if (t >= s1 && t <= s1 + s2 - 1)
                    expect += h.at(comp({s2 + s1 - t})) * B.bracket(comp({t - s1 + 1, s1}), 0);
                if (t >= s2)
                    for (long r1 = 0; r1 <= std::min(s1 - 1, t - s2); ++r1)
                        expect += h.at(comp({s1 - r1})) *
                                  B.bracket(comp({t - s2 - r1 + 1, s2}), r1);
                CHECK(pmhs::har_act_value(B, h, comp({s2, s1}), t) == expect);
            }
    }
}

TEST_CASE("graded action: grade zero is the identity") {
    std::mt19937_64 rng(414);
    const int cap = 6;
    // holds for any grouplike actor (only the unit coefficient of the
    // conjugated letter matters), so test off the reduced subgroup too
    for (bool tilde : {true, false}) {
        NCSeries<Rational> g = pmhs::random_grouplike(cap, rng, tilde);
        SeriesSymBrackets<Rational> B(pmhs::sym_series(g));
        HarPoint<Rational> h = random_point(5, rng);
        for (const Composition& c : pmhs::compositions_up_to_weight(5)) {
            if (c.depth() == 0) continue;
            CHECK(pmhs::har_act_value(B, h, c, 0) == h.at(c));
        }
    }
}

TEST_CASE("graded action: twisting the actor rescales grades") {
    std::mt19937_64 rng(415);
    const int cap = 7;
    NCSeries<Rational> g = pmhs::random_grouplike(cap, rng, true);
    NCSeries<Rational> S = pmhs::sym_series(g);
    SeriesSymBrackets<Rational> B(S);
    HarPoint<Rational> h = random_point(6, rng);

    for (long N : {2L, 3L}) {
        NCSeries<Rational> SN = twist_sym(S, N);
        SeriesSymBrackets<Rational> BN(SN);
        for (const Composition& c : pmhs::compositions_up_to_weight(5)) {
            if (c.depth() == 0) continue;
            Rational full = pmhs::har_act_value(BN, h, c);
            Rational graded = 0;
            long tmax = static_cast<long>(c.depth() + 1) * (cap - 1);
            for (long t = 0; t <= tmax; ++t)
                graded += pmhs::rational_pow(Rational(N), t) *
                          pmhs::har_act_value(B, h, c, t);
            CHECK(full == graded);
        }
    }
}

TEST_CASE("full action against direct series substitution") {
    std::mt19937_64 rng(416);
    const int cap = 8;

    // Slot-filling series: arbitrary coefficients, except that words without
    // the second letter vanish (as for every symmetrized series — the cover
    // walker does not enumerate pure-e0 segments, so fillers supported on
    // them are outside its domain).
    NCSeries<Rational> Psi(cap);
    for (int n = 1; n <= cap; ++n)
        for (std::uint64_t b = 0; b < (std::uint64_t(1) << n); ++b) {
            Word w{n, b};
            bool has_e1 = false;
            for (int pos = 0; pos < n; ++pos)
                if (w.letter(pos) == 1) has_e1 = true;
            Psi.coeff(w) = has_e1 ? rnd_small(rng) : Rational(0);
        }

    // Acted-on series: bracket at e_0^L e_1 (word of c) depends only on c;
    // all other words (those not ending in the second letter) vanish.
    std::map<Composition, Rational> v;
    for (const Composition& c : pmhs::compositions_up_to_weight(cap - 1)) {
        Rational x = rnd_small(rng);
        if (c.depth() == 0 && x == 0) x = 1;
        v[c] = x;
    }
    NCSeries<Rational> F(cap);
    for (long L = 0; L + 1 <= cap; ++L)
        for (const Composition& c : pmhs::compositions_up_to_weight(cap - 1 - L))
            F.coeff(lead_word(L, c)) = v[c];
    HarPoint<Rational> h;
    for (const auto& [c, x] : v) h.set(c, x);

    // Substitution oracle: h1(e0, h2) with h1 = F, h2 = Psi.
    NCSeries<Rational> R = pmhs::sym_ihara_action(Psi, F);

    for (const Composition& c : pmhs::compositions_up_to_weight(3)) {
        if (c.depth() == 0) continue;
        for (long lam = 0; lam + 1 + c.weight() <= cap; ++lam) {
            CappedBrackets B(Psi, lam);
            CHECK(pmhs::har_act_value(B, h, c) == R.coeff(lead_word(lam, c)));
        }
    }

    // With the room maxed out, the capped sums agree with the plain provider.
    SeriesSymBrackets<Rational> Bfull(Psi);
    CappedBrackets Bcap(Psi, cap);
    for (const Composition& c : pmhs::compositions_up_to_weight(3)) {
        if (c.depth() == 0) continue;
        CHECK(pmhs::har_act_value(Bfull, h, c) == pmhs::har_act_value(Bcap, h, c));
    }
}

TEST_CASE("actions compose grade by grade") {
    std::mt19937_64 rng(417);
    const int cap = 7;
    NCSeries<Rational> g1 = pmhs::random_grouplike(cap, rng, true);
    NCSeries<Rational> g2 = pmhs::random_grouplike(cap, rng, true);
    NCSeries<Rational> G = pmhs::ihara_action(g2, g1);

    SeriesSymBrackets<Rational> B1(pmhs::sym_series(g1));
    SeriesSymBrackets<Rational> B2(pmhs::sym_series(g2));
    SeriesSymBrackets<Rational> BG(pmhs::sym_series(G));

    std::vector<Composition> comps = pmhs::compositions_up_to_weight(4);
    HarPoint<Rational> h = random_point(4, rng);

    for (long t = 0; t <= 5; ++t) {
        // inner action's grade-b parts as points (empty coordinate delta_b0)
        std::vector<HarPoint<Rational>> Hb;
        for (long b = 0; b <= t; ++b) Hb.push_back(pmhs::har_act(B1, h, comps, b));
        for (const Composition& c : comps) {
            if (c.depth() == 0) continue;
            Rational lhs = pmhs::har_act_value(BG, h, c, t);
            Rational rhs = 0;
            for (long b = 0; b <= t; ++b)
                rhs += pmhs::har_act_value(B2, Hb[static_cast<std::size_t>(b)], c, t - b);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("composition enumeration by weight") {
    std::vector<Composition> c3 = pmhs::compositions_up_to_weight(3);
    // {}, 1, 11, 111, 12, 2, 21, 3
    CHECK(c3.size() == 8);
    std::size_t empties = 0;
    for (const Composition& c : c3) {
        CHECK(c.weight() <= 3);
        CHECK(c.all_positive());
        if (c.depth() == 0) ++empties;
    }
    CHECK(empties == 1);
    // weights <= w enumerate 2^w compositions in total
    CHECK(pmhs::compositions_up_to_weight(6).size() == 64);
}
