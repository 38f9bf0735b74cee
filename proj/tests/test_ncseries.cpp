// Words, truncated noncommutative series, shuffle/concatenation products,
// and the twisted composition (Ihara-type) operations.
#include <random>

#include "doctest.h"
#include "pmhs/ihara.hpp"
#include "pmhs/series.hpp"
#include "pmhs/word.hpp"

using namespace pmhs;

using QS = NCSeries<Rational>;

TEST_CASE("word basics") {
    Word w = Word::parse("011");
    CHECK(w.weight() == 3);
    CHECK(w.depth() == 2);
    CHECK(w.str() == "011");
    CHECK(w.first() == 0);
    CHECK(w.last() == 1);
    CHECK(concat(Word::parse("01"), Word::parse("1")) == w);
    CHECK(w.prefix(2) == Word::parse("01"));
    CHECK(w.suffix(2) == Word::parse("11"));
    CHECK(w.tail() == Word::parse("11"));
    CHECK(Word::parse("") == Word::empty());

    // composition (2,1) <-> word e0 e1 e1
    CHECK(word_of_composition({2, 1}) == w);
    CHECK(composition_of_word(w) == std::vector<long>{2, 1});
    CHECK(word_of_composition({3}) == Word::parse("001"));
    CHECK_THROWS_AS(composition_of_word(Word::parse("10")), input_error);
    CHECK(is_composition_word(Word::empty()));
}

TEST_CASE("shuffle of words: counts and small cases") {
    auto sh = shuffle_words(Word::parse("0"), Word::parse("1"));
    CHECK(sh.size() == 2);
    CHECK(sh[Word::parse("01")] == 1);
    CHECK(sh[Word::parse("10")] == 1);

    // |u ⧢ v| = binom(|u|+|v|, |u|) with multiplicity
    auto sh2 = shuffle_words(Word::parse("01"), Word::parse("01"));
    Int total = 0;
    for (auto& [w, m] : sh2) total += m;
    CHECK(total == Int(6));
    CHECK(sh2[Word::parse("0011")] == 4);  // x y ⧢ x y = 4 xxyy + 2 xyxy
    CHECK(sh2[Word::parse("0101")] == 2);
}

TEST_CASE("concatenation product and inverse") {
    int cap = 6;
    QS f = QS::unit(cap, 1);
    f.coeff(Word::parse("0")) = Rational(2);
    f.coeff(Word::parse("01")) = Rational(-1, 3);
    QS g = f.inverse();
    QS prod = f.concat_mul(g);
    CHECK(prod.coeff(Word::empty()) == 1);
    bool all_zero = true;
    for (int n = 1; n <= cap; ++n)
        for (std::uint64_t b = 0; b < (std::uint64_t(1) << n); ++b)
            if (prod.coeff(Word{n, b}) != 0) all_zero = false;
    CHECK(all_zero);

    QS h(cap);  // zero constant term
    h.coeff(Word::parse("1")) = 1;
    CHECK_THROWS_WITH_AS(h.inverse(), "non-unit constant term", calc_error);
}

TEST_CASE("exp/log of the concatenation algebra") {
    int cap = 6;
    QS P(cap);
    P.coeff(Word::parse("0")) = Rational(1, 2);
    P.coeff(Word::parse("1")) = Rational(-2);
    P.coeff(Word::parse("01")) = Rational(1, 3);
    QS f = exp_concat(P);
    CHECK(f.coeff(Word::empty()) == 1);
    QS back = log_concat(f);
    for (int n = 0; n <= cap; ++n)
        for (std::uint64_t b = 0; b < (std::uint64_t(1) << n); ++b)
            CHECK(back.coeff(Word{n, b}) == P.coeff(Word{n, b}));
}

TEST_CASE("exp of a Lie series is group-like; random instances") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 5; ++t) {
        QS f = random_grouplike(6, rng, false);
        CHECK(!grouplike_defect(f).has_value());
    }
    // tilde variant kills weight-1 coefficients
    QS g = random_grouplike(6, rng, true);
    CHECK(!grouplike_defect(g).has_value());
    CHECK(g.coeff(Word::parse("0")) == 0);
    CHECK(g.coeff(Word::parse("1")) == 0);
}

TEST_CASE("group-like defect detects failures") {
    int cap = 4;
    QS f = QS::unit(cap, 1);
    f.coeff(Word::parse("0")) = 1;
    // f = 1 + e0 is not group-like: f[e0]^2 = 1 but <f, e0 ⧢ e0> = 2 f[e0 e0] = 0
    auto defect = grouplike_defect(f);
    REQUIRE(defect.has_value());
    CHECK(defect->first == Word::parse("0"));
    CHECK(defect->second == Word::parse("0"));
}

TEST_CASE("shuffle product of series matches the character property") {
    // For group-like f, the shuffle square satisfies
    // (f ⧢ f)[w] = sum over (u,v) splittings = 2^{|w|} ... spot-check against
    // direct subsequence enumeration on small random series instead.
    std::mt19937_64 rng(7);
    int cap = 5;
    QS f(cap), g(cap);
    std::uniform_int_distribution<int> c(-4, 4);
    for (int n = 0; n <= cap; ++n)
        for (std::uint64_t b = 0; b < (std::uint64_t(1) << n); ++b) {
            f.coeff(Word{n, b}) = Rational(c(rng));
            g.coeff(Word{n, b}) = Rational(c(rng));
        }
    QS fg = f.shuffle_mul(g);
    // check one word by hand: w = 011
    Word w = Word::parse("011");
    Rational expect = 0;
    for (std::uint64_t mask = 0; mask < 8; ++mask)
        expect += f.coeff(subsequence(w, mask)) * g.coeff(subsequence(w, 0x7 & ~mask));
    CHECK(fg.coeff(w) == expect);
    // commutativity
    QS gf = g.shuffle_mul(f);
    for (int n = 0; n <= cap; ++n)
        for (std::uint64_t b = 0; b < (std::uint64_t(1) << n); ++b)
            CHECK(fg.coeff(Word{n, b}) == gf.coeff(Word{n, b}));
}

TEST_CASE("substitution f(e0, e1) is the identity") {
    std::mt19937_64 rng(3);
    QS f = random_grouplike(5, rng, false);
    QS E0 = QS::letter(5, 0, 1), E1 = QS::letter(5, 1, 1);
    QS sub = subst(f, E0, E1);
    for (int n = 0; n <= 5; ++n)
        for (std::uint64_t b = 0; b < (std::uint64_t(1) << n); ++b)
            CHECK(sub.coeff(Word{n, b}) == f.coeff(Word{n, b}));
}

TEST_CASE("composition: unit, group-like preservation, associativity") {
    std::mt19937_64 rng(2024);
    int cap = 6;
    QS one = QS::unit(cap, 1);
    QS f = random_grouplike(cap, rng, true);
    QS g = random_grouplike(cap, rng, true);
    QS h = random_grouplike(cap, rng, true);

    // unit on both sides
    QS lf = ihara_action(one, f);
    QS rf = ihara_action(f, one);
    for (int n = 0; n <= cap; ++n)
        for (std::uint64_t b = 0; b < (std::uint64_t(1) << n); ++b) {
            CHECK(lf.coeff(Word{n, b}) == f.coeff(Word{n, b}));
            CHECK(rf.coeff(Word{n, b}) == f.coeff(Word{n, b}));
        }

    // group-like closure
    QS gf = ihara_action(g, f);
    CHECK(!grouplike_defect(gf).has_value());

    // associativity: h ∘ (g ∘ f) = (h ∘ g) ∘ f
    QS a1 = ihara_action(h, gf);
    QS a2 = ihara_action(ihara_action(h, g), f);
    for (int n = 0; n <= cap; ++n)
        for (std::uint64_t b = 0; b < (std::uint64_t(1) << n); ++b)
            CHECK(a1.coeff(Word{n, b}) == a2.coeff(Word{n, b}));
}

TEST_CASE("composition inverse") {
    std::mt19937_64 rng(555);
    int cap = 6;
    QS f = random_grouplike(cap, rng, true);
    QS finv = ihara_inverse(f);
    QS prod = ihara_action(finv, f);
    QS prod2 = ihara_action(f, finv);
    QS one = QS::unit(cap, 1);
    for (int n = 0; n <= cap; ++n)
        for (std::uint64_t b = 0; b < (std::uint64_t(1) << n); ++b) {
            CHECK(prod.coeff(Word{n, b}) == one.coeff(Word{n, b}));
            CHECK(prod2.coeff(Word{n, b}) == one.coeff(Word{n, b}));
        }
}

TEST_CASE("tau is an automorphism of the composition") {
    std::mt19937_64 rng(77);
    int cap = 6;
    QS f = random_grouplike(cap, rng, true);
    QS g = random_grouplike(cap, rng, true);
    Rational lam(3, 2);
    QS lhs = ihara_action(g, f).tau(lam);
    QS rhs = ihara_action(g.tau(lam), f.tau(lam));
    for (int n = 0; n <= cap; ++n)
        for (std::uint64_t b = 0; b < (std::uint64_t(1) << n); ++b)
            CHECK(lhs.coeff(Word{n, b}) == rhs.coeff(Word{n, b}));
}

TEST_CASE("sym: primitivity, vanishing on pure e0 words, weight scaling") {
    std::mt19937_64 rng(31);
    int cap = 6;
    QS f = random_grouplike(cap, rng, true);
    QS s = sym_series(f);
    CHECK(!primitive_defect(s).has_value());
    for (int m = 0; m <= cap; ++m) CHECK(s.coeff(Word::e0_pow(m)) == 0);
    CHECK(s.coeff(Word::parse("1")) == 1);

    // sym(tau(N) f)[w] = N^{wt(w)-1} (sym f)[w]
    Rational N(4);
    QS st = sym_series(f.tau(N));
    for (int n = 1; n <= cap; ++n)
        for (std::uint64_t b = 0; b < (std::uint64_t(1) << n); ++b) {
            Rational scale = Rational(pow_int(Int(4), n - 1));
            CHECK(st.coeff(Word{n, b}) == scale * s.coeff(Word{n, b}));
        }
}

TEST_CASE("sym intertwines composition with substitution") {
    std::mt19937_64 rng(4242);
    int cap = 6;
    QS f = random_grouplike(cap, rng, true);
    QS g = random_grouplike(cap, rng, true);
    QS lhs = sym_series(ihara_action(g, f));
    QS rhs = sym_ihara_action(sym_series(g), sym_series(f));
    for (int n = 0; n <= cap; ++n)
        for (std::uint64_t b = 0; b < (std::uint64_t(1) << n); ++b)
            CHECK(lhs.coeff(Word{n, b}) == rhs.coeff(Word{n, b}));
}

TEST_CASE("subword-cover implementation of the sym composition agrees") {
    std::mt19937_64 rng(606);
    int cap = 5;
    QS f = random_grouplike(cap, rng, true);
    QS g = random_grouplike(cap, rng, true);
    QS h1 = sym_series(f), h2 = sym_series(g);
    QS a = sym_ihara_action(h2, h1);
    QS b = sym_ihara_action_subword(h2, h1);
    for (int n = 0; n <= cap; ++n)
        for (std::uint64_t bb = 0; bb < (std::uint64_t(1) << n); ++bb)
            CHECK(a.coeff(Word{n, bb}) == b.coeff(Word{n, bb}));
}

TEST_CASE("group-like coefficients on pure e0 powers follow from f[e0]") {
    std::mt19937_64 rng(11);
    QS f = random_grouplike(6, rng, false);
    Rational c = f.coeff(Word::parse("0"));
    Rational pw = 1;
    for (int m = 1; m <= 6; ++m) {
        pw *= c;
        CHECK(f.coeff(Word::e0_pow(m)) == pw / Rational(factorial(m)));
    }
}
