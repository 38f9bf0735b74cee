// Decomposition identities: every engine must reproduce the direct chain
// enumeration, exactly for the exact engines and to certified precision for
// the p-adic ones.
#include <random>

#include "doctest.h"
#include "pmhs/decomp.hpp"

using namespace pmhs;

using Status = PAdicApprox::Compare::Status;

namespace {
Composition random_comp(std::mt19937_64& rng, int dmax, long emin, long emax) {
    int d = static_cast<int>(rng() % static_cast<unsigned>(dmax + 1));
    std::vector<long> s;
    for (int i = 0; i < d; ++i) {
        long e = emin + static_cast<long>(rng() % static_cast<unsigned>(emax - emin + 1));
        if (e == 0) e = 1;
        s.push_back(e);
    }
    return Composition(s);
}
}  // namespace

TEST_CASE("reflection: negated reversed window") {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 60; ++iter) {
        Composition s = random_comp(rng, 3, -2, 3);
        long M = static_cast<long>(rng() % 5);
        long N = M + static_cast<long>(rng() % 9);
        CHECK(reflected_window(s, M, N) == hsum_window(s, M, N));
    }
    // fully negative windows and windows through zero (monomial entries only)
    CHECK(reflected_window(Composition::parse("2,1"), -7, -2) ==
          hsum_window(Composition::parse("2,1"), -7, -2));
    Composition mono(std::vector<long>{-2, -1});
    CHECK(reflected_window(mono, -4, 3) == hsum_window(mono, -4, 3));
}

TEST_CASE("translation with monomial entries is exact") {
    std::mt19937_64 rng(37);
    for (int iter = 0; iter < 60; ++iter) {
        Composition s = random_comp(rng, 3, -3, -1);
        for (auto& e : s.s) e = -std::abs(e);  // entries <= 0 (keep -1..-3, map stray 1)
        long M = static_cast<long>(rng() % 7);
        long N = static_cast<long>(rng() % 9);
        CHECK(translated_window_exact(s, M, N) == hsum_window(s, M, M + N));
    }
    CHECK(translated_window_exact(Composition(std::vector<long>{0, -1}), 3, 4) ==
          hsum_window(Composition(std::vector<long>{0, -1}), 3, 7));
    CHECK_THROWS_AS(translated_window_exact(Composition::parse("2"), 1, 4), input_error);
}

TEST_CASE("single interior cut point") {
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 80; ++iter) {
        Composition s = random_comp(rng, 3, 1, 4);
        long M = static_cast<long>(rng() % 4);
        long N = M + 2 + static_cast<long>(rng() % 10);
        long C = M + static_cast<long>(rng() % (N - M + 1));  // M <= C <= N
        CHECK(window_split(s, M, C, N) == hsum_window(s, M, N));
    }
    CHECK_THROWS_AS(window_split(Composition::parse("1"), 2, 9, 5), input_error);
}

TEST_CASE("several cut points at once") {
    std::mt19937_64 rng(43);
    for (int iter = 0; iter < 60; ++iter) {
        Composition s = random_comp(rng, 3, 1, 4);
        long M = static_cast<long>(rng() % 3);
        long N = M + 3 + static_cast<long>(rng() % 12);
        std::vector<long> cuts;
        for (long c = M + 1; c < N; ++c)
            if (rng() % 3 == 0) cuts.push_back(c);
        CHECK(window_multicut(s, M, cuts, N) == hsum_window(s, M, N));
        if (cuts.size() == 1)
            CHECK(window_multicut(s, M, cuts, N) == window_split(s, M, cuts[0], N));
    }
    CHECK_THROWS_AS(window_multicut(Composition::parse("1"), 0, {3, 3}, 6), input_error);
    CHECK_THROWS_AS(window_multicut(Composition::parse("1"), 0, {6}, 6), input_error);
}

TEST_CASE("digit cut points") {
    CHECK(digit_cutpoints(7, 2) == std::vector<long>{4, 6});
    CHECK(digit_cutpoints(8, 2) == std::vector<long>{});
    CHECK(digit_cutpoints(5, 3) == std::vector<long>{3});
    CHECK(digit_cutpoints(25, 5) == std::vector<long>{});
    CHECK(digit_cutpoints(37, 5) == std::vector<long>{25, 35});
    CHECK(digit_cutpoints(4, 10) == std::vector<long>{});
    // cutting the window at the digit walk reproduces the sum
    for (long N : {7L, 11L, 19L, 26L}) {
        for (long p : {2L, 3L, 5L}) {
            Composition s = Composition::parse("2,1");
            CHECK(window_multicut(s, 0, digit_cutpoints(N, p), N) == hsum(s, N));
        }
    }
}

TEST_CASE("product window: anchors and level windows") {
    std::mt19937_64 rng(47);
    for (int iter = 0; iter < 40; ++iter) {
        Composition s = random_comp(rng, 3, 1, 4);
        long N = 1 + static_cast<long>(rng() % 8);
        long M = 1 + static_cast<long>(rng() % 8);
        CHECK(product_window(s, N, M) == hsum(s, N * M));
    }
    // the two factors play different roles: check both orders anyway
    Composition s = Composition::parse("2,1,1");
    CHECK(product_window(s, 6, 5) == hsum(s, 30));
    CHECK(product_window(s, 5, 6) == hsum(s, 30));
}

TEST_CASE("valuation pattern regrouping") {
    for (long p : {2L, 3L, 5L}) {
        for (long k : {1L, 2L}) {
            for (const char* txt : {"1", "2", "2,1", "1,1", "1,1,1"}) {
                Composition s = Composition::parse(txt);
                CHECK(valuation_pattern_sum(s, p, k) == hsum(s, static_cast<long>(pow_int(Int(p), k))));
            }
        }
    }
    CHECK(valuation_pattern_sum(Composition::parse("3,2"), 2, 3) ==
          hsum(Composition::parse("3,2"), 8));
}

TEST_CASE("Fermat exponent swap") {
    for (long p : {5L, 7L}) {
        for (long r : {1L, 2L}) {
            for (const char* txt : {"1", "2", "3", "2,1", "1,1"}) {
                Composition s = Composition::parse(txt);
                Rational F = fermat_exponent_sum(s, p, r);
                CHECK(rat_den(F) == 1);  // plain integer
                Rational diff = F - hsum(s, p);
                if (diff != 0) CHECK(vp(diff, Int(p)) >= r);
            }
        }
    }
}

TEST_CASE("translated window, p-adic series") {
    // shift by multiples of 25 over a window below 5: certified congruence
    for (long a : {1L, 2L, 7L}) {
        Composition s = Composition::parse("2,1");
        PAdicApprox w = translated_window_taylor(s, 5, 25 * a, 5, 6);
        Rational exact = hsum_window(s, 25 * a, 25 * a + 5);
        auto cmp = w.eq_mod_rational(exact, 5);
        CHECK(cmp.status == Status::Equal);
    }
    // valuation precondition: v_p(M) must exceed every v_p(n) in the window
    CHECK_THROWS_AS(translated_window_taylor(Composition::parse("1"), 5, 5, 6, 4),
                    input_error);
}

TEST_CASE("shifted normalized windows") {
    for (long p : {5L, 7L}) {
        for (long a : {0L, 1L, 2L}) {
            for (const char* txt : {"1", "2", "2,1"}) {
                Composition s = Composition::parse(txt);
                PAdicApprox z = finite_mzv_shifted(s, p, 1, a, 8);
                Rational exact = finite_mzv_rational(s, p, 1, a);
                CHECK(z.eq_mod_rational(exact, 4).status == Status::Equal);
            }
        }
    }
    // Frobenius power 2
    PAdicApprox z = finite_mzv_shifted(Composition::parse("2"), 5, 2, 1, 10);
    CHECK(z.eq_mod_rational(finite_mzv_rational(Composition::parse("2"), 5, 2, 1), 4).status ==
          Status::Equal);
}

TEST_CASE("residue decomposition, depth 1") {
    for (long p : {5L, 7L}) {
        for (long k : {1L, 2L}) {
            for (long N = 1; N <= 4; ++N) {
                for (long s = 1; s <= 5; ++s) {
                    PAdicApprox v = residue_split_depth1(s, p, k, N, 8);
                    long P = static_cast<long>(pow_int(Int(p), k));
                    Rational exact =
                        Rational(pow_int(Int(P) * N, s)) * hsum(Composition({s}), P * N);
                    CHECK(v.eq_mod_rational(exact, 4).status == Status::Equal);
                }
            }
        }
    }
}

TEST_CASE("residue decomposition, depth 2") {
    // pinned small case: P = 2, N = 2, s = (1,1): target 16 * H_4(1,1) = 16
    {
        PAdicApprox v = residue_split_depth2(Composition::parse("1,1"), 2, 1, 2, 6);
        CHECK(Rational(16) * hsum(Composition::parse("1,1"), 4) == Rational(16));
        CHECK(v.eq_mod_rational(Rational(16), 4).status == Status::Equal);
    }
    for (long p : {5L, 7L}) {
        for (long N = 1; N <= 4; ++N) {
            for (long s1 = 1; s1 <= 3; ++s1) {
                for (long s2 = 1; s2 + s1 <= 5; ++s2) {
                    Composition s(std::vector<long>{s2, s1});
                    PAdicApprox v = residue_split_depth2(s, p, 1, N, 8);
                    long P = p;
                    Rational exact =
                        Rational(pow_int(Int(P) * N, s.weight())) * hsum(s, P * N);
                    CHECK(v.eq_mod_rational(exact, 4).status == Status::Equal);
                }
            }
        }
    }
    // one Frobenius-power-2 case
    Composition s = Composition::parse("2,1");
    PAdicApprox v = residue_split_depth2(s, 5, 2, 2, 10);
    Rational exact = Rational(pow_int(Int(50), 3)) * hsum(s, 50);
    CHECK(v.eq_mod_rational(exact, 4).status == Status::Equal);
}

TEST_CASE("digit expansion, depth 1") {
    for (long p : {2L, 3L}) {
        for (long N = 2; N <= 20; ++N) {
            for (long s = 1; s <= 3; ++s) {
                PAdicApprox v = digit_expansion_depth1(s, p, N, 16);
                CHECK(v.eq_mod_rational(hsum(Composition({s}), N), 4).status == Status::Equal);
            }
        }
    }
}

TEST_CASE("doubling the truncation order refines, never contradicts") {
    PAdicApprox a = residue_split_depth1(2, 5, 1, 3, 6);
    PAdicApprox b = residue_split_depth1(2, 5, 1, 3, 12);
    long m = std::min(a.abs_prec(), b.abs_prec());
    CHECK(a.eq_mod(b, m).status == Status::Equal);
    PAdicApprox c = digit_expansion_depth1(2, 2, 19, 14);
    PAdicApprox d = digit_expansion_depth1(2, 2, 19, 28);
    m = std::min(c.abs_prec(), d.abs_prec());
    CHECK(c.eq_mod(d, m).status == Status::Equal);
}
