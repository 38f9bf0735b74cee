// Exact rational utilities and certified p-adic arithmetic.
#include <random>

#include "doctest.h"
#include "pmhs/padic.hpp"
#include "pmhs/profile.hpp"
#include "pmhs/rational.hpp"

using namespace pmhs;

TEST_CASE("rational parsing and printing round-trip") {
    CHECK(rat_str(Rational(25, 12)) == "25/12");
    CHECK(rat_str(Rational(-3)) == "-3");
    CHECK(rat_parse("25/12") == Rational(25, 12));
    CHECK(rat_parse("-7") == Rational(-7));
    CHECK(rat_parse("-6/4") == Rational(-3, 2));
    CHECK_THROWS_AS(rat_parse("1/0"), input_error);
    CHECK_THROWS_AS(rat_parse("x"), input_error);
}

TEST_CASE("p-adic valuation of integers and rationals") {
    CHECK(vp(Int(250), Int(5)) == 3);
    CHECK(vp(Rational(25, 12), Int(5)) == 2);
    CHECK(vp(Rational(1, 5), Int(5)) == -1);
    CHECK(vp(Rational(12, 25), Int(5)) == -2);
    CHECK_THROWS_AS(vp(Int(0), Int(5)), input_error);
}

TEST_CASE("binomial coefficients with negative tops") {
    CHECK(binom(-2, 3) == Int(-4));
    CHECK(binom(-1, 5) == Int(-1));
    CHECK(binom(7, 3) == Int(35));
    CHECK(binom(3, 5) == Int(0));
    CHECK(binom(0, 0) == Int(1));
    CHECK(binom(5, -1) == Int(0));
    // reflection identity binom(-s, l) = (-1)^l binom(s+l-1, l)
    for (long s = 1; s <= 6; ++s)
        for (long l = 0; l <= 8; ++l) {
            Int lhs = binom(Int(-s), l);
            Int rhs = ((l % 2) ? -1 : 1) * binom(Int(s + l - 1), l);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("Bernoulli numbers") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == Rational(0));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    // von Staudt-Clausen: v_p(B_n) >= -1 for a few primes
    for (long n = 2; n <= 40; n += 2)
        for (long pl : {2L, 3L, 5L, 7L}) {
            if (bernoulli(n) == 0) continue;
            CHECK(vp(bernoulli(n), Int(pl)) >= -1);
        }
    CHECK_THROWS_AS(bernoulli(257), input_error);
}

TEST_CASE("power-sum coefficients reproduce sum_{n<N} n^l") {
    for (long l = 0; l <= 6; ++l) {
        for (long N = 1; N <= 12; ++N) {
            Rational direct = 0;
            for (long n = 0; n < N; ++n) direct += Rational(pow_int(Int(n), l));
            Rational poly = 0;
            for (long u = 1; u <= l + 1; ++u)
                poly += power_sum_coeff(l, u) * Rational(pow_int(Int(N), u));
            CHECK(direct == poly);
        }
    }
}

TEST_CASE("p-adic reduction of rationals") {
    PAdicApprox x = padic_reduce(Rational(25, 12), 5, 3);
    CHECK(x.is_unit_class());
    CHECK(x.valuation() == 2);
    CHECK(x.unit() == Int(73));  // 1/12 = 73 mod 125
    CHECK(x.rel_prec() == 3);
    CHECK(x.abs_prec() == 5);

    PAdicApprox y = padic_reduce(Rational(1, 5), 5, 3);
    CHECK(y.valuation() == -1);
    CHECK(y.unit() == Int(1));

    CHECK(padic_reduce(Rational(0), 5, 3).is_exact_zero());
}

TEST_CASE("p-adic arithmetic tracks worst-case precision exactly") {
    Int p = 5;
    auto a = PAdicApprox::from_rational(p, Rational(2), 4);    // 2 + O(5^4)
    auto b = PAdicApprox::from_rational(p, Rational(3), 4);    // 3 + O(5^4)
    auto s = a + b;                                            // 5 * unit; abs prec 4
    CHECK(s.is_unit_class());
    CHECK(s.valuation() == 1);
    CHECK(s.rel_prec() == 3);
    CHECK(s.abs_prec() == 4);

    // full cancellation of known digits -> zero class at the joint precision
    // (a ball minus itself is NOT the exact zero: only the centers cancel)
    auto z = a - a;
    CHECK(z.is_zero_class());
    CHECK(z.val_min() == 4);
    auto a2 = PAdicApprox::from_rational(p, Rational(2 + 625), 4);  // same digits mod 5^4
    auto z2 = a - a2;
    CHECK(z2.is_zero_class());
    CHECK(z2.val_min() == 4);

    // multiplication: valuations add, relative precision is the min
    auto y = PAdicApprox::from_rational(p, Rational(1, 5), 2);
    auto m = s * y;
    CHECK(m.is_unit_class());
    CHECK(m.valuation() == 0);
    CHECK(m.rel_prec() == 2);
}

TEST_CASE("p-adic multiplication, division, powers") {
    Int p = 7;
    auto a = PAdicApprox::from_rational(p, Rational(10), 5);
    auto b = PAdicApprox::from_rational(p, Rational(3, 7), 4);
    auto prod = a * b;
    CHECK(prod.valuation() == -1);
    CHECK(prod.rel_prec() == 4);
    auto q = prod / b;
    CHECK(q.valuation() == 0);
    // recovered digits agree with a at the shared precision
    auto cmp = q.eq_mod(a, 4);
    CHECK(cmp.status == PAdicApprox::Compare::Status::Equal);

    auto cube = a.pow(3);
    CHECK(cube.valuation() == 0);
    auto inv = a.pow(-1);
    auto one = a * inv;
    CHECK(one.is_unit_class());
    CHECK(one.valuation() == 0);
    CHECK(one.unit() == Int(1));

    CHECK_THROWS_AS(PAdicApprox::zero_mod(p, 3).pow(-1), calc_error);
    CHECK_THROWS_AS(a / PAdicApprox::zero_mod(p, 3), calc_error);
}

TEST_CASE("p-adic tri-state comparison") {
    Int p = 5;
    auto a = PAdicApprox::from_rational(p, Rational(2), 3);
    auto b = PAdicApprox::from_rational(p, Rational(2 + 125), 6);
    // difference is 125 * unit: equal mod 5^3, different mod 5^4
    auto e3 = a.eq_mod(b, 3);
    CHECK(e3.status == PAdicApprox::Compare::Status::Equal);
    // a only carries 3 digits, so mod 5^4 the question is undecidable
    auto e4 = a.eq_mod(b, 4);
    CHECK(e4.status == PAdicApprox::Compare::Status::Undecided);
    CHECK(e4.available == 3);

    auto c = PAdicApprox::from_rational(p, Rational(3), 6);
    auto d = a.eq_mod(c, 3);
    CHECK(d.status == PAdicApprox::Compare::Status::Differ);
    CHECK(d.available == 0);  // difference is a unit

    auto r = a.eq_mod_rational(Rational(2), 3);
    CHECK(r.status == PAdicApprox::Compare::Status::Equal);
}

TEST_CASE("p-adic containment soundness under random arithmetic") {
    // Random exact rationals, mirrored in ball arithmetic: the exact result
    // must always lie inside the computed ball.
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> numd(-50, 50);
    std::uniform_int_distribution<long> dend(1, 30);
    Int p = 5;
    for (int iter = 0; iter < 200; ++iter) {
        Rational x(numd(rng), dend(rng));
        Rational y(numd(rng), dend(rng));
        if (x == 0 || y == 0) continue;
        auto xa = PAdicApprox::from_rational(p, x, 4);
        auto ya = PAdicApprox::from_rational(p, y, 4);
        Rational ops_exact[3] = {x + y, x - y, x * y};
        PAdicApprox ops_ball[3] = {xa + ya, xa - ya, xa * ya};
        for (int i = 0; i < 3; ++i) {
            long M = ops_ball[i].abs_prec();
            if (M >= INF_PREC) {
                CHECK(ops_exact[i] == 0);
                continue;
            }
            auto cmp = ops_ball[i].eq_mod_rational(ops_exact[i], M);
            CHECK(cmp.status == PAdicApprox::Compare::Status::Equal);
        }
    }
}

TEST_CASE("certified integer log bounds") {
    CHECK(logp_floor(Int(1), Int(5)) == 0);
    CHECK(logp_floor(Int(124), Int(5)) == 2);
    CHECK(logp_floor(Int(125), Int(5)) == 3);
    CHECK(logp_ceil(Int(125), Int(5)) == 3);
    CHECK(logp_ceil(Int(126), Int(5)) == 4);
    // a/16 upper bound: log_5(10) ~ 1.4306; minimal a with 10^16 <= 5^a is 23
    long a = logp_upper_sixteenths(Int(10), Int(5));
    CHECK(a == 23);
    CHECK(power_sum_coeff_val_lower(4, Int(5)) == -2);  // 1/(l+1) = 1/5
    CHECK(power_sum_coeff_val_lower(3, Int(5)) == -1);
}

TEST_CASE("p-adic value formatting") {
    CHECK(padic_reduce(Rational(25, 12), 5, 3).str() == "5^2 * (73 + O(5^3))");
    CHECK(PAdicApprox::zero_mod(5, 4).str() == "O(5^4)");
    CHECK(PAdicApprox::exact_zero().str() == "0");
}
