// JSON round-trips for the core value types.
#include <random>

#include "doctest.h"
#include "pmhs/jsonio.hpp"

using namespace pmhs;

TEST_CASE("p-adic JSON round trip") {
    PAdicApprox u = PAdicApprox::from_rational(5, Rational(25, 12), 3);
    PAdicApprox u2 = padic_from_json(padic_to_json(u));
    CHECK(u2.is_unit_class());
    CHECK(u2.valuation() == u.valuation());
    CHECK(u2.unit() == u.unit());
    CHECK(u2.rel_prec() == u.rel_prec());
    CHECK(u2.prime() == 5);

    PAdicApprox z = PAdicApprox::zero_mod(7, 4);
    PAdicApprox z2 = padic_from_json(padic_to_json(z));
    CHECK(z2.is_zero_class());
    CHECK(z2.val_min() == 4);
    CHECK(z2.prime() == 7);

    PAdicApprox e = PAdicApprox::exact_zero();
    PAdicApprox e2 = padic_from_json(padic_to_json(e));
    CHECK(e2.is_exact_zero());
    CHECK(e2.prime() == 0);

    PAdicApprox ep = PAdicApprox::exact_zero(11);
    PAdicApprox ep2 = padic_from_json(padic_to_json(ep));
    CHECK(ep2.is_exact_zero());
    CHECK(ep2.prime() == 11);

    CHECK_THROWS_AS(padic_from_json("{\"p\": \"5\"}"), input_error);
    CHECK_THROWS_AS(padic_from_json("not json"), input_error);
    CHECK_THROWS_AS(padic_from_json("{\"zero\": false}"), input_error);
}

TEST_CASE("series JSON round trip") {
    std::mt19937_64 rng(5);
    NCSeries<Rational> f = random_grouplike(4, rng, false);
    NCSeries<Rational> g = series_from_json(series_to_json(f));
    REQUIRE(g.cap() == f.cap());
    for (int n = 0; n <= f.cap(); ++n)
        for (std::uint64_t b = 0; b < (std::uint64_t(1) << n); ++b) {
            Word w{n, b};
            CHECK(g.coeff(w) == f.coeff(w));
        }

    // p-adic coefficients
    NCSeries<PAdicApprox> h(2);
    h.coeff(Word::empty()) = PAdicApprox::from_rational(5, 1, 4);
    h.coeff(Word::e1()) = PAdicApprox::from_rational(5, Rational(7, 3), 4);
    h.coeff(Word::parse("01")) = PAdicApprox::zero_mod(5, 6);
    NCSeries<PAdicApprox> h2 = series_from_json_padic(series_to_json(h));
    REQUIRE(h2.cap() == 2);
    CHECK(h2.coeff(Word::e1()).eq_mod(h.coeff(Word::e1()), 4).status ==
          PAdicApprox::Compare::Status::Equal);
    CHECK(h2.coeff(Word::parse("01")).is_zero_class());
    CHECK(h2.coeff(Word::e0()).is_exact_zero());

    CHECK_THROWS_AS(series_from_json("{\"cap\": 70, \"coeffs\": {}}"), input_error);
    CHECK_THROWS_AS(series_from_json("{\"cap\": 1, \"coeffs\": {\"0101\": \"1\"}}"),
                    input_error);
}

TEST_CASE("value-table JSON round trip") {
    HarPoint<Rational> h;
    h.set(Composition::parse("2,1"), Rational(5, 12));
    h.set(Composition::parse("1"), Rational(25, 12));
    h.set(Composition::parse(""), Rational(1));
    std::string txt = harpoint_to_json(h);
    HarPoint<Rational> h2 = harpoint_from_json(txt);
    REQUIRE(h2.entries.size() == 3);
    CHECK(h2.at(Composition::parse("2,1")) == Rational(5, 12));
    CHECK(h2.at(Composition::parse("1")) == Rational(25, 12));

    HarPoint<PAdicApprox> q;
    q.set(Composition::parse("3"), PAdicApprox::from_rational(7, Rational(2, 5), 3));
    HarPoint<PAdicApprox> q2 = harpoint_from_json_padic(harpoint_to_json(q));
    CHECK(q2.at(Composition::parse("3")).unit() == q.at(Composition::parse("3")).unit());

    CHECK_THROWS_AS(harpoint_from_json("{}"), input_error);
}
