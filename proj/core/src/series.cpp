#include "pmhs/series.hpp"

namespace pmhs {

std::optional<std::pair<Word, Word>> grouplike_defect(const NCSeries<Rational>& f) {
    if (f.coeff(Word::empty()) != 1) return std::make_pair(Word::empty(), Word::empty());
    int cap = f.cap();
    for (int a = 1; a < cap; ++a) {
        for (int b = 1; a + b <= cap; ++b) {
            for (std::uint64_t ub = 0; ub < (std::uint64_t(1) << a); ++ub) {
                Word u{a, ub};
                for (std::uint64_t vb = 0; vb < (std::uint64_t(1) << b); ++vb) {
                    Word v{b, vb};
                    Rational lhs = f.coeff(u) * f.coeff(v);
                    Rational rhs = pairing(f, shuffle_words(u, v));
                    if (lhs != rhs) return std::make_pair(u, v);
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<std::pair<Word, Word>> primitive_defect(const NCSeries<Rational>& f) {
    if (f.coeff(Word::empty()) != 0) return std::make_pair(Word::empty(), Word::empty());
    int cap = f.cap();
    for (int a = 1; a < cap; ++a) {
        for (int b = 1; a + b <= cap; ++b) {
            for (std::uint64_t ub = 0; ub < (std::uint64_t(1) << a); ++ub) {
                Word u{a, ub};
                for (std::uint64_t vb = 0; vb < (std::uint64_t(1) << b); ++vb) {
                    Word v{b, vb};
                    if (pairing(f, shuffle_words(u, v)) != 0)
                        return std::make_pair(u, v);
                }
            }
        }
    }
    return std::nullopt;
}

NCSeries<Rational> exp_concat(const NCSeries<Rational>& f) {
    if (f.coeff(Word::empty()) != 0)
        throw input_error("exp_concat: requires zero constant term");
    int cap = f.cap();
    NCSeries<Rational> out = NCSeries<Rational>::unit(cap, 1);
    NCSeries<Rational> pw = NCSeries<Rational>::unit(cap, 1);
    for (int k = 1; k <= cap; ++k) {
        pw = pw.concat_mul(f);
        out = out + pw.scaled(Rational(1, factorial(k)));
    }
    return out;
}

NCSeries<Rational> log_concat(const NCSeries<Rational>& f) {
    if (f.coeff(Word::empty()) != 1)
        throw input_error("log_concat: requires constant term 1");
    int cap = f.cap();
    NCSeries<Rational> h = f - NCSeries<Rational>::unit(cap, 1);
    NCSeries<Rational> out(cap);
    NCSeries<Rational> pw = NCSeries<Rational>::unit(cap, 1);
    for (int k = 1; k <= cap; ++k) {
        pw = pw.concat_mul(h);
        Rational c(k % 2 == 1 ? 1 : -1, k);
        out = out + pw.scaled(c);
    }
    return out;
}

NCSeries<Rational> random_grouplike(int cap, std::mt19937_64& rng, bool tilde_subgroup) {
    NCSeries<Rational> lie(cap);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> letter(0, 1);

    NCSeries<Rational> x0 = NCSeries<Rational>::letter(cap, 0, 1);
    NCSeries<Rational> x1 = NCSeries<Rational>::letter(cap, 1, 1);

    int min_weight = tilde_subgroup ? 2 : 1;
    for (int n = min_weight; n <= cap; ++n) {
        // A couple of random right-nested brackets of weight n per degree.
        for (int t = 0; t < 2; ++t) {
            Rational c(num(rng), den(rng));
            if (c == 0) continue;
            NCSeries<Rational> b = letter(rng) ? x1 : x0;
            for (int j = 1; j < n; ++j) {
                const NCSeries<Rational>& next = letter(rng) ? x1 : x0;
                b = lie_bracket(next, b);
            }
            lie = lie + b.scaled(c);
        }
    }
    return exp_concat(lie);
}

}  // namespace pmhs
