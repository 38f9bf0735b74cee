#include "pmhs/geometric.hpp"

#include <map>
#include <utility>

namespace pmhs {

Rational rational_pow(const Rational& x, long e) {
    if (e < 0) throw input_error("rational_pow: negative exponent");
    return Rational(pow_int(rat_num(x), e), pow_int(rat_den(x), e));
}

Rational geometric_sum_direct(const std::vector<Poly>& A,
                              const std::vector<Rational>& X, long k) {
    if (A.size() != X.size()) throw input_error("geometric_sum_direct: size mismatch");
    const int d = static_cast<int>(A.size());
    if (d == 0) return 1;
    std::vector<Rational> F(static_cast<std::size_t>(d) + 1, Rational(0));
    F[0] = 1;
    std::vector<Rational> xpow(static_cast<std::size_t>(d), Rational(1));
    for (long w = 0; w <= k - 1; ++w) {
        for (int j = d; j >= 1; --j) {
            const Rational factor =
                xpow[static_cast<std::size_t>(j - 1)] * poly_eval(A[static_cast<std::size_t>(j - 1)], Rational(w));
            if (factor == 0) continue;
            F[static_cast<std::size_t>(j)] += F[static_cast<std::size_t>(j - 1)] * factor;
        }
        for (int j = 0; j < d; ++j) xpow[static_cast<std::size_t>(j)] *= X[static_cast<std::size_t>(j)];
    }
    return F[static_cast<std::size_t>(d)];
}

namespace {

// Symbolic sum_{w=0}^{W-1} w^j X^w as a combination of terms
// (e, b) -> c(W), meaning c(W) * (X^W)^e / (X-1)^b.
using Terms = std::map<std::pair<int, int>, Poly>;

Terms euler_base() {
    Terms t;
    t[{1, 1}] = poly_const(1);
    t[{0, 1}] = poly_const(-1);
    return t;
}

Terms euler_D(const Terms& in) {
    Terms out;
    for (const auto& [key, c] : in) {
        auto [e, b] = key;
        // (e W - b) * c stays at (e, b)
        Poly lin(2, Rational(0));
        lin[0] = Rational(-b);
        lin[1] = Rational(e);
        poly_trim(lin);
        Poly first = poly_mul(lin, c);
        if (!first.empty()) {
            auto& slot = out[{e, b}];
            slot = poly_add(slot, first);
        }
        // -b * c moves to (e, b+1)
        Poly second = poly_scale(c, Rational(-b));
        if (!second.empty()) {
            auto& slot = out[{e, b + 1}];
            slot = poly_add(slot, second);
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.empty())
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

// Terms for sum_{w=0}^{W-1} A(w) X^w, A a polynomial.
Terms euler_for_poly(const Poly& A) {
    Terms acc;
    Terms power = euler_base();  // D^0
    for (std::size_t j = 0; j < A.size(); ++j) {
        if (A[j] != 0) {
            for (const auto& [key, c] : power) {
                Poly scaled = poly_scale(c, A[j]);
                auto& slot = acc[key];
                slot = poly_add(slot, scaled);
            }
        }
        if (j + 1 < A.size()) power = euler_D(power);
    }
    for (auto it = acc.begin(); it != acc.end();) {
        if (it->second.empty())
            it = acc.erase(it);
        else
            ++it;
    }
    return acc;
}

Rational geometric_sum_rec(const std::vector<Poly>& A,
                           const std::vector<Rational>& X, long k) {
    const std::size_t d = A.size();
    if (d == 0) return 1;
    const Rational& x = X[0];
    if (x == 1) throw pole_error("pole");
    Terms terms = euler_for_poly(A[0]);
    Rational total = 0;
    for (const auto& [key, c] : terms) {
        auto [e, b] = key;
        Rational denom = rational_pow(x - 1, b);
        if (d == 1) {
            // evaluate at W = k: c(k) * X^{e k} / (X-1)^b
            Rational val = poly_eval(c, Rational(k)) * rational_pow(x, e * k) / denom;
            total += val;
        } else {
            // Collapse w_1: remaining sum over 0 <= w_2 < ... <= k-1 of
            // c(w_2) * (X_1^e X_2)^{w_2} A_2(w_2) * rest.
            std::vector<Poly> A2(A.begin() + 1, A.end());
            A2[0] = poly_mul(A2[0], c);
            std::vector<Rational> X2(X.begin() + 1, X.end());
            X2[0] = rational_pow(x, e) * X2[0];
            total += geometric_sum_rec(A2, X2, k) / denom;
        }
    }
    return total;
}

}  // namespace

Rational geometric_sum(const std::vector<Poly>& A,
                       const std::vector<Rational>& X, long k) {
    if (A.size() != X.size()) throw input_error("geometric_sum: size mismatch");
    return geometric_sum_rec(A, X, k);
}

}  // namespace pmhs
