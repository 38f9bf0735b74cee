#include "pmhs/rational.hpp"

#include <mutex>
#include <vector>

namespace pmhs {

std::string rat_str(const Rational& x) {
    Int d = rat_den(x);
    if (d == 1) return rat_num(x).str();
    return rat_num(x).str() + "/" + d.str();
}

Rational rat_parse(const std::string& s) {
    if (s.empty()) throw input_error("rat_parse: empty string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        if (d == 0) throw input_error("rat_parse: zero denominator in '" + s + "'");
        return Rational(n, d);
    } catch (const std::runtime_error&) {
        throw input_error("rat_parse: malformed rational '" + s + "'");
    }
}

Int pow_int(const Int& b, long e) {
    if (e < 0) throw input_error("pow_int: negative exponent");
    Int r = 1, base = b;
    long k = e;
    while (k > 0) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

long vp(const Int& x, const Int& p) {
    if (p < 2) throw input_error("vp: modulus must be >= 2");
    if (x == 0) throw input_error("vp: valuation of zero is undefined");
    Int y = x;
    long v = 0;
    while (y % p == 0) {
        y /= p;
        ++v;
    }
    return v;
}

long vp(const Rational& x, const Int& p) {
    if (x == 0) throw input_error("vp: valuation of zero is undefined");
    long vn = rat_num(x) == 0 ? 0 : vp(rat_num(x), p);
    long vd = vp(rat_den(x), p);
    return vn - vd;
}

const Int& factorial(long n) {
    if (n < 0) throw input_error("factorial: negative argument");
    static std::vector<Int> memo{1};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<long>(memo.size()) <= n) {
        memo.push_back(memo.back() * Int(memo.size()));
    }
    return memo[static_cast<std::size_t>(n)];
}

Int binom(const Int& t, long k) {
    if (k < 0) return 0;
    Int num = 1;
    for (long i = 0; i < k; ++i) num *= (t - i);
    return num / factorial(k);
}

const Rational& bernoulli(long n) {
    if (n < 0) throw input_error("bernoulli: negative index");
    if (n > 256) throw input_error("bernoulli: index exceeds supported cap 256");
    static std::vector<Rational> memo{Rational(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    // Recurrence sum_{k=0}^{m} binom(m+1, k) B_k = 0 for m >= 1, which gives
    // B_m = -1/(m+1) * sum_{k=0}^{m-1} binom(m+1, k) B_k and B_1 = -1/2.
    while (static_cast<long>(memo.size()) <= n) {
        long m = static_cast<long>(memo.size());
        Rational acc = 0;
        for (long k = 0; k < m; ++k) {
            acc += Rational(binom(Int(m + 1), k)) * memo[static_cast<std::size_t>(k)];
        }
        memo.push_back(-acc / Rational(m + 1));
    }
    return memo[static_cast<std::size_t>(n)];
}

Rational power_sum_coeff(long l, long u) {
    if (l < 0) throw input_error("power_sum_coeff: negative power");
    if (u < 1 || u > l + 1) return 0;
    return Rational(binom(Int(l + 1), u)) * bernoulli(l + 1 - u) / Rational(l + 1);
}

}  // namespace pmhs
