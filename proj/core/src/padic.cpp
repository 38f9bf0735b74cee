#include "pmhs/padic.hpp"

#include <sstream>

namespace pmhs {

namespace {

// Extended-Euclid modular inverse; requires gcd(a, mod) == 1.
Int inv_mod(Int a, const Int& mod) {
    if (mod <= 1) throw input_error("inv_mod: modulus must be > 1");
    a %= mod;
    if (a < 0) a += mod;
    Int r0 = mod, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw calc_error("inv_mod: argument is not a unit");
    if (t0 < 0) t0 += mod;
    return t0;
}

// Reduce a rational with p-free denominator modulo p^r (r >= 1).
Int digits_mod(const Rational& y, const Int& p, long r) {
    Int pr = pow_int(p, r);
    Int n = rat_num(y) % pr;
    if (n < 0) n += pr;
    Int d = rat_den(y) % pr;
    return (n * inv_mod(d, pr)) % pr;
}

}  // namespace

PAdicApprox PAdicApprox::exact_zero(const Int& p) {
    PAdicApprox x;
    x.state_ = State::ExactZero;
    x.p_ = p;
    return x;
}

PAdicApprox PAdicApprox::zero_mod(const Int& p, long m) {
    if (p < 2) throw input_error("zero_mod: prime must be >= 2");
    PAdicApprox x;
    x.state_ = State::ZeroClass;
    x.p_ = p;
    x.v_ = m;
    return x;
}

PAdicApprox PAdicApprox::make(const Int& p, long v, const Int& u, long r) {
    if (p < 2) throw input_error("make: prime must be >= 2");
    if (r <= 0) return zero_mod(p, v + (r < 0 ? r : 0));
    Int pr = pow_int(p, r);
    Int uu = u % pr;
    if (uu < 0) uu += pr;
    if (uu == 0) return zero_mod(p, v + r);
    long a = vp(uu, p);
    if (a > 0) {
        v += a;
        uu /= pow_int(p, a);
        r -= a;
    }
    PAdicApprox x;
    x.state_ = State::UnitClass;
    x.p_ = p;
    x.v_ = v;
    x.u_ = uu;
    x.r_ = r;
    return x;
}

PAdicApprox PAdicApprox::from_rational(const Int& p, const Rational& x, long r) {
    if (p < 2) throw input_error("from_rational: prime must be >= 2");
    if (r < 1) throw input_error("from_rational: relative precision must be >= 1");
    if (x == 0) return exact_zero(p);
    long v = vp(x, p);
    Rational y = x / Rational(v >= 0 ? Rational(pow_int(p, v)) : Rational(1, pow_int(p, -v)));
    return make(p, v, digits_mod(y, p, r), r);
}

PAdicApprox PAdicApprox::from_rational_abs(const Int& p, const Rational& x, long M) {
    if (p < 2) throw input_error("from_rational_abs: prime must be >= 2");
    if (x == 0) return exact_zero(p);
    long v = vp(x, p);
    if (v >= M) return zero_mod(p, M);
    return from_rational(p, x, M - v);
}

long PAdicApprox::valuation() const {
    if (state_ != State::UnitClass)
        throw calc_error("valuation: exact valuation known only for unit-class balls");
    return v_;
}

long PAdicApprox::val_min() const {
    switch (state_) {
        case State::ExactZero: return INF_PREC;
        case State::ZeroClass: return v_;
        case State::UnitClass: return v_;
    }
    return 0;  // unreachable
}

long PAdicApprox::abs_prec() const {
    switch (state_) {
        case State::ExactZero: return INF_PREC;
        case State::ZeroClass: return v_;
        case State::UnitClass: return v_ + r_;
    }
    return 0;  // unreachable
}

long PAdicApprox::rel_prec() const {
    if (state_ != State::UnitClass)
        throw calc_error("rel_prec: only unit-class balls carry relative precision");
    return r_;
}

const Int& PAdicApprox::unit() const {
    if (state_ != State::UnitClass)
        throw calc_error("unit: only unit-class balls carry digits");
    return u_;
}

Rational PAdicApprox::center() const {
    if (state_ != State::UnitClass) return 0;
    if (v_ >= 0) return Rational(u_ * pow_int(p_, v_));
    return Rational(u_, pow_int(p_, -v_));
}

void PAdicApprox::require_same_prime(const PAdicApprox& o) const {
    if (p_ != 0 && o.p_ != 0 && p_ != o.p_)
        throw input_error("p-adic arithmetic on mismatched primes");
}

PAdicApprox PAdicApprox::operator-() const {
    if (state_ != State::UnitClass) return *this;
    return make(p_, v_, pow_int(p_, r_) - u_, r_);
}

PAdicApprox PAdicApprox::operator+(const PAdicApprox& o) const {
    if (is_exact_zero()) return o;
    if (o.is_exact_zero()) return *this;
    require_same_prime(o);
    long M = std::min(abs_prec(), o.abs_prec());
    Rational c = center() + o.center();
    if (c == 0) return zero_mod(p_, M);
    long v = vp(c, p_);
    if (v >= M) return zero_mod(p_, M);
    Rational y = c / (v >= 0 ? Rational(pow_int(p_, v)) : Rational(1, pow_int(p_, -v)));
    return make(p_, v, digits_mod(y, p_, M - v), M - v);
}

PAdicApprox PAdicApprox::operator-(const PAdicApprox& o) const { return *this + (-o); }

PAdicApprox PAdicApprox::operator*(const PAdicApprox& o) const {
    if (is_exact_zero() || o.is_exact_zero())
        return exact_zero(p_ != 0 ? p_ : o.p_);
    require_same_prime(o);
    if (is_zero_class() || o.is_zero_class())
        return zero_mod(p_, sat_add(val_min(), o.val_min()));
    return make(p_, v_ + o.v_, u_ * o.u_, std::min(r_, o.r_));
}

PAdicApprox PAdicApprox::operator/(const PAdicApprox& o) const {
    if (o.is_exact_zero()) throw calc_error("p-adic division by zero");
    if (!o.is_unit_class())
        throw calc_error("p-adic division by a ball not certified to be a unit");
    if (is_exact_zero()) return *this;
    require_same_prime(o);
    if (is_zero_class()) return zero_mod(p_, v_ - o.v_);
    long r = std::min(r_, o.r_);
    Int pr = pow_int(p_, r);
    return make(p_, v_ - o.v_, (u_ % pr) * inv_mod(o.u_ % pr, pr), r);
}

PAdicApprox PAdicApprox::scale(const Rational& q) const {
    if (q == 0) return exact_zero(p_);
    if (is_exact_zero()) return *this;
    long w = vp(q, p_);
    if (is_zero_class()) return zero_mod(p_, sat_add(v_, w));
    Rational y = q / (w >= 0 ? Rational(pow_int(p_, w)) : Rational(1, pow_int(p_, -w)));
    return make(p_, v_ + w, u_ * digits_mod(y, p_, r_), r_);
}

PAdicApprox PAdicApprox::pow(long e) const {
    if (e == 0)
        throw input_error("pow: exponent 0 is not supported (no exact-unit state)");
    if (e < 0) {
        if (!is_unit_class())
            throw calc_error("pow: negative power of a ball not certified to be a unit");
        PAdicApprox one_over = make(p_, -v_, inv_mod(u_, pow_int(p_, r_)), r_);
        return one_over.pow(-e);
    }
    if (is_exact_zero()) return *this;
    if (is_zero_class()) {
        long m = v_;
        long out = 0;
        for (long i = 0; i < e; ++i) out = sat_add(out, m);
        return zero_mod(p_, out);
    }
    Int pr = pow_int(p_, r_);
    Int u = boost::multiprecision::powm(u_, Int(e), pr);
    long v = v_ * e;
    return make(p_, v, u, r_);
}

PAdicApprox PAdicApprox::sharpen_val(long m) const {
    if (is_exact_zero()) return *this;
    if (is_zero_class()) return v_ >= m ? *this : zero_mod(p_, m);
    if (m > v_)
        throw calc_error("sharpen_val: certificate contradicts exact valuation");
    return *this;
}

PAdicApprox PAdicApprox::truncate_abs(long M) const {
    if (is_exact_zero()) return *this;
    if (is_zero_class()) return v_ > M ? zero_mod(p_, M) : *this;
    if (abs_prec() <= M) return *this;
    if (v_ >= M) return zero_mod(p_, M);
    return make(p_, v_, u_ % pow_int(p_, M - v_), M - v_);
}

std::string PAdicApprox::str() const {
    std::ostringstream os;
    switch (state_) {
        case State::ExactZero:
            os << "0";
            break;
        case State::ZeroClass:
            os << "O(" << p_ << "^" << v_ << ")";
            break;
        case State::UnitClass:
            if (v_ != 0) os << p_ << "^" << v_ << " * ";
            os << "(" << u_ << " + O(" << p_ << "^" << r_ << "))";
            break;
    }
    return os.str();
}

PAdicApprox::Compare PAdicApprox::eq_mod(const PAdicApprox& o, long M) const {
    PAdicApprox d = *this - o;
    if (d.is_exact_zero()) return {Compare::Status::Equal, INF_PREC};
    if (d.is_zero_class()) {
        if (d.v_ >= M) return {Compare::Status::Equal, d.v_};
        return {Compare::Status::Undecided, d.v_};
    }
    if (d.v_ >= M) return {Compare::Status::Equal, d.v_};
    return {Compare::Status::Differ, d.v_};
}

PAdicApprox::Compare PAdicApprox::eq_mod_rational(const Rational& x, long M) const {
    Int p = p_;
    if (p == 0) {
        // Exact zero against an exact rational: decide outright.
        if (x == 0) return {Compare::Status::Equal, INF_PREC};
        throw input_error("eq_mod_rational: no prime attached to this ball");
    }
    PAdicApprox xa = x == 0 ? exact_zero(p) : from_rational(p, x, std::max(1L, M - vp(x, p) + 1));
    return eq_mod(xa, M);
}

}  // namespace pmhs
