#pragma once
// Coefficient-type shims for the series code.
//
// NCSeries is generic over its coefficient ring K.  Two instantiations are
// used: exact rationals and certified p-adic balls.  This trait collects the
// handful of operations the series algorithms need beyond ring arithmetic:
// recognizing an exact zero (so sparse terms can be skipped without touching
// precision bookkeeping), inverting a unit, and scaling by an exact rational.

#include <string>

#include "pmhs/padic.hpp"
#include "pmhs/rational.hpp"

namespace pmhs {

template <class K>
struct CoeffOps;

template <>
struct CoeffOps<Rational> {
    static bool exact_zero(const Rational& x) { return x == 0; }
    static Rational inv(const Rational& x) {
        if (x == 0) throw calc_error("non-unit constant term");
        return 1 / x;
    }
    static Rational scale(const Rational& x, const Rational& q) { return x * q; }
    static std::string str(const Rational& x) { return rat_str(x); }
};

template <>
struct CoeffOps<PAdicApprox> {
    static bool exact_zero(const PAdicApprox& x) { return x.is_exact_zero(); }
    static PAdicApprox inv(const PAdicApprox& x) {
        if (!x.is_unit_class()) throw calc_error("non-unit constant term");
        return x.pow(-1);
    }
    static PAdicApprox scale(const PAdicApprox& x, const Rational& q) {
        return x.scale(q);
    }
    static std::string str(const PAdicApprox& x) { return x.str(); }
};

}  // namespace pmhs
