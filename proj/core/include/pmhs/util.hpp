#pragma once
// Shared error hierarchy and small utilities used across the library.
//
// All numeric code in this library is exact: computations are carried out in
// arbitrary-precision integer/rational arithmetic, or in p-adic balls with
// certified precision.  Errors therefore signal *mathematical* failure modes
// (a pole, a division by a non-unit, insufficient certified precision), not
// rounding problems.

#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace pmhs {

/// Base class for all library errors.
class calc_error : public std::runtime_error {
public:
    explicit calc_error(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation hit a pole (for example a geometric-sum kernel at ratio 1).
class pole_error : public calc_error {
public:
    explicit pole_error(const std::string& what) : calc_error(what) {}
};

/// A p-adic computation could not certify the precision that was requested.
class precision_error : public calc_error {
public:
    precision_error(const std::string& what, long requested, long achieved)
        : calc_error(what), requested_(requested), achieved_(achieved) {}
    long requested() const { return requested_; }
    long achieved() const { return achieved_; }

private:
    long requested_;
    long achieved_;
};

/// Malformed input (bad composition string, bad JSON, out-of-contract value).
class input_error : public calc_error {
public:
    explicit input_error(const std::string& what) : calc_error(what) {}
};

/// Worker-thread cap: value of PADIC_MHS_THREADS if set and positive,
/// otherwise the hardware concurrency (at least 1).
inline unsigned thread_cap() {
    if (const char* env = std::getenv("PADIC_MHS_THREADS")) {
        long n = std::strtol(env, nullptr, 10);
        if (n > 0) return static_cast<unsigned>(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1u;
}

/// Run fn(i) for i in [0, n) on up to thread_cap() workers.  Exceptions from
/// workers are rethrown (first one wins).  Falls back to serial execution for
/// tiny ranges or a cap of 1.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace pmhs
