#pragma once
// JSON serialization for the core value types.
//
// Schemas (all numbers that may exceed 64 bits travel as decimal strings):
//
//   p-adic ball:
//     exact zero   {"zero": true}              (plus "p" when a prime is attached)
//     zero class   {"p": "5", "zero": true, "min_val": m}
//     unit class   {"p": "5", "v": v, "unit": "u", "prec": r}
//
//   series        {"cap": n, "coeffs": {"": "1", "01": "5/12", ...}}
//                 word keys are 0/1 strings, first letter leftmost; zero
//                 coefficients are omitted.
//
//   value table   {"entries": {"2,1": "5/12", ...}}
//                 keys are comma-separated exponent tuples, outermost first.
//
// The implementation keeps the JSON library out of the installed headers; all
// functions here exchange plain strings.

#include <string>

#include "pmhs/composition.hpp"
#include "pmhs/padic.hpp"
#include "pmhs/series.hpp"

namespace pmhs {

std::string padic_to_json(const PAdicApprox& x);
PAdicApprox padic_from_json(const std::string& text);

std::string series_to_json(const NCSeries<Rational>& f);
std::string series_to_json(const NCSeries<PAdicApprox>& f);
NCSeries<Rational> series_from_json(const std::string& text);
NCSeries<PAdicApprox> series_from_json_padic(const std::string& text);

std::string harpoint_to_json(const HarPoint<Rational>& h);
std::string harpoint_to_json(const HarPoint<PAdicApprox>& h);
HarPoint<Rational> harpoint_from_json(const std::string& text);
HarPoint<PAdicApprox> harpoint_from_json_padic(const std::string& text);

}  // namespace pmhs
