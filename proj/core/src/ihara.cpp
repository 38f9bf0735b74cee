#include "pmhs/ihara.hpp"

// Explicit instantiations for the two coefficient rings used by the library,
// so downstream translation units compile faster.
namespace pmhs {

template NCSeries<Rational> ihara_action(const NCSeries<Rational>&, const NCSeries<Rational>&);
template NCSeries<Rational> sym_series(const NCSeries<Rational>&);
template NCSeries<Rational> sym_ihara_action(const NCSeries<Rational>&, const NCSeries<Rational>&);
template NCSeries<Rational> sym_ihara_action_subword(const NCSeries<Rational>&, const NCSeries<Rational>&);
template NCSeries<Rational> ihara_inverse(const NCSeries<Rational>&);

template NCSeries<PAdicApprox> ihara_action(const NCSeries<PAdicApprox>&, const NCSeries<PAdicApprox>&);
template NCSeries<PAdicApprox> sym_series(const NCSeries<PAdicApprox>&);
template NCSeries<PAdicApprox> sym_ihara_action(const NCSeries<PAdicApprox>&, const NCSeries<PAdicApprox>&);
template NCSeries<PAdicApprox> sym_ihara_action_subword(const NCSeries<PAdicApprox>&, const NCSeries<PAdicApprox>&);
template NCSeries<PAdicApprox> ihara_inverse(const NCSeries<PAdicApprox>&);

}  // namespace pmhs
