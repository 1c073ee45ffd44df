#pragma once

#include "fanohs/rational.hpp"

namespace fanohs {

// Bernoulli numbers with the B_1^+ = +1/2 sign convention, memoized from the
// defining recurrence sum_{k=0}^{n} C(n+1,k) B_k^+ = n+1.
Rational bernoulli_plus(unsigned n);

Rational binomial(unsigned n, unsigned k);

}  // namespace fanohs
