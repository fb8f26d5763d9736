#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hexprob {

// Exact arithmetic substrate: GMP integers and canonical rationals.
// A Rat is always kept gcd-reduced with positive denominator (GMP's canonical
// form); all arithmetic below preserves that.
using Int = mpz_class;
using Rat = mpq_class;

// Binomial coefficient with arbitrary (possibly negative) integer upper index:
//   binomial(m, k) = m (m-1) ... (m-k+1) / k!   for k >= 0,
//   binomial(m, k) = 0                          for k < 0.
Int binomial(const Int& m, long k);

// Rising factorial (q)_k = q (q+1) ... (q+k-1), with (q)_0 = 1.  The base may
// be any rational (half-integer bases occur in the single-sum formulas).
// k < 0 is rejected.
Rat pochhammer(const Rat& q, long k);

// Rising factorial for an integer base; same convention as above.
Int pochhammer_int(const Int& q, long k);

// m! for m >= 0; negative m is rejected.
Int factorial(long m);

// num/den reduced to canonical form.  den == 0 is rejected.
Rat make_rational(const Int& num, const Int& den);

// Renders "p/q", omitting "/q" when the denominator is 1, with any minus sign
// on the numerator.  parse_rational accepts exactly the same grammar.
std::string to_string(const Rat& value);
std::string to_string(const Int& value);
Rat parse_rational(std::string_view text);

} // namespace hexprob
