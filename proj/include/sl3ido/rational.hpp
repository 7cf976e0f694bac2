#pragma once

// Exact rational scalars. Rat is an mpq_class alias plus a few helpers for
// parsing, printing and the small combinatorial values that show up in the
// operator coefficients. Careful: mpq_class arithmetic keeps results reduced,
// but the two-argument constructor stores num/den as given, so anything built
// from computed integers must go through rat() or call canonicalize() itself;
// comparisons on unreduced values are unreliable.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace sl3ido {

using Rat = mpq_class;
using Int = mpz_class;

// Parses "p/q", "p", "-p/q" with optional surrounding whitespace.
// Throws std::invalid_argument on malformed input or zero denominator.
Rat parse_rat(const std::string& s);

// "p/q" when the denominator is not 1, otherwise just "p".
std::string rat_str(const Rat& q);

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

Int binomial(long n, long k);           // 0 for k < 0 or k > n
Int factorial(long n);
Int falling(long n, long k);            // n (n-1) ... (n-k+1), 1 for k = 0

}  // namespace sl3ido
