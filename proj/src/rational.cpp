#include "sl3ido/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace sl3ido {

Rat parse_rat(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("parse_rat: empty string");
  std::string num = t, den = "1";
  if (auto pos = t.find('/'); pos != std::string::npos) {
    num = t.substr(0, pos);
    den = t.substr(pos + 1);
    if (num.empty() || den.empty())
      throw std::invalid_argument("parse_rat: malformed '" + s + "'");
  }
  Int n, d;
  if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
    throw std::invalid_argument("parse_rat: malformed '" + s + "'");
  if (d == 0) throw std::invalid_argument("parse_rat: zero denominator");
  Rat q(n, d);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Int factorial(long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
  return r;
}

Int falling(long n, long k) {
  Int r = 1;
  for (long i = 0; i < k; ++i) r *= Int(n - i);
  return r;
}

}  // namespace sl3ido
