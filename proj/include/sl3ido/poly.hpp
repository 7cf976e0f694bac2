#pragma once

// Sparse bivariate polynomials over Rat in the coordinates (x1, x2) of the
// abelian lower-triangular slice. Also used for polynomial-entry Lie algebra
// matrices, so it lives below sl3 in the include order.

#include <array>
#include <map>
#include <utility>

#include "sl3ido/rational.hpp"

namespace sl3ido {

class Poly {
 public:
  using Key = std::pair<int, int>;  // exponents (a, b) of x1^a x2^b

  Poly() = default;
  explicit Poly(const Rat& c) { add_term(0, 0, c); }
  static Poly monomial(int a, int b, const Rat& c = Rat(1));

  void add_term(int a, int b, const Rat& c);
  const std::map<Key, Rat>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial
  Rat coeff(int a, int b) const;

  bool operator==(const Poly&) const = default;
  Poly operator+(const Poly&) const;
  Poly operator-(const Poly&) const;
  Poly operator*(const Poly&) const;
  friend Poly operator*(const Rat& s, const Poly& p);
  Poly operator-() const;

  Poly derivative(int var) const;  // var: 0 -> d/dx1, 1 -> d/dx2
  Poly homogeneous_part(int d) const;

  // x1 <- M[0][0] x1 + M[0][1] x2,  x2 <- M[1][0] x1 + M[1][1] x2
  Poly subst_linear(const std::array<std::array<Rat, 2>, 2>& M) const;

  Rat eval(const Rat& x1, const Rat& x2) const;

 private:
  std::map<Key, Rat> t_;
};

}  // namespace sl3ido
