#pragma once

// Linear algebra with one symbolic parameter. LinParam is an entry of the
// form c + s*lambda; solve_parametric finds every rational lambda at which a
// matrix of such entries acquires a nontrivial nullspace. Internally entries
// are promoted to univariate polynomials (Poly1) so that elimination pivots
// of degree > 1 are handled exactly.

#include <stdexcept>
#include <vector>

#include "sl3ido/matrix.hpp"
#include "sl3ido/rational.hpp"

namespace sl3ido {

struct LinParam {
  Rat c;  // constant part
  Rat s;  // coefficient of lambda

  LinParam() : c(0), s(0) {}
  LinParam(const Rat& c0) : c(c0), s(0) {}  // NOLINT: implicit by design
  LinParam(const Rat& c0, const Rat& s0) : c(c0), s(s0) {}

  bool is_zero() const { return c == 0 && s == 0; }
  Rat eval(const Rat& lambda) const { return c + s * lambda; }

  LinParam operator-() const { return {-c, -s}; }
  LinParam& operator+=(const LinParam& o) { c += o.c; s += o.s; return *this; }
  LinParam& operator-=(const LinParam& o) { c -= o.c; s -= o.s; return *this; }
  friend LinParam operator+(LinParam a, const LinParam& b) { return a += b; }
  friend LinParam operator-(LinParam a, const LinParam& b) { return a -= b; }
  friend bool operator==(const LinParam&, const LinParam&) = default;

  // Affine entries stay affine everywhere in this project; a genuinely
  // quadratic product would mean a bookkeeping bug upstream, so it throws.
  friend LinParam operator*(const LinParam& a, const LinParam& b) {
    if (a.s != 0 && b.s != 0)
      throw std::domain_error("LinParam: product is quadratic in lambda");
    return {a.c * b.c, a.c * b.s + a.s * b.c};
  }
  friend LinParam operator*(const LinParam& a, const Rat& r) { return {a.c * r, a.s * r}; }
  friend LinParam operator*(const Rat& r, const LinParam& a) { return a * r; }
};

// Dense univariate polynomial over Rat, coefficients low degree first,
// no trailing zeros. Only what the parametric solver needs.
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(const Rat& c) { if (c != 0) coef_ = {c}; }
  Poly1(const Rat& c, const Rat& s) {
    coef_ = {c, s};
    trim();
  }
  static Poly1 from(const LinParam& l) { return Poly1(l.c, l.s); }

  int degree() const { return static_cast<int>(coef_.size()) - 1; }  // -1 if zero
  bool is_zero() const { return coef_.empty(); }
  const Rat& operator[](int i) const { return coef_[i]; }
  Rat eval(const Rat& x) const;

  Poly1 operator+(const Poly1&) const;
  Poly1 operator-(const Poly1&) const;
  Poly1 operator*(const Poly1&) const;
  bool operator==(const Poly1&) const = default;

  // Exact division; throws std::domain_error on a nonzero remainder.
  Poly1 divexact(const Poly1& d) const;

  // Monic gcd (zero polynomial if both inputs are zero).
  static Poly1 gcd(Poly1 a, Poly1 b);

  // All rational roots, deduplicated and sorted.
  std::vector<Rat> rational_roots() const;

 private:
  void trim();
  std::vector<Rat> coef_;
};

struct ParametricSolution {
  Rat lambda;
  std::vector<std::vector<Rat>> nullspace;
};

struct ParametricResult {
  bool all_lambda = false;  // nullspace nontrivial for every lambda
  int generic_rank = 0;
  std::vector<ParametricSolution> solutions;  // sorted by lambda
};

// rows: each row has ncols entries affine in lambda. Finds every rational
// lambda where the matrix has a nontrivial nullspace, or reports that the
// rank is deficient identically.
ParametricResult solve_parametric(const std::vector<std::vector<LinParam>>& rows,
                                  int ncols);

}  // namespace sl3ido
