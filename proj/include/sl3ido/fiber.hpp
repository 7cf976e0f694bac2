#pragma once

// Fiber data for the induced and Verma pictures: the two degree-m sl(2)
// modules in play (symmetric power S^m on the Verma side, its polynomial
// dual Pol^m on the bundle side), sign characters of the disconnected Levi,
// Clebsch-Gordan admissibility, and the closed-form invariant tensor that
// seeds every explicit operator.

#include <map>
#include <tuple>
#include <vector>

#include "sl3ido/rational.hpp"
#include "sl3ido/sl3.hpp"

namespace sl3ido {

// Character of O(1)-type disconnectedness: +1 or -1.
struct Parity {
  int sign = 1;
  Parity() = default;
  explicit Parity(int s);
  static Parity from_exponent(long n) { return Parity(n % 2 == 0 ? 1 : -1); }
  bool operator==(const Parity&) const = default;
  char label() const { return sign > 0 ? '+' : '-'; }
};

// alpha . sgn^k
Parity parity_shift(const Parity& alpha, long k);

// Coefficient vector in the degree-m monomial basis, index j = 0..m.
// S^m: e1^{m-j} e2^j;  Pol^m: u1^{m-j} u2^j.
using FiberVec = std::vector<Rat>;

struct Sl2Action {
  int m = 0;
  // dense (m+1) x (m+1) matrices for E, F, H
  std::vector<FiberVec> E, F, H;
  FiberVec apply_E(const FiberVec& v) const;
  FiberVec apply_F(const FiberVec& v) const;
  FiberVec apply_H(const FiberVec& v) const;
};

// Action on S^m(C^2): E.e2 = e1, F.e1 = e2, H = diag(1,-1) on (e1, e2).
Sl2Action sym_action(int m);
// Contragredient action on polynomials: E = -u2 d/du1, F = -u1 d/du2,
// H = -u1 d/du1 + u2 d/du2.
Sl2Action pol_action(int m);

// 1 when S^ell appears in S^k tensor S^m (same top-degree parity and
// |k - m| <= ell <= k + m), else 0.
int clebsch_gordan_multiplicity(int k, int m, int ell);

// Equivariant tensor in S^k(nbar) (x) S^m (x) Pol^ell, coefficients keyed by
// (a, i, q): a = exponent of N2m in the degree-k monomial, i = S^m index,
// q = Pol^ell index.
struct InvariantTensor {
  int k = 0, m = 0, ell = 0, d = 0;
  std::map<std::tuple<int, int, int>, Rat> coef;
};

// The product ((N1m (x) eps1 + N2m (x) eps2)^(k-d)
//              (e1 (x) eps1 + e2 (x) eps2)^(m-d)
//              (N1m (x) e2 - N2m (x) e1)^d), ell = m + k - 2d.
InvariantTensor build_psi(int m, int k, int d);

// Diagonal sl(2) action (sym on the first two slots, pol on the third)
// annihilates the tensor.
bool check_sl2_invariance(const InvariantTensor& t);

// Matrix of the induced action of a 2x2 matrix A on S^k (columns = images
// of e1^(k-a) e2^a under e_j -> column j of A).
std::vector<FiberVec> sym_power_matrix(const std::array<std::array<Rat, 2>, 2>& A,
                                       int k);

// Matrix of f -> f(h^{-1} u) on Pol^m.
std::vector<FiberVec> pol_group_matrix(const MGroupElt& g, int m);

// Action of a Levi group element on S^k(nbar): the pair (sign, matrix) with
// sign = sgn(det h)^k and matrix = S^k of the standard action of h. Their
// product is S^k of Ad(g) restricted to nbar.
struct FiberCharacter {
  int sign = 1;
  std::vector<FiberVec> matrix;
};
FiberCharacter fiber_character_of_Sk_nminus(const MGroupElt& g, int k);

}  // namespace sl3ido
