#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <vector>

#include "sl3ido/fiber.hpp"
#include "sl3ido/sl3.hpp"

using namespace sl3ido;

namespace {

using Mat = std::vector<FiberVec>;

Mat mul(const Mat& A, const Mat& B) {
  const int n = static_cast<int>(A.size());
  Mat C(n, FiberVec(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (A[i][k] != 0)
        for (int j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
  return C;
}

Mat comm(const Mat& A, const Mat& B) {
  Mat C = mul(A, B);
  const Mat D = mul(B, A);
  for (size_t i = 0; i < C.size(); ++i)
    for (size_t j = 0; j < C.size(); ++j) C[i][j] -= D[i][j];
  return C;
}

Mat scaled(const Rat& s, Mat A) {
  for (auto& row : A)
    for (auto& x : row) x *= s;
  return A;
}

}  // namespace

TEST_CASE("parity characters") {
  CHECK(Parity(1).label() == '+');
  CHECK(Parity(-1).label() == '-');
  CHECK(Parity::from_exponent(4) == Parity(1));
  CHECK(Parity::from_exponent(7) == Parity(-1));
  CHECK(parity_shift(Parity(-1), 3) == Parity(1));
  CHECK(parity_shift(Parity(-1), 2) == Parity(-1));
  CHECK_THROWS_AS(Parity(2), std::invalid_argument);
}

TEST_CASE("both fiber actions satisfy the sl(2) relations") {
  for (int m = 0; m <= 12; ++m) {
    for (const Sl2Action& act : {sym_action(m), pol_action(m)}) {
      CHECK(comm(act.E, act.F) == act.H);
      CHECK(comm(act.H, act.E) == scaled(Rat(2), act.E));
      CHECK(comm(act.H, act.F) == scaled(Rat(-2), act.F));
    }
  }
}

TEST_CASE("entries of the two degree-m actions") {
  const Sl2Action s = sym_action(3);
  // E e1^(3-j) e2^j = j e1^(4-j) e2^(j-1)
  CHECK(s.E[0][1] == Rat(1));
  CHECK(s.E[1][2] == Rat(2));
  CHECK(s.E[2][3] == Rat(3));
  CHECK(s.H[0][0] == Rat(3));
  CHECK(s.H[3][3] == Rat(-3));
  CHECK(s.F[1][0] == Rat(3));

  const Sl2Action p = pol_action(3);
  // E = -u2 d/du1 lowers the u1 exponent
  CHECK(p.E[1][0] == Rat(-3));
  CHECK(p.E[3][2] == Rat(-1));
  CHECK(p.H[0][0] == Rat(-3));
  CHECK(p.H[3][3] == Rat(3));
  CHECK(p.F[0][1] == Rat(-1));

  const FiberVec v = {Rat(1), Rat(0), Rat(0), Rat(2)};
  const FiberVec Ev = s.apply_E(v);
  CHECK(Ev[2] == Rat(6));
  CHECK(Ev[0] == Rat(0));
}

TEST_CASE("tensor product component count matches dimensions") {
  for (int k = 0; k <= 8; ++k)
    for (int m = 0; m <= 8; ++m) {
      long sum = 0;
      for (int l = 0; l <= k + m + 2; ++l)
        sum += clebsch_gordan_multiplicity(k, m, l) * (l + 1);
      CHECK(sum == static_cast<long>(k + 1) * (m + 1));
      CHECK(clebsch_gordan_multiplicity(k, m, k + m) == 1);
      CHECK(clebsch_gordan_multiplicity(k, m, k + m + 1) == 0);
      if (k + m >= 1) CHECK(clebsch_gordan_multiplicity(k, m, k + m - 1) == 0);
    }
}

TEST_CASE("invariant tensor: frozen small cases") {
  const InvariantTensor t = build_psi(1, 1, 0);
  CHECK(t.ell == 2);
  REQUIRE(t.coef.size() == 4);
  CHECK(t.coef.at({0, 0, 0}) == Rat(1));
  CHECK(t.coef.at({0, 1, 1}) == Rat(1));
  CHECK(t.coef.at({1, 0, 1}) == Rat(1));
  CHECK(t.coef.at({1, 1, 2}) == Rat(1));

  const InvariantTensor u = build_psi(1, 1, 1);
  CHECK(u.ell == 0);
  REQUIRE(u.coef.size() == 2);
  CHECK(u.coef.at({0, 1, 0}) == Rat(1));
  CHECK(u.coef.at({1, 0, 0}) == Rat(-1));
}

TEST_CASE("invariant tensor is killed by the diagonal sl(2)") {
  for (int m = 0; m <= 3; ++m)
    for (int k = 0; k <= 3; ++k)
      for (int d = 0; d <= std::min(m, k); ++d) {
        const InvariantTensor t = build_psi(m, k, d);
        CHECK(t.ell == m + k - 2 * d);
        CHECK(check_sl2_invariance(t));
      }
}

TEST_CASE("symmetric powers of 2x2 matrices are multiplicative") {
  const std::array<std::array<Rat, 2>, 2> A = {{{Rat(2), Rat(1)}, {Rat(3), Rat(-1)}}};
  const std::array<std::array<Rat, 2>, 2> B = {{{Rat(0), Rat(1, 2)}, {Rat(-2), Rat(5)}}};
  std::array<std::array<Rat, 2>, 2> AB{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int r = 0; r < 2; ++r) AB[i][j] += A[i][r] * B[r][j];
  for (int k = 0; k <= 5; ++k) {
    CHECK(sym_power_matrix(AB, k) == mul(sym_power_matrix(A, k), sym_power_matrix(B, k)));
    // S^1 is the matrix itself
    if (k == 1) {
      const Mat M = sym_power_matrix(A, 1);
      CHECK(M[0][0] == A[0][0]);
      CHECK(M[1][0] == A[1][0]);
    }
  }
  // diagonal case has monomial eigenvalues
  const std::array<std::array<Rat, 2>, 2> D = {{{Rat(2), Rat(0)}, {Rat(0), Rat(3)}}};
  const Mat D2 = sym_power_matrix(D, 2);
  CHECK(D2[0][0] == Rat(4));
  CHECK(D2[1][1] == Rat(6));
  CHECK(D2[2][2] == Rat(9));
}

TEST_CASE("group action on polynomial fibers") {
  const MGroupElt flip(Rat(1), Rat(0), Rat(0), Rat(-1));
  const Mat Pf = pol_group_matrix(flip, 3);
  for (int q = 0; q <= 3; ++q)
    for (int j = 0; j <= 3; ++j)
      CHECK(Pf[q][j] == (q == j ? (q % 2 == 0 ? Rat(1) : Rat(-1)) : Rat(0)));

  const MGroupElt swap(Rat(0), Rat(1), Rat(1), Rat(0));
  const Mat Ps = pol_group_matrix(swap, 2);
  for (int q = 0; q <= 2; ++q)
    for (int j = 0; j <= 2; ++j) CHECK(Ps[q][j] == (q + j == 2 ? Rat(1) : Rat(0)));

  // left action: matrix of a product is the product of matrices
  const MGroupElt g1(Rat(3), Rat(1), Rat(5), Rat(2));
  const MGroupElt g2(Rat(1), Rat(1), Rat(0), Rat(1));
  std::array<std::array<Rat, 2>, 2> h12{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int r = 0; r < 2; ++r) h12[i][j] += g1.h[i][r] * g2.h[r][j];
  const MGroupElt g12(h12[0][0], h12[0][1], h12[1][0], h12[1][1]);
  for (int m = 0; m <= 4; ++m)
    CHECK(pol_group_matrix(g12, m) ==
          mul(pol_group_matrix(g1, m), pol_group_matrix(g2, m)));
}

TEST_CASE("adjoint fiber character splits as sign times matrix power") {
  for (const auto& g : {MGroupElt(Rat(1), Rat(0), Rat(0), Rat(-1)),
                        MGroupElt(Rat(0), Rat(1), Rat(1), Rat(0)),
                        MGroupElt(Rat(3), Rat(1), Rat(5), Rat(2))}) {
    for (int k = 0; k <= 4; ++k) {
      const FiberCharacter fc = fiber_character_of_Sk_nminus(g, k);
      const int expect_sign = g.det_h() < 0 && k % 2 == 1 ? -1 : 1;
      CHECK(fc.sign == expect_sign);
      CHECK(fc.matrix == sym_power_matrix(g.h, k));
      // sign * matrix equals S^k of the adjoint action on the nilradical
      const Mat adk = sym_power_matrix(m_element_action_on_nminus(g), k);
      CHECK(adk == scaled(Rat(fc.sign), fc.matrix));
    }
  }
}
