#include "sl3ido/fiber.hpp"

#include <algorithm>
#include <stdexcept>

namespace sl3ido {

Parity::Parity(int s) : sign(s) {
  if (s != 1 && s != -1) throw std::invalid_argument("Parity: sign must be +/-1");
}

Parity parity_shift(const Parity& alpha, long k) {
  return Parity(k % 2 == 0 ? alpha.sign : -alpha.sign);
}

namespace {

std::vector<FiberVec> zero_matrix(int n) {
  return std::vector<FiberVec>(n, FiberVec(n, Rat(0)));
}

FiberVec mat_vec(const std::vector<FiberVec>& M, const FiberVec& v) {
  FiberVec out(M.size(), Rat(0));
  for (size_t i = 0; i < M.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += M[i][j] * v[j];
  return out;
}

// coefficients of (c1 e1 + c2 e2)^n in the e2-degree basis
FiberVec lin_power(const Rat& c1, const Rat& c2, int n) {
  FiberVec out(n + 1, Rat(0));
  std::vector<Rat> pow1(n + 1), pow2(n + 1);
  pow1[0] = pow2[0] = 1;
  for (int i = 1; i <= n; ++i) {
    pow1[i] = pow1[i - 1] * c1;
    pow2[i] = pow2[i - 1] * c2;
  }
  for (int i = 0; i <= n; ++i)
    out[i] = Rat(binomial(n, i)) * pow1[n - i] * pow2[i];
  return out;
}

FiberVec convolve(const FiberVec& u, const FiberVec& v) {
  FiberVec out(u.size() + v.size() - 1, Rat(0));
  for (size_t i = 0; i < u.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i + j] += u[i] * v[j];
  return out;
}

}  // namespace

FiberVec Sl2Action::apply_E(const FiberVec& v) const { return mat_vec(E, v); }
FiberVec Sl2Action::apply_F(const FiberVec& v) const { return mat_vec(F, v); }
FiberVec Sl2Action::apply_H(const FiberVec& v) const { return mat_vec(H, v); }

Sl2Action sym_action(int m) {
  if (m < 0) throw std::invalid_argument("sym_action: negative degree");
  Sl2Action a;
  a.m = m;
  a.E = zero_matrix(m + 1);
  a.F = zero_matrix(m + 1);
  a.H = zero_matrix(m + 1);
  for (int j = 0; j <= m; ++j) {
    if (j > 0) a.E[j - 1][j] = j;
    if (j < m) a.F[j + 1][j] = m - j;
    a.H[j][j] = m - 2 * j;
  }
  return a;
}

Sl2Action pol_action(int m) {
  if (m < 0) throw std::invalid_argument("pol_action: negative degree");
  Sl2Action a;
  a.m = m;
  a.E = zero_matrix(m + 1);
  a.F = zero_matrix(m + 1);
  a.H = zero_matrix(m + 1);
  for (int j = 0; j <= m; ++j) {
    if (j < m) a.E[j + 1][j] = -(m - j);
    if (j > 0) a.F[j - 1][j] = -j;
    a.H[j][j] = 2 * j - m;
  }
  return a;
}

int clebsch_gordan_multiplicity(int k, int m, int ell) {
  if (k < 0 || m < 0 || ell < 0) return 0;
  int t = m + k - ell;
  if (t < 0 || t % 2 != 0) return 0;
  return t / 2 <= std::min(k, m) ? 1 : 0;
}

InvariantTensor build_psi(int m, int k, int d) {
  if (d < 0 || d > std::min(k, m))
    throw std::invalid_argument("build_psi: need 0 <= d <= min(k, m)");
  InvariantTensor t;
  t.k = k;
  t.m = m;
  t.ell = m + k - 2 * d;
  t.d = d;
  for (int r = 0; r <= k - d; ++r)
    for (int s = 0; s <= m - d; ++s)
      for (int w = 0; w <= d; ++w) {
        Rat c = Rat(binomial(k - d, r) * binomial(m - d, s) * binomial(d, w));
        if (w % 2 == 1) c = -c;
        int a = r + w;            // N2m exponent
        int i = s + (d - w);      // e2 exponent
        int q = r + s;            // eps2 exponent
        auto key = std::make_tuple(a, i, q);
        Rat& slot = t.coef[key];
        slot += c;
        if (slot == 0) t.coef.erase(key);
      }
  return t;
}

bool check_sl2_invariance(const InvariantTensor& t) {
  Sl2Action ak = sym_action(t.k), am = sym_action(t.m), al = pol_action(t.ell);
  auto pick = [](const Sl2Action& a, int which) -> const std::vector<FiberVec>& {
    return which == 0 ? a.E : which == 1 ? a.F : a.H;
  };
  for (int which = 0; which < 3; ++which) {
    std::map<std::tuple<int, int, int>, Rat> out;
    auto add = [&out](int a, int i, int q, const Rat& c) {
      if (c == 0) return;
      Rat& slot = out[{a, i, q}];
      slot += c;
      if (slot == 0) out.erase({a, i, q});
    };
    const auto& Mk = pick(ak, which);
    const auto& Mm = pick(am, which);
    const auto& Ml = pick(al, which);
    for (const auto& [key, c] : t.coef) {
      auto [a, i, q] = key;
      for (int a2 = 0; a2 <= t.k; ++a2) add(a2, i, q, Mk[a2][a] * c);
      for (int i2 = 0; i2 <= t.m; ++i2) add(a, i2, q, Mm[i2][i] * c);
      for (int q2 = 0; q2 <= t.ell; ++q2) add(a, i, q2, Ml[q2][q] * c);
    }
    if (!out.empty()) return false;
  }
  return true;
}

std::vector<FiberVec> sym_power_matrix(
    const std::array<std::array<Rat, 2>, 2>& A, int k) {
  std::vector<FiberVec> M(k + 1, FiberVec(k + 1, Rat(0)));
  for (int a = 0; a <= k; ++a) {
    // (A e1)^(k-a) (A e2)^a
    FiberVec col = convolve(lin_power(A[0][0], A[1][0], k - a),
                            lin_power(A[0][1], A[1][1], a));
    for (int b = 0; b <= k; ++b) M[b][a] = col[b];
  }
  return M;
}

std::vector<FiberVec> pol_group_matrix(const MGroupElt& g, int m) {
  auto B = g.h_inv();
  std::vector<FiberVec> M(m + 1, FiberVec(m + 1, Rat(0)));
  for (int j = 0; j <= m; ++j) {
    // ((B u)_1)^(m-j) ((B u)_2)^j in the u2-degree basis
    FiberVec col = convolve(lin_power(B[0][0], B[0][1], m - j),
                            lin_power(B[1][0], B[1][1], j));
    for (int q = 0; q <= m; ++q) M[q][j] = col[q];
  }
  return M;
}

FiberCharacter fiber_character_of_Sk_nminus(const MGroupElt& g, int k) {
  FiberCharacter fc;
  fc.sign = (g.det_h() < 0 && k % 2 == 1) ? -1 : 1;
  fc.matrix = sym_power_matrix(g.h, k);
  return fc;
}

}  // namespace sl3ido
