#pragma once

// Parabolic Verma modules M(sym^m, w) realized as S(nbar) (x) S^m with the
// full sl(3) action, the two explicit homomorphism families, exact
// verification, and the brute-force Hom oracle with the weight symbolic.
//
// Convention: a module is stored with its inducing a-weight w, the value of
// H0t on 1 (x) v. The classification parameter lambda of the dual induced
// picture enters all build_* functions and is negated exactly once, here.

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sl3ido/fiber.hpp"
#include "sl3ido/parametric.hpp"
#include "sl3ido/rational.hpp"
#include "sl3ido/sl3.hpp"

namespace sl3ido {

// Element of S(nbar) (x) S^m with coefficients in K (Rat, or LinParam when
// the weight is symbolic). Key (a, b) is the monomial N1m^a N2m^b.
template <class K>
struct VermaVec {
  int m = 0;
  std::map<std::pair<int, int>, std::vector<K>> terms;

  explicit VermaVec(int fiber_deg = 0) : m(fiber_deg) {}

  void add(int a, int b, int i, const K& c) {
    if (c == K()) return;
    auto& v = terms[{a, b}];
    if (v.empty()) v.assign(m + 1, K());
    v[i] += c;
  }

  void prune() {
    for (auto it = terms.begin(); it != terms.end();) {
      bool zero = true;
      for (const auto& c : it->second)
        if (!(c == K())) { zero = false; break; }
      it = zero ? terms.erase(it) : ++it;
    }
  }

  bool is_zero() const {
    for (const auto& [key, v] : terms)
      for (const auto& c : v)
        if (!(c == K())) return false;
    return true;
  }

  bool operator==(const VermaVec& o) const {
    if (m != o.m) return false;
    VermaVec a = *this, b = o;
    a.prune();
    b.prune();
    return a.terms == b.terms;
  }

  VermaVec operator+(const VermaVec& o) const {
    VermaVec r = *this;
    for (const auto& [key, v] : o.terms)
      for (int i = 0; i <= m; ++i) r.add(key.first, key.second, i, v[i]);
    r.prune();
    return r;
  }

  VermaVec operator-(const VermaVec& o) const { return *this + (K(Rat(-1)) * o); }

  friend VermaVec operator*(const K& s, const VermaVec& w) {
    VermaVec r(w.m);
    for (const auto& [key, v] : w.terms)
      for (int i = 0; i <= w.m; ++i) r.add(key.first, key.second, i, s * v[i]);
    r.prune();
    return r;
  }

  // Left multiplication by the monomial N1m^da N2m^db (nbar is abelian).
  VermaVec shifted(int da, int db) const {
    VermaVec r(m);
    for (const auto& [key, v] : terms)
      for (int i = 0; i <= m; ++i)
        r.add(key.first + da, key.second + db, i, v[i]);
    return r;
  }
};

namespace detail {

// Coefficients of [x, N1m] and [x, N2m] inside nbar; throws if x does not
// normalize nbar (only Levi elements are passed here).
inline std::array<std::array<Rat, 2>, 2> nbar_adjoint_of_levi(const GElt& x) {
  std::array<std::array<Rat, 2>, 2> c;
  const GElt b1 = bracket(x, N1m());
  const GElt b2 = bracket(x, N2m());
  for (const GElt* b : {&b1, &b2}) {
    GNParts parts = decompose(*b);
    if (!parts.l_part.is_zero() || parts.n_plus[0] != 0 || parts.n_plus[1] != 0)
      throw std::logic_error("nbar_adjoint_of_levi: element does not normalize nbar");
  }
  const GNParts p1 = decompose(b1), p2 = decompose(b2);
  c[0][0] = p1.n_minus[0]; c[1][0] = p1.n_minus[1];
  c[0][1] = p2.n_minus[0]; c[1][1] = p2.n_minus[1];
  return c;
}

}  // namespace detail

// Action of a Levi element: derivation on the nbar monomial plus the fiber
// action sym_action(m) on S^m plus weight * (H0t-coordinate).
template <class K>
VermaVec<K> act_levi(const GElt& x, const VermaVec<K>& w, const K& weight) {
  VermaVec<K> r(w.m);
  const LeviCoords lc = levi_coords(x);
  const Sl2Action sl2 = sym_action(w.m);
  const auto c = detail::nbar_adjoint_of_levi(x);
  for (const auto& [key, v] : w.terms) {
    const auto [a, b] = key;
    for (int i = 0; i <= w.m; ++i) {
      if (v[i] == K()) continue;
      // fiber part: e E + f F + h H + t * weight
      for (int q = 0; q <= w.m; ++q) {
        const Rat f = lc.e * sl2.E[q][i] + lc.f * sl2.F[q][i] + lc.h * sl2.H[q][i];
        if (f != 0) r.add(a, b, q, f * v[i]);
      }
      if (lc.t != 0) r.add(a, b, i, (lc.t * weight) * v[i]);
      // derivation part on N1m^a N2m^b
      if (a > 0) {
        if (c[0][0] != 0) r.add(a, b, i, (Rat(a) * c[0][0]) * v[i]);
        if (c[1][0] != 0) r.add(a - 1, b + 1, i, (Rat(a) * c[1][0]) * v[i]);
      }
      if (b > 0) {
        if (c[0][1] != 0) r.add(a + 1, b - 1, i, (Rat(b) * c[0][1]) * v[i]);
        if (c[1][1] != 0) r.add(a, b, i, (Rat(b) * c[1][1]) * v[i]);
      }
    }
  }
  r.prune();
  return r;
}

namespace detail {

// x in n_plus acting on the single monomial N1m^a N2m^b (x) e_i by the
// commutator recursion; [x, N_j^-] lands in the Levi and the recursion
// strips one nbar factor per step.
template <class K>
VermaVec<K> act_nplus_mono(const GElt& x, int a, int b, int i, int m,
                           const K& weight) {
  VermaVec<K> r(m);
  if (a == 0 && b == 0) return r;  // n_plus kills 1 (x) v
  VermaVec<K> rest(m);
  GElt y;
  int da = 0, db = 0;
  if (a > 0) {
    rest.add(a - 1, b, i, K(Rat(1)));
    y = N1m();
    da = 1;
  } else {
    rest.add(a, b - 1, i, K(Rat(1)));
    y = N2m();
    db = 1;
  }
  r = r + act_levi(bracket(x, y), rest, weight);
  r = r + act_nplus_mono<K>(x, a - da, b - db, i, m, weight).shifted(da, db);
  r.prune();
  return r;
}

}  // namespace detail

// Full sl(3) action on M(sym^m, weight): nbar multiplies, the Levi acts by
// act_levi, n_plus by the commutator recursion.
template <class K>
VermaVec<K> act(const GElt& x, const VermaVec<K>& w, const K& weight) {
  const GNParts parts = decompose(x);
  VermaVec<K> r(w.m);
  if (parts.n_minus[0] != 0) r = r + K(parts.n_minus[0]) * w.shifted(1, 0);
  if (parts.n_minus[1] != 0) r = r + K(parts.n_minus[1]) * w.shifted(0, 1);
  if (!parts.l_part.is_zero()) r = r + act_levi(parts.l_part, w, weight);
  for (int j = 0; j < 2; ++j) {
    if (parts.n_plus[j] == 0) continue;
    const GElt xp = j == 0 ? N1p() : N2p();
    VermaVec<K> piece(w.m);
    for (const auto& [key, v] : w.terms)
      for (int i = 0; i <= w.m; ++i)
        if (!(v[i] == K()))
          piece = piece + v[i] * detail::act_nplus_mono<K>(xp, key.first,
                                                           key.second, i, w.m,
                                                           weight);
    r = r + K(parts.n_plus[j]) * piece;
  }
  r.prune();
  return r;
}

struct VermaModule {
  int m = 0;        // fiber degree
  Rat weight;       // inducing a-weight (value of H0t on 1 (x) v)
  Parity parity;    // metadata only; the Lie algebra action ignores it
  bool operator==(const VermaModule&) const = default;
};

// Module map determined by the images of the source generators 1 (x) v_p.
struct VermaHom {
  VermaModule source, target;
  std::vector<VermaVec<Rat>> images;  // size source.m + 1, live in the target
};

// phi for the l = m + k family at classification parameter lambda
// (target weight -lambda, source weight -lambda - 3k/2). The default lambda
// is the pinned value (2 - m - 2k)/2.
VermaHom build_phi_cartan(int m, int k, const Rat& lambda,
                          const Parity& alpha = Parity(1));
VermaHom build_phi_cartan(int m, int k);

// phi for the l = m - k family; rejects m < k. Default lambda (4 + m - 2k)/2.
VermaHom build_phi_prv(int m, int k, const Rat& lambda,
                       const Parity& alpha = Parity(1));
VermaHom build_phi_prv(int m, int k);

// True iff every generator image is killed by n_plus, the map intertwines
// the Levi sl(2), and every image is an H0t eigenvector at the source weight.
bool verify_hom(const VermaHom& phi);

// phi1 after phi2; requires target of phi2 == source of phi1 as module data.
VermaHom compose_homs(const VermaHom& phi1, const VermaHom& phi2);

// Brute-force Hom space between the degree-l and degree-m modules in
// nbar-degree k, sweeping lambda symbolically. Stage 1 solves the lambda-free
// Levi equivariance, stage 2 imposes n_plus invariance with the target weight
// -lambda and hands the affine system to solve_parametric.
struct HomOracleResult {
  int m = 0, l = 0, k = 0;
  bool all_lambda = false;  // nonzero Hom space for every lambda
  int generic_dim = 0;      // its dimension in that case
  struct Sol {
    Rat lambda;
    std::vector<VermaHom> basis;
  };
  std::vector<Sol> solutions;  // sorted by lambda
};

HomOracleResult hom_oracle(int m, int l, int k);

}  // namespace sl3ido
