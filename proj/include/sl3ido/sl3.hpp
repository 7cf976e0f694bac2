#pragma once

// Concrete sl(3, Q) with the Gelfand-Naimark style basis adapted to the
// maximal parabolic fixing a line:
//
//   N1p = E12, N2p = E13          (abelian nilradical, "bar" side transposed)
//   N1m = E21, N2m = E31          (abelian opposite nilradical)
//   H0t = diag(1, -1/2, -1/2)     (center of the Levi)
//   E = E23, F = E32, H = E22-E33 (sl(2) block of the Levi)
//
// All structure constants are computed from 3x3 matrices, never hand-coded.

#include <array>
#include <string>

#include "sl3ido/poly.hpp"
#include "sl3ido/rational.hpp"

namespace sl3ido {

struct GElt {
  std::array<std::array<Rat, 3>, 3> a{};

  bool operator==(const GElt&) const = default;
  GElt operator+(const GElt&) const;
  GElt operator-(const GElt&) const;
  friend GElt operator*(const Rat& s, const GElt& x);
  bool is_zero() const;
  Rat trace() const;
};

GElt mat_mul(const GElt& x, const GElt& y);
GElt bracket(const GElt& x, const GElt& y);

GElt N1p();
GElt N2p();
GElt N1m();
GElt N2m();
GElt H0t();
GElt LE();  // E23; L-prefixed to dodge the macro-prone single letters
GElt LF();
GElt LH();

// Fixed basis order used everywhere a loop runs over the algebra.
const std::array<GElt, 8>& sl3_basis();
const std::array<std::string, 8>& sl3_basis_names();

// X = (n_minus part) + (Levi part) + (n_plus part)
struct GNParts {
  std::array<Rat, 2> n_minus;  // coefficients of N1m, N2m
  std::array<Rat, 2> n_plus;   // coefficients of N1p, N2p
  GElt l_part;
};

GNParts decompose(const GElt& x);

// Levi element as t*H0t + e*E + f*F + h*H. Throws if x is not in the Levi.
struct LeviCoords {
  Rat t, e, f, h;
};
LeviCoords levi_coords(const GElt& x);

// Ad(exp(-(x1 N1m + x2 N2m))) X, evaluated at rational (x1, x2). The series
// cuts off at the quadratic term because the opposite nilradical is abelian.
GElt ad_conj_nbar(const Rat& x1, const Rat& x2, const GElt& x);

// Same conjugation with (x1, x2) left symbolic; entries are Poly.
struct PolyGElt {
  std::array<std::array<Poly, 3>, 3> a{};
  bool operator==(const PolyGElt&) const = default;
};
PolyGElt ad_conj_nbar_sym(const GElt& x);

// Element m(h) = diag(det(h)^{-1}, h) of the Levi subgroup, det(h) = +/-1.
struct MGroupElt {
  std::array<std::array<Rat, 2>, 2> h;
  MGroupElt(const Rat& h11, const Rat& h12, const Rat& h21, const Rat& h22);
  Rat det_h() const;
  std::array<std::array<Rat, 2>, 2> h_inv() const;
  std::array<std::array<Rat, 3>, 3> g_matrix() const;
  std::array<std::array<Rat, 3>, 3> g_inverse() const;
};

// 2x2 matrix of Ad(g) restricted to span(N1m, N2m), columns = images.
// Equals sgn(det h) * h; the identity is verified by conjugating explicitly.
std::array<std::array<Rat, 2>, 2> m_element_action_on_nminus(const MGroupElt& g);

}  // namespace sl3ido
