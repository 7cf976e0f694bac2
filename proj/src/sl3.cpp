#include "sl3ido/sl3.hpp"

#include <stdexcept>

namespace sl3ido {

GElt GElt::operator+(const GElt& o) const {
  GElt r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.a[i][j] = a[i][j] + o.a[i][j];
  return r;
}

GElt GElt::operator-(const GElt& o) const {
  GElt r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.a[i][j] = a[i][j] - o.a[i][j];
  return r;
}

GElt operator*(const Rat& s, const GElt& x) {
  GElt r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.a[i][j] = s * x.a[i][j];
  return r;
}

bool GElt::is_zero() const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (a[i][j] != 0) return false;
  return true;
}

Rat GElt::trace() const { return a[0][0] + a[1][1] + a[2][2]; }

GElt mat_mul(const GElt& x, const GElt& y) {
  GElt r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r.a[i][j] += x.a[i][k] * y.a[k][j];
  return r;
}

GElt bracket(const GElt& x, const GElt& y) {
  return mat_mul(x, y) - mat_mul(y, x);
}

namespace {
GElt unit(int i, int j) {
  GElt r;
  r.a[i][j] = 1;
  return r;
}
}  // namespace

GElt N1p() { return unit(0, 1); }
GElt N2p() { return unit(0, 2); }
GElt N1m() { return unit(1, 0); }
GElt N2m() { return unit(2, 0); }
GElt H0t() {
  GElt r;
  r.a[0][0] = 1;
  r.a[1][1] = Rat(-1, 2);
  r.a[2][2] = Rat(-1, 2);
  return r;
}
GElt LE() { return unit(1, 2); }
GElt LF() { return unit(2, 1); }
GElt LH() { return unit(1, 1) - unit(2, 2); }

const std::array<GElt, 8>& sl3_basis() {
  static const std::array<GElt, 8> b = {N1p(), N2p(), N1m(), N2m(),
                                        H0t(), LE(),  LF(),  LH()};
  return b;
}

const std::array<std::string, 8>& sl3_basis_names() {
  static const std::array<std::string, 8> n = {"N1+", "N2+", "N1-", "N2-",
                                               "H0~", "E",   "F",   "H"};
  return n;
}

GNParts decompose(const GElt& x) {
  GNParts p;
  p.n_minus = {x.a[1][0], x.a[2][0]};
  p.n_plus = {x.a[0][1], x.a[0][2]};
  p.l_part = x;
  p.l_part.a[1][0] = p.l_part.a[2][0] = 0;
  p.l_part.a[0][1] = p.l_part.a[0][2] = 0;
  return p;
}

LeviCoords levi_coords(const GElt& x) {
  if (x.a[1][0] != 0 || x.a[2][0] != 0 || x.a[0][1] != 0 || x.a[0][2] != 0 ||
      x.trace() != 0)
    throw std::invalid_argument("levi_coords: element not in the Levi");
  LeviCoords c;
  c.t = x.a[0][0];
  c.e = x.a[1][2];
  c.f = x.a[2][1];
  c.h = x.a[1][1] + c.t / 2;
  if (x.a[2][2] != -c.t / 2 - c.h)
    throw std::invalid_argument("levi_coords: inconsistent diagonal");
  return c;
}

GElt ad_conj_nbar(const Rat& x1, const Rat& x2, const GElt& x) {
  GElt s = x1 * N1m() + x2 * N2m();
  GElt b1 = bracket(s, x);
  GElt b2 = bracket(s, b1);
  return x - b1 + Rat(1, 2) * b2;
}

PolyGElt ad_conj_nbar_sym(const GElt& x) {
  const GElt b1 = bracket(N1m(), x), b2 = bracket(N2m(), x);
  const GElt c11 = bracket(N1m(), b1), c12 = bracket(N1m(), b2);
  const GElt c21 = bracket(N2m(), b1), c22 = bracket(N2m(), b2);
  PolyGElt r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Poly p(x.a[i][j]);
      p.add_term(1, 0, -b1.a[i][j]);
      p.add_term(0, 1, -b2.a[i][j]);
      p.add_term(2, 0, Rat(1, 2) * c11.a[i][j]);
      p.add_term(1, 1, Rat(1, 2) * (c12.a[i][j] + c21.a[i][j]));
      p.add_term(0, 2, Rat(1, 2) * c22.a[i][j]);
      r.a[i][j] = p;
    }
  }
  return r;
}

MGroupElt::MGroupElt(const Rat& h11, const Rat& h12, const Rat& h21,
                     const Rat& h22)
    : h{{{h11, h12}, {h21, h22}}} {
  Rat d = det_h();
  if (d != 1 && d != -1)
    throw std::invalid_argument("MGroupElt: det(h) must be +1 or -1");
}

Rat MGroupElt::det_h() const { return h[0][0] * h[1][1] - h[0][1] * h[1][0]; }

std::array<std::array<Rat, 2>, 2> MGroupElt::h_inv() const {
  Rat d = det_h();
  return {{{h[1][1] / d, -h[0][1] / d}, {-h[1][0] / d, h[0][0] / d}}};
}

std::array<std::array<Rat, 3>, 3> MGroupElt::g_matrix() const {
  std::array<std::array<Rat, 3>, 3> g{};
  g[0][0] = Rat(1) / det_h();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g[i + 1][j + 1] = h[i][j];
  return g;
}

std::array<std::array<Rat, 3>, 3> MGroupElt::g_inverse() const {
  std::array<std::array<Rat, 3>, 3> g{};
  g[0][0] = det_h();
  auto hi = h_inv();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g[i + 1][j + 1] = hi[i][j];
  return g;
}

std::array<std::array<Rat, 2>, 2> m_element_action_on_nminus(const MGroupElt& g) {
  auto gm = g.g_matrix();
  auto gi = g.g_inverse();
  std::array<std::array<Rat, 2>, 2> out{};
  for (int col = 0; col < 2; ++col) {
    // conjugate N(col+1)m = E_{col+2,1}
    GElt n;
    n.a[col + 1][0] = 1;
    GElt gn, gng;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        gn.a[i][j] = 0;
        for (int k = 0; k < 3; ++k) gn.a[i][j] += gm[i][k] * n.a[k][j];
      }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        gng.a[i][j] = 0;
        for (int k = 0; k < 3; ++k) gng.a[i][j] += gn.a[i][k] * gi[k][j];
      }
    GNParts p = decompose(gng);
    if (!p.l_part.is_zero() || p.n_plus[0] != 0 || p.n_plus[1] != 0)
      throw std::logic_error("m_element_action_on_nminus: image left the nilradical");
    out[0][col] = p.n_minus[0];
    out[1][col] = p.n_minus[1];
  }
  return out;
}

}  // namespace sl3ido
