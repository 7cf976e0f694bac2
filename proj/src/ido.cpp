#include "sl3ido/ido.hpp"

#include <stdexcept>

namespace sl3ido {

IDO build_cartan(int m, int k, const Rat& lambda, const Parity& alpha) {
  if (m < 0 || k < 0) throw std::invalid_argument("build_cartan: negative degree");
  IDO d;
  d.source = {m, lambda, alpha};
  d.target = {m + k, nu_from_lambda(lambda, k), parity_shift(alpha, k)};
  d.family = k == 0 ? Family::Identity : Family::Cartan;
  d.op = WeylOp(m, m + k);
  for (int r = 0; r <= k; ++r) {
    FiberMap f(m, m + k);
    for (int j = 0; j <= m; ++j) f.m[j + r][j] = Rat(binomial(k, r));
    d.op.add_term(WeylKey{0, 0, k - r, r}, f);
  }
  return d;
}

IDO build_cartan(int m, int k) {
  return build_cartan(m, k, cartan_lambda(m, k), Parity(1));
}

IDO build_prv(int m, int k, const Rat& lambda, const Parity& alpha) {
  if (k < 0 || m < k) throw std::invalid_argument("build_prv: needs m >= k >= 0");
  IDO d;
  d.source = {m, lambda, alpha};
  d.target = {m - k, nu_from_lambda(lambda, k), parity_shift(alpha, k)};
  d.family = k == 0 ? Family::Identity : Family::PRV;
  d.op = WeylOp(m, m - k);
  for (int r = 0; r <= k; ++r) {
    FiberMap f(m, m - k);
    for (int j = 0; j <= m - k; ++j) {
      const int p = k + j - r;  // source fiber slot hit by this term
      f.m[j][p] = (r % 2 == 0 ? Rat(1) : Rat(-1)) * Rat(binomial(m - k, j)) *
                  Rat(binomial(k, r)) / Rat(binomial(m, p));
    }
    d.op.add_term(WeylKey{0, 0, k - r, r}, f);
  }
  return d;
}

IDO build_prv(int m, int k) {
  return build_prv(m, k, prv_lambda(m, k), Parity(1));
}

IDO dualize(const VermaHom& phi) {
  if (!verify_hom(phi))
    throw std::invalid_argument("dualize: input is not a module homomorphism");
  const int m = phi.target.m;  // source fiber degree of the operator
  const int l = phi.source.m;  // target fiber degree
  IDO d;
  d.source = {m, -phi.target.weight, phi.target.parity};
  d.target = {l, -phi.source.weight, phi.source.parity};
  d.family = l > m ? Family::Cartan : (l < m ? Family::PRV : Family::Identity);
  d.op = WeylOp(m, l);
  const Rat base = Rat(factorial(l)) / Rat(factorial(m));
  for (int p = 0; p <= l; ++p) {
    const Rat row_norm = base / (Rat(factorial(l - p)) * Rat(factorial(p)));
    for (const auto& [key, v] : phi.images[p].terms) {
      FiberMap f(m, l);
      bool nonzero = false;
      for (int i = 0; i <= m; ++i) {
        if (v[i] == 0) continue;
        f.m[p][i] = v[i] * row_norm * Rat(factorial(m - i)) * Rat(factorial(i));
        nonzero = true;
      }
      if (nonzero) d.op.add_term(WeylKey{0, 0, key.first, key.second}, f);
    }
  }
  return d;
}

WeylOp dpi(const InducedRepData& rep, const GElt& x) {
  const PolyGElt conj = ad_conj_nbar_sym(x);
  const Sl2Action pol = pol_action(rep.m);
  WeylOp op(rep.m, rep.m);
  // Levi component of the conjugated element, as polynomials in x:
  // t H0t + e E + f F + h H with t = a00, h = a11 + t/2.
  const Poly& t = conj.a[0][0];
  const Poly& e = conj.a[1][2];
  const Poly& f = conj.a[2][1];
  const Poly h = conj.a[1][1] + Rat(1, 2) * t;
  for (int q = 0; q <= rep.m; ++q)
    for (int j = 0; j <= rep.m; ++j) {
      // fiber matrix entry as a polynomial in x
      Poly entry = pol.E[q][j] * e + pol.F[q][j] * f + pol.H[q][j] * h;
      if (q == j) entry = entry + rep.lambda * t;
      for (const auto& [mono, c] : entry.terms()) {
        FiberMap fm(rep.m, rep.m);
        fm.m[q][j] = c;
        op.add_term(WeylKey{mono.first, mono.second, 0, 0}, fm);
      }
    }
  // nbar component acts by minus the coordinate derivatives
  for (int j = 0; j < 2; ++j) {
    const Poly& y = conj.a[j + 1][0];
    for (const auto& [mono, c] : y.terms()) {
      FiberMap fm = Rat(-c) * FiberMap::identity(rep.m);
      op.add_term(WeylKey{mono.first, mono.second, j == 0 ? 1 : 0, j == 0 ? 0 : 1},
                  fm);
    }
  }
  return op;
}

bool check_intertwine(const IDO& d) {
  const auto& basis = sl3_basis();
  bool ok = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : ok)
  for (size_t i = 0; i < basis.size(); ++i) {
    const WeylOp lhs = weyl_mul(d.op, dpi(d.source, basis[i]));
    const WeylOp rhs = weyl_mul(dpi(d.target, basis[i]), d.op);
    ok = ok && (lhs - rhs).is_zero();
  }
  return ok;
}

IDO compose_ido(const IDO& d2, const IDO& d1) {
  if (!(d1.target == d2.source))
    throw std::invalid_argument("compose_ido: middle bundle data mismatch");
  IDO out;
  out.source = d1.source;
  out.target = d2.target;
  out.family = Family::None;
  out.op = weyl_mul(d2.op, d1.op);
  return out;
}

}  // namespace sl3ido
