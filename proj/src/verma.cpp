#include "sl3ido/verma.hpp"

#include <tuple>

#include "sl3ido/classify.hpp"

namespace sl3ido {

VermaHom build_phi_cartan(int m, int k, const Rat& lambda, const Parity& alpha) {
  if (m < 0 || k < 0) throw std::invalid_argument("build_phi_cartan: negative degree");
  VermaHom phi;
  phi.target = {m, -lambda, alpha};
  phi.source = {m + k, -lambda - rat(3 * k, 2), parity_shift(alpha, k)};
  phi.images.assign(m + k + 1, VermaVec<Rat>(m));
  // image of the divided-power basis vector p is
  //   sum_{j+r=p} binom(m,j) binom(k,r) / binom(m+k,p) N1m^(k-r) N2m^r (x) e_j
  for (int j = 0; j <= m; ++j)
    for (int r = 0; r <= k; ++r) {
      const int p = j + r;
      const Rat c = Rat(binomial(m, j)) * Rat(binomial(k, r)) / Rat(binomial(m + k, p));
      phi.images[p].add(k - r, r, j, c);
    }
  return phi;
}

VermaHom build_phi_cartan(int m, int k) {
  return build_phi_cartan(m, k, cartan_lambda(m, k));
}

VermaHom build_phi_prv(int m, int k, const Rat& lambda, const Parity& alpha) {
  if (k < 0 || m < k) throw std::invalid_argument("build_phi_prv: needs m >= k >= 0");
  VermaHom phi;
  phi.target = {m, -lambda, alpha};
  phi.source = {m - k, -lambda - rat(3 * k, 2), parity_shift(alpha, k)};
  phi.images.assign(m - k + 1, VermaVec<Rat>(m));
  // image of basis vector j is sum_r (-1)^r binom(k,r) N1m^(k-r) N2m^r (x) e_(k+j-r)
  for (int j = 0; j <= m - k; ++j)
    for (int r = 0; r <= k; ++r) {
      const Rat c = (r % 2 == 0 ? Rat(1) : Rat(-1)) * Rat(binomial(k, r));
      phi.images[j].add(k - r, r, k + j - r, c);
    }
  return phi;
}

VermaHom build_phi_prv(int m, int k) {
  return build_phi_prv(m, k, prv_lambda(m, k));
}

bool verify_hom(const VermaHom& phi) {
  const int l = phi.source.m;
  if (static_cast<int>(phi.images.size()) != l + 1) return false;
  const Rat& w = phi.target.weight;
  const Sl2Action src = sym_action(l);
  // n_plus kills every image
  for (const auto& im : phi.images) {
    if (!act(N1p(), im, w).is_zero()) return false;
    if (!act(N2p(), im, w).is_zero()) return false;
  }
  // H0t eigenvalue = source weight on every image
  for (const auto& im : phi.images)
    if (!(act(H0t(), im, w) - phi.source.weight * im).is_zero()) return false;
  // Levi sl(2) equivariance against sym_action on the source
  const std::array<std::pair<GElt, const std::vector<FiberVec>*>, 3> gens = {
      std::make_pair(LE(), &src.E), std::make_pair(LF(), &src.F),
      std::make_pair(LH(), &src.H)};
  for (const auto& [x, M] : gens)
    for (int p = 0; p <= l; ++p) {
      VermaVec<Rat> rhs(phi.target.m);
      for (int q = 0; q <= l; ++q)
        if ((*M)[q][p] != 0) rhs = rhs + (*M)[q][p] * phi.images[q];
      if (!(act(x, phi.images[p], w) - rhs).is_zero()) return false;
    }
  return true;
}

VermaHom compose_homs(const VermaHom& phi1, const VermaHom& phi2) {
  if (!(phi2.target == phi1.source))
    throw std::invalid_argument("compose_homs: middle module data mismatch");
  VermaHom out;
  out.source = phi2.source;
  out.target = phi1.target;
  out.images.assign(phi2.images.size(), VermaVec<Rat>(phi1.target.m));
  for (size_t p = 0; p < phi2.images.size(); ++p) {
    for (const auto& [key, v] : phi2.images[p].terms)
      for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (v[i] != 0)
          out.images[p] =
              out.images[p] + v[i] * phi1.images[i].shifted(key.first, key.second);
  }
  return out;
}

namespace {

// unknown layout: ((p * (k+1) + a) * (m+1) + i), monomial N1m^a N2m^(k-a)
int unknown_index(int p, int a, int i, int k, int m) {
  return (p * (k + 1) + a) * (m + 1) + i;
}

VermaHom materialize(int m, int l, int k, const Rat& lambda,
                     const std::vector<Rat>& coeffs) {
  VermaHom phi;
  phi.target = {m, -lambda, Parity(1)};
  phi.source = {l, -lambda - rat(3 * k, 2), parity_shift(Parity(1), k)};
  phi.images.assign(l + 1, VermaVec<Rat>(m));
  for (int p = 0; p <= l; ++p)
    for (int a = 0; a <= k; ++a)
      for (int i = 0; i <= m; ++i)
        phi.images[p].add(a, k - a, i, coeffs[unknown_index(p, a, i, k, m)]);
  return phi;
}

}  // namespace

HomOracleResult hom_oracle(int m, int l, int k) {
  if (m < 0 || l < 0 || k < 0)
    throw std::invalid_argument("hom_oracle: negative parameter");
  HomOracleResult res;
  res.m = m;
  res.l = l;
  res.k = k;
  const int nunk = (l + 1) * (k + 1) * (m + 1);
  const int fib = (k + 1) * (m + 1);  // coordinates of one image vector

  // Stage 1: Levi equivariance, weight-free. Table the action of each sl(2)
  // generator on the monomial basis once.
  const Sl2Action src = sym_action(l);
  const std::array<std::pair<GElt, const std::vector<FiberVec>*>, 3> gens = {
      std::make_pair(LE(), &src.E), std::make_pair(LF(), &src.F),
      std::make_pair(LH(), &src.H)};
  RatMatrix M(3 * (l + 1) * fib, nunk);
  int row0 = 0;
  for (const auto& [x, S] : gens) {
    std::vector<VermaVec<Rat>> table(fib, VermaVec<Rat>(m));
    for (int a = 0; a <= k; ++a)
      for (int i = 0; i <= m; ++i) {
        VermaVec<Rat> mono(m);
        mono.add(a, k - a, i, 1);
        table[a * (m + 1) + i] = act_levi(x, mono, Rat(0));
      }
    for (int p = 0; p <= l; ++p) {
      for (int a = 0; a <= k; ++a)
        for (int i = 0; i <= m; ++i) {
          const auto& img = table[a * (m + 1) + i];
          for (const auto& [key, v] : img.terms)
            for (int q = 0; q <= m; ++q)
              if (v[q] != 0)
                M.add_at(row0 + p * fib + key.first * (m + 1) + q,
                         unknown_index(p, a, i, k, m), v[q]);
        }
      for (int q = 0; q <= l; ++q) {
        if ((*S)[q][p] == 0) continue;
        for (int a = 0; a <= k; ++a)
          for (int i = 0; i <= m; ++i)
            M.add_at(row0 + p * fib + a * (m + 1) + i,
                     unknown_index(q, a, i, k, m), -(*S)[q][p]);
      }
    }
    row0 += (l + 1) * fib;
  }
  const std::vector<std::vector<Rat>> stage1 = M.nullspace();
  const int s = static_cast<int>(stage1.size());
  if (s == 0) return res;

  // Stage 2: n_plus invariance with the target weight symbolic (-lambda).
  const LinParam w(Rat(0), Rat(-1));
  std::vector<std::vector<LinParam>> rows;
  std::map<std::tuple<int, int, std::pair<int, int>, int>, int> row_of;
  for (int t = 0; t < s; ++t) {
    for (int p = 0; p <= l; ++p) {
      VermaVec<LinParam> im(m);
      for (int a = 0; a <= k; ++a)
        for (int i = 0; i <= m; ++i)
          im.add(a, k - a, i, LinParam(stage1[t][unknown_index(p, a, i, k, m)]));
      for (int j = 0; j < 2; ++j) {
        const VermaVec<LinParam> hit = act(j == 0 ? N1p() : N2p(), im, w);
        for (const auto& [key, v] : hit.terms)
          for (int q = 0; q <= m; ++q) {
            if (v[q] == LinParam()) continue;
            const auto rk = std::make_tuple(j, p, key, q);
            auto it = row_of.find(rk);
            if (it == row_of.end()) {
              it = row_of.emplace(rk, static_cast<int>(rows.size())).first;
              rows.emplace_back(s, LinParam());
            }
            rows[it->second][t] += v[q];
          }
      }
    }
  }
  const ParametricResult pr = solve_parametric(rows, s);
  if (pr.all_lambda) {
    res.all_lambda = true;
    res.generic_dim = s - pr.generic_rank;
    return res;
  }
  for (const auto& sol : pr.solutions) {
    HomOracleResult::Sol out;
    out.lambda = sol.lambda;
    for (const auto& u : sol.nullspace) {
      std::vector<Rat> coeffs(nunk, Rat(0));
      for (int t = 0; t < s; ++t)
        if (u[t] != 0)
          for (int idx = 0; idx < nunk; ++idx) coeffs[idx] += u[t] * stage1[t][idx];
      out.basis.push_back(materialize(m, l, k, sol.lambda, coeffs));
    }
    res.solutions.push_back(std::move(out));
  }
  return res;
}

}  // namespace sl3ido
