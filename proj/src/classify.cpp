#include "sl3ido/classify.hpp"

#include <stdexcept>

namespace sl3ido {

std::string family_name(Family f) {
  switch (f) {
    case Family::None: return "None";
    case Family::Identity: return "Identity";
    case Family::Cartan: return "Cartan";
    case Family::PRV: return "PRV";
  }
  return "None";
}

Rat cartan_lambda(int m, int k) { return rat(2 - m - 2 * k, 2); }
Rat prv_lambda(int m, int k) { return rat(4 + m - 2 * k, 2); }
Rat nu_from_lambda(const Rat& lambda, int k) { return lambda + rat(3 * k, 2); }

ParamPoint cartan_params(int m, int k, const Parity& alpha) {
  ParamPoint p;
  p.alpha = alpha;
  p.beta = parity_shift(alpha, k);
  p.m = m;
  p.l = m + k;
  p.lambda = cartan_lambda(m, k);
  p.nu = nu_from_lambda(p.lambda, k);
  return p;
}

ParamPoint prv_params(int m, int k, const Parity& alpha) {
  if (m < k) throw std::invalid_argument("prv_params: needs m >= k");
  ParamPoint p;
  p.alpha = alpha;
  p.beta = parity_shift(alpha, k);
  p.m = m;
  p.l = m - k;
  p.lambda = prv_lambda(m, k);
  p.nu = nu_from_lambda(p.lambda, k);
  return p;
}

Verdict classify(const ParamPoint& p) {
  Verdict v;
  if (p.m < 0 || p.l < 0) return v;
  if (p.alpha == p.beta && p.m == p.l && p.lambda == p.nu) {
    v.family = Family::Identity;
    v.m = p.m;
    v.k = 0;
    return v;
  }
  if (p.l > p.m) {
    const int k = p.l - p.m;
    if (p.beta == parity_shift(p.alpha, k) && p.lambda == cartan_lambda(p.m, k) &&
        p.nu == nu_from_lambda(p.lambda, k)) {
      v.family = Family::Cartan;
      v.m = p.m;
      v.k = k;
    }
    return v;
  }
  if (p.l < p.m) {
    const int k = p.m - p.l;
    if (p.beta == parity_shift(p.alpha, k) && p.lambda == prv_lambda(p.m, k) &&
        p.nu == nu_from_lambda(p.lambda, k)) {
      v.family = Family::PRV;
      v.m = p.m;
      v.k = k;
    }
    return v;
  }
  return v;  // l == m but not the identity data
}

std::vector<EnumeratedPoint> enumerate_points(int max_m, int max_l) {
  if (max_m < 0 || max_l < 0)
    throw std::invalid_argument("enumerate_points: negative bound");
  std::vector<EnumeratedPoint> out;
  for (int m = 0; m <= max_m; ++m) {
    for (int k = 1; m + k <= max_l; ++k) {
      EnumeratedPoint e;
      e.p = cartan_params(m, k);
      e.v = classify(e.p);
      out.push_back(e);
    }
    for (int k = 1; k <= m; ++k) {
      if (m - k > max_l) continue;
      EnumeratedPoint e;
      e.p = prv_params(m, k);
      e.v = classify(e.p);
      out.push_back(e);
    }
    if (m <= max_l) {
      for (int sign : {1, -1}) {
        EnumeratedPoint e;
        e.p.alpha = e.p.beta = Parity(sign);
        e.p.m = e.p.l = m;
        e.p.lambda = e.p.nu = 0;  // representative; any value classifies the same
        e.v = classify(e.p);
        e.lambda_any = true;
        out.push_back(e);
      }
    }
  }
  return out;
}

std::pair<int, int> theta(int m, int k) {
  if (m < 0 || k < 0) throw std::invalid_argument("theta: negative label");
  return {m + k + 1, m};
}

std::pair<int, int> theta_inv(int m, int k) {
  if (m < 0 || k < 0) throw std::invalid_argument("theta_inv: negative label");
  if (m - k - 1 < 0) throw std::invalid_argument("theta_inv: m - k - 1 < 0");
  return {k, m - k - 1};
}

}  // namespace sl3ido
