#include "sl3ido/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace sl3ido {

Poly Poly::monomial(int a, int b, const Rat& c) {
  if (a < 0 || b < 0) throw std::invalid_argument("Poly: negative exponent");
  Poly p;
  p.add_term(a, b, c);
  return p;
}

void Poly::add_term(int a, int b, const Rat& c) {
  if (c == 0) return;
  Rat& slot = t_[{a, b}];
  slot += c;
  if (slot == 0) t_.erase({a, b});
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [k, v] : t_) d = std::max(d, k.first + k.second);
  return d;
}

Rat Poly::coeff(int a, int b) const {
  auto it = t_.find({a, b});
  return it == t_.end() ? Rat(0) : it->second;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [k, v] : o.t_) r.add_term(k.first, k.second, v);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [k, v] : o.t_) r.add_term(k.first, k.second, -v);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [k1, v1] : t_)
    for (const auto& [k2, v2] : o.t_)
      r.add_term(k1.first + k2.first, k1.second + k2.second, v1 * v2);
  return r;
}

Poly operator*(const Rat& s, const Poly& p) {
  Poly r;
  for (const auto& [k, v] : p.t_) r.add_term(k.first, k.second, s * v);
  return r;
}

Poly Poly::operator-() const { return Rat(-1) * *this; }

Poly Poly::derivative(int var) const {
  Poly r;
  for (const auto& [k, v] : t_) {
    if (var == 0 && k.first > 0) r.add_term(k.first - 1, k.second, Rat(k.first) * v);
    if (var == 1 && k.second > 0) r.add_term(k.first, k.second - 1, Rat(k.second) * v);
  }
  return r;
}

Poly Poly::homogeneous_part(int d) const {
  Poly r;
  for (const auto& [k, v] : t_)
    if (k.first + k.second == d) r.add_term(k.first, k.second, v);
  return r;
}

Poly Poly::subst_linear(const std::array<std::array<Rat, 2>, 2>& M) const {
  Poly l1, l2;
  l1.add_term(1, 0, M[0][0]);
  l1.add_term(0, 1, M[0][1]);
  l2.add_term(1, 0, M[1][0]);
  l2.add_term(0, 1, M[1][1]);
  // cache powers up to the needed degree
  int da = 0, db = 0;
  for (const auto& [k, v] : t_) {
    da = std::max(da, k.first);
    db = std::max(db, k.second);
  }
  std::vector<Poly> p1(da + 1), p2(db + 1);
  p1[0] = Poly(Rat(1));
  for (int i = 1; i <= da; ++i) p1[i] = p1[i - 1] * l1;
  p2[0] = Poly(Rat(1));
  for (int i = 1; i <= db; ++i) p2[i] = p2[i - 1] * l2;
  Poly r;
  for (const auto& [k, v] : t_) r = r + v * (p1[k.first] * p2[k.second]);
  return r;
}

Rat Poly::eval(const Rat& x1, const Rat& x2) const {
  Rat r = 0;
  for (const auto& [k, v] : t_) {
    Rat m = v;
    for (int i = 0; i < k.first; ++i) m *= x1;
    for (int i = 0; i < k.second; ++i) m *= x2;
    r += m;
  }
  return r;
}

}  // namespace sl3ido
