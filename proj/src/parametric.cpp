#include "sl3ido/parametric.hpp"

#include <algorithm>
#include <set>

namespace sl3ido {

void Poly1::trim() {
  while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
}

Rat Poly1::eval(const Rat& x) const {
  Rat v = 0;
  for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) v = v * x + *it;
  return v;
}

Poly1 Poly1::operator+(const Poly1& o) const {
  Poly1 r;
  r.coef_.resize(std::max(coef_.size(), o.coef_.size()), Rat(0));
  for (size_t i = 0; i < coef_.size(); ++i) r.coef_[i] = coef_[i];
  for (size_t i = 0; i < o.coef_.size(); ++i) r.coef_[i] += o.coef_[i];
  r.trim();
  return r;
}

Poly1 Poly1::operator-(const Poly1& o) const {
  Poly1 r;
  r.coef_.resize(std::max(coef_.size(), o.coef_.size()), Rat(0));
  for (size_t i = 0; i < coef_.size(); ++i) r.coef_[i] = coef_[i];
  for (size_t i = 0; i < o.coef_.size(); ++i) r.coef_[i] -= o.coef_[i];
  r.trim();
  return r;
}

Poly1 Poly1::operator*(const Poly1& o) const {
  if (is_zero() || o.is_zero()) return Poly1();
  Poly1 r;
  r.coef_.assign(coef_.size() + o.coef_.size() - 1, Rat(0));
  for (size_t i = 0; i < coef_.size(); ++i)
    for (size_t j = 0; j < o.coef_.size(); ++j)
      r.coef_[i + j] += coef_[i] * o.coef_[j];
  r.trim();
  return r;
}

Poly1 Poly1::divexact(const Poly1& d) const {
  if (d.is_zero()) throw std::domain_error("Poly1: division by zero");
  Poly1 rem = *this, q;
  if (degree() >= d.degree())
    q.coef_.assign(degree() - d.degree() + 1, Rat(0));
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    int k = rem.degree() - d.degree();
    Rat f = rem.coef_.back() / d.coef_.back();
    q.coef_[k] = f;
    for (int i = 0; i <= d.degree(); ++i) rem.coef_[i + k] -= f * d.coef_[i];
    rem.trim();
  }
  if (!rem.is_zero()) throw std::domain_error("Poly1: inexact division");
  q.trim();
  return q;
}

Poly1 Poly1::gcd(Poly1 a, Poly1 b) {
  auto monic = [](Poly1& p) {
    if (p.is_zero()) return;
    Rat lead = p.coef_.back();
    for (auto& c : p.coef_) c /= lead;
  };
  while (!b.is_zero()) {
    // a mod b
    Poly1 rem = a;
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      int k = rem.degree() - b.degree();
      Rat f = rem.coef_.back() / b.coef_.back();
      for (int i = 0; i <= b.degree(); ++i) rem.coef_[i + k] -= f * b.coef_[i];
      rem.trim();
    }
    a = std::move(b);
    b = std::move(rem);
  }
  monic(a);
  return a;
}

namespace {

// Divisors of |n| by trial division; guarded so a pathological input fails
// loudly instead of spinning.
std::vector<Int> divisors(Int n) {
  if (n < 0) n = -n;
  if (n > Int("1000000000000"))
    throw std::domain_error("rational_roots: coefficient too large to factor");
  std::vector<Int> ds;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      ds.push_back(n / d);
    }
  }
  return ds;
}

}  // namespace

std::vector<Rat> Poly1::rational_roots() const {
  std::set<Rat> roots;
  if (is_zero()) throw std::domain_error("rational_roots of the zero polynomial");
  // integer primitive form
  std::vector<Rat> c = coef_;
  size_t low = 0;
  while (low < c.size() && c[low] == 0) ++low;
  if (low > 0) roots.insert(Rat(0));
  std::vector<Int> a;
  {
    Int l = 1;
    for (size_t i = low; i < c.size(); ++i)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c[i].get_den_mpz_t());
    for (size_t i = low; i < c.size(); ++i)
      a.push_back(c[i].get_num() * (l / c[i].get_den()));
  }
  const int deg = static_cast<int>(a.size()) - 1;
  if (deg == 1) {
    Rat r(-a[0], a[1]);
    r.canonicalize();
    roots.insert(r);
  } else if (deg == 2) {
    Int D = a[1] * a[1] - 4 * a[2] * a[0];
    if (D >= 0 && mpz_perfect_square_p(D.get_mpz_t())) {
      Int s;
      mpz_sqrt(s.get_mpz_t(), D.get_mpz_t());
      for (const Int& t : {s, Int(-s)}) {
        Rat r(-a[1] + t, 2 * a[2]);
        r.canonicalize();
        roots.insert(r);
      }
    }
  } else if (deg >= 3) {
    for (const Int& p : divisors(a[0])) {
      for (const Int& q : divisors(a[deg])) {
        for (int sign : {1, -1}) {
          Rat r(sign * p, q);
          r.canonicalize();
          if (eval(r) == 0) roots.insert(r);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

namespace {

// Determinant over Rat[lambda] by fraction-free (Bareiss) elimination;
// divisions are exact in the polynomial ring.
Poly1 poly_det(std::vector<std::vector<Poly1>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return Poly1(Rat(1));
  Poly1 prev(Rat(1));
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int sw = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m[i][k].is_zero()) { sw = i; break; }
      if (sw < 0) return Poly1();  // singular
      std::swap(m[k], m[sw]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divexact(prev);
    prev = m[k][k];
  }
  Poly1 d = m[n - 1][n - 1];
  if (sign < 0) d = Poly1() - d;
  return d;
}

}  // namespace

ParametricResult solve_parametric(const std::vector<std::vector<LinParam>>& rows,
                                  int ncols) {
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != ncols)
      throw std::invalid_argument("solve_parametric: ragged rows");
  ParametricResult res;
  if (ncols == 0) return res;  // no nonzero vector exists at any lambda

  // Symbolic elimination over Rat(lambda) to find the generic rank and a set
  // of generically independent rows. Rows are content-normalized after each
  // combine to keep degrees small; only the surviving row indices matter.
  std::vector<std::vector<Poly1>> work;
  std::vector<int> orig;
  for (size_t i = 0; i < rows.size(); ++i) {
    std::vector<Poly1> r;
    r.reserve(ncols);
    bool nz = false;
    for (const auto& e : rows[i]) {
      r.push_back(Poly1::from(e));
      nz = nz || !e.is_zero();
    }
    if (nz) {
      work.push_back(std::move(r));
      orig.push_back(static_cast<int>(i));
    }
  }
  int r = 0;
  std::vector<int> pivot_rows;
  const int nw = static_cast<int>(work.size());
  for (int c = 0; c < ncols && r < nw; ++c) {
    int piv = -1;
    for (int i = r; i < nw; ++i)
      if (!work[i][c].is_zero() &&
          (piv < 0 || work[i][c].degree() < work[piv][c].degree()))
        piv = i;
    if (piv < 0) continue;
    std::swap(work[r], work[piv]);
    std::swap(orig[r], orig[piv]);
    for (int i = r + 1; i < nw; ++i) {
      if (work[i][c].is_zero()) continue;
      const Poly1 a = work[i][c];
      Poly1 g;
      for (int j = c + 1; j < ncols; ++j)
        work[i][j] = work[i][j] * work[r][c] - a * work[r][j];
      // column c cancels exactly; columns before c are zero already.
      work[i][c] = Poly1();
      for (int j = c + 1; j < ncols; ++j) g = Poly1::gcd(g, work[i][j]);
      if (!g.is_zero() && g.degree() > 0)
        for (int j = c + 1; j < ncols; ++j)
          if (!work[i][j].is_zero()) work[i][j] = work[i][j].divexact(g);
    }
    pivot_rows.push_back(orig[r]);
    ++r;
  }
  res.generic_rank = r;
  if (r < ncols) {
    res.all_lambda = true;
    return res;
  }

  // Candidate lambdas: roots of the determinant of the pivot submatrix
  // (original entries). Any lambda where the full matrix loses rank kills
  // every maximal minor, this one included.
  std::vector<std::vector<Poly1>> sub;
  for (int pr : pivot_rows) {
    std::vector<Poly1> s;
    s.reserve(ncols);
    for (const auto& e : rows[pr]) s.push_back(Poly1::from(e));
    sub.push_back(std::move(s));
  }
  Poly1 det = poly_det(std::move(sub));
  if (det.is_zero())
    throw std::logic_error("solve_parametric: pivot submatrix unexpectedly singular");
  for (const Rat& lam : det.rational_roots()) {
    RatMatrix m(static_cast<int>(rows.size()), ncols);
    for (size_t i = 0; i < rows.size(); ++i)
      for (int j = 0; j < ncols; ++j)
        m.set(static_cast<int>(i), j, rows[i][j].eval(lam));
    auto basis = m.nullspace();
    if (!basis.empty())
      res.solutions.push_back({lam, std::move(basis)});
  }
  std::sort(res.solutions.begin(), res.solutions.end(),
            [](const ParametricSolution& a, const ParametricSolution& b) {
              return a.lambda < b.lambda;
            });
  return res;
}

}  // namespace sl3ido
