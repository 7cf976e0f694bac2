#include "sl3ido/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace sl3ido {

FiberMap::FiberMap(int src, int tgt)
    : src_deg(src), tgt_deg(tgt),
      m(tgt + 1, std::vector<Rat>(src + 1, Rat(0))) {
  if (src < 0 || tgt < 0) throw std::invalid_argument("FiberMap: negative degree");
}

FiberMap FiberMap::identity(int deg) {
  FiberMap f(deg, deg);
  for (int j = 0; j <= deg; ++j) f.m[j][j] = 1;
  return f;
}

bool FiberMap::is_zero() const {
  for (const auto& row : m)
    for (const auto& v : row)
      if (v != 0) return false;
  return true;
}

FiberMap& FiberMap::operator+=(const FiberMap& o) {
  if (src_deg != o.src_deg || tgt_deg != o.tgt_deg)
    throw std::invalid_argument("FiberMap: degree mismatch in +=");
  for (int q = 0; q <= tgt_deg; ++q)
    for (int j = 0; j <= src_deg; ++j) m[q][j] += o.m[q][j];
  return *this;
}

FiberMap operator*(const Rat& s, const FiberMap& f) {
  FiberMap r = f;
  for (auto& row : r.m)
    for (auto& v : row) v *= s;
  return r;
}

FiberMap compose(const FiberMap& a, const FiberMap& b) {
  if (a.src_deg != b.tgt_deg)
    throw std::invalid_argument("FiberMap: compose degree mismatch");
  FiberMap r(b.src_deg, a.tgt_deg);
  for (int q = 0; q <= a.tgt_deg; ++q)
    for (int p = 0; p <= a.src_deg; ++p) {
      if (a.m[q][p] == 0) continue;
      for (int j = 0; j <= b.src_deg; ++j)
        if (b.m[p][j] != 0) r.m[q][j] += a.m[q][p] * b.m[p][j];
    }
  return r;
}

void WeylOp::add_term(const WeylKey& k, const FiberMap& f) {
  if (f.src_deg != src_ || f.tgt_deg != tgt_)
    throw std::invalid_argument("WeylOp: fiber map degree mismatch");
  if (k.xa < 0 || k.xb < 0 || k.da < 0 || k.db < 0)
    throw std::invalid_argument("WeylOp: negative exponent in key");
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    if (!f.is_zero()) terms_.emplace(k, f);
    return;
  }
  it->second += f;
  if (it->second.is_zero()) terms_.erase(it);
}

void WeylOp::add_scalar_term(const WeylKey& k, const Rat& c) {
  if (src_ != tgt_)
    throw std::invalid_argument("WeylOp: scalar term needs equal fiber degrees");
  add_term(k, c * FiberMap::identity(src_));
}

WeylOp WeylOp::operator+(const WeylOp& o) const {
  if (src_ != o.src_ || tgt_ != o.tgt_)
    throw std::invalid_argument("WeylOp: degree mismatch in +");
  WeylOp r = *this;
  for (const auto& [k, f] : o.terms_) r.add_term(k, f);
  return r;
}

WeylOp WeylOp::operator-(const WeylOp& o) const {
  return *this + Rat(-1) * o;
}

WeylOp operator*(const Rat& s, const WeylOp& a) {
  WeylOp r(a.src_, a.tgt_);
  if (s == 0) return r;
  for (const auto& [k, f] : a.terms_) r.terms_.emplace(k, s * f);
  return r;
}

WeylOp WeylOp::identity(int deg) {
  WeylOp r(deg, deg);
  r.add_term(WeylKey{}, FiberMap::identity(deg));
  return r;
}

bool WeylOp::constant_coefficients() const {
  for (const auto& [k, f] : terms_)
    if (k.xa != 0 || k.xb != 0) return false;
  return true;
}

int WeylOp::max_order() const {
  int d = 0;
  for (const auto& [k, f] : terms_) d = std::max(d, k.order());
  return d;
}

bool WeylOp::uniform_order() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.order();
  for (const auto& [k, f] : terms_)
    if (k.order() != d) return false;
  return true;
}

WeylOp weyl_mul(const WeylOp& a, const WeylOp& b) {
  if (a.src_deg() != b.tgt_deg())
    throw std::invalid_argument("weyl_mul: fiber degrees do not chain");
  WeylOp r(b.src_deg(), a.tgt_deg());
  for (const auto& [ka, fa] : a.terms()) {
    for (const auto& [kb, fb] : b.terms()) {
      const FiberMap fab = compose(fa, fb);
      // Commute a's derivatives past b's x factors, one variable at a time.
      for (int i = 0; i <= std::min(ka.da, kb.xa); ++i) {
        const Rat c1 = Rat(binomial(ka.da, i)) * Rat(falling(kb.xa, i));
        for (int j = 0; j <= std::min(ka.db, kb.xb); ++j) {
          const Rat c = c1 * Rat(binomial(ka.db, j)) * Rat(falling(kb.xb, j));
          WeylKey k;
          k.xa = ka.xa + kb.xa - i;
          k.xb = ka.xb + kb.xb - j;
          k.da = ka.da - i + kb.da;
          k.db = ka.db - j + kb.db;
          r.add_term(k, c * fab);
        }
      }
    }
  }
  return r;
}

bool Section::is_zero() const {
  for (const auto& p : comps)
    if (!p.is_zero()) return false;
  return true;
}

Section Section::operator+(const Section& o) const {
  if (fiber_deg != o.fiber_deg)
    throw std::invalid_argument("Section: fiber degree mismatch");
  Section r(fiber_deg);
  for (int j = 0; j <= fiber_deg; ++j) r.comps[j] = comps[j] + o.comps[j];
  return r;
}

Section Section::operator-(const Section& o) const {
  return *this + Rat(-1) * o;
}

Section operator*(const Rat& s, const Section& f) {
  Section r(f.fiber_deg);
  for (int j = 0; j <= f.fiber_deg; ++j) r.comps[j] = s * f.comps[j];
  return r;
}

Section Section::homogeneous_part(int d) const {
  Section r(fiber_deg);
  for (int j = 0; j <= fiber_deg; ++j) r.comps[j] = comps[j].homogeneous_part(d);
  return r;
}

int Section::max_x_degree() const {
  int d = -1;
  for (const auto& p : comps) d = std::max(d, p.total_degree());
  return d;
}

namespace {

Poly iterated_derivative(Poly p, int var, int n) {
  for (int i = 0; i < n && !p.is_zero(); ++i) p = p.derivative(var);
  return p;
}

}  // namespace

Section apply(const WeylOp& op, const Section& s) {
  if (s.fiber_deg != op.src_deg())
    throw std::invalid_argument("apply: section fiber degree mismatch");
  Section r(op.tgt_deg());
  for (const auto& [k, f] : op.terms()) {
    const Poly xmono = Poly::monomial(k.xa, k.xb, Rat(1));
    for (int j = 0; j <= op.src_deg(); ++j) {
      if (s.comps[j].is_zero()) continue;
      Poly d = iterated_derivative(s.comps[j], 0, k.da);
      d = iterated_derivative(d, 1, k.db);
      if (d.is_zero()) continue;
      const Poly term = xmono * d;
      for (int q = 0; q <= op.tgt_deg(); ++q)
        if (f.m[q][j] != 0) r.comps[q] = r.comps[q] + f.m[q][j] * term;
    }
  }
  return r;
}

RatMatrix homogeneous_matrix(const WeylOp& op, int d) {
  if (d < 0) throw std::invalid_argument("homogeneous_matrix: negative degree");
  if (!op.constant_coefficients() || !op.uniform_order())
    throw std::logic_error(
        "homogeneous_matrix: needs constant coefficients of uniform order");
  const int order = op.max_order();
  const int sf = op.src_deg(), tf = op.tgt_deg();
  const int dt = d - order;
  const int ncols = (d + 1) * (sf + 1);
  const int nrows = dt < 0 ? 0 : (dt + 1) * (tf + 1);
  RatMatrix M(nrows, ncols);
  if (nrows == 0) return M;
  for (const auto& [k, f] : op.terms()) {
    // d1^da d2^db (x1^(d-t) x2^t) = falling(d-t,da) falling(t,db) x1^... x2^(t-db)
    for (int t = 0; t <= d; ++t) {
      if (t - k.db < 0 || t - k.db > dt) continue;
      const Rat c = Rat(falling(d - t, k.da)) * Rat(falling(t, k.db));
      if (c == 0) continue;
      for (int q = 0; q <= tf; ++q)
        for (int j = 0; j <= sf; ++j)
          if (f.m[q][j] != 0)
            M.add_at((t - k.db) * (tf + 1) + q, t * (sf + 1) + j, c * f.m[q][j]);
    }
  }
  return M;
}

int rank_on_degree(const WeylOp& op, int d) {
  return homogeneous_matrix(op, d).rank();
}

std::vector<Section> kernel_on_degree(const WeylOp& op, int d) {
  const RatMatrix M = homogeneous_matrix(op, d);
  const int sf = op.src_deg();
  std::vector<Section> out;
  for (const auto& v : M.nullspace()) {
    Section s(sf);
    for (int t = 0; t <= d; ++t)
      for (int j = 0; j <= sf; ++j) {
        const Rat& c = v[t * (sf + 1) + j];
        if (c != 0) s.comps[j].add_term(d - t, t, c);
      }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace sl3ido
