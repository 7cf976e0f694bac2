#include "sl3ido/bgg.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace sl3ido {

long weyl_dim(int m, int k) {
  if (m < 0 || k < 0) throw std::invalid_argument("weyl_dim: negative label");
  return static_cast<long>(m + 1) * (k + 1) * (m + k + 2) / 2;
}

BGGComplex make_bgg_complex(int m, int k) {
  if (m < 0 || k < 0) throw std::invalid_argument("make_bgg_complex: negative label");
  BGGComplex b;
  b.m = m;
  b.k = k;
  b.C = build_cartan(m, k + 1, rat(-(m + 2 * k), 2), Parity::from_exponent(m + k));
  b.P = build_prv(m + k + 1, m + 1, rat(3 - m + k, 2), Parity::from_exponent(m + 1));
  if (!(b.C.target == b.P.source))
    throw std::logic_error("make_bgg_complex: stages do not chain");
  b.stage0 = b.C.source;
  b.stage1 = b.C.target;
  b.stage2 = b.P.target;
  return b;
}

ExactnessReport check_exactness(int m, int k, int D) {
  ExactnessReport rep;
  rep.m = m;
  rep.k = k;
  rep.D = D;
  if (D < m + k + 2) {
    rep.status = "inconclusive";
    return rep;
  }
  const BGGComplex b = make_bgg_complex(m, k);
  const int cord = k + 1, pord = m + 1;
  std::vector<int> rank_C(D + 1, 0), rank_P(D + 1, 0);
#pragma omp parallel for schedule(dynamic)
  for (int d = 0; d <= D; ++d) {
    rank_C[d] = rank_on_degree(b.C.op, d);
    rank_P[d] = rank_on_degree(b.P.op, d);
  }
  const auto src_dim_C = [&](int d) { return (d + 1) * (m + 1); };
  const auto src_dim_P = [&](int d) { return (d + 1) * (m + k + 2); };
  rep.kernel_stable = true;
  rep.middle_exact = true;
  for (int d = 0; d <= D; ++d) {
    const int ker_C = src_dim_C(d) - rank_C[d];
    rep.kernel_dim += ker_C;
    if (d > m + k && ker_C != 0) rep.kernel_stable = false;
    ExactnessReport::PerDegree pd;
    pd.d = d;
    pd.rank_C = rank_C[d];
    const int dp = d - cord;  // degree of the image of C, where P eats it
    pd.dim_ker_P = dp < 0 ? 0 : src_dim_P(dp) - rank_P[dp];
    pd.ok = pd.rank_C == pd.dim_ker_P;
    if (!pd.ok) rep.middle_exact = false;
    rep.per_degree.push_back(pd);
  }
  rep.kernel_stable = rep.kernel_stable && rep.kernel_dim == weyl_dim(m, k);
  rep.surjective = true;
  for (int g = 0; g + pord + cord <= D; ++g)
    if (rank_P[g + pord] != (g + 1) * (k + 1)) rep.surjective = false;
  rep.exact = rep.kernel_stable && rep.middle_exact && rep.surjective;
  rep.status = "ok";
  return rep;
}

SectionSpan::Vec SectionSpan::reduce(const Section& s) const {
  Vec v;
  for (int j = 0; j <= m_; ++j)
    for (const auto& [mono, c] : s.comps[j].terms())
      if (c != 0) v[{mono.first, mono.second, j}] = c;
  // eliminate against stored rows, smallest pivot first (rows_ is ordered)
  for (auto it = v.begin(); it != v.end();) {
    auto rit = rows_.find(it->first);
    if (rit == rows_.end()) {
      ++it;
      continue;
    }
    const Rat factor = it->second;
    for (const auto& [key, c] : rit->second) {
      auto vit = v.find(key);
      Rat nv = (vit == v.end() ? Rat(0) : vit->second) - factor * c;
      if (nv == 0) {
        if (vit != v.end()) v.erase(vit);
      } else {
        v[key] = nv;
      }
    }
    // the pivot entry itself is now zero; restart from the next candidate
    it = v.upper_bound(rit->first);
  }
  return v;
}

bool SectionSpan::insert(const Section& s) {
  Vec v = reduce(s);
  if (v.empty()) return false;
  const Key pivot = v.begin()->first;
  const Rat lead = v.begin()->second;
  for (auto& [key, c] : v) c /= lead;
  rows_.emplace(pivot, std::move(v));
  return true;
}

bool SectionSpan::contains(const Section& s) const { return reduce(s).empty(); }

namespace {

Section seed_section(int m) {
  Section s(m);
  s.comps[0] = Poly(Rat(1));  // constant section with fiber value u1^m
  return s;
}

}  // namespace

KernelRep generate_kernel_rep(int m, int k) {
  const long target_dim = weyl_dim(m, k);
  const InducedRepData rep0{m, rat(-(m + 2 * k), 2), Parity::from_exponent(m + k)};
  std::array<WeylOp, 8> ops;
  for (size_t i = 0; i < ops.size(); ++i) ops[i] = dpi(rep0, sl3_basis()[i]);

  KernelRep out;
  out.m = m;
  out.k = k;
  SectionSpan span(m);
  std::deque<Section> queue;
  const Section seed = seed_section(m);
  span.insert(seed);
  out.basis.push_back(seed);
  queue.push_back(seed);
  while (!queue.empty()) {
    const Section s = std::move(queue.front());
    queue.pop_front();
    for (const auto& op : ops) {
      Section t = apply(op, s);
      if (t.is_zero() || !span.insert(t)) continue;
      out.basis.push_back(t);
      queue.push_back(t);
      if (span.dim() > 4 * target_dim)
        throw std::runtime_error(
            "generate_kernel_rep: closure blew past 4x the expected dimension");
    }
  }
  out.dimension = span.dim();
  return out;
}

std::vector<GradingLevel> grading_profile(int m, int k) {
  const KernelRep rep = generate_kernel_rep(m, k);
  int maxd = 0;
  for (const auto& s : rep.basis) maxd = std::max(maxd, s.max_x_degree());
  std::vector<GradingLevel> out;
  for (int d = 0; d <= maxd; ++d) {
    SectionSpan span(m);
    int dim = 0;
    for (const auto& s : rep.basis)
      if (span.insert(s.homogeneous_part(d))) ++dim;
    if (dim == 0) continue;
    GradingLevel lvl;
    lvl.degree = d;
    lvl.weight = rat(-(m + 2 * k), 2) + rat(3 * d, 2);
    lvl.dim = dim;
    out.push_back(lvl);
  }
  return out;
}

Section act_by_m_element(const Section& s, const InducedRepData& rep,
                         const MGroupElt& g) {
  if (s.fiber_deg != rep.m)
    throw std::invalid_argument("act_by_m_element: fiber degree mismatch");
  const auto hi = g.h_inv();
  const MGroupElt ginv(hi[0][0], hi[0][1], hi[1][0], hi[1][1]);
  const auto B = m_element_action_on_nminus(ginv);  // x -> B x inside f
  const auto P = pol_group_matrix(g, rep.m);
  const Rat chr = rep.alpha.sign < 0 ? g.det_h() : Rat(1);
  Section out(rep.m);
  for (int q = 0; q <= rep.m; ++q)
    for (int j = 0; j <= rep.m; ++j) {
      if (P[q][j] == 0) continue;
      out.comps[q] = out.comps[q] + (chr * P[q][j]) * s.comps[j].subst_linear(B);
    }
  return out;
}

}  // namespace sl3ido
