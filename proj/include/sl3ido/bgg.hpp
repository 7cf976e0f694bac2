#pragma once

// The three-stage resolution built from a Cartan operator followed by its
// theta-partner PRV operator, per-homogeneous-degree exactness certificates,
// the finite-dimensional kernel representation generated from the constant
// seed section, its a-weight grading, and the group action of the
// disconnected Levi on sections (the parity witness).

#include <string>
#include <vector>

#include "sl3ido/ido.hpp"
#include "sl3ido/weyl.hpp"

namespace sl3ido {

// (m+1)(k+1)(m+k+2)/2, the dimension of the sl(3) module with highest
// weight m varpi1 + k varpi2.
long weyl_dim(int m, int k);

struct BGGComplex {
  int m = 0, k = 0;
  InducedRepData stage0, stage1, stage2;
  IDO C;  // order k+1, stage0 -> stage1
  IDO P;  // order m+1, stage1 -> stage2
};

// Stage data (m, -(m+2k)/2)^(m+k) -> (m+k+1, (3-m+k)/2)^(m+1) -> (k, (6+2m+k)/2)^+.
BGGComplex make_bgg_complex(int m, int k);

struct ExactnessReport {
  int m = 0, k = 0, D = 0;
  long kernel_dim = 0;  // sum over d <= D of dim Ker(C) on degree d
  struct PerDegree {
    int d = 0;          // source degree of C
    int rank_C = 0;
    int dim_ker_P = 0;  // kernel of P on degree d - (k+1)
    bool ok = false;    // middle exactness at this degree
  };
  std::vector<PerDegree> per_degree;
  bool kernel_stable = false;  // no kernel contributions past degree m+k
  bool middle_exact = false;
  bool surjective = false;     // P hits every degree <= D - (k+1) - (m+1)
  bool exact = false;
  std::string status;          // "ok" or "inconclusive"
};

// Per-degree rank certificates for degrees d <= D. Needs D >= m+k+2 to see
// the kernel stabilize and at least one surjectivity degree; smaller D gives
// status "inconclusive" with exact = false.
ExactnessReport check_exactness(int m, int k, int D);

// Exact incremental row reduction over keyed sparse vectors; used for the
// closure computation and exposed for span-membership tests.
class SectionSpan {
 public:
  explicit SectionSpan(int fiber_deg) : m_(fiber_deg) {}
  // true if s was independent of the current span (and was added)
  bool insert(const Section& s);
  bool contains(const Section& s) const;
  int dim() const { return static_cast<int>(rows_.size()); }

 private:
  struct Key {
    int xa, xb, j;
    auto operator<=>(const Key&) const = default;
  };
  using Vec = std::map<Key, Rat>;
  Vec reduce(const Section& s) const;
  int m_;
  std::map<Key, Vec> rows_;  // pivot key -> reduced row with that pivot
};

struct KernelRep {
  int m = 0, k = 0;
  std::vector<Section> basis;  // reduced spanning set, fiber degree m
  long dimension = 0;
};

// Closure of the constant lowest-weight section under dpi over the sl(3)
// basis at the stage-0 parameters. Dimension must come out at weyl_dim(m,k);
// a runaway closure past 4*weyl_dim throws (it would mean a sign error in
// the action, not a big computation).
KernelRep generate_kernel_rep(int m, int k);

struct GradingLevel {
  Rat weight;  // a-weight -(m+2k)/2 + (3/2) d of x-degree d
  int degree = 0;
  int dim = 0;
};

// H0t-eigenspace dimensions of the kernel representation, one entry per
// x-homogeneous degree with a nonzero projection.
std::vector<GradingLevel> grading_profile(int m, int k);

// Group action of the Levi element g on a section of I(m, lambda)^alpha:
// sign character, contragredient fiber matrix of h, and the coordinate
// substitution x -> Ad(g^{-1}) x.
Section act_by_m_element(const Section& s, const InducedRepData& rep,
                         const MGroupElt& g);

}  // namespace sl3ido
