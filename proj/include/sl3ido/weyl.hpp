#pragma once

// Polynomial-coefficient differential operators acting on polynomial
// sections R[x1,x2] (x) Pol^m, with fiber-mixing matrix coefficients.
// Products are normal ordered (x's to the left of derivatives) via
// d^b x^c = sum_i C(b,i) c!/(c-i)! x^(c-i) d^(b-i), one variable at a time.

#include <map>
#include <vector>

#include "sl3ido/matrix.hpp"
#include "sl3ido/poly.hpp"
#include "sl3ido/rational.hpp"

namespace sl3ido {

// Linear map Pol^src -> Pol^tgt between fibers, dense.
struct FiberMap {
  int src_deg = 0, tgt_deg = 0;
  std::vector<std::vector<Rat>> m;  // (tgt_deg+1) rows, (src_deg+1) cols

  FiberMap() = default;
  FiberMap(int src, int tgt);
  static FiberMap identity(int deg);

  bool is_zero() const;
  bool operator==(const FiberMap&) const = default;
  FiberMap& operator+=(const FiberMap& o);
  friend FiberMap operator*(const Rat& s, const FiberMap& f);
  friend FiberMap compose(const FiberMap& a, const FiberMap& b);  // a after b
};

struct WeylKey {
  int xa = 0, xb = 0;  // x1^xa x2^xb
  int da = 0, db = 0;  // d1^da d2^db
  auto operator<=>(const WeylKey&) const = default;
  int order() const { return da + db; }
  int x_degree() const { return xa + xb; }
};

class WeylOp {
 public:
  WeylOp() = default;
  WeylOp(int src_deg, int tgt_deg) : src_(src_deg), tgt_(tgt_deg) {}

  int src_deg() const { return src_; }
  int tgt_deg() const { return tgt_; }
  const std::map<WeylKey, FiberMap>& terms() const { return terms_; }

  void add_term(const WeylKey& k, const FiberMap& f);
  void add_scalar_term(const WeylKey& k, const Rat& c);  // c * identity fiber map

  bool is_zero() const { return terms_.empty(); }
  bool operator==(const WeylOp&) const = default;
  WeylOp operator+(const WeylOp&) const;
  WeylOp operator-(const WeylOp&) const;
  friend WeylOp operator*(const Rat& s, const WeylOp& a);

  static WeylOp identity(int deg);

  bool constant_coefficients() const;  // no x factors in any term
  int max_order() const;
  // All terms share one total derivative order (vacuously true when empty).
  bool uniform_order() const;

 private:
  int src_ = 0, tgt_ = 0;
  std::map<WeylKey, FiberMap> terms_;
};

// Normal-ordered product; requires a.src_deg == b.tgt_deg.
WeylOp weyl_mul(const WeylOp& a, const WeylOp& b);

// Polynomial section of the degree-m fiber bundle in the flat chart.
struct Section {
  int fiber_deg = 0;
  std::vector<Poly> comps;  // size fiber_deg + 1

  Section() = default;
  explicit Section(int deg) : fiber_deg(deg), comps(deg + 1) {}
  bool is_zero() const;
  bool operator==(const Section&) const = default;
  Section operator+(const Section&) const;
  Section operator-(const Section&) const;
  friend Section operator*(const Rat& s, const Section& f);
  Section homogeneous_part(int d) const;
  int max_x_degree() const;  // -1 when zero
};

Section apply(const WeylOp& op, const Section& s);

// Matrix of a constant-coefficient, uniform-order operator on x-homogeneous
// sections of degree d. Column index t*(src_deg+1)+j encodes x1^(d-t) x2^t
// tensor fiber j; rows likewise at degree d - order.
RatMatrix homogeneous_matrix(const WeylOp& op, int d);
int rank_on_degree(const WeylOp& op, int d);
std::vector<Section> kernel_on_degree(const WeylOp& op, int d);

}  // namespace sl3ido
