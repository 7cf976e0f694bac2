#pragma once

// Weights of sl(3) live in the sum-zero hyperplane of Q^3. This header has
// the weight arithmetic, the A2 Weyl group as coordinate permutations, the
// linkage-sequence search between parabolic Verma parameters, the
// infinitesimal-character matching solver, and the two distinguished weights
// of the unitary-reduction family.

#include <array>
#include <string>
#include <vector>

#include "sl3ido/parametric.hpp"
#include "sl3ido/rational.hpp"

namespace sl3ido {

struct Weight {
  std::array<Rat, 3> c;

  Weight() : c{Rat(0), Rat(0), Rat(0)} {}
  Weight(const Rat& a, const Rat& b, const Rat& d);  // throws unless a+b+d == 0

  bool operator==(const Weight&) const = default;
  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  friend Weight operator*(const Rat& s, const Weight& w);
};

// e_i - e_j with 1 <= i < j <= 3 (stored 0-based).
struct Root {
  int i, j;
  bool operator==(const Root&) const = default;
  std::string name() const;  // "e1-e2" etc.
};

const std::array<Root, 3>& positive_roots();

// <mu, (e_i - e_j)^vee> = mu_i - mu_j.
Rat pairing(const Weight& mu, const Root& beta);

// s_{e_i - e_j} swaps coordinates i and j.
Weight reflect(const Weight& mu, const Root& beta);

// Dominance cone for the Levi: second minus third coordinate an integer >= 1.
bool in_cone_Pl(const Weight& mu);

struct WeylElt {
  std::array<int, 3> p;  // (w.mu)[i] = mu[p[i]]
  bool operator==(const WeylElt&) const = default;
  std::string name() const;
};

WeylElt weyl_identity();
WeylElt weyl_transposition(int i, int j);
WeylElt weyl_compose(const WeylElt& v, const WeylElt& w);  // v after w
Weight weyl_apply(const WeylElt& w, const Weight& mu);
const std::vector<WeylElt>& weyl_group();  // all 6 elements

// Distinguished weights.
Weight rho();     // (1, 0, -1)
Weight dchi();    // (2/3, -1/3, -1/3)
Weight omega1();  // (0, 1/2, -1/2)
Weight varpi1();  // (2/3, -1/3, -1/3)
Weight varpi2();  // (1/3, 1/3, -2/3)

// m*omega1 - lambda*dchi + rho: the rho-shifted parameter weight attached to
// the degree-m bundle at parameter lambda. Everything in the linkage and
// character-matching layer is phrased in these.
Weight shifted_weight(int m, const Rat& lambda);

struct LinkageResult {
  std::vector<std::vector<Root>> sequences;  // nonempty sequences only
  bool includes_empty_sequence = false;      // eta == mu counts as linked
  bool linked = false;
  bool boe_standard_nonzero = false;
};

// All linking sequences from eta to mu of length 1..max_len: at every step
// the pairing with the reflected-away root must be a nonnegative integer.
// boe_standard_nonzero: sequences exist and every one starts inside the Levi
// dominance cone after its first reflection.
LinkageResult find_linkages(const Weight& eta, const Weight& mu, int max_len = 3);

struct CharMatchSolution {
  WeylElt w;
  bool all_lambda = false;
  Rat lambda;  // meaningful when !all_lambda
};

struct CharMatchResult {
  std::vector<CharMatchSolution> solutions;
  // Union over w: either every lambda works, or this finite sorted set.
  bool all_lambda = false;
  std::vector<Rat> lambda_values;
};

// Solves shifted_weight(ell, lambda + 3k/2) = w . shifted_weight(m, lambda)
// over the six Weyl elements, lambda symbolic.
CharMatchResult infinitesimal_character_match(int m, int ell, int k);

// Highest weights of the two kernel representations attached to the
// pseudo-unitary reduction at parameter k: the trivial one and
// (k+1)*omega1 - (3+k)/2 * dchi.
std::pair<Weight, Weight> su12_reduction_weights(int k);

}  // namespace sl3ido
