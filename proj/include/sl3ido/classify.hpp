#pragma once

// Parameter classification for intertwining operators between the degree-m
// and degree-l induced families: the two one-parameter families (Cartan and
// PRV), the identity case, and the bijection theta pairing a Cartan operator
// with the PRV operator that kills its image.

#include <string>
#include <utility>
#include <vector>

#include "sl3ido/fiber.hpp"
#include "sl3ido/rational.hpp"

namespace sl3ido {

// Candidate parameter point: source bundle (m, lambda)^alpha, target bundle
// (l, nu)^beta. Arbitrary values allowed; classify decides.
struct ParamPoint {
  Parity alpha, beta;
  int m = 0, l = 0;
  Rat lambda, nu;
};

enum class Family { None, Identity, Cartan, PRV };

std::string family_name(Family f);

struct Verdict {
  Family family = Family::None;
  int m = 0, k = 0;  // operator label; k = 0 for Identity, meaningless for None
  int order() const { return family == Family::Cartan || family == Family::PRV ? k : 0; }
  bool operator==(const Verdict&) const = default;
};

// Exact membership tests, in order: identity (same bundle data on both
// sides), Cartan (l = m+k, k >= 1, the pinned (lambda, nu) pair, parity
// flip (-1)^k), PRV (l = m-k, same shape). Everything else is None.
Verdict classify(const ParamPoint& p);

// The pinned parameters of each family.
Rat cartan_lambda(int m, int k);  // (2 - m - 2k)/2
Rat prv_lambda(int m, int k);     // (4 + m - 2k)/2
// nu = lambda + 3k/2 for both families.
Rat nu_from_lambda(const Rat& lambda, int k);

ParamPoint cartan_params(int m, int k, const Parity& alpha = Parity(1));
ParamPoint prv_params(int m, int k, const Parity& alpha = Parity(1));

// Every nonzero family with m <= max_m and l <= max_l: one Cartan point per
// (m, k >= 1), one PRV point per (m >= k >= 1), and the identity families
// (lambda symbolic, flagged) for each m <= min(max_m, max_l) and parity.
struct EnumeratedPoint {
  ParamPoint p;
  Verdict v;
  bool lambda_any = false;  // identity families leave lambda free
};
std::vector<EnumeratedPoint> enumerate_points(int max_m, int max_l);

// Cartan/PRV pairing: theta(m, k) = (m+k+1, m) sends the label of
// C^{m+k+1}_{m,k+1} to the label of the PRV operator annihilating its image.
std::pair<int, int> theta(int m, int k);
// Inverse (k, m-k-1); throws std::invalid_argument when m-k-1 < 0.
std::pair<int, int> theta_inv(int m, int k);

}  // namespace sl3ido
