#pragma once

// The differential operators on the induced picture: explicit Cartan and
// PRV families, the duality that turns a Verma homomorphism into an
// operator, the infinitesimal action dpi on polynomial sections, and the
// fully symbolic intertwining check.

#include "sl3ido/classify.hpp"
#include "sl3ido/fiber.hpp"
#include "sl3ido/rational.hpp"
#include "sl3ido/sl3.hpp"
#include "sl3ido/verma.hpp"
#include "sl3ido/weyl.hpp"

namespace sl3ido {

// The induced family I(m, lambda)^alpha: degree-m polynomial fiber (the
// contragredient sl(2) module), a-parameter lambda (unnormalized, no rho
// shift anywhere), sign character alpha.
struct InducedRepData {
  int m = 0;
  Rat lambda;
  Parity alpha;
  bool operator==(const InducedRepData&) const = default;
};

struct IDO {
  InducedRepData source, target;
  WeylOp op;
  Family family = Family::None;
};

// Order-k operator raising the fiber degree: I(m, lambda) -> I(m+k, lambda + 3k/2),
// term at d1^(k-r) d2^r with fiber entry (j+r, j) = binom(k, r).
IDO build_cartan(int m, int k, const Rat& lambda, const Parity& alpha);
IDO build_cartan(int m, int k);  // lambda = (2 - m - 2k)/2, alpha = +

// Order-k operator lowering the fiber degree: I(m, lambda) -> I(m-k, lambda + 3k/2),
// fiber entry (j, k+j-r) = (-1)^r binom(m-k, j) binom(k, r) / binom(m, k+j-r).
IDO build_prv(int m, int k, const Rat& lambda, const Parity& alpha);
IDO build_prv(int m, int k);  // lambda = (4 + m - 2k)/2, alpha = +

// Verma homomorphism -> operator, N_j^- monomials replaced by d/dx_j and the
// divided-power normalizations folded in so the two explicit families match
// build_* exactly. Verifies the input first; throws on a non-homomorphism.
IDO dualize(const VermaHom& phi);

// Infinitesimal action of x on I(m, lambda): fiber part of the conjugated
// Levi component (pol_action plus lambda times the a-coordinate) minus the
// conjugated nbar component as first-order derivatives. Polynomial
// coefficients of x-degree <= 2, order <= 1.
WeylOp dpi(const InducedRepData& rep, const GElt& x);

// Symbolic commutation against dpi over the whole sl(3) basis, zero after
// normal ordering. Never sampled on test sections.
bool check_intertwine(const IDO& d);

// d2 after d1; requires d1.target == d2.source exactly (m, lambda, parity).
IDO compose_ido(const IDO& d2, const IDO& d1);

}  // namespace sl3ido
