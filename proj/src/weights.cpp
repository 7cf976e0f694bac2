#include "sl3ido/weights.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sl3ido {

Weight::Weight(const Rat& a, const Rat& b, const Rat& d) : c{a, b, d} {
  if (a + b + d != 0)
    throw std::invalid_argument("Weight: coordinates must sum to zero");
}

Weight Weight::operator+(const Weight& o) const {
  return Weight(c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2]);
}

Weight Weight::operator-(const Weight& o) const {
  return Weight(c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2]);
}

Weight operator*(const Rat& s, const Weight& w) {
  return Weight(s * w.c[0], s * w.c[1], s * w.c[2]);
}

std::string Root::name() const {
  return "e" + std::to_string(i + 1) + "-e" + std::to_string(j + 1);
}

const std::array<Root, 3>& positive_roots() {
  static const std::array<Root, 3> r = {Root{0, 1}, Root{1, 2}, Root{0, 2}};
  return r;
}

Rat pairing(const Weight& mu, const Root& beta) {
  return mu.c[beta.i] - mu.c[beta.j];
}

Weight reflect(const Weight& mu, const Root& beta) {
  Weight out = mu;
  std::swap(out.c[beta.i], out.c[beta.j]);
  return out;
}

bool in_cone_Pl(const Weight& mu) {
  Rat d = mu.c[1] - mu.c[2];
  return is_integer(d) && d >= 1;
}

WeylElt weyl_identity() { return WeylElt{{0, 1, 2}}; }

WeylElt weyl_transposition(int i, int j) {
  WeylElt w = weyl_identity();
  std::swap(w.p[i], w.p[j]);
  return w;
}

WeylElt weyl_compose(const WeylElt& v, const WeylElt& w) {
  WeylElt out;
  for (int i = 0; i < 3; ++i) out.p[i] = w.p[v.p[i]];
  return out;
}

Weight weyl_apply(const WeylElt& w, const Weight& mu) {
  return Weight(mu.c[w.p[0]], mu.c[w.p[1]], mu.c[w.p[2]]);
}

std::string WeylElt::name() const {
  static const std::map<std::array<int, 3>, std::string> names = {
      {{0, 1, 2}, "e"},        {{1, 0, 2}, "s12"},
      {{0, 2, 1}, "s23"},      {{2, 1, 0}, "s13"},
      {{1, 2, 0}, "s12.s23"},  {{2, 0, 1}, "s23.s12"},
  };
  return names.at(p);
}

const std::vector<WeylElt>& weyl_group() {
  static const std::vector<WeylElt> g = [] {
    std::vector<WeylElt> out{weyl_identity()};
    // closure under the two simple transpositions
    bool grew = true;
    while (grew) {
      grew = false;
      for (size_t i = 0; i < out.size(); ++i) {
        for (const auto& s : {weyl_transposition(0, 1), weyl_transposition(1, 2)}) {
          WeylElt w = weyl_compose(s, out[i]);
          if (std::find(out.begin(), out.end(), w) == out.end()) {
            out.push_back(w);
            grew = true;
          }
        }
      }
    }
    return out;
  }();
  return g;
}

Weight rho() { return Weight(1, 0, -1); }
Weight dchi() { return Weight(Rat(2, 3), Rat(-1, 3), Rat(-1, 3)); }
Weight omega1() { return Weight(0, Rat(1, 2), Rat(-1, 2)); }
Weight varpi1() { return dchi(); }
Weight varpi2() { return Weight(Rat(1, 3), Rat(1, 3), Rat(-2, 3)); }

Weight shifted_weight(int m, const Rat& lambda) {
  return Rat(m) * omega1() - lambda * dchi() + rho();
}

namespace {

void linkage_dfs(const Weight& cur, const Weight& mu, int depth_left,
                 std::vector<Root>& stack,
                 std::vector<std::vector<Root>>& found) {
  if (!stack.empty() && cur == mu) found.push_back(stack);
  if (depth_left == 0) return;
  for (const Root& beta : positive_roots()) {
    Rat pr = pairing(cur, beta);
    if (!is_integer(pr) || pr < 0) continue;
    stack.push_back(beta);
    linkage_dfs(reflect(cur, beta), mu, depth_left - 1, stack, found);
    stack.pop_back();
  }
}

}  // namespace

LinkageResult find_linkages(const Weight& eta, const Weight& mu, int max_len) {
  if (max_len < 1) throw std::invalid_argument("find_linkages: max_len must be >= 1");
  LinkageResult res;
  std::vector<Root> stack;
  linkage_dfs(eta, mu, max_len, stack, res.sequences);
  res.includes_empty_sequence = (eta == mu);
  res.linked = res.includes_empty_sequence || !res.sequences.empty();
  if (!res.linked) {
    res.boe_standard_nonzero = false;
  } else if (res.sequences.empty()) {
    // only the empty sequence: the standard map is the identity
    res.boe_standard_nonzero = true;
  } else {
    res.boe_standard_nonzero = true;
    for (const auto& seq : res.sequences)
      if (!in_cone_Pl(reflect(eta, seq.front()))) res.boe_standard_nonzero = false;
  }
  return res;
}

CharMatchResult infinitesimal_character_match(int m, int ell, int k) {
  if (m < 0 || ell < 0 || k < 0)
    throw std::invalid_argument("infinitesimal_character_match: negative input");
  // Coordinates of both sides as affine functions of lambda.
  // LHS: shifted_weight(ell, lambda + 3k/2); RHS: w . shifted_weight(m, lambda).
  std::array<LinParam, 3> lhs, rhs_base;
  {
    Weight con = shifted_weight(ell, rat(3 * k, 2));  // lambda = 0 part plus shift
    Weight slope = Weight() - dchi();
    for (int i = 0; i < 3; ++i) lhs[i] = LinParam(con.c[i], slope.c[i]);
    Weight con2 = shifted_weight(m, Rat(0));
    for (int i = 0; i < 3; ++i) rhs_base[i] = LinParam(con2.c[i], slope.c[i]);
  }
  CharMatchResult res;
  for (const WeylElt& w : weyl_group()) {
    bool inconsistent = false, pinned = false, identically = true;
    Rat lam;
    for (int i = 0; i < 3 && !inconsistent; ++i) {
      LinParam d = lhs[i] - rhs_base[w.p[i]];
      if (d.is_zero()) continue;
      identically = false;
      if (d.s == 0) {
        inconsistent = true;
      } else {
        Rat root = -d.c / d.s;
        if (pinned && root != lam) inconsistent = true;
        pinned = true;
        lam = root;
      }
    }
    if (inconsistent) continue;
    CharMatchSolution sol;
    sol.w = w;
    if (identically || !pinned) {
      sol.all_lambda = true;
    } else {
      sol.lambda = lam;
    }
    res.solutions.push_back(sol);
  }
  for (const auto& s : res.solutions) {
    if (s.all_lambda) res.all_lambda = true;
  }
  if (!res.all_lambda) {
    for (const auto& s : res.solutions) res.lambda_values.push_back(s.lambda);
    std::sort(res.lambda_values.begin(), res.lambda_values.end());
    res.lambda_values.erase(
        std::unique(res.lambda_values.begin(), res.lambda_values.end()),
        res.lambda_values.end());
  }
  return res;
}

std::pair<Weight, Weight> su12_reduction_weights(int k) {
  if (k < 0) throw std::invalid_argument("su12_reduction_weights: k must be >= 0");
  Weight second = Rat(k + 1) * omega1() - rat(3 + k, 2) * dchi();
  return {Weight(), second};
}

}  // namespace sl3ido
