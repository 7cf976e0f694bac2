// Command line surface over the library: classification, construction,
// verification, oracles, and the resolution reports. One JSON document per
// invocation on stdout (--format text renders the same document); exit 0 on
// success/verified, 1 when a mathematical check comes back false, 2 on usage
// errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "sl3ido/bgg.hpp"
#include "sl3ido/classify.hpp"
#include "sl3ido/ido.hpp"
#include "sl3ido/io.hpp"
#include "sl3ido/verma.hpp"
#include "sl3ido/weights.hpp"

namespace {

using sl3ido::Json;
using sl3ido::Parity;
using sl3ido::Rat;

struct Output {
  std::string format = "json";
  std::string out_path;

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", out_path, "Also write the output to this file");
  }

  void emit(const Json& doc) const {
    const std::string body =
        format == "text" ? sl3ido::render_text(doc) : doc.dump(2) + "\n";
    std::cout << body;
    if (!out_path.empty()) {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw std::runtime_error("cannot open output file: " + out_path);
      f << body;
    }
  }
};

Parity parse_parity(const std::string& s) {
  if (s == "+") return Parity(1);
  if (s == "-") return Parity(-1);
  throw CLI::ValidationError("parity must be '+' or '-', got '" + s + "'");
}

// Build the named family operator, defaulting lambda to the pinned value.
sl3ido::IDO build_family_ido(const std::string& family, int m, int k,
                             const std::string& lambda_str, const Parity& alpha) {
  Rat lambda;
  if (family == "cartan")
    lambda = lambda_str.empty() ? sl3ido::cartan_lambda(m, k)
                                : sl3ido::parse_rat(lambda_str);
  else
    lambda = lambda_str.empty() ? sl3ido::prv_lambda(m, k)
                                : sl3ido::parse_rat(lambda_str);
  return family == "cartan" ? sl3ido::build_cartan(m, k, lambda, alpha)
                            : sl3ido::build_prv(m, k, lambda, alpha);
}

sl3ido::VermaHom build_family_hom(const std::string& family, int m, int k,
                                  const std::string& lambda_str) {
  Rat lambda;
  if (family == "cartan")
    lambda = lambda_str.empty() ? sl3ido::cartan_lambda(m, k)
                                : sl3ido::parse_rat(lambda_str);
  else
    lambda = lambda_str.empty() ? sl3ido::prv_lambda(m, k)
                                : sl3ido::parse_rat(lambda_str);
  return family == "cartan" ? sl3ido::build_phi_cartan(m, k, lambda)
                            : sl3ido::build_phi_prv(m, k, lambda);
}

// The finite-order Levi elements used by the parity checks.
std::vector<sl3ido::MGroupElt> parity_witnesses() {
  return {sl3ido::MGroupElt(1, 0, 0, -1), sl3ido::MGroupElt(-1, 0, 0, 1),
          sl3ido::MGroupElt(0, 1, 1, 0)};
}

// Two equivalent readings of the same bookkeeping, both checked on all
// monomial sections of x-degree <= deg_cap: with the target carrying the
// source parity the jump sgn(det h)^(k+1) appears explicitly, and with the
// stage parity (which differs by exactly (-1)^(k+1)) it is absorbed and C
// commutes with the group action on the nose.
bool conjugation_jump_holds(const sl3ido::BGGComplex& b,
                            const sl3ido::MGroupElt& g, int deg_cap) {
  const Rat chi = g.det_h() < 0 && (b.k + 1) % 2 == 1 ? Rat(-1) : Rat(1);
  const sl3ido::InducedRepData tgt_unflipped{b.stage1.m, b.stage1.lambda,
                                             b.stage0.alpha};
  const int m = b.stage0.m;
  for (int deg = 0; deg <= deg_cap; ++deg)
    for (int t = 0; t <= deg; ++t)
      for (int j = 0; j <= m; ++j) {
        sl3ido::Section s(m);
        s.comps[j] = sl3ido::Poly::monomial(deg - t, t);
        const sl3ido::Section lhs =
            apply(b.C.op, act_by_m_element(s, b.stage0, g));
        const sl3ido::Section cs = apply(b.C.op, s);
        if (!(lhs - chi * act_by_m_element(cs, tgt_unflipped, g)).is_zero())
          return false;
        if (!(lhs - act_by_m_element(cs, b.stage1, g)).is_zero()) return false;
      }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact constructions and checks for the rank-one sl(3) "
               "intertwining operator families"};
  app.require_subcommand(1);
  int exit_code = 0;

  // classify
  auto* c_cmd = app.add_subcommand("classify", "Classify a parameter point");
  int c_m = 0, c_l = 0;
  std::string c_lambda = "0", c_nu = "0", c_alpha = "+", c_beta = "+";
  Output c_out;
  c_cmd->add_option("--m", c_m)->required();
  c_cmd->add_option("--l", c_l)->required();
  c_cmd->add_option("--lambda", c_lambda)->required();
  c_cmd->add_option("--nu", c_nu)->required();
  c_cmd->add_option("--alpha", c_alpha);
  c_cmd->add_option("--beta", c_beta);
  c_out.add_flags(c_cmd);
  c_cmd->callback([&] {
    sl3ido::ParamPoint p;
    p.m = c_m;
    p.l = c_l;
    p.lambda = sl3ido::parse_rat(c_lambda);
    p.nu = sl3ido::parse_rat(c_nu);
    p.alpha = parse_parity(c_alpha);
    p.beta = parse_parity(c_beta);
    c_out.emit(sl3ido::verdict_json(p, sl3ido::classify(p)));
  });

  // enumerate
  auto* e_cmd = app.add_subcommand("enumerate", "List all nonzero families in range");
  int e_max_m = 0, e_max_l = 0;
  Output e_out;
  e_cmd->add_option("--max-m", e_max_m)->required();
  e_cmd->add_option("--max-l", e_max_l)->required();
  e_out.add_flags(e_cmd);
  e_cmd->callback([&] {
    Json arr = Json::array();
    for (const auto& ep : sl3ido::enumerate_points(e_max_m, e_max_l))
      arr.push_back(sl3ido::verdict_json(ep.p, ep.v, ep.lambda_any));
    e_out.emit({{"count", arr.size()}, {"points", arr}});
  });

  // construct
  auto* b_cmd = app.add_subcommand("construct", "Build a family operator");
  std::string b_family, b_lambda, b_alpha = "+";
  int b_m = 0, b_k = 0;
  Output b_out;
  b_cmd->add_option("--family", b_family)->required()
      ->check(CLI::IsMember({"cartan", "prv"}));
  b_cmd->add_option("--m", b_m)->required();
  b_cmd->add_option("--k", b_k)->required();
  b_cmd->add_option("--lambda", b_lambda, "Override the pinned lambda");
  b_cmd->add_option("--alpha", b_alpha);
  b_out.add_flags(b_cmd);
  b_cmd->callback([&] {
    b_out.emit(sl3ido::to_json(
        build_family_ido(b_family, b_m, b_k, b_lambda, parse_parity(b_alpha))));
  });

  // dualize
  auto* d_cmd = app.add_subcommand(
      "dualize", "Build the Verma homomorphism and dualize it to an operator");
  std::string d_family, d_lambda;
  int d_m = 0, d_k = 0;
  Output d_out;
  d_cmd->add_option("--family", d_family)->required()
      ->check(CLI::IsMember({"cartan", "prv"}));
  d_cmd->add_option("--m", d_m)->required();
  d_cmd->add_option("--k", d_k)->required();
  d_cmd->add_option("--lambda", d_lambda, "Override the pinned lambda");
  d_out.add_flags(d_cmd);
  d_cmd->callback([&] {
    const sl3ido::VermaHom phi = build_family_hom(d_family, d_m, d_k, d_lambda);
    const sl3ido::IDO dual = sl3ido::dualize(phi);  // throws if phi is not a hom
    const sl3ido::IDO direct =
        build_family_ido(d_family, d_m, d_k, d_lambda, Parity(1));
    Json doc = sl3ido::to_json(dual);
    doc["hom"] = sl3ido::to_json(phi);
    doc["equals_direct_construction"] = dual.op == direct.op;
    d_out.emit(doc);
    if (!(dual.op == direct.op)) exit_code = 1;
  });

  // verify
  auto* v_cmd = app.add_subcommand("verify", "Run one of the exact checks");
  v_cmd->require_subcommand(1);

  auto* vi_cmd = v_cmd->add_subcommand("intertwine", "Symbolic intertwining check");
  std::string vi_family, vi_lambda, vi_alpha = "+";
  int vi_m = 0, vi_k = 0;
  Output vi_out;
  vi_cmd->add_option("--family", vi_family)->required()
      ->check(CLI::IsMember({"cartan", "prv"}));
  vi_cmd->add_option("--m", vi_m)->required();
  vi_cmd->add_option("--k", vi_k)->required();
  vi_cmd->add_option("--lambda", vi_lambda, "Override the pinned lambda");
  vi_cmd->add_option("--alpha", vi_alpha);
  vi_out.add_flags(vi_cmd);
  vi_cmd->callback([&] {
    const sl3ido::IDO d =
        build_family_ido(vi_family, vi_m, vi_k, vi_lambda, parse_parity(vi_alpha));
    const bool ok = sl3ido::check_intertwine(d);
    vi_out.emit({{"family", vi_family},
                 {"m", vi_m},
                 {"k", vi_k},
                 {"lambda", sl3ido::rat_str(d.source.lambda)},
                 {"intertwines", ok}});
    if (!ok) exit_code = 1;
  });

  auto* vc_cmd = v_cmd->add_subcommand(
      "compose", "Composition of the paired operators vanishes, both pictures");
  int vc_m = 0, vc_k = 0;
  Output vc_out;
  vc_cmd->add_option("--m", vc_m)->required();
  vc_cmd->add_option("--k", vc_k)->required();
  vc_out.add_flags(vc_cmd);
  vc_cmd->callback([&] {
    const sl3ido::BGGComplex b = sl3ido::make_bgg_complex(vc_m, vc_k);
    const bool weyl_zero = sl3ido::compose_ido(b.P, b.C).op.is_zero();
    const sl3ido::VermaHom phi1 =
        sl3ido::build_phi_cartan(vc_m, vc_k + 1, sl3ido::cartan_lambda(vc_m, vc_k + 1),
                                 Parity::from_exponent(vc_m + vc_k));
    const sl3ido::VermaHom phi2 =
        sl3ido::build_phi_prv(vc_m + vc_k + 1, vc_m + 1,
                              sl3ido::prv_lambda(vc_m + vc_k + 1, vc_m + 1),
                              Parity::from_exponent(vc_m + 1));
    bool verma_zero = true;
    for (const auto& im : sl3ido::compose_homs(phi1, phi2).images)
      verma_zero = verma_zero && im.is_zero();
    vc_out.emit({{"m", vc_m},
                 {"k", vc_k},
                 {"weyl_composition_zero", weyl_zero},
                 {"verma_composition_zero", verma_zero}});
    if (!weyl_zero || !verma_zero) exit_code = 1;
  });

  auto* vh_cmd = v_cmd->add_subcommand("verma-hom", "Module homomorphism check");
  std::string vh_family, vh_lambda;
  int vh_m = 0, vh_k = 0;
  Output vh_out;
  vh_cmd->add_option("--family", vh_family)->required()
      ->check(CLI::IsMember({"cartan", "prv"}));
  vh_cmd->add_option("--m", vh_m)->required();
  vh_cmd->add_option("--k", vh_k)->required();
  vh_cmd->add_option("--lambda", vh_lambda, "Override the pinned lambda");
  vh_out.add_flags(vh_cmd);
  vh_cmd->callback([&] {
    const sl3ido::VermaHom phi = build_family_hom(vh_family, vh_m, vh_k, vh_lambda);
    const bool ok = sl3ido::verify_hom(phi);
    vh_out.emit({{"family", vh_family},
                 {"m", vh_m},
                 {"k", vh_k},
                 {"lambda", sl3ido::rat_str(-phi.target.weight)},
                 {"is_homomorphism", ok}});
    if (!ok) exit_code = 1;
  });

  auto* ve_cmd = v_cmd->add_subcommand("exactness", "Per-degree exactness report");
  int ve_m = 0, ve_k = 0, ve_D = -1;
  Output ve_out;
  ve_cmd->add_option("--m", ve_m)->required();
  ve_cmd->add_option("--k", ve_k)->required();
  ve_cmd->add_option("--max-degree", ve_D, "Default m+k+4");
  ve_out.add_flags(ve_cmd);
  ve_cmd->callback([&] {
    const int D = ve_D < 0 ? ve_m + ve_k + 4 : ve_D;
    const sl3ido::ExactnessReport rep = sl3ido::check_exactness(ve_m, ve_k, D);
    ve_out.emit(sl3ido::to_json(rep));
    if (!rep.exact) exit_code = 1;
  });

  auto* vp_cmd = v_cmd->add_subcommand(
      "parity", "Group action of the disconnected Levi: involution, lowest-vector "
                "character, conjugation jump");
  int vp_m = 0, vp_k = 0;
  Output vp_out;
  vp_cmd->add_option("--m", vp_m)->required();
  vp_cmd->add_option("--k", vp_k)->required();
  vp_out.add_flags(vp_cmd);
  vp_cmd->callback([&] {
    const sl3ido::BGGComplex b = sl3ido::make_bgg_complex(vp_m, vp_k);
    const sl3ido::KernelRep rep = sl3ido::generate_kernel_rep(vp_m, vp_k);
    const sl3ido::Section& lowest = rep.basis.front();
    bool involution = true, lowest_char = true, jump = true;
    for (const auto& g : parity_witnesses()) {
      const sl3ido::Section once = act_by_m_element(lowest, b.stage0, g);
      involution =
          involution && (act_by_m_element(once, b.stage0, g) - lowest).is_zero();
      // expected: sgn(det h)^(m+k) times the bare fiber transform
      const auto P = sl3ido::pol_group_matrix(g, vp_m);
      sl3ido::Section expect(vp_m);
      for (int q = 0; q <= vp_m; ++q)
        for (int j = 0; j <= vp_m; ++j)
          if (P[q][j] != 0)
            expect.comps[q] = expect.comps[q] + P[q][j] * lowest.comps[j];
      if (g.det_h() < 0 && (vp_m + vp_k) % 2 == 1) expect = Rat(-1) * expect;
      lowest_char = lowest_char && (once - expect).is_zero();
      jump = jump && conjugation_jump_holds(b, g, vp_m + vp_k + 2);
    }
    vp_out.emit({{"m", vp_m},
                 {"k", vp_k},
                 {"involution", involution},
                 {"lowest_vector_character_matches", lowest_char},
                 {"conjugation_jump_matches", jump}});
    if (!involution || !lowest_char || !jump) exit_code = 1;
  });

  // oracle
  auto* o_cmd = app.add_subcommand("oracle", "Independent brute-force layers");
  o_cmd->require_subcommand(1);

  auto* oh_cmd = o_cmd->add_subcommand("hom", "Hom-space sweep with symbolic lambda");
  int oh_m = 0, oh_l = 0, oh_k = 0;
  Output oh_out;
  oh_cmd->add_option("--m", oh_m)->required();
  oh_cmd->add_option("--l", oh_l)->required();
  oh_cmd->add_option("--k", oh_k)->required();
  oh_out.add_flags(oh_cmd);
  oh_cmd->callback([&] {
    oh_out.emit(sl3ido::to_json(sl3ido::hom_oracle(oh_m, oh_l, oh_k)));
  });

  auto* ol_cmd = o_cmd->add_subcommand("linkage", "Linking sequences between the "
                                                  "shifted family weights");
  std::string ol_family;
  int ol_m = 0, ol_k = 0, ol_max = 3;
  Output ol_out;
  ol_cmd->add_option("--family", ol_family)->required()
      ->check(CLI::IsMember({"cartan", "prv"}));
  ol_cmd->add_option("--m", ol_m)->required();
  ol_cmd->add_option("--k", ol_k)->required();
  ol_cmd->add_option("--max-len", ol_max);
  ol_out.add_flags(ol_cmd);
  ol_cmd->callback([&] {
    const Rat lambda = ol_family == "cartan" ? sl3ido::cartan_lambda(ol_m, ol_k)
                                             : sl3ido::prv_lambda(ol_m, ol_k);
    const int l = ol_family == "cartan" ? ol_m + ol_k : ol_m - ol_k;
    if (l < 0) throw CLI::ValidationError("prv needs m >= k");
    const sl3ido::Weight eta = sl3ido::shifted_weight(ol_m, lambda);
    const sl3ido::Weight mu =
        sl3ido::shifted_weight(l, sl3ido::nu_from_lambda(lambda, ol_k));
    Json doc = sl3ido::to_json(sl3ido::find_linkages(eta, mu, ol_max));
    doc["eta"] = sl3ido::to_json(eta);
    doc["mu"] = sl3ido::to_json(mu);
    ol_out.emit(doc);
  });

  auto* oc_cmd = o_cmd->add_subcommand(
      "charmatch", "Weyl-orbit matching of shifted weights, lambda symbolic");
  int oc_m = 0, oc_l = 0, oc_k = 0;
  Output oc_out;
  oc_cmd->add_option("--m", oc_m)->required();
  oc_cmd->add_option("--l", oc_l)->required();
  oc_cmd->add_option("--k", oc_k)->required();
  oc_out.add_flags(oc_cmd);
  oc_cmd->callback([&] {
    oc_out.emit(
        sl3ido::to_json(sl3ido::infinitesimal_character_match(oc_m, oc_l, oc_k)));
  });

  // bgg
  auto* g_cmd = app.add_subcommand("bgg", "Resolution report: exactness, kernel "
                                          "representation, grading");
  int g_m = 0, g_k = 0, g_D = -1;
  Output g_out;
  g_cmd->add_option("--m", g_m)->required();
  g_cmd->add_option("--k", g_k)->required();
  g_cmd->add_option("--max-degree", g_D, "Default m+k+4");
  g_out.add_flags(g_cmd);
  g_cmd->callback([&] {
    const int D = g_D < 0 ? g_m + g_k + 4 : g_D;
    const sl3ido::ExactnessReport rep = sl3ido::check_exactness(g_m, g_k, D);
    const sl3ido::KernelRep ker = sl3ido::generate_kernel_rep(g_m, g_k);
    const auto levels = sl3ido::grading_profile(g_m, g_k);
    const sl3ido::BGGComplex b = sl3ido::make_bgg_complex(g_m, g_k);
    Json doc;
    doc["m"] = g_m;
    doc["k"] = g_k;
    doc["stages"] = {sl3ido::to_json(b.stage0), sl3ido::to_json(b.stage1),
                     sl3ido::to_json(b.stage2)};
    doc["exactness"] = sl3ido::to_json(rep);
    doc["kernel_dimension"] = ker.dimension;
    doc["weyl_dim"] = sl3ido::weyl_dim(g_m, g_k);
    doc["grading"] = sl3ido::to_json(levels);
    g_out.emit(doc);
    if (!rep.exact || ker.dimension != sl3ido::weyl_dim(g_m, g_k)) exit_code = 1;
  });

  // su12-weights
  auto* s_cmd = app.add_subcommand("su12-weights",
                                   "Kernel highest weights at reduction point k");
  int s_k = 0;
  Output s_out;
  s_cmd->add_option("--k", s_k)->required();
  s_out.add_flags(s_cmd);
  s_cmd->callback([&] {
    const auto [w1, w2] = sl3ido::su12_reduction_weights(s_k);
    s_out.emit({{"k", s_k},
                {"weights", {sl3ido::to_json(w1), sl3ido::to_json(w2)}}});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
