#include "sl3ido/io.hpp"

#include <sstream>

namespace sl3ido {

namespace {

Json rat_json(const Rat& q) { return rat_str(q); }

Json fiber_row_json(const std::vector<Rat>& row) {
  Json a = Json::array();
  for (const auto& c : row) a.push_back(rat_json(c));
  return a;
}

Json poly_json(const Poly& p) {
  Json terms = Json::array();
  for (const auto& [mono, c] : p.terms())
    terms.push_back({{"x", {mono.first, mono.second}}, {"c", rat_json(c)}});
  return terms;
}

}  // namespace

Json to_json(const Weight& w) {
  return Json::array({rat_json(w.c[0]), rat_json(w.c[1]), rat_json(w.c[2])});
}

Json to_json(const WeylOp& op) {
  Json terms = Json::array();
  for (const auto& [k, f] : op.terms()) {
    Json matrix = Json::array();
    for (const auto& row : f.m) matrix.push_back(fiber_row_json(row));
    terms.push_back({{"x", {k.xa, k.xb}},
                     {"d", {k.da, k.db}},
                     {"matrix", matrix}});
  }
  return {{"source_degree", op.src_deg()},
          {"target_degree", op.tgt_deg()},
          {"terms", terms},
          {"text", weyl_op_text(op)}};
}

Json to_json(const Section& s) {
  Json comps = Json::array();
  for (const auto& p : s.comps) comps.push_back(poly_json(p));
  return {{"fiber_degree", s.fiber_deg}, {"components", comps}};
}

Json to_json(const InducedRepData& rep) {
  return {{"m", rep.m},
          {"lambda", rat_json(rep.lambda)},
          {"alpha", std::string(1, rep.alpha.label())}};
}

Json to_json(const IDO& d) {
  return {{"family", family_name(d.family)},
          {"source", to_json(d.source)},
          {"target", to_json(d.target)},
          {"order", d.op.max_order()},
          {"op", to_json(d.op)}};
}

Json to_json(const VermaModule& mod) {
  return {{"m", mod.m},
          {"weight", rat_json(mod.weight)},
          {"parity", std::string(1, mod.parity.label())}};
}

Json to_json(const VermaVec<Rat>& v) {
  Json terms = Json::array();
  for (const auto& [key, fib] : v.terms) {
    bool zero = true;
    for (const auto& c : fib)
      if (c != 0) zero = false;
    if (zero) continue;
    terms.push_back({{"monomial", {key.first, key.second}},
                     {"fiber", fiber_row_json(fib)}});
  }
  return terms;
}

Json to_json(const VermaHom& phi) {
  Json images = Json::array();
  for (size_t p = 0; p < phi.images.size(); ++p)
    images.push_back({{"generator", static_cast<int>(p)},
                      {"image", to_json(phi.images[p])}});
  return {{"source", to_json(phi.source)},
          {"target", to_json(phi.target)},
          {"images", images},
          {"text", verma_hom_text(phi)}};
}

Json to_json(const HomOracleResult& r) {
  Json sols = Json::array();
  for (const auto& s : r.solutions) {
    Json basis = Json::array();
    for (const auto& phi : s.basis) basis.push_back(to_json(phi));
    sols.push_back({{"lambda", rat_json(s.lambda)},
                    {"dim", static_cast<int>(s.basis.size())},
                    {"basis", basis}});
  }
  return {{"m", r.m},
          {"l", r.l},
          {"k", r.k},
          {"all_lambda", r.all_lambda},
          {"generic_dim", r.generic_dim},
          {"solutions", sols}};
}

Json to_json(const LinkageResult& r) {
  Json seqs = Json::array();
  for (const auto& seq : r.sequences) {
    Json s = Json::array();
    for (const auto& root : seq) s.push_back(root.name());
    seqs.push_back(s);
  }
  return {{"linked", r.linked},
          {"includes_empty_sequence", r.includes_empty_sequence},
          {"boe_standard_nonzero", r.boe_standard_nonzero},
          {"sequences", seqs}};
}

Json to_json(const CharMatchResult& r) {
  Json sols = Json::array();
  for (const auto& s : r.solutions) {
    Json e = {{"w", s.w.name()}, {"all_lambda", s.all_lambda}};
    if (!s.all_lambda) e["lambda"] = rat_json(s.lambda);
    sols.push_back(e);
  }
  Json values = Json::array();
  for (const auto& v : r.lambda_values) values.push_back(rat_json(v));
  return {{"solutions", sols},
          {"all_lambda", r.all_lambda},
          {"lambda_values", values}};
}

Json to_json(const ExactnessReport& r) {
  Json per = Json::array();
  for (const auto& pd : r.per_degree)
    per.push_back({{"d", pd.d},
                   {"rank_C", pd.rank_C},
                   {"dim_ker_P", pd.dim_ker_P},
                   {"ok", pd.ok}});
  return {{"m", r.m},
          {"k", r.k},
          {"D", r.D},
          {"kernel_dim", r.kernel_dim},
          {"per_degree", per},
          {"kernel_stable", r.kernel_stable},
          {"middle_exact", r.middle_exact},
          {"surjective", r.surjective},
          {"exact", r.exact},
          {"status", r.status}};
}

Json to_json(const KernelRep& r) {
  Json basis = Json::array();
  for (const auto& s : r.basis) basis.push_back(to_json(s));
  return {{"m", r.m}, {"k", r.k}, {"dimension", r.dimension}, {"basis", basis}};
}

Json to_json(const std::vector<GradingLevel>& levels) {
  Json out = Json::array();
  for (const auto& l : levels)
    out.push_back(
        {{"degree", l.degree}, {"weight", rat_json(l.weight)}, {"dim", l.dim}});
  return out;
}

Json verdict_json(const ParamPoint& p, const Verdict& v, bool lambda_any) {
  Json j = {{"family", family_name(v.family)},
            {"m", p.m},
            {"l", p.l},
            {"k", v.k},
            {"alpha", std::string(1, p.alpha.label())},
            {"beta", std::string(1, p.beta.label())},
            {"order", v.order()}};
  if (lambda_any) {
    j["lambda"] = "any";
    j["nu"] = "any";
  } else {
    j["lambda"] = rat_json(p.lambda);
    j["nu"] = rat_json(p.nu);
  }
  return j;
}

std::string weyl_op_text(const WeylOp& op) {
  if (op.is_zero()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [k, f] : op.terms()) {
    if (!first_term) os << "  +  ";
    first_term = false;
    std::string head;
    auto append_power = [&head](const char* sym, int e) {
      if (e == 0) return;
      head += head.empty() ? "" : " ";
      head += sym;
      if (e > 1) head += "^" + std::to_string(e);
    };
    append_power("x1", k.xa);
    append_power("x2", k.xb);
    append_power("d/dx1", k.da);
    append_power("d/dx2", k.db);
    if (head.empty()) head = "1";
    os << head << " (x) [";
    for (int q = 0; q <= op.tgt_deg(); ++q) {
      if (q) os << "; ";
      for (int j = 0; j <= op.src_deg(); ++j) {
        if (j) os << " ";
        os << rat_str(f.m[q][j]);
      }
    }
    os << "]";
  }
  return os.str();
}

std::string verma_hom_text(const VermaHom& phi) {
  std::ostringstream os;
  for (size_t p = 0; p < phi.images.size(); ++p) {
    if (p) os << "\n";
    os << "v~_" << p << " |-> ";
    bool first = true;
    for (const auto& [key, fib] : phi.images[p].terms) {
      for (int i = 0; i < static_cast<int>(fib.size()); ++i) {
        if (fib[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << rat_str(fib[i]);
        if (key.first) os << " N1-" << (key.first > 1 ? "^" + std::to_string(key.first) : "");
        if (key.second) os << " N2-" << (key.second > 1 ? "^" + std::to_string(key.second) : "");
        os << " (x) e_" << i;
      }
    }
    if (first) os << "0";
  }
  return os.str();
}

namespace {

void render(const Json& j, const std::string& prefix, std::ostringstream& os) {
  if (j.is_object()) {
    for (const auto& [key, val] : j.items()) {
      if (val.is_object() || (val.is_array() && !val.empty())) {
        os << prefix << key << ":\n";
        render(val, prefix + "  ", os);
      } else if (val.is_array()) {
        os << prefix << key << ": []\n";
      } else {
        os << prefix << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump())
           << "\n";
      }
    }
  } else if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i) {
      const Json& val = j[i];
      if (val.is_object() || val.is_array()) {
        os << prefix << "- [" << i << "]\n";
        render(val, prefix + "  ", os);
      } else {
        os << prefix << "- " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
      }
    }
  } else {
    os << prefix << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  render(j, "", os);
  return os.str();
}

}  // namespace sl3ido
