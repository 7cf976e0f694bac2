#pragma once

// JSON serialization for every result type the CLI exposes, plus a plain
// text rendering that carries the same exact "p/q" values. JSON is the
// primary format; text is a readable projection of the same document.

#include <json.hpp>

#include <string>

#include "sl3ido/bgg.hpp"
#include "sl3ido/classify.hpp"
#include "sl3ido/ido.hpp"
#include "sl3ido/verma.hpp"
#include "sl3ido/weights.hpp"
#include "sl3ido/weyl.hpp"

namespace sl3ido {

using Json = nlohmann::json;

Json to_json(const Weight& w);              // ["p/q", "p/q", "p/q"]
Json to_json(const WeylOp& op);             // {source_degree, target_degree, terms:[...]}
Json to_json(const Section& s);             // {fiber_degree, components:[...]}
Json to_json(const InducedRepData& rep);    // {m, lambda, alpha}
Json to_json(const IDO& d);
Json to_json(const VermaModule& mod);       // {m, weight, parity}
Json to_json(const VermaVec<Rat>& v);
Json to_json(const VermaHom& phi);
Json to_json(const HomOracleResult& r);
Json to_json(const LinkageResult& r);
Json to_json(const CharMatchResult& r);
Json to_json(const ExactnessReport& r);
Json to_json(const KernelRep& r);
Json to_json(const std::vector<GradingLevel>& levels);

// {family, m, l, k, alpha, beta, lambda, nu, order}; lambda/nu become the
// string "any" for the identity families of enumerate.
Json verdict_json(const ParamPoint& p, const Verdict& v, bool lambda_any = false);

// Display one-liners: derivatives as d1/d2, fiber slots in brackets.
std::string weyl_op_text(const WeylOp& op);
std::string verma_hom_text(const VermaHom& phi);

// Indented key/value rendering of a JSON document; every scalar prints
// exactly as it appears in the JSON, so the two formats cannot disagree.
std::string render_text(const Json& j);

}  // namespace sl3ido
