#ifndef GINPROP_JSON_IO_HPP
#define GINPROP_JSON_IO_HPP

#include <json.hpp>

#include "ginprop/ci_demo.hpp"
#include "ginprop/factor_theorem.hpp"
#include "ginprop/gin.hpp"

namespace ginprop {

using Json = nlohmann::ordered_json;

Json to_json(const MonomialSet& set, MonomialOrder order = MonomialOrder::revlex);
Json to_json(const MonomialIdeal& ideal);
Json to_json(const Subspace& v);

// { "result": [monomials], "trials", "agreements", "stable", "seeds" }
Json to_json(const GinReport& report);
GinReport gin_report_from_json(const Json& j, int num_vars, int degree);

Json to_json(const GinIdealReport& report);

// { "p", "m", "r", "n", "W_n": [forms], "checked" }
Json to_json(const FactorCertificate& certificate);
FactorCertificate certificate_from_json(const Json& j, int num_vars);

// Status, message, gin report, and on violation the full input subspace.
Json to_json(const VerifyOutcome& outcome, const Subspace& input);
Json to_json(const PlantedInstance& instance);
Json to_json(const ProbeReport& report, const Subspace& input);
Json to_json(const CommutationReport& report);
Json to_json(const CiDemoReport& report);

}  // namespace ginprop

#endif
