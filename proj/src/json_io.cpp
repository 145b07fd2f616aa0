#include "ginprop/json_io.hpp"

namespace ginprop {

namespace {

Json forms_to_json(const std::vector<Form>& forms) {
  Json arr = Json::array();
  for (const auto& f : forms) arr.push_back(format_form(f));
  return arr;
}

Json shape_to_json(const GinShape& shape) {
  return Json{{"s", shape.s}, {"r", shape.r}, {"n", shape.n}, {"m", shape.m}};
}

}  // namespace

Json to_json(const MonomialSet& set, MonomialOrder order) {
  Json arr = Json::array();
  for (const auto& e : set.sorted(order)) arr.push_back(format_monomial(e));
  return arr;
}

Json to_json(const MonomialIdeal& ideal) {
  Json arr = Json::array();
  for (const auto& g : ideal.generators()) arr.push_back(format_monomial(g));
  return arr;
}

Json to_json(const Subspace& v) {
  return Json{{"s", v.num_vars()},
              {"d", v.degree()},
              {"order", std::string(order_name(v.order()))},
              {"basis", forms_to_json(v.basis())}};
}

Json to_json(const GinReport& report) {
  return Json{{"result", to_json(report.result)},
              {"trials", report.trials},
              {"agreements", report.agreements},
              {"stable", report.stable},
              {"seeds", report.seeds}};
}

GinReport gin_report_from_json(const Json& j, int num_vars, int degree) {
  GinReport report{MonomialSet(num_vars, degree), j.at("trials").get<int>(),
                   j.at("agreements").get<int>(),
                   j.at("seeds").get<std::vector<std::uint64_t>>(), j.at("stable").get<bool>()};
  for (const auto& m : j.at("result")) report.result.insert(parse_monomial(m.get<std::string>(), num_vars));
  return report;
}

Json to_json(const GinIdealReport& report) {
  Json per_degree = Json::array();
  for (std::size_t d = 0; d < report.per_degree.size(); ++d) {
    const auto& g = report.per_degree[d];
    per_degree.push_back(Json{{"degree", d},
                              {"result", to_json(g.result)},
                              {"agreements", g.agreements},
                              {"stable", g.stable}});
  }
  return Json{{"result", to_json(report.result)},
              {"trials", report.trials},
              {"agreements", report.agreements},
              {"stable", report.stable},
              {"seeds", report.seeds},
              {"dmax", report.dmax},
              {"per_degree", per_degree},
              {"caveat", report.caveat}};
}

Json to_json(const FactorCertificate& c) {
  return Json{{"p", format_form(c.p)},
              {"m", c.factor_degree},
              {"r", c.params.r},
              {"n", c.params.n},
              {"W_n", forms_to_json(c.cofactor_space.basis())},
              {"checked", c.checked}};
}

FactorCertificate certificate_from_json(const Json& j, int num_vars) {
  const int m = j.at("m").get<int>();
  const int n = j.at("n").get<int>();
  std::vector<Form> w;
  for (const auto& f : j.at("W_n")) w.push_back(parse_form(f.get<std::string>(), num_vars, n));
  return FactorCertificate{parse_form(j.at("p").get<std::string>(), num_vars, m), m,
                           echelonize(w, num_vars, n, MonomialOrder::revlex),
                           GinShape{num_vars, j.at("r").get<int>(), n, m},
                           j.at("checked").get<bool>()};
}

Json to_json(const VerifyOutcome& outcome, const Subspace& input) {
  Json j{{"status", std::string(status_name(outcome.status))},
         {"message", outcome.message},
         {"gin", to_json(outcome.gin)}};
  if (outcome.shape) j["shape"] = shape_to_json(*outcome.shape);
  if (outcome.factor)
    j["common_factor"] = Json{{"p", format_form(outcome.factor->p)}, {"m", outcome.factor->degree}};
  if (outcome.certificate) j["certificate"] = to_json(*outcome.certificate);
  if (outcome.status == VerifyStatus::violation) j["input"] = to_json(input);
  return j;
}

Json to_json(const PlantedInstance& instance) {
  return Json{{"params", shape_to_json(instance.params)},
              {"p", format_form(instance.p)},
              {"W_n", forms_to_json(instance.w_n.basis())},
              {"V", to_json(instance.v)}};
}

Json to_json(const ProbeReport& report, const Subspace& input) {
  Json j{{"expected_m", report.expected_m},
         {"source_factor_degree", report.source_factor_degree},
         {"section_degrees", report.section_degrees},
         {"hyperplanes", forms_to_json(report.hyperplanes)},
         {"seeds", report.seeds},
         {"sections_respect_source", report.sections_respect_source},
         {"anomaly", report.anomaly}};
  if (report.anomaly || !report.sections_respect_source) j["input"] = to_json(input);
  return j;
}

Json to_json(const CommutationReport& report) {
  return Json{{"restricted_then_gin", to_json(report.restricted_then_gin)},
              {"gin_then_restricted", to_json(report.gin_then_restricted)},
              {"stable", report.stable},
              {"equal", report.equal},
              {"seeds", report.seeds}};
}

Json to_json(const CiDemoReport& report) {
  Json steps = Json::array();
  for (const auto& s : report.steps)
    steps.push_back(Json{{"step", s.name}, {"passed", s.passed}, {"detail", s.detail}});
  Json candidates = Json::array();
  for (const auto& c : report.candidates) candidates.push_back(format_ideal(c));
  Json j{{"seed", report.seed},
         {"trials", report.trials},
         {"bound", report.bound},
         {"quadrics", forms_to_json(report.quadrics)},
         {"ideal_dims", report.ideal_dims},
         {"revlex_gin", to_json(report.revlex_gin)},
         {"mixed_initial", format_ideal(report.mixed_initial)},
         {"candidates", candidates},
         {"gin_is_j1", report.gin_is_j1},
         {"steps", steps},
         {"passed", report.passed}};
  j["special_instance"] =
      report.special_instance ? forms_to_json(*report.special_instance) : Json(nullptr);
  return j;
}

}  // namespace ginprop
