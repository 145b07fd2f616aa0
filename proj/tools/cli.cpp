#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "ginprop/ci_demo.hpp"
#include "ginprop/factor_theorem.hpp"
#include "ginprop/gin.hpp"
#include "ginprop/json_io.hpp"
#include "ginprop/monomial_ideal.hpp"

namespace ginprop::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int require_vars(const RunConfig& config) {
  if (!config.vars) throw UsageError("--vars is required");
  if (*config.vars < 1) throw UsageError("--vars must be >= 1");
  return *config.vars;
}

std::vector<Form> load_generators(const std::string& path, const RunConfig& config,
                                  std::ostream& warnings, int& num_vars) {
  SubspaceHeader fallback;
  fallback.num_vars = config.vars;
  const SubspaceDocument doc = parse_subspace_document(read_file(path), fallback);
  if (doc.header.num_vars && config.vars && *doc.header.num_vars != *config.vars)
    warnings << "warning: header s=" << *doc.header.num_vars << " overrides --vars "
             << *config.vars << "\n";
  num_vars = doc.num_vars;
  if (doc.forms.empty()) throw UsageError("'" + path + "' contains no forms");
  return doc.forms;
}

std::string join_monomials(const std::vector<Exponent>& monos) {
  std::string out;
  for (const auto& e : monos) {
    if (!out.empty()) out += ", ";
    out += format_monomial(e);
  }
  return out.empty() ? "0" : out;
}

MonomialIdeal load_ideal(const RunConfig& config, const std::string& ideal_text) {
  const int s = require_vars(config);
  if (!ideal_text.empty()) return parse_ideal(ideal_text, s);
  if (config.inputs.empty()) throw UsageError("expected an ideal file or --ideal");
  return parse_ideal(read_file(config.inputs.front()), s);
}

std::vector<long> parse_hf(const std::string& text) {
  std::vector<long> hf;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      hf.push_back(std::stol(item));
    } catch (const std::exception&) {
      throw UsageError("bad Hilbert function value '" + item + "'");
    }
  }
  if (hf.empty()) throw UsageError("--hf needs at least one value");
  return hf;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace

Subspace load_subspace(const std::string& path, const RunConfig& config,
                       std::ostream& warnings) {
  SubspaceHeader fallback;
  fallback.num_vars = config.vars;
  if (config.order_given) fallback.order = config.order;
  const SubspaceDocument doc = parse_subspace_document(read_file(path), fallback);
  if (doc.header.num_vars && config.vars && *doc.header.num_vars != *config.vars)
    warnings << "warning: header s=" << *doc.header.num_vars << " overrides --vars "
             << *config.vars << "\n";
  if (doc.header.order && config.order_given && *doc.header.order != config.order)
    warnings << "warning: header order=" << order_name(*doc.header.order)
             << " overrides --order " << order_name(config.order) << "\n";
  if (doc.num_vars < 1) throw UsageError("number of variables unknown: use --vars or a header");
  std::optional<int> degree = doc.degree;
  for (std::size_t i = 0; i < doc.forms.size(); ++i) {
    const Form& f = doc.forms[i];
    if (!degree) degree = f.degree();
    if (f.degree() != *degree)
      throw ParseError("line " + std::to_string(doc.lines[i]) + ": degree mixing (expected " +
                           std::to_string(*degree) + ", found " + std::to_string(f.degree()) +
                           ")",
                       0, doc.lines[i]);
  }
  if (!degree) throw UsageError("'" + path + "' has no forms and no d= header");
  return echelonize(doc.forms, doc.num_vars, *degree, doc.order);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Initial and generic initial subspaces of polynomial ideals over Q", "ginprop"};
  app.require_subcommand(1);

  RunConfig config;
  std::string linear_text, ideal_text, hf_text;
  std::string order_text = "revlex";
  int expected_m = 1, inst_r = 3, inst_n = 1, inst_m = 1, degree = -1;
  std::string gcd_f, gcd_g;

  auto add_common = [&](CLI::App* sub, bool randomized) {
    sub->add_option("--vars", config.vars, "number of variables s");
    sub->add_option("--order", order_text, "revlex, lex or mixed");
    sub->add_flag("--json", config.json, "JSON output");
    if (randomized) {
      sub->add_option("--seed", config.seed, "random seed");
      sub->add_option("--trials", config.trials, "number of random trials");
      sub->add_option("--bound", config.bound, "random coefficient bound");
    }
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", config.inputs, "input file")->required();
  };

  std::map<std::string, std::function<int()>> handlers;
  auto add = [&](const std::string& name, const std::string& help) {
    return app.add_subcommand(name, help);
  };

  // in --------------------------------------------------------------------
  auto* in_cmd = add("in", "initial subspace of a subspace file");
  add_common(in_cmd, false);
  add_input(in_cmd);
  handlers["in"] = [&] {
    const Subspace v = load_subspace(config.inputs.front(), config, err);
    const MonomialSet in = initial_subspace(v);
    if (config.json)
      print_json(out, Json{{"result", to_json(in, v.order())}, {"dim", v.dim()}});
    else
      out << "in(V) = " << join_monomials(in.sorted(v.order())) << "\n";
    return kSuccess;
  };

  // gin -------------------------------------------------------------------
  auto* gin_cmd = add("gin", "generic initial subspace");
  add_common(gin_cmd, true);
  add_input(gin_cmd);
  handlers["gin"] = [&] {
    const Subspace v = load_subspace(config.inputs.front(), config, err);
    const GinReport report =
        gin_subspace(v, GinOptions{v.order(), config.trials, config.seed, config.bound});
    if (config.json) {
      print_json(out, to_json(report));
    } else {
      out << "gin(V) = " << join_monomials(report.result.sorted(v.order())) << "\n"
          << "agreements: " << report.agreements << "/" << report.trials
          << (report.stable ? " (stable)" : " (unstable)") << "\n";
    }
    return report.stable ? kSuccess : kInconclusive;
  };

  // gin-ideal -------------------------------------------------------------
  auto* gin_ideal_cmd = add("gin-ideal", "generic initial ideal truncated at --dmax");
  add_common(gin_ideal_cmd, true);
  add_input(gin_ideal_cmd);
  gin_ideal_cmd->add_option("--dmax", config.dmax, "truncation degree");
  handlers["gin-ideal"] = [&] {
    int s = 0;
    const auto gens = load_generators(config.inputs.front(), config, err, s);
    const GinIdealReport report = gin_ideal_truncated(
        gens, config.dmax, GinOptions{config.order, config.trials, config.seed, config.bound});
    if (config.json) {
      print_json(out, to_json(report));
    } else {
      out << "gin(I) truncated at degree " << config.dmax << " = ("
          << format_ideal(report.result) << ")\n"
          << "agreements: " << report.agreements << "/" << report.trials
          << (report.stable ? " (stable)" : " (unstable)") << "\n"
          << "note: " << report.caveat << "\n";
    }
    return report.stable ? kSuccess : kInconclusive;
  };

  // restrict --------------------------------------------------------------
  auto* restrict_cmd = add("restrict", "image of a subspace in S/(l)");
  add_common(restrict_cmd, false);
  add_input(restrict_cmd);
  restrict_cmd->add_option("--linear", linear_text, "linear form l (default: the last variable)");
  handlers["restrict"] = [&] {
    const Subspace v = load_subspace(config.inputs.front(), config, err);
    const Form l = linear_text.empty() ? Form::variable(v.num_vars(), v.num_vars() - 1)
                                       : parse_form(linear_text, v.num_vars(), 1);
    const Subspace r = restrict_subspace(v, l);
    if (config.json)
      print_json(out, to_json(r));
    else
      out << format_subspace(r);
    return kSuccess;
  };

  // gcd -------------------------------------------------------------------
  auto* gcd_cmd = add("gcd", "greatest common divisor of two forms");
  add_common(gcd_cmd, false);
  gcd_cmd->add_option("f", gcd_f, "first form")->required();
  gcd_cmd->add_option("g", gcd_g, "second form")->required();
  handlers["gcd"] = [&] {
    const int s = require_vars(config);
    const Form g = gcd_forms(parse_form(gcd_f, s), parse_form(gcd_g, s));
    if (config.json)
      print_json(out, Json{{"gcd", format_form(g)}, {"degree", g.degree()}});
    else
      out << format_form(g) << "\n";
    return kSuccess;
  };

  // factor ----------------------------------------------------------------
  auto* factor_cmd = add("factor", "common factor of the forms of a subspace");
  add_common(factor_cmd, false);
  add_input(factor_cmd);
  handlers["factor"] = [&] {
    const Subspace v = load_subspace(config.inputs.front(), config, err);
    const CommonFactor cf = common_factor(v);
    if (config.json)
      print_json(out, Json{{"p", format_form(cf.p)}, {"m", cf.degree}});
    else
      out << "p = " << format_form(cf.p) << "\nm = " << cf.degree << "\n";
    return kSuccess;
  };

  // verify ----------------------------------------------------------------
  auto* verify_cmd = add("verify", "check the W^n x1^m common-factor property on a subspace");
  add_common(verify_cmd, true);
  add_input(verify_cmd);
  handlers["verify"] = [&] {
    const Subspace v = load_subspace(config.inputs.front(), config, err);
    const VerifyOutcome outcome =
        verify_main_theorem(v, GinOptions{MonomialOrder::revlex, config.trials, config.seed,
                                          config.bound});
    if (config.json) {
      print_json(out, to_json(outcome, v));
    } else {
      out << "status: " << status_name(outcome.status) << "\n"
          << outcome.message << "\n"
          << "gin(V) = " << join_monomials(outcome.gin.result.sorted()) << "\n";
      if (outcome.certificate) {
        out << "p = " << format_form(outcome.certificate->p) << "\nW_n:\n";
        for (const auto& w : outcome.certificate->cofactor_space.basis())
          out << "  " << format_form(w) << "\n";
        out << "checked: " << (outcome.certificate->checked ? "yes" : "no") << "\n";
      }
      if (outcome.status == VerifyStatus::violation) {
        out << "input:\n" << format_subspace(v) << "seeds:";
        for (auto sd : outcome.gin.seeds) out << " " << sd;
        out << "\n";
      }
    }
    switch (outcome.status) {
      case VerifyStatus::verified:
      case VerifyStatus::not_applicable: return kSuccess;
      case VerifyStatus::violation: return kRefuted;
      case VerifyStatus::inconclusive: return kInconclusive;
    }
    return kRefuted;
  };

  // make-instance ---------------------------------------------------------
  auto* make_cmd = add("make-instance", "random V = W_n * p");
  add_common(make_cmd, true);
  make_cmd->add_option("--r", inst_r, "W = (x1..xr)");
  make_cmd->add_option("--n", inst_n, "degree of W_n");
  make_cmd->add_option("--m", inst_m, "degree of p");
  handlers["make-instance"] = [&] {
    const int s = require_vars(config);
    const PlantedInstance inst = make_instance(s, inst_r, inst_n, inst_m, config.seed, config.bound);
    if (config.json) {
      print_json(out, to_json(inst));
    } else {
      out << "# planted p = " << format_form(inst.p) << "\n";
      for (const auto& w : inst.w_n.basis()) out << "# W_n: " << format_form(w) << "\n";
      out << format_subspace(inst.v);
    }
    return kSuccess;
  };

  // probe -----------------------------------------------------------------
  auto* probe_cmd = add("probe", "common factors of random hyperplane sections");
  add_common(probe_cmd, true);
  add_input(probe_cmd);
  probe_cmd->add_option("--m", expected_m, "expected factor degree");
  handlers["probe"] = [&] {
    const Subspace v = load_subspace(config.inputs.front(), config, err);
    const ProbeReport report =
        hyperplane_factor_probe(v, expected_m, config.trials, config.seed, config.bound);
    if (config.json) {
      print_json(out, to_json(report, v));
    } else {
      out << "source factor degree: " << report.source_factor_degree << "\nsection degrees:";
      for (int d : report.section_degrees) out << " " << d;
      out << "\nsections respect source: " << (report.sections_respect_source ? "yes" : "no")
          << "\nanomaly: " << (report.anomaly ? "yes" : "no") << "\n";
    }
    return report.anomaly || !report.sections_respect_source ? kRefuted : kSuccess;
  };

  // hilbert / borel / colon ------------------------------------------------
  auto* hilbert_cmd = add("hilbert", "Hilbert function of S/J");
  add_common(hilbert_cmd, false);
  hilbert_cmd->add_option("input", config.inputs, "ideal file");
  hilbert_cmd->add_option("--ideal", ideal_text, "ideal as text");
  hilbert_cmd->add_option("--dmax", config.dmax, "largest degree");
  hilbert_cmd->add_option("--degree", degree, "single degree");
  handlers["hilbert"] = [&] {
    const MonomialIdeal j = load_ideal(config, ideal_text);
    std::vector<long> values;
    const int lo = degree >= 0 ? degree : 0;
    const int hi = degree >= 0 ? degree : config.dmax;
    for (int d = lo; d <= hi; ++d) values.push_back(hilbert_function(j, d));
    if (config.json) {
      print_json(out, Json{{"from_degree", lo}, {"values", values}});
    } else {
      for (int d = lo; d <= hi; ++d) out << "h(" << d << ") = " << values[d - lo] << "\n";
    }
    return kSuccess;
  };

  auto* borel_cmd = add("borel", "Borel-fixedness of a monomial ideal");
  add_common(borel_cmd, false);
  borel_cmd->add_option("input", config.inputs, "ideal file");
  borel_cmd->add_option("--ideal", ideal_text, "ideal as text");
  handlers["borel"] = [&] {
    const bool fixed = is_borel_fixed(load_ideal(config, ideal_text));
    if (config.json)
      print_json(out, Json{{"borel_fixed", fixed}});
    else
      out << (fixed ? "Borel-fixed" : "not Borel-fixed") << "\n";
    return kSuccess;
  };

  auto* colon_cmd = add("colon", "J : x_s");
  add_common(colon_cmd, false);
  colon_cmd->add_option("input", config.inputs, "ideal file");
  colon_cmd->add_option("--ideal", ideal_text, "ideal as text");
  handlers["colon"] = [&] {
    const MonomialIdeal j = load_ideal(config, ideal_text);
    const MonomialIdeal c = colon_by_last_variable(j);
    const bool saturated = c == j;
    if (config.json)
      print_json(out, Json{{"colon", to_json(c)}, {"saturated", saturated}});
    else
      out << "J : x" << j.num_vars() << " = (" << format_ideal(c) << ")\n"
          << (saturated ? "saturated" : "not saturated") << "\n";
    return kSuccess;
  };

  // enumerate -------------------------------------------------------------
  auto* enum_cmd = add("enumerate", "Borel-fixed saturated ideals with a given Hilbert function");
  add_common(enum_cmd, false);
  enum_cmd->add_option("--hf", hf_text, "quotient Hilbert function, e.g. 1,4,7,8")->required();
  enum_cmd->add_option("--dmax", config.dmax, "largest generator degree");
  handlers["enumerate"] = [&] {
    const int s = require_vars(config);
    const auto candidates = enumerate_gin_candidates(s, parse_hf(hf_text), config.dmax);
    if (config.json) {
      Json arr = Json::array();
      for (const auto& c : candidates) arr.push_back(format_ideal(c));
      print_json(out, Json{{"candidates", arr}});
    } else {
      for (const auto& c : candidates) out << "(" << format_ideal(c) << ")\n";
    }
    return kSuccess;
  };

  // ci-demo ---------------------------------------------------------------
  auto* demo_cmd = add("ci-demo", "complete intersection of three quadrics in P^3");
  add_common(demo_cmd, true);
  handlers["ci-demo"] = [&] {
    const CiDemoReport report = ci_quadrics_demo(config.seed, config.trials, config.bound);
    if (config.json) {
      print_json(out, to_json(report));
    } else {
      out << "seed " << report.seed << ", quadrics:\n";
      for (const auto& q : report.quadrics) out << "  " << format_form(q) << "\n";
      if (report.special_instance) {
        out << "special revlex instance:\n";
        for (const auto& q : *report.special_instance) out << "  " << format_form(q) << "\n";
      }
      for (const auto& step : report.steps)
        out << step.name << ": " << (step.passed ? "PASS" : "FAIL") << "  [" << step.detail
            << "]\n";
      out << "gin = J1: " << (report.gin_is_j1 ? "PASS" : "FAIL") << "\n";
    }
    return report.passed ? kSuccess : kRefuted;
  };

  std::vector<std::string> argv_storage{"ginprop"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kUsageError;
  }

  try {
    config.order = parse_order(order_text);
    config.order_given = false;
    for (auto* sub : app.get_subcommands()) {
      if (auto* opt = sub->get_option_no_throw("--order"); opt && opt->count() > 0)
        config.order_given = true;
      return handlers.at(sub->get_name())();
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return kRefuted;
  }
  return kUsageError;
}

}  // namespace ginprop::cli
