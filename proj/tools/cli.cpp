#include "cli.hpp"

#include "bomc/analysis.hpp"
#include "bomc/best_of_many.hpp"
#include "bomc/certificate.hpp"
#include "bomc/constants.hpp"
#include "bomc/errors.hpp"
#include "bomc/instance_io.hpp"
#include "bomc/relaxation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace bomc::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string frac(const Rat& r) { return to_fraction_string(r); }

Json rat_array(const EdgeVector& v) {
  Json a = Json::array();
  for (const Rat& r : v) a.push_back(frac(r));
  return a;
}

std::string id_list(const EdgeSet& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << 'e' << s[i];
  return out.str();
}

std::string num(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

Instance load_instance(const std::string& name) {
  const auto& fixtures = builtin_fixture_names();
  if (std::find(fixtures.begin(), fixtures.end(), name) != fixtures.end()) {
    return builtin_fixture(name);
  }
  std::ifstream in(name);
  if (!in) throw InvalidInput("cannot read instance file '" + name + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_instance(text.str());
}

// Instance loading failures are reported as parse errors (exit 2).
struct LoadFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Instance load_or_fail(const std::string& name) {
  try {
    return load_instance(name);
  } catch (const ParseError& e) {
    throw LoadFailure(e.what());
  } catch (const InvalidInput& e) {
    throw LoadFailure(e.what());
  }
}

Json solve_json(const RunConfig& cfg, const BomReport& rep) {
  Json j;
  j["command"] = cfg.command;
  j["instance"] = cfg.instance;
  j["lp_value"] = frac(rep.lp.value);
  j["x_star"] = rat_array(rep.lp.x_star);
  Json active = Json::array();
  for (const LpConstraint& c : rep.lp.active_constraints) active.push_back(describe(c));
  j["active_constraints"] = active;
  Json combo = Json::array();
  for (const TreeMember& m : rep.combo.members) {
    combo.push_back({{"lambda", frac(m.lambda)}, {"tree", m.tree}});
  }
  j["combo"] = combo;
  Json tours = Json::array();
  for (const TourResult& t : rep.per_tree) {
    tours.push_back({{"tree", t.tree},
                     {"join", t.join},
                     {"multiplicity", t.tour},
                     {"tree_length", frac(t.tree_length)},
                     {"join_length", frac(t.join_length)},
                     {"length", frac(t.length)}});
  }
  j["tours"] = tours;
  j["best"] = rep.best;
  j["ratio_R"] = rep.ratio_R ? Json(frac(*rep.ratio_R)) : Json(nullptr);
  return j;
}

std::string solve_text(const RunConfig& cfg, const BomReport& rep) {
  std::ostringstream out;
  out << "instance " << cfg.instance << '\n';
  out << "lp_value " << to_string(rep.lp.value) << '\n';
  out << "x*";
  for (std::size_t e = 0; e < rep.lp.x_star.size(); ++e) {
    out << " e" << e << '=' << to_string(rep.lp.x_star[static_cast<EdgeId>(e)]);
  }
  out << '\n';
  for (const LpConstraint& c : rep.lp.active_constraints) out << describe(c) << '\n';
  for (std::size_t i = 0; i < rep.combo.members.size(); ++i) {
    const TourResult& t = rep.per_tree[i];
    out << describe(rep.combo.members[i]) << " | join " << id_list(t.join) << " | length "
        << to_string(t.length) << '\n';
  }
  out << "best " << rep.best << " length " << to_string(rep.best_tour().length) << '\n';
  out << "ratio_R " << (rep.ratio_R ? to_string(*rep.ratio_R) : std::string("null")) << '\n';
  return out.str();
}

Json certificate_json(const Certificate& cert) {
  Json j;
  j["beta"] = frac(cert.beta);
  j["all_pass"] = cert.all_pass();
  Json checks = Json::array();
  for (const CheckResult& c : cert.checks) {
    Json o;
    o["name"] = c.name;
    o["pass"] = c.pass;
    o["skipped"] = c.skipped;
    o["evaluated"] = c.evaluated;
    o["lhs"] = c.lhs ? Json(frac(*c.lhs)) : Json(nullptr);
    if (c.rhs) {
      o["rhs"] = frac(*c.rhs);
    } else if (!c.rhs_text.empty()) {
      o["rhs"] = c.rhs_text;
    } else {
      o["rhs"] = nullptr;
    }
    o["witness"] = c.witness;
    o["note"] = c.note;
    checks.push_back(o);
  }
  j["checks"] = checks;
  return j;
}

std::string certificate_text(const Certificate& cert) {
  std::ostringstream out;
  out << "beta " << to_string(cert.beta) << '\n';
  for (const CheckResult& c : cert.checks) {
    out << std::left << std::setw(17) << c.name << ' '
        << (c.skipped ? "SKIP" : c.pass ? "PASS" : "FAIL");
    if (c.lhs) {
      out << "  " << to_string(*c.lhs) << " <= "
          << (c.rhs ? to_string(*c.rhs) : c.rhs_text);
    }
    if (!c.witness.empty()) out << "  [" << c.witness << ']';
    if (!c.note.empty()) out << "  (" << c.note << ')';
    out << '\n';
  }
  out << "certificate " << (cert.all_pass() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

struct Comparison {
  std::string name;
  bool pass;
  Rat lhs;
  Rat rhs;
};

RunOutput run_solve(const RunConfig& cfg) {
  const Instance inst = load_or_fail(cfg.instance);
  const BomReport rep = best_of_many(inst, cfg.caps);
  RunOutput out;
  out.report = cfg.format == "text" ? solve_text(cfg, rep) : solve_json(cfg, rep).dump(2) + "\n";
  return out;
}

RunOutput run_certify(const RunConfig& cfg) {
  const Instance inst = load_or_fail(cfg.instance);
  const BomReport rep = best_of_many(inst, cfg.caps);
  const Certificate cert = verify_certificates(inst, rep, cfg.beta, cfg.caps);
  RunOutput out;
  if (cfg.format == "text") {
    out.report = solve_text(cfg, rep) + certificate_text(cert);
  } else {
    Json j = solve_json(cfg, rep);
    j["certificate"] = certificate_json(cert);
    out.report = j.dump(2) + "\n";
  }
  if (!cert.all_pass()) {
    out.exit_code = kCheckFailed;
    out.error = "certificate failed";
  }
  return out;
}

RunOutput run_oracle(const RunConfig& cfg) {
  const Instance inst = load_or_fail(cfg.instance);
  const BomReport rep = best_of_many(inst, cfg.caps);
  const OptResult opt = brute_force_opt(inst, cfg.caps);
  const Graph& g = inst.graph();
  const Rat& lp = rep.lp.value;
  const Rat& best = rep.best_tour().length;

  std::vector<Comparison> cmp;
  auto le = [&](std::string name, const Rat& a, const Rat& b) {
    cmp.push_back({std::move(name), a <= b, a, b});
  };
  le("lp_value <= opt", lp, opt.length);
  le("opt <= best", opt.length, best);
  le("best <= (8/5) lp_value", best, Rat(8, 5) * lp);
  le("best <= (8/5) opt", best, Rat(8, 5) * opt.length);
  const TourResult base = min_tree_christofides(inst, cfg.caps);
  le("min-tree join <= (2/3) opt", base.join_length, Rat(2, 3) * opt.length);
  if (g.vertex_count() > 1 && static_cast<std::size_t>(g.edge_count()) <= cfg.caps.tree_enum) {
    le("1 <= exhaustive packing value", Rat(1), packing_value_oracle(g, rep.lp.x_star, cfg.caps));
  }
  if (static_cast<std::size_t>(g.vertex_count()) <= cfg.caps.full_cut_oracle) {
    const auto fast = narrow_cuts(inst, rep.lp.x_star, rep.combo);
    const auto full = narrow_cuts_exhaustive(inst, rep.lp.x_star, rep.combo, cfg.caps);
    const Rat a(static_cast<long>(fast.size()));
    const Rat b(static_cast<long>(full.size()));
    bool same = fast.size() == full.size();
    for (std::size_t k = 0; same && k < fast.size(); ++k) same = fast[k].cut == full[k].cut;
    cmp.push_back({"narrow cuts: fundamental == exhaustive", same, a, b});
  }
  const bool all = std::all_of(cmp.begin(), cmp.end(), [](const Comparison& c) { return c.pass; });

  RunOutput out;
  if (cfg.format == "text") {
    std::ostringstream t;
    t << "instance " << cfg.instance << '\n';
    t << "lp_value " << to_string(lp) << '\n';
    t << "opt " << to_string(opt.length) << '\n';
    t << "best " << to_string(best) << '\n';
    for (const Comparison& c : cmp) {
      t << (c.pass ? "PASS " : "FAIL ") << c.name << "  " << to_string(c.lhs) << " vs "
        << to_string(c.rhs) << '\n';
    }
    out.report = t.str();
  } else {
    Json j;
    j["command"] = cfg.command;
    j["instance"] = cfg.instance;
    j["lp_value"] = frac(lp);
    j["opt_length"] = frac(opt.length);
    j["opt_tour"] = opt.tour;
    j["best_length"] = frac(best);
    j["ratio_R"] = rep.ratio_R ? Json(frac(*rep.ratio_R)) : Json(nullptr);
    Json list = Json::array();
    for (const Comparison& c : cmp) {
      list.push_back({{"name", c.name}, {"pass", c.pass}, {"lhs", frac(c.lhs)}, {"rhs", frac(c.rhs)}});
    }
    j["comparisons"] = list;
    j["all_pass"] = all;
    out.report = j.dump(2) + "\n";
  }
  if (!all) {
    out.exit_code = kCheckFailed;
    out.error = "oracle comparison failed";
  }
  return out;
}

RunOutput run_constants(const RunConfig& cfg) {
  Json j;
  j["command"] = cfg.command;
  std::ostringstream t;

  const Rat beta = cfg.beta;
  const BetaPoint at = f_beta(to_double(beta));
  if (auto exact = exact_beta_point(beta)) {
    j["exact"] = {{"beta", frac(exact->beta)},
                  {"omega", frac(exact->omega)},
                  {"f_of_beta", frac(exact->f_of_beta)},
                  {"epsilon", frac(exact->epsilon)},
                  {"expectation_coefficient", frac(exact->expectation_coefficient())},
                  {"ratio", frac(exact->ratio())}};
    t << "exact beta=" << to_string(exact->beta) << " omega=" << to_string(exact->omega)
      << " f=" << to_string(exact->f_of_beta) << " eps=" << to_string(exact->epsilon)
      << " coefficient=" << to_string(exact->expectation_coefficient())
      << " ratio=" << to_string(exact->ratio()) << '\n';
  } else {
    j["exact"] = nullptr;
    t << "exact beta=" << to_string(beta) << ": f(beta) is irrational\n";
  }

  Json table = Json::array();
  std::vector<double> betas;
  for (int k = 34; k <= 49; ++k) betas.push_back(k / 100.0);
  betas.push_back(to_double(beta));
  std::sort(betas.begin(), betas.end());
  for (double b : betas) {
    const BetaPoint p = f_beta(b);
    table.push_back({{"beta", p.beta},
                     {"omega", p.omega},
                     {"f_of_beta", p.f_of_beta},
                     {"f_numeric", p.f_numeric},
                     {"epsilon", p.epsilon}});
    t << "beta=" << num(p.beta) << " omega=" << num(p.omega) << " f=" << num(p.f_of_beta)
      << " f_numeric=" << num(p.f_numeric) << " eps=" << num(p.epsilon) << '\n';
  }
  j["selected"] = {{"beta", at.beta}, {"epsilon", at.epsilon}};
  j["table"] = table;

  auto mixed_json = [](const MixedPoint& p) {
    return Json{{"beta", p.beta},         {"y", p.y},
                {"omega", p.omega},       {"f", p.f},
                {"epsilon", p.epsilon},   {"omega_shifted", p.omega_shifted},
                {"omega_unshifted", p.omega_unshifted}};
  };
  const MixedMinimum min = minimize_mixed_bound();
  j["mixed_minimum"] = mixed_json(min.point);
  j["mixed_minimum"]["evaluations"] = min.evaluations;
  Json samples = Json::array();
  for (double y : {0.0, 0.05, 0.1, 0.2}) samples.push_back(mixed_json(mixed_bound(4.0 / 9.0, y)));
  j["mixed_samples"] = samples;
  t << "mixed minimum beta=" << num(min.point.beta) << " y=" << num(min.point.y)
    << " eps=" << num(min.point.epsilon) << " omega=" << num(min.point.omega) << '\n';

  RunOutput out;
  out.report = cfg.format == "text" ? t.str() : j.dump(2) + "\n";
  return out;
}

RunOutput run_gen(const RunConfig& cfg) {
  if (cfg.family == "lowerbound-figure2") {
    RunOutput out;
    out.exit_code = kFailure;
    out.error = "generator family 'lowerbound-figure2' is reserved and not implemented";
    return out;
  }
  if (cfg.family != "random") throw InvalidInput("unknown generator family '" + cfg.family + "'");
  GenParams p = cfg.gen;
  p.seed = cfg.seed;
  RunOutput out;
  out.report = format_instance(gen_random(p));
  return out;
}

}  // namespace

RunOutput run(const RunConfig& cfg) {
  try {
    if (cfg.format != "json" && cfg.format != "text") {
      throw InvalidInput("format must be json or text");
    }
    if (cfg.command == "solve") return run_solve(cfg);
    if (cfg.command == "certify") {
      require_beta(cfg.beta);
      return run_certify(cfg);
    }
    if (cfg.command == "oracle") return run_oracle(cfg);
    if (cfg.command == "constants") {
      require_beta(cfg.beta);
      return run_constants(cfg);
    }
    if (cfg.command == "gen") return run_gen(cfg);
    throw InvalidInput("unknown command '" + cfg.command + "'");
  } catch (const LoadFailure& e) {
    return {kParseError, "", e.what()};
  } catch (const CapacityError& e) {
    return {kCapacityError, "", e.what()};
  } catch (const ParseError& e) {
    return {kParseError, "", e.what()};
  } catch (const DecompositionError& e) {
    return {kFailure, "", e.what()};
  } catch (const InvalidInput& e) {
    return {kParseError, "", e.what()};
  } catch (const std::exception& e) {
    return {kFailure, "", e.what()};
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Best-of-Many Christofides for shortest T-tours, with exact certificates"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string beta_text = "4/9";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Write the report to this path");
    sub->add_option("--format", cfg.format, "Report format")
        ->check(CLI::IsMember({"json", "text"}));
  };
  auto add_caps = [&](CLI::App* sub) {
    const auto positive = CLI::Range(std::size_t{1}, std::size_t{63});
    sub->add_option("--cap-cut-enum", cfg.caps.cut_enum)->check(positive);
    sub->add_option("--cap-partition-enum", cfg.caps.partition_enum)->check(positive);
    sub->add_option("--cap-matching", cfg.caps.matching)->check(positive);
    sub->add_option("--cap-tree-enum", cfg.caps.tree_enum)->check(CLI::PositiveNumber);
    sub->add_option("--cap-bruteforce-edges", cfg.caps.bruteforce_edges)
        ->check(CLI::PositiveNumber);
    sub->add_option("--cap-full-cut-oracle", cfg.caps.full_cut_oracle)->check(positive);
    sub->add_option("--cap-universal-tprime", cfg.caps.universal_tprime)->check(positive);
  };
  auto instance_cmd = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("instance", cfg.instance, "Instance file or fixture name (FIX-C4, ...)")
        ->required();
    add_common(sub);
    add_caps(sub);
    return sub;
  };

  instance_cmd("solve", "LP, tree decomposition and Best-of-Many tours");
  CLI::App* certify = instance_cmd("certify", "Solve, then verify every analysis inequality");
  certify->add_option("--beta", beta_text, "Rational in (1/3, 1/2)");
  instance_cmd("oracle", "Compare against brute-force optimum and exhaustive oracles");
  CLI::App* constants = app.add_subcommand("constants", "Closed-form constants and mixed bound");
  constants->add_option("--beta", beta_text, "Rational in (1/3, 1/2)");
  add_common(constants);
  CLI::App* gen = app.add_subcommand("gen", "Write a random instance");
  gen->add_option("family", cfg.family, "random (default) or lowerbound-figure2 (reserved)");
  gen->add_option("--n", cfg.gen.n, "Vertices")->check(CLI::PositiveNumber);
  gen->add_option("--m", cfg.gen.m, "Edges")->check(CLI::NonNegativeNumber);
  gen->add_option("--t-size", cfg.gen.t_size, "Number of terminals (even)");
  gen->add_option("--weight-lo", cfg.gen.weight_lo);
  gen->add_option("--weight-hi", cfg.gen.weight_hi);
  gen->add_option("--seed", cfg.seed);
  gen->add_option("--out", cfg.out, "Write the instance to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kParseError;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  try {
    cfg.beta = parse_rat(beta_text);
  } catch (const std::invalid_argument& e) {
    err << "--beta: " << e.what() << '\n';
    return kParseError;
  }

  const RunOutput result = run(cfg);
  if (!result.report.empty()) {
    if (cfg.out.empty()) {
      out << result.report;
    } else {
      std::ofstream file(cfg.out);
      if (!file) {
        err << "cannot write '" << cfg.out << "'\n";
        return kFailure;
      }
      file << result.report;
    }
  }
  if (!result.error.empty()) err << "error: " << result.error << '\n';
  return result.exit_code;
}

}  // namespace bomc::cli
