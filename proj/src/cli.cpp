#include "relpoly/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "relpoly/geometry.hpp"
#include "relpoly/netmodel.hpp"
#include "relpoly/rational.hpp"
#include "relpoly/reliability.hpp"
#include "relpoly/roots.hpp"
#include "relpoly/ruling.hpp"
#include "relpoly/sqfree_poly.hpp"

namespace relpoly {

namespace {

using nlohmann::json;

json sets_to_json(const std::vector<ComponentSet>& sets) {
  json arr = json::array();
  for (ComponentSet s : sets) arr.push_back(component_list(s));
  return arr;
}

std::string sets_to_text(const std::vector<ComponentSet>& sets) {
  std::string out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) out += ",";
    out += component_set_str(sets[i]);
  }
  return out;
}

std::vector<Rat> parse_point(const std::string& csv, int expected, const char* what) {
  auto values = parse_rat_list(csv);
  if (expected >= 0 && static_cast<int>(values.size()) != expected)
    throw std::invalid_argument(std::string(what) + " needs exactly " +
                                std::to_string(expected) + " entries");
  return values;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("RELPOLY_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0;
}

std::string render_rat(const Rat& v, int decimal_digits) {
  return decimal_digits >= 0 ? rat_to_decimal(v, decimal_digits) : rat_to_string(v);
}

json line_to_json(const AffineLine6& line) {
  json a = json::array(), b = json::array();
  for (int i = 0; i < 6; ++i) {
    a.push_back(rat_to_string(line.a[i]));
    b.push_back(rat_to_string(line.b[i]));
  }
  return {{"a", a}, {"b", b}};
}

std::string line_to_text(const AffineLine6& line) {
  std::string a = "a=(", b = "b=(";
  for (int i = 0; i < 6; ++i) {
    if (i) {
      a += ",";
      b += ",";
    }
    a += rat_to_string(line.a[i]);
    b += rat_to_string(line.b[i]);
  }
  return a + ") " + b + ")";
}

AffineLine6 parse_line(const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("line format is a1,..,a6;b1,..,b6");
  const auto a = parse_point(text.substr(0, semi), 6, "line direction");
  const auto b = parse_point(text.substr(semi + 1), 6, "line base point");
  AffineLine6 line;
  for (int i = 0; i < 6; ++i) {
    line.a[i] = a[i];
    line.b[i] = b[i];
  }
  return line;
}

std::map<int, Rat> parse_fix(const std::string& text, int n) {
  // "R1=0,R4=1/2" -> {1: 0, 4: 1/2}
  std::map<int, Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || item.size() < 4 || (item[0] != 'R' && item[0] != 'r'))
      throw std::invalid_argument("fix entries look like R1=0");
    const int idx = std::stoi(item.substr(1, eq - 1));
    if (idx < 1 || idx > n) throw std::out_of_range("fixed variable index out of range");
    out[idx] = parse_rat(item.substr(eq + 1));
  }
  if (out.empty()) throw std::invalid_argument("no fix entries given");
  return out;
}

struct Options {
  std::string net_spec;
  std::string at;
  std::string probs;
  std::string pattern;
  std::string family;
  std::string point;
  std::string zero;
  std::string pin;
  std::string fix;
  std::string line;
  std::string level = "0";
  std::string c = "0";
  std::string out_file;
  std::uint64_t trials = 100000;
  std::uint64_t seed = default_seed();
  bool seed_given = false;
  int k = 1;
  int samples = 11;
  int max_lines = 8;
  int decimal = -1;
  bool as_json = false;
  bool verify = false;
};

int run_paths(const Options& opt, std::ostream& out) {
  const Network net = Network::load(opt.net_spec);
  const auto paths = minimal_paths(net);
  if (opt.as_json)
    out << json{{"paths", sets_to_json(paths)}}.dump() << "\n";
  else
    out << sets_to_text(paths) << "\n";
  return 0;
}

int run_cuts(const Options& opt, std::ostream& out) {
  const Network net = Network::load(opt.net_spec);
  const auto cuts = minimal_cuts(net);
  if (opt.as_json)
    out << json{{"cuts", sets_to_json(cuts)}}.dump() << "\n";
  else
    out << sets_to_text(cuts) << "\n";
  return 0;
}

int run_poly(const Options& opt, std::ostream& out) {
  const Network net = Network::load(opt.net_spec);
  const TriplePoly triple = triple_poly(net);
  if (opt.as_json) {
    out << json{{"polynomial", triple.from_cuts.to_json()}, {"agree", triple.agree}}.dump()
        << "\n";
  } else {
    out << triple.from_cuts.str() << "\n";
    out << "constructions agree: " << (triple.agree ? "true" : "false") << "\n";
  }
  return triple.agree ? 0 : 1;
}

int run_eval(const Options& opt, std::ostream& out) {
  const Network net = Network::load(opt.net_spec);
  const ProbabilityVector probs(parse_point(opt.at, net.num_components(), "--at"));
  const Rat value = bruteforce_value(net, probs);
  if (opt.as_json)
    out << json{{"value", rat_to_string(value)}}.dump() << "\n";
  else
    out << render_rat(value, opt.decimal) << "\n";
  return 0;
}

int run_mc(const Options& opt, std::ostream& out) {
  const Network net = Network::load(opt.net_spec);
  const ProbabilityVector probs(parse_point(opt.probs, net.num_components(), "--p"));
  const auto result = monte_carlo(net, probs, opt.trials, opt.seed);
  std::ostringstream est, se;
  est << std::setprecision(9) << std::fixed << result.estimate;
  se << std::setprecision(9) << std::fixed << result.stderr_estimate;
  if (opt.as_json) {
    out << json{{"estimate", est.str()},
                {"stderr", se.str()},
                {"trials", result.trials},
                {"seed", result.seed}}
               .dump()
        << "\n";
  } else {
    out << "estimate " << est.str() << " stderr " << se.str() << " trials " << result.trials
        << " seed " << result.seed << "\n";
  }
  return 0;
}

int run_diag(const Options& opt, std::ostream& out) {
  const Network net = Network::load(opt.net_spec);
  const SqFreePoly poly = reliability_poly(net);
  if (!opt.pattern.empty()) {
    const auto labels = parse_point(opt.pattern, net.num_components(), "--pattern");
    DiagonalPattern pattern;
    int k = 0;
    for (const Rat& v : labels) {
      if (v.get_den() != 1) throw std::invalid_argument("pattern labels must be integers");
      pattern.assignment.push_back(static_cast<int>(v.get_num().get_si()));
      k = std::max(k, pattern.assignment.back());
    }
    pattern.k = k;
    const DensePoly restricted = apply_pattern(poly, pattern);
    if (opt.as_json)
      out << json{{"pattern", pattern.assignment}, {"polynomial", restricted.to_json()}}.dump()
          << "\n";
    else
      out << restricted.str() << "\n";
    return 0;
  }
  const auto patterns = diagonal_patterns(net.num_components(), opt.k);
  if (opt.as_json) {
    json arr = json::array();
    for (const auto& p : patterns) arr.push_back(p.assignment);
    out << json{{"k", opt.k}, {"count", patterns.size()}, {"patterns", arr}}.dump() << "\n";
  } else {
    out << "count " << patterns.size() << "\n";
    for (const auto& p : patterns) out << p.str() << "\n";
  }
  return 0;
}

int run_critical(const Options& opt, std::ostream& out) {
  const Network net = Network::load(opt.net_spec);
  const SqFreePoly poly = reliability_poly(net);
  std::vector<FamilyCoord> family;
  if (opt.family.empty()) {
    if (net.num_components() != 5)
      throw std::invalid_argument("--family required for networks with n != 5");
    for (int i = 1; i <= 5; ++i)
      family.push_back(i == 3 ? FamilyCoord::symbol() : FamilyCoord::fixed(0));
  } else {
    std::stringstream ss(opt.family);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item == "s")
        family.push_back(FamilyCoord::symbol());
      else
        family.push_back(FamilyCoord::fixed(parse_rat(item)));
    }
    if (static_cast<int>(family.size()) != net.num_components())
      throw std::invalid_argument("--family needs one entry per component");
  }
  const bool ok = verify_critical_family(poly, family);
  if (opt.as_json)
    out << json{{"critical_family", ok}}.dump() << "\n";
  else
    out << "critical family verified: " << (ok ? "true" : "false") << "\n";
  return 0;
}

int run_hessian(const Options& opt, std::ostream& out) {
  const Network net = Network::load(opt.net_spec);
  const SqFreePoly poly = reliability_poly(net);
  const auto point = parse_point(opt.at, net.num_components(), "--at");
  const HessianClass cls = hessian_class(poly, point);
  if (opt.as_json)
    out << json{{"class", hessian_class_str(cls)}}.dump() << "\n";
  else
    out << hessian_class_str(cls) << "\n";
  return 0;
}

int run_roots(const Options& opt, std::ostream& out) {
  const Network net = Network::load(opt.net_spec);
  const UPoly<Rat> diag = full_diagonal(reliability_poly(net));
  const Rat level = parse_rat(opt.level);
  const auto profile = real_roots_at_level(diag, level);
  const auto cls = level_profile(diag, level);
  if (opt.as_json) {
    json roots = json::array();
    for (const auto& r : profile.roots) {
      json entry{{"multiplicity", r.multiplicity}, {"sign", r.sign}};
      if (r.exact)
        entry["exact"] = rat_to_string(*r.exact);
      else {
        entry["lo"] = rat_to_string(r.lo);
        entry["hi"] = rat_to_string(r.hi);
      }
      roots.push_back(std::move(entry));
    }
    out << json{{"roots", roots},
                {"negative", profile.negative},
                {"zero", profile.zero},
                {"positive", profile.positive},
                {"region", cls.region_str()}}
               .dump()
        << "\n";
  } else {
    out << "diagonal " << to_dense(diag).str() << "\n";
    for (const auto& r : profile.roots) out << "root " << r.str() << "\n";
    out << "counts: negative " << profile.negative << ", zero " << profile.zero << ", positive "
        << profile.positive << "\n";
    out << "level region: " << cls.region_str() << "\n";
  }
  return 0;
}

int run_curve(const Options& opt, std::ostream& out) {
  const Network net = Network::load(opt.net_spec);
  const UPoly<Rat> diag = full_diagonal(reliability_poly(net));
  const auto samples = curve_samples(diag, opt.samples);
  const std::string csv = curve_csv(samples, opt.decimal);
  if (!opt.out_file.empty()) {
    std::ofstream file(opt.out_file);
    if (!file) throw std::invalid_argument("cannot open output file: " + opt.out_file);
    file << csv;
    out << "wrote " << samples.size() << " samples to " << opt.out_file << "\n";
    out << "nondecreasing on [0,1]: "
        << (nondecreasing_on_unit_interval(diag) ? "true" : "false") << "\n";
    out << "inflection in (0,1): "
        << (has_inflection_in_unit_interval(diag) ? "true" : "false") << "\n";
  } else {
    out << csv;
  }
  return 0;
}

// Canonical key form, e.g. "a1,a4,a5|b1=1".
ZeroPattern parse_pattern_key(const std::string& text) {
  ZeroPattern pattern;
  const auto bar = text.find('|');
  const std::string zeros = text.substr(0, bar);
  std::stringstream ss(zeros);
  std::string item;
  std::vector<int> ids;
  while (std::getline(ss, item, ',')) {
    if (item.size() < 2 || (item[0] != 'a' && item[0] != 'A'))
      throw std::invalid_argument("pattern entries look like a1[,a4|b1=1]");
    ids.push_back(std::stoi(item.substr(1)));
  }
  pattern.zeroed = component_set(ids);
  if (bar != std::string::npos) {
    std::stringstream ps(text.substr(bar + 1));
    while (std::getline(ps, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos || item.empty() || (item[0] != 'b' && item[0] != 'B'))
        throw std::invalid_argument("pattern pins look like b1=1");
      pattern.pins[std::stoi(item.substr(1, eq - 1))] = parse_rat(item.substr(eq + 1));
    }
  }
  return pattern;
}

ZeroPattern parse_pattern_options(const Options& opt) {
  if (!opt.pattern.empty()) {
    if (!opt.zero.empty() || !opt.pin.empty())
      throw std::invalid_argument("--pattern excludes --zero/--pin");
    return parse_pattern_key(opt.pattern);
  }
  ZeroPattern pattern;
  if (!opt.zero.empty()) {
    std::vector<int> ids;
    for (const Rat& v : parse_rat_list(opt.zero)) {
      if (v.get_den() != 1) throw std::invalid_argument("--zero entries are indices");
      ids.push_back(static_cast<int>(v.get_num().get_si()));
    }
    pattern.zeroed = component_set(ids);
  }
  if (!opt.pin.empty()) {
    std::stringstream ss(opt.pin);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos || item.empty() || (item[0] != 'b' && item[0] != 'B'))
        throw std::invalid_argument("pin entries look like b1=1");
      const int idx = std::stoi(item.substr(1, eq - 1));
      pattern.pins[idx] = parse_rat(item.substr(eq + 1));
    }
  }
  return pattern;
}

int run_lines(const Options& opt, std::ostream& out) {
  const Network net = Network::load(opt.net_spec);
  const SqFreePoly poly = reliability_poly(net);
  const auto values = parse_point(opt.point, 5, "--point");
  std::array<Rat, 5> base;
  std::copy(values.begin(), values.end(), base.begin());
  const ZeroPattern pattern = parse_pattern_options(opt);
  const auto lines = solve_directions(poly, base, pattern, opt.max_lines);
  if (opt.as_json) {
    json arr = json::array();
    for (const auto& line : lines) arr.push_back(line_to_json(line));
    out << json{{"pattern", pattern.key()}, {"lines", arr}}.dump() << "\n";
  } else {
    out << "pattern " << pattern.key() << ": " << lines.size() << " sample line(s)\n";
    for (const auto& line : lines) out << line_to_text(line) << "\n";
  }
  return 0;
}

int run_branches(const Options& opt, std::ostream& out) {
  const Network net = Network::load(opt.net_spec);
  const SqFreePoly poly = reliability_poly(net);
  const auto branches = enumerate_branches(poly);
  const auto ranked = plausibility_report(branches);
  const auto names = line_unknown_names();
  if (opt.as_json) {
    json arr = json::array();
    for (const auto& r : ranked) {
      const Branch& b = *r.branch;
      json residuals = json::array();
      for (const auto& res : b.residuals) residuals.push_back(res.to_json());
      json pins = json::object();
      for (const auto& [j, v] : b.pattern.pins) pins["b" + std::to_string(j)] = rat_to_string(v);
      // sample lines through a fixed base point honoring the pins
      std::array<Rat, 5> base{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)};
      for (const auto& [j, v] : b.pattern.pins) base[j - 1] = v;
      json samples = json::array();
      for (const auto& line : solve_directions(poly, base, b.pattern, 2))
        samples.push_back(line_to_json(line));
      arr.push_back({{"pattern", b.pattern.key()},
                     {"zeroed", component_list(b.pattern.zeroed)},
                     {"pins", pins},
                     {"residual_powers", b.residual_powers},
                     {"residuals", residuals},
                     {"dof", b.dof},
                     {"maximal", r.maximal},
                     {"case_label", b.case_label},
                     {"sample_lines", samples}});
    }
    out << json{{"branches", arr}}.dump() << "\n";
  } else {
    for (const auto& r : ranked) {
      const Branch& b = *r.branch;
      out << (r.maximal ? "* " : "  ") << "dof " << b.dof << "  [" << b.pattern.key() << "]";
      if (!b.case_label.empty()) out << "  " << b.case_label;
      out << "\n";
      for (std::size_t i = 0; i < b.residuals.size(); ++i)
        out << "      t^" << b.residual_powers[i] << ": 0 = " << b.residuals[i].str(names)
            << "\n";
    }
  }
  return 0;
}

int run_window(const Options& opt, std::ostream& out) {
  const AffineLine6 line = parse_line(opt.line);
  const TWindow window = probability_window(line);
  if (opt.as_json) {
    json j{{"empty", window.empty}};
    if (window.lo) j["lo"] = rat_to_string(*window.lo);
    if (window.hi) j["hi"] = rat_to_string(*window.hi);
    out << j.dump() << "\n";
  } else {
    out << window.str() << "\n";
  }
  return 0;
}

int run_levelcheck(const Options& opt, std::ostream& out) {
  const Network net = Network::load(opt.net_spec);
  const SqFreePoly poly = reliability_poly(net);
  const auto constraints = parse_fix(opt.fix, net.num_components());
  const bool contained = level_contains_variety(poly, parse_rat(opt.c), constraints);
  if (opt.as_json)
    out << json{{"contained", contained}}.dump() << "\n";
  else
    out << (contained ? "true" : "false") << "\n";
  return 0;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"relpoly: exact two-terminal reliability polynomials and their geometry"};
  app.require_subcommand(1);
  Options opt;

  auto add_net = [&](CLI::App* cmd) {
    cmd->add_option("net", opt.net_spec, "network JSON file or fixture:fig1 / fixture:fig2")
        ->required();
  };
  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", opt.as_json, "JSON output"); };

  auto* paths = app.add_subcommand("paths", "minimal paths");
  add_net(paths);
  add_json(paths);

  auto* cuts = app.add_subcommand("cuts", "minimal cuts");
  add_net(cuts);
  add_json(cuts);

  auto* poly = app.add_subcommand("poly", "reliability polynomial, three constructions");
  add_net(poly);
  add_json(poly);

  auto* eval = app.add_subcommand("eval", "exact reliability at a probability vector");
  add_net(eval);
  add_json(eval);
  eval->add_option("--at", opt.at, "comma-separated probabilities")->required();
  eval->add_option("--decimal", opt.decimal, "decimal digits instead of fractions");

  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate");
  add_net(mc);
  add_json(mc);
  mc->add_option("--p", opt.probs, "comma-separated probabilities")->required();
  mc->add_option("--trials", opt.trials, "number of trials");
  mc->add_option("--seed", opt.seed, "RNG seed (default: RELPOLY_SEED or 0)");

  auto* diag = app.add_subcommand("diag", "diagonal restrictions");
  add_net(diag);
  add_json(diag);
  diag->add_option("--k", opt.k, "number of labels");
  diag->add_option("--pattern", opt.pattern, "explicit assignment, e.g. 1,2,2,2,2");

  auto* critical = app.add_subcommand("critical", "critical family verification");
  add_net(critical);
  add_json(critical);
  critical->add_flag("--verify", opt.verify, "verify the family (default action)");
  critical->add_option("--family", opt.family,
                       "parametrized point, e.g. 0,0,s,0,0 (default for n=5)");

  auto* hessian = app.add_subcommand("hessian", "Hessian inertia classification at a point");
  add_net(hessian);
  add_json(hessian);
  hessian->add_option("--at", opt.at, "evaluation point")->required();

  auto* roots = app.add_subcommand("roots", "root profile of the diagonal restriction");
  add_net(roots);
  add_json(roots);
  roots->add_option("--level", opt.level, "level a (profile of u - a)");

  auto* curve = app.add_subcommand("curve", "CSV samples of the diagonal restriction on [0,1]");
  add_net(curve);
  curve->add_option("--samples", opt.samples, "sample count (>= 2)");
  curve->add_option("--out", opt.out_file, "output CSV path (default: stdout)");
  curve->add_option("--decimal", opt.decimal, "decimal digits instead of fractions");

  auto* lines = app.add_subcommand("lines", "sample ruling lines through a base point");
  add_net(lines);
  add_json(lines);
  lines->add_option("--point", opt.point, "base point b1,...,b5")->required();
  lines->add_option("--pattern", opt.pattern, "zero pattern key, e.g. a1,a4,a5|b1=1");
  lines->add_option("--zero", opt.zero, "zeroed direction indices, e.g. 1,4,5");
  lines->add_option("--pin", opt.pin, "base-point pins, e.g. b1=1");
  lines->add_option("--max", opt.max_lines, "maximum sample lines");

  auto* branches = app.add_subcommand("branches", "line-system branch report");
  add_net(branches);
  add_json(branches);

  auto* window = app.add_subcommand("window", "probability window of a line");
  add_json(window);
  window->add_option("--line", opt.line, "a1,..,a6;b1,..,b6")->required();

  auto* levelcheck = app.add_subcommand("levelcheck", "level-set variety membership");
  add_net(levelcheck);
  add_json(levelcheck);
  levelcheck->add_option("--c", opt.c, "level value");
  levelcheck->add_option("--fix", opt.fix, "constraints, e.g. R1=0,R2=0")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (paths->parsed()) return run_paths(opt, out);
    if (cuts->parsed()) return run_cuts(opt, out);
    if (poly->parsed()) return run_poly(opt, out);
    if (eval->parsed()) return run_eval(opt, out);
    if (mc->parsed()) return run_mc(opt, out);
    if (diag->parsed()) return run_diag(opt, out);
    if (critical->parsed()) return run_critical(opt, out);
    if (hessian->parsed()) return run_hessian(opt, out);
    if (roots->parsed()) return run_roots(opt, out);
    if (curve->parsed()) return run_curve(opt, out);
    if (lines->parsed()) return run_lines(opt, out);
    if (branches->parsed()) return run_branches(opt, out);
    if (window->parsed()) return run_window(opt, out);
    if (levelcheck->parsed()) return run_levelcheck(opt, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace relpoly
