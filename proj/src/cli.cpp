#include "kdvlab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <future>
#include <json.hpp>
#include <sstream>

#include "kdvlab/catalog.hpp"
#include "kdvlab/errors.hpp"
#include "kdvlab/evolve.hpp"
#include "kdvlab/lax.hpp"
#include "kdvlab/report.hpp"
#include "kdvlab/residual.hpp"
#include "kdvlab/transforms.hpp"

namespace kdvlab::cli {
namespace {

using nlohmann::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string family;
  double m = 0.5;
  double alpha = 1.0;
  double beta = 0.0;
  std::string branch = "+";
  std::string amp_sign = "+";
  std::string equation;
  std::size_t n = 0;  // 0 selects the command's default
  double dt = 0.0;
  double t_end = 1.0;
  double domain = 0.0;
  double L = 0.0;
  std::string out;
  std::string config;
  bool paper_velocities = false;
  bool flip_sign = false;
  bool all = false;
  int id = 0;
  std::string potential = "complex-scarf";
  double strength = 2.0;
};

const std::vector<double> kModulusGrid = {0.05, 0.25, 0.5, 0.75, 0.95, 1.0};
constexpr double kVerifyThreshold = 1e-6;

SolutionSpec spec_from(const Options& o) {
  if (o.family.empty()) throw UsageError("--family is required");
  SolutionSpec s;
  s.family = parse_family(o.family);
  s.alpha = o.alpha;
  s.m = ignores_modulus(s.family) ? 1.0 : o.m;
  s.beta = o.beta;
  s.branch = parse_sign(o.branch);
  s.amp_sign = parse_sign(o.amp_sign);
  s.velocity = o.paper_velocities ? VelocityConvention::paper : VelocityConvention::corrected;
  resolve(s);
  return s;
}

// Writes to --out when given, otherwise to the command's output stream.
void emit(const Options& o, std::ostream& fallback, const std::string& text) {
  if (o.out.empty()) {
    fallback << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw IoError("cannot open '" + o.out + "' for writing");
  file << text;
  if (!file) throw IoError("write to '" + o.out + "' failed");
}

bool uses_branch(Family f) {
  return f != Family::kdv_cnoidal && f != Family::kdv_sech2 && f != Family::mkdv_sn;
}

bool uses_amp_sign(Family f) { return !is_kdv_family(f) && f != Family::mkdv_icn; }

json grid_json(const Grid& g) {
  return {{"topology", g.topology == Topology::periodic ? "periodic" : "truncated"},
          {"n", g.size},
          {"spacing", g.spacing},
          {"origin", g.origin}};
}

struct VerifyOutcome {
  json report;
  bool pass = false;
};

VerifyOutcome verify_one(const SolutionSpec& spec, std::size_t n,
                         const std::optional<Equation>& eq_override) {
  const auto params = resolve(spec);
  const Equation eq = eq_override.value_or(params.equation);
  const Grid grid = natural_grid(spec, n == 0 ? 256 : n);
  const auto profile = sample_profile(spec, grid);
  const auto residual = traveling_residual(profile, params.c, eq);
  VerifyOutcome out;
  out.pass = residual.relative < kVerifyThreshold;
  out.report = {{"spec", to_json(spec)},
                {"resolved", to_json(params)},
                {"equation", equation_name(eq)},
                {"grid", grid_json(grid)},
                {"residual", to_json(residual)},
                {"threshold", kVerifyThreshold},
                {"pass", out.pass}};
  return out;
}

std::vector<SolutionSpec> expand_family(Family f, const Options& o) {
  std::vector<SolutionSpec> specs;
  const std::vector<double> ms = ignores_modulus(f) ? std::vector<double>{1.0} : kModulusGrid;
  const std::vector<double> betas =
      f == Family::kdv_cn2_sncn ? std::vector<double>{0.0, 0.3, -0.3} : std::vector<double>{0.0};
  const std::vector<Sign> branches = uses_branch(f) ? std::vector<Sign>{Sign::plus, Sign::minus}
                                                    : std::vector<Sign>{Sign::plus};
  const std::vector<Sign> amps = uses_amp_sign(f) ? std::vector<Sign>{Sign::plus, Sign::minus}
                                                  : std::vector<Sign>{Sign::plus};
  for (double m : ms) {
    for (double beta : betas) {
      for (Sign b : branches) {
        for (Sign a : amps) {
          SolutionSpec s;
          s.family = f;
          s.alpha = o.alpha;
          s.m = m;
          s.beta = beta;
          s.branch = b;
          s.amp_sign = a;
          s.velocity = o.paper_velocities ? VelocityConvention::paper : VelocityConvention::corrected;
          specs.push_back(s);
        }
      }
    }
  }
  return specs;
}

std::optional<Equation> equation_override(const Options& o) {
  if (o.equation.empty()) return std::nullopt;
  return parse_equation(o.equation);
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto eq = equation_override(o);
  if (!o.all) {
    const auto outcome = verify_one(spec_from(o), o.n, eq);
    emit(o, out, outcome.report.dump(2) + "\n");
    return outcome.pass ? kExitOk : kExitVerificationFailed;
  }
  json results = json::array();
  int passed = 0;
  int failed = 0;
  for (Family f : kAllFamilies) {
    if (!o.family.empty() && parse_family(o.family) != f) continue;
    for (const auto& spec : expand_family(f, o)) {
      auto outcome = verify_one(spec, o.n, eq);
      (outcome.pass ? passed : failed) += 1;
      results.push_back(std::move(outcome.report));
    }
  }
  const json doc = {{"results", results}, {"passed", passed}, {"failed", failed}};
  emit(o, out, doc.dump(2) + "\n");
  return failed == 0 ? kExitOk : kExitVerificationFailed;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  std::vector<Family> families;
  for (Family f : kAllFamilies) {
    if (o.family.empty() || parse_family(o.family) == f) families.push_back(f);
  }
  const auto eq = equation_override(o);
  // One task per family; rows are concatenated in catalog order.
  std::vector<std::future<std::pair<std::string, bool>>> tasks;
  for (Family f : families) {
    tasks.push_back(std::async(std::launch::async, [f, &o, eq] {
      std::ostringstream rows;
      bool ok = true;
      for (const auto& spec : expand_family(f, o)) {
        const auto params = resolve(spec);
        const Equation e = eq.value_or(params.equation);
        const auto profile = sample_profile(spec, natural_grid(spec, o.n == 0 ? 256 : o.n));
        const auto r = traveling_residual(profile, params.c, e);
        const bool pass = r.relative < kVerifyThreshold;
        ok = ok && pass;
        rows << family_name(f) << ',' << format_real(spec.m) << ','
             << static_cast<int>(spec.branch) << ',' << static_cast<int>(spec.amp_sign) << ','
             << format_real(spec.beta) << ',' << format_real(params.c) << ','
             << format_real(r.relative) << ',' << format_real(r.sup_norm) << ','
             << format_real(r.l2_norm) << ',' << (pass ? 1 : 0) << '\n';
      }
      return std::make_pair(rows.str(), ok);
    }));
  }
  std::string csv = "family,m,branch,amp_sign,beta,c,relative,sup_norm,l2_norm,pass\n";
  bool all_ok = true;
  for (auto& t : tasks) {
    auto [rows, ok] = t.get();
    csv += rows;
    all_ok = all_ok && ok;
  }
  emit(o, out, csv);
  return all_ok ? kExitOk : kExitVerificationFailed;
}

int cmd_evolve(const Options& o, std::ostream& out, std::ostream& err) {
  const auto spec = spec_from(o);
  const auto params = resolve(spec);
  EvolutionConfig cfg;
  cfg.n_modes = o.n == 0 ? 1024 : o.n;
  cfg.t_end = o.t_end;
  cfg.dt = o.dt;
  cfg.equation = equation_override(o).value_or(params.equation);
  if (o.domain > 0.0) {
    cfg.domain_length = o.domain;
  } else if (const auto p = natural_period(spec)) {
    cfg.domain_length = *p / spec.alpha;
  } else {
    cfg.domain_length = 40.0 * std::acos(-1.0) / spec.alpha;
  }
  if (const double mismatch = period_mismatch(spec, cfg.domain_length); mismatch > 1e-9) {
    err << "warning: domain length " << cfg.domain_length
        << " is not an integer number of periods (mismatch " << mismatch << ")\n";
  }
  const auto u0 = initial_field(spec, cfg.domain_length, cfg.n_modes);
  const auto result = evolve(u0, cfg, spec);

  json summary = to_json(result, cfg);
  summary["spec"] = to_json(spec);
  summary["resolved"] = to_json(params);
  if (!o.out.empty()) {
    std::ostringstream csv;
    write_snapshots_csv(csv, result);
    emit(o, out, csv.str());
  }
  out << summary.dump(2) << "\n";
  return kExitOk;
}

SchrodingerProblem spectrum_problem(const Options& o) {
  if (!(o.alpha > 0.0)) throw DomainError("alpha must be positive");
  const double half = o.L > 0.0 ? o.L : 25.0 / o.alpha;
  const std::size_t n = o.n == 0 ? 2000 : o.n;
  const Sign branch = parse_sign(o.branch);
  if (o.potential == "sech2") return {sech2_well(o.strength, o.alpha), half, n};
  if (o.potential == "complex-scarf") return {complex_scarf(o.alpha, branch), half, n};
  if (o.potential == "susy-minus" || o.potential == "susy-plus") {
    const Grid grid = Grid::truncated(-half, half, n + 2);
    std::vector<cplx> w(grid.size);
    const double b = sign_value(branch);
    for (std::size_t i = 0; i < w.size(); ++i) {
      const double x = o.alpha * grid.coordinate(i);
      w[i] = 0.5 * o.alpha * cplx(std::tanh(x), b / std::cosh(x));
    }
    const auto [minus, plus] = susy_pair({SampledProfile(grid, std::move(w))});
    auto problem = SchrodingerProblem::from_profile(o.potential == "susy-minus" ? minus : plus);
    problem.n_points = n;
    return problem;
  }
  throw UsageError("unknown potential '" + o.potential +
                   "' (expected sech2, complex-scarf, susy-minus, susy-plus)");
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const auto problem = spectrum_problem(o);
  const auto report = bound_states(problem);
  json doc = to_json(report);
  doc["potential"] = o.potential;
  doc["alpha"] = o.alpha;
  doc["L"] = problem.half_width;
  doc["n"] = problem.n_points;
  emit(o, out, doc.dump(2) + "\n");
  return report.converged ? kExitOk : kExitVerificationFailed;
}

std::string figure_csv(int id, double alpha, bool flip_sign) {
  static constexpr std::array<Family, 4> kFigures = {Family::kdv_cn2_sndn, Family::kdv_cn2_sncn,
                                                     Family::mkdv_sn_cn, Family::mkdv_sn_dn};
  if (id < 1 || id > 4) throw UsageError("--id must be 1, 2, 3 or 4");
  const Family family = kFigures[static_cast<std::size_t>(id - 1)];
  const Grid grid = Grid::truncated(-8.0, 8.0, 801);

  std::ostringstream csv;
  csv << "m,zeta,re,im,intensity_superposed,intensity_fundamental,intensity_subtracted\n";
  for (double m : {1.0, 0.25}) {
    SolutionSpec plus{family, alpha, m};
    SolutionSpec minus = plus;
    minus.branch = Sign::minus;
    for (std::size_t i = 0; i < grid.size; ++i) {
      const double zeta = grid.coordinate(i);
      cplx a = eval_profile(plus, zeta);
      cplx b = eval_profile(minus, zeta);
      if (flip_sign) {
        a = {-a.real(), a.imag()};
        b = {-b.real(), b.imag()};
      }
      csv << format_real(m) << ',' << format_real(zeta) << ',' << format_real(a.real()) << ','
          << format_real(a.imag()) << ',' << format_real(std::norm(a)) << ','
          << format_real(std::norm(a + b)) << ',' << format_real(std::norm(a - b)) << '\n';
    }
  }
  return csv.str();
}

int cmd_figure(const Options& o, std::ostream& out) {
  emit(o, out, figure_csv(o.id, o.alpha, o.flip_sign));
  return kExitOk;
}

json errata_report() {
  json velocity = json::array();
  for (double m : {0.25, 0.5, 0.75}) {
    SolutionSpec spec{Family::mkdv_sn, 1.0, m};
    const auto profile = sample_profile(spec, natural_grid(spec));
    spec.velocity = VelocityConvention::paper;
    const double c_paper = resolve(spec).c;
    spec.velocity = VelocityConvention::corrected;
    const double c_fixed = resolve(spec).c;
    const auto scan = velocity_scan(profile, Equation::mkdv_defocusing, -30.0, 10.0, 81);
    velocity.push_back({{"m", m},
                        {"c_paper", c_paper},
                        {"relative_paper", traveling_residual(profile, c_paper, Equation::mkdv_defocusing).relative},
                        {"c_corrected", c_fixed},
                        {"relative_corrected", traveling_residual(profile, c_fixed, Equation::mkdv_defocusing).relative},
                        {"c_best_scan", scan.c_best}});
  }

  const SolutionSpec fig1{Family::kdv_cn2_sndn, 1.0, 1.0};
  const json sign = {{"A_text", resolve(fig1).A},
                     {"u0_text", eval_profile(fig1, 0.0).real()},
                     {"u0_caption", -eval_profile(fig1, 0.0).real()},
                     {"residual_text", traveling_residual(sample_profile(fig1, natural_grid(fig1)),
                                                          resolve(fig1).c, Equation::kdv).relative},
                     {"note", "caption curve cn^2 + i sn dn is the text solution with A negated; "
                              "use figure --flip-sign to reproduce it"}};

  const auto scarf = bound_states({complex_scarf(1.0), 25.0, 2000});
  const auto fundamental = bound_states({sech2_well(2.0), 25.0, 2000});
  const auto matched = bound_states({sech2_well(0.75), 25.0, 2000});
  const auto vs_fundamental = isospectral_check(scarf, fundamental, 2e-3);
  const auto vs_matched = isospectral_check(scarf, matched, 2e-3);
  const json iso = {{"complex_scarf", to_json(scarf)},
                    {"minus_2_sech2", to_json(fundamental)},
                    {"minus_3_4_sech2", to_json(matched)},
                    {"isospectral_to_minus_2_sech2", vs_fundamental.isospectral},
                    {"isospectral_to_minus_3_4_sech2", vs_matched.isospectral}};

  return {{"mkdv_sn_velocity", velocity},
          {"fig1_sign_convention", sign},
          {"scarf_isospectral_partner", iso}};
}

int cmd_errata(const Options& o, std::ostream& out) {
  emit(o, out, errata_report().dump(2) + "\n");
  return kExitOk;
}

void add_spec_options(CLI::App* sub, Options& o) {
  sub->add_option("--family", o.family, "solution family (kebab-case)");
  sub->add_option("--m", o.m, "elliptic parameter m = k^2");
  sub->add_option("--alpha", o.alpha, "inverse length scale");
  sub->add_option("--beta", o.beta, "Galilean offset (kdv-cn2-sncn)");
  sub->add_option("--branch", o.branch, "sign of the B amplitude (+/-)");
  sub->add_option("--amp-sign", o.amp_sign, "sign of the A amplitude for mKdV (+/-)");
  sub->add_option("--equation", o.equation, "kdv | mkdv-defocusing | mkdv-focusing");
  sub->add_flag("--paper-velocities", o.paper_velocities, "use the velocities as printed");
}

bool truthy(const std::string& v) {
  return v == "1" || v == "true" || v == "yes" || v == "on";
}

// Config entries go right after the subcommand so explicit flags (parsed
// later, TakeLast) win.
std::vector<std::string> inject_config(const std::vector<std::string>& args, CLI::App& app) {
  if (args.empty()) return args;
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  CLI::App* sub = app.get_subcommand_no_throw(args[0]);
  if (sub == nullptr) return args;

  std::vector<std::string> injected;
  for (const auto& [key, value] : read_config(path)) {
    const CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr || key == "config") {
      throw UsageError("unknown config key '" + key + "' for " + args[0]);
    }
    if (opt->get_expected_min() == 0) {
      if (truthy(value)) injected.push_back("--" + key);
    } else {
      injected.push_back("--" + key + "=" + value);
    }
  }
  std::vector<std::string> out{args[0]};
  out.insert(out.end(), injected.begin(), injected.end());
  out.insert(out.end(), args.begin() + 1, args.end());
  return out;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return std::string{};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return entries;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"kdvlab: complex KdV/mKdV traveling waves, checked numerically"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "check a family against the traveling-wave ODE");
  add_spec_options(verify, o);
  verify->add_option("--n", o.n, "samples per period (periodic grids)");
  verify->add_flag("--all", o.all, "every family on the standard m grid");

  auto* sweep = app.add_subcommand("sweep", "residual table over the standard m grid (CSV)");
  add_spec_options(sweep, o);
  sweep->add_option("--n", o.n, "samples per period");

  auto* evolve_cmd = app.add_subcommand("evolve", "pseudospectral time integration");
  add_spec_options(evolve_cmd, o);
  evolve_cmd->add_option("--n", o.n, "Fourier modes (power of two)");
  evolve_cmd->add_option("--dt", o.dt, "time step (default from nonlinear CFL)");
  evolve_cmd->add_option("--t-end", o.t_end, "final time");
  evolve_cmd->add_option("--domain", o.domain, "periodic domain length in x");

  auto* spectrum = app.add_subcommand("spectrum", "bound states of -d^2/dx^2 + V");
  spectrum->add_option("--potential", o.potential, "sech2 | complex-scarf | susy-minus | susy-plus");
  spectrum->add_option("--alpha", o.alpha, "inverse length scale");
  spectrum->add_option("--branch", o.branch, "sign of the imaginary part (+/-)");
  spectrum->add_option("--strength", o.strength, "depth s of -s alpha^2 sech^2 (sech2 only)");
  spectrum->add_option("--L", o.L, "half width of the Dirichlet box (default 25/alpha)");
  spectrum->add_option("--n", o.n, "interior grid points");

  auto* figure = app.add_subcommand("figure", "figure data (CSV)");
  figure->add_option("--id", o.id, "figure number 1-4")->required();
  figure->add_option("--alpha", o.alpha, "inverse length scale");
  figure->add_flag("--flip-sign", o.flip_sign, "negate the real part (caption convention)");

  auto* errata = app.add_subcommand("errata", "consistency checks of the printed formulas");

  for (auto* sub : {verify, sweep, evolve_cmd, spectrum, figure, errata}) {
    sub->add_option("--out", o.out, "output file (default stdout)");
    sub->add_option("--config", o.config, "flat key=value config file");
  }

  try {
    auto argv = inject_config(args, app);
    std::reverse(argv.begin(), argv.end());
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(o, out);
    if (*sweep) return cmd_sweep(o, out);
    if (*evolve_cmd) return cmd_evolve(o, out, err);
    if (*spectrum) return cmd_spectrum(o, out);
    if (*figure) return cmd_figure(o, out);
    if (*errata) return cmd_errata(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SpecError& e) {
    err << "invalid spec: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PoleError& e) {
    err << "pole: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitUsage;
}

}  // namespace kdvlab::cli
