#include "kdvlab/report.hpp"

#include <cstdio>

namespace kdvlab {

using nlohmann::json;

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return buf;
}

json to_json(const SolutionSpec& spec) {
  return {{"family", family_name(spec.family)},
          {"alpha", spec.alpha},
          {"m", spec.m},
          {"beta", spec.beta},
          {"branch", static_cast<int>(spec.branch)},
          {"amp_sign", static_cast<int>(spec.amp_sign)},
          {"velocity_convention", spec.velocity == VelocityConvention::paper ? "paper" : "corrected"}};
}

json to_json(const ResolvedParams& p) {
  return {{"A", p.A}, {"B", p.B}, {"c", p.c}, {"offset", p.offset},
          {"equation", equation_name(p.equation)}};
}

json to_json(const ResidualReport& r) {
  json mask = nullptr;
  if (r.mask > 0.0) mask = {{"pole_radius", r.mask}};
  return {{"sup_norm", r.sup_norm},
          {"l2_norm", r.l2_norm},
          {"relative", r.relative},
          {"c_used", r.c_used},
          {"mask", mask}};
}

json to_json(const SymmetryClass& s) {
  return {{"class", symmetry_name(s.tag)}, {"deviation", s.deviation}};
}

json to_json(const EigenReport& r) {
  json states = json::array();
  for (const auto& e : r.bound_states) states.push_back({{"re", e.real()}, {"im", e.imag()}});
  json shooting = json::array();
  for (const auto& e : r.shooting) {
    if (e) {
      shooting.push_back({{"re", e->real()}, {"im", e->imag()}});
    } else {
      shooting.push_back(nullptr);
    }
  }
  return {{"bound_states", states}, {"V_inf", r.v_inf},     {"converged", r.converged},
          {"method", r.method},     {"max_imag", r.max_imag}, {"shooting", shooting},
          {"notes", r.notes}};
}

json to_json(const IsospectralReport& r) {
  auto pairs = json::array();
  for (const auto& [a, b] : r.matched) {
    pairs.push_back({{"a", {{"re", a.real()}, {"im", a.imag()}}}, {"b", {{"re", b.real()}, {"im", b.imag()}}}});
  }
  auto levels = [](const std::vector<cplx>& v) {
    auto out = json::array();
    for (const auto& e : v) out.push_back({{"re", e.real()}, {"im", e.imag()}});
    return out;
  };
  return {{"matched", pairs},
          {"unmatched_a", levels(r.unmatched_a)},
          {"unmatched_b", levels(r.unmatched_b)},
          {"max_delta", r.max_delta},
          {"isospectral", r.isospectral},
          {"both_converged", r.both_converged}};
}

json to_json(const EvolutionResult& r, const EvolutionConfig& cfg) {
  auto cx = [](cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; };
  json out = {
      {"config",
       {{"n_modes", cfg.n_modes},
        {"domain_length", cfg.domain_length},
        {"dt", r.dt_used},
        {"t_end", cfg.t_end},
        {"equation", equation_name(cfg.equation)},
        {"dealias", cfg.dealias},
        {"steps", r.steps}}},
      {"drift", {{"I1", r.drift_i1}, {"I2", r.drift_i2}, {"I3", r.drift_i3}}},
      {"initial_invariants", {{"I1", cx(r.i1_initial)}, {"I2", cx(r.i2_initial)}, {"I3", cx(r.i3_initial)}}},
  };
  if (r.has_reference) {
    out["error"] = {{"l2", r.error_l2}, {"sup", r.error_sup}};
  } else {
    out["error"] = nullptr;
  }
  return out;
}

void write_snapshots_csv(std::ostream& out, const EvolutionResult& result) {
  out << "t,x,re_u,im_u,intensity\n";
  for (const auto& snap : result.snapshots) {
    const auto& g = snap.field.grid();
    for (std::size_t i = 0; i < snap.field.size(); ++i) {
      const cplx u = snap.field[i];
      out << format_real(snap.t) << ',' << format_real(g.coordinate(i)) << ','
          << format_real(u.real()) << ',' << format_real(u.imag()) << ','
          << format_real(std::norm(u)) << '\n';
    }
  }
}

}  // namespace kdvlab
