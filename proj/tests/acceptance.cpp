#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "hotspots/io.hpp"
#include "hotspots/verify.hpp"

using namespace hotspots;

namespace {

constexpr double pi = std::numbers::pi;

struct Criterion {
  bool ok = true;
  std::vector<std::string> details;

  void check(bool cond, const std::string& what) {
    details.push_back(std::string(cond ? "ok   " : "FAIL ") + what);
    ok = ok && cond;
  }
  void outcome(const VerificationOutcome& o) {
    std::ostringstream s;
    s << o.claim << " " << o.domain << " [";
    for (std::size_t i = 0; i < o.params.size(); ++i) s << (i ? "," : "") << format_number(o.params[i]);
    s << "] " << status_name(o.status);
    check(o.status == Status::pass, s.str());
    if (o.status != Status::pass)
      for (const auto& n : o.notes) details.push_back("       " + n);
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------

void rectangle_oracle(Criterion& c) {
  struct Case {
    std::string name;
    DomainSpec spec;
    int index;
    double exact;
  };
  const DomainSpec R = build_rectangle(2, 1);
  for (const Case& k : {Case{"2x1 Neumann mu2", R, 1, pi * pi / 4},
                        Case{"2x1 Dirichlet on x = 0, lambda1", with_dirichlet(R, {4}), 0, pi * pi / 16}}) {
    const auto t0 = std::chrono::steady_clock::now();
    Ladder lad(k.spec, k.index + 1);
    const double v = lad.value(k.index).value;
    const double t = seconds_since(t0);
    const double rel = std::abs(v - k.exact) / k.exact;
    c.check(rel <= 1e-3 && lad.levels().size() == 3,
            k.name + ": " + format_number(v) + " relative error " + format_number(rel));
    c.check(t <= 10.0, k.name + ": " + format_number(t) + " s");
  }
}

void mainthm_campaign(Criterion& c) {
  std::vector<std::function<VerificationOutcome()>> tasks;
  tasks.push_back([] { return check_mainthm({1, 1, 1, 1}); });
  for (const LParams& p : random_lparams(20)) tasks.push_back([p] { return check_mainthm(p); });
  for (const auto& o : run_parallel(tasks, default_jobs())) c.outcome(o);
}

void strict_inequalities(Criterion& c) {
  const LParams unit{1, 1, 1, 1};
  for (const auto& o : ineq_battery(unit, strictineq_configs())) c.outcome(o);
  for (const auto& o : ineq_battery(unit, inclusion_chain_configs())) c.outcome(o);
}

void min_inequalities(Criterion& c) {
  std::vector<std::function<VerificationOutcome()>> tasks;
  const auto params = random_lparams(20);
  std::vector<std::vector<VerificationOutcome>> groups(params.size());
  for (std::size_t i = 0; i < params.size(); ++i) {
    const LParams p = params[i];
    tasks.push_back([p, i, &groups] {
      groups[i] = ineq_battery(p, min_ineq_configs());
      VerificationOutcome o;
      o.claim = "min-ineq-group";
      for (const auto& g : groups[i]) o.status = worst(o.status, g.status);
      return o;
    });
  }
  const auto summary = run_parallel(tasks, default_jobs());
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (groups[i].empty()) c.outcome(summary[i]);
    for (const auto& o : groups[i]) c.outcome(o);
  }
}

void thin_regime(Criterion& c) {
  const LParams thin{0.2, 5, 0.2, 0.2};
  const VerificationOutcome o = sweep_crossing({1, 1, 1, 1}, thin, 1);
  c.outcome(o);
  const auto& d = o.details;
  if (d.contains("to") && d.contains("sandwich")) {
    const double mu2 = d["to"]["mu2"]["value"], l1 = d["to"]["lambda1"]["value"];
    c.check(mu2 < l1, "mu2 " + format_number(mu2) + " < lambda1[e1] " + format_number(l1));
    c.check(l1 >= std::pow(pi / 0.8, 2), "lambda1[e1] >= (pi/0.8)^2 = " + format_number(std::pow(pi / 0.8, 2)));
    c.check(mu2 <= std::pow(0.3 * pi, 2), "mu2 <= (3 pi / 10)^2 = " + format_number(std::pow(0.3 * pi, 2)));
  } else {
    c.check(false, "sweep produced no endpoint data");
  }
  if (d.contains("bracket")) {
    const double w = d["bracket"]["width"];
    c.check(w <= 1e-2, "sign-change bracket width " + format_number(w));
  } else {
    c.check(false, "no sign-change bracket");
  }
}

void swiss_surface(Criterion& c) { c.outcome(check_swiss_surface({1, 1, 1, 1})); }

void rectangle_mixed(Criterion& c) {
  c.outcome(check_rectangle_mixed(2, 1, 0.5, 1.5));
  c.outcome(check_rectangle_mixed(2, 1, 0.0, 1.0));
}

void degenerate_counterexample(Criterion& c) { c.outcome(check_degenerate_counterexample(1, 1, 1)); }

void corner_analytics(Criterion& c) {
  const DomainSpec L = build_L({1, 1, 1, 1});
  const int rv = L.reflex_vertices.at(0);
  const Point v = L.vertices[rv];
  GradingOptions uniform;
  uniform.layers = 0;
  const auto m = std::make_shared<const TensorMesh>(build_mesh(L, 0.025, uniform));
  const auto theta = [v](Point p) {
    double t = std::atan2(p.y - v.y, p.x - v.x) - pi / 2;
    while (t < 0) t += 2 * pi;
    return t;
  };
  const FieldSample s1 = FieldSample::from_function(
      m, [&](Point p) { return std::pow(distance(p, v), 2.0 / 3.0) * std::cos(2 * theta(p) / 3); });
  const double c1 = corner_fit(s1, L, rv, CornerFamily::neumann).coefficients.at(1);
  c.check(std::abs(c1 - 1.0) <= 1e-2, "synthetic r^(2/3) cos(2 theta/3): c1 = " + format_number(c1));

  Ladder lad(L, 2);
  const FieldSample u = normalize_sign(lad.field(1), L, SignMode::second_neumann).field;
  const CornerFit fit = corner_fit(u, L, rv, CornerFamily::neumann);
  c.check(std::abs(fit.coefficients.at(1)) > 10 * fit.residual,
          "unit L: |c1| = " + format_number(std::abs(fit.coefficients[1])) + ", residual " +
              format_number(fit.residual));

  const DomainSpec D = with_dirichlet(L, {4});
  const FieldSample s3 = FieldSample::from_function(
      m, [&](Point p) { return std::pow(distance(p, v), 1.0 / 3.0) * std::sin(theta(p) / 3); });
  const double a0 = corner_fit(s3, D, rv, CornerFamily::mixed).coefficients.at(0);
  c.check(std::abs(a0 - 1.0) <= 1e-2, "synthetic r^(1/3) sin(theta/3): a0 = " + format_number(a0));
}

void ltiled_campaign(Criterion& c) {
  std::vector<std::function<VerificationOutcome()>> tasks;
  for (const LParams& p : {LParams{1, 1, 1, 1}, random_lparams(1, 0x7111ED)[0]})
    for (DomainKind k : {DomainKind::T, DomainKind::U, DomainKind::O, DomainKind::H, DomainKind::cross})
      tasks.push_back([p, k] { return check_ltiled(p, k); });
  for (const auto& o : run_parallel(tasks, default_jobs())) c.outcome(o);
}

void solver_hygiene(Criterion& c) {
  const LParams unit{1, 1, 1, 1}, skew{1, 2, 3, 4};
  const std::vector<std::pair<std::string, DomainSpec>> catalog{
      {"rect 2x1", build_rectangle(2, 1)},
      {"L(1,1,1,1)", build_L(unit)},
      {"L(1,2,3,4)", build_L(skew)},
      {"L(1,1,1,1) D e1", with_dirichlet(build_L(unit), {1})},
      {"L(1,1,1,1) D e1,e3,e5", with_dirichlet(build_L(unit), {1, 3, 5})},
      {"T", build_tiled(unit, DomainKind::T)},
      {"U", build_tiled(unit, DomainKind::U)},
      {"O", build_tiled(unit, DomainKind::O)},
      {"H", build_tiled(unit, DomainKind::H)},
      {"cross", build_tiled(unit, DomainKind::cross)},
      {"cross surface", build_swiss_cross_surface(unit)},
  };
  for (const auto& [name, d] : catalog) {
    for (double scale : {1.0, 2.0}) {
      const TensorMesh m = build_mesh(d, scale * auto_h0(d));
      const Assembled a = assemble(m, d);
      const int n = a.dofs.free_count();
      if (n > 3000) continue;
      const int k = std::min(6, n);
      const Spectrum it = smallest_eigenpairs(a.K, a.M, k);
      const Spectrum dense = dense_oracle(a.K, a.M);
      double worst = 0.0;
      for (int i = 0; i < k; ++i)
        worst = std::max(worst, std::abs(it.lambda(i) - dense.lambda(i)) / std::max(1.0, dense.lambda(i)));
      c.check(worst <= 1e-8, name + " (" + std::to_string(n) + " DOFs): iterative vs dense " + format_number(worst));
    }
  }

  BcAssignment piece;
  piece.others = BcKind::neumann;
  piece.dirichlet_segments.push_back({{0.5, 0.0}, {1.5, 0.0}});
  const std::vector<std::pair<std::string, DomainSpec>> rects{
      {"rect 2x1", build_rectangle(2, 1)},
      {"rect 1x1", build_rectangle(1, 1)},
      {"rect 3x0.5", build_rectangle(3, 0.5)},
      {"rect 2x1 D e4", with_dirichlet(build_rectangle(2, 1), {4})},
      {"rect 2x1 D (0.5,1.5)x{0}", assign_bc(build_rectangle(2, 1), piece)},
  };
  for (const auto& [name, d] : rects) {
    LadderOptions o;
    o.levels = 4;
    Ladder lad(d, 4, o);
    bool mono = true;
    const auto& lv = lad.levels();
    for (std::size_t l = 1; l < lv.size(); ++l)
      for (int i = 0; i < 4; ++i)
        mono = mono && lv[l].spectrum.lambda(i) <= lv[l - 1].spectrum.lambda(i) + 1e-10 * std::max(1.0, lv[l - 1].spectrum.lambda(i));
    c.check(mono, name + ": eigenvalues non-increasing over 4 nested levels");
  }

  const auto campaign = [](int jobs) {
    std::vector<std::function<VerificationOutcome()>> tasks{
        [] { return check_mainthm({1, 1, 1, 1}); },
        [] { return check_rectangle_mixed(2, 1, 0.5, 1.5); },
        [] { return check_mixedthm({1, 1, 2, 2.5}, {1, 5}); },
        [] { return check_ltiled({1, 1, 1, 1}, DomainKind::U); },
    };
    std::ostringstream os;
    write_summary_csv(os, run_parallel(tasks, jobs));
    return os.str();
  };
  const std::string first = campaign(1), second = campaign(1), threaded = campaign(2);
  c.check(first == second, "re-run CSV summary is byte-identical");
  c.check(first == threaded, "CSV summary with 2 worker threads is byte-identical");
}

}  // namespace

int main() {
  struct Entry {
    int id;
    std::string title;
    std::function<void(Criterion&)> run;
  };
  const std::vector<Entry> entries{
      {1, "rectangle spectrum oracle", rectangle_oracle},
      {2, "L-shape second Neumann eigenfunction campaign", mainthm_campaign},
      {3, "mixed eigenvalue strict inequalities on the unit L", strict_inequalities},
      {4, "min-inequalities on random L's", min_inequalities},
      {5, "thin-arm regime and crossing sweep", thin_regime},
      {6, "Swiss cross surface", swiss_surface},
      {7, "rectangle with partial Dirichlet bottom edge", rectangle_mixed},
      {8, "separable degenerate counterexample", degenerate_counterexample},
      {9, "corner expansions", corner_analytics},
      {10, "L-tiled domains", ltiled_campaign},
      {11, "solver hygiene", solver_hygiene},
  };
  int failures = 0;
  for (const Entry& e : entries) {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      e.run(c);
    } catch (const std::exception& ex) {
      c.check(false, std::string("exception: ") + ex.what());
    }
    for (const auto& d : c.details) std::cout << "    " << d << "\n";
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.1f", seconds_since(t0));
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << e.id << ": " << e.title << " (" << elapsed << " s)"
              << std::endl;
    failures += !c.ok;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
