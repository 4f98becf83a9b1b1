#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hotspots/analysis.hpp"
#include "hotspots/error.hpp"
#include "hotspots/io.hpp"
#include "hotspots/verify.hpp"

namespace hotspots::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kUsageError = 3;
constexpr int kRuntimeError = 4;

json quantity_json_value(const Quantity& q) { return {{"value", q.value}, {"error", q.error}}; }

// Everything a run depends on; persisted as config.json next to the reports.
struct RunConfig {
  std::string command;
  json domain;  // domain document, empty when the command does not take one
  double target_h = 0.0;
  int levels = 3;
  GradingOptions grading;
  int k = 4;
  double tol = 1e-8;
  std::uint64_t seed = 0x5EED;
  std::optional<double> rho;
  std::vector<double> fit_radii;
  std::string out = "hotspots_out";
  int jobs = 1;

  // command-specific
  std::string claim;
  std::vector<double> params;
  std::vector<double> from, to;
  int steps = 20;
  int count = 0;
  std::string kind;
  std::vector<int> dirichlet;
  std::vector<double> interval;
  std::vector<double> a3_values{1, 2, 4, 8};
  int index = -1;
  std::string what = "all";

  json to_json() const {
    json j{{"command", command},
           {"mesh", {{"target_h", target_h}, {"levels", levels},
                     {"grading", {{"ratio", grading.ratio}, {"layers", grading.layers}}}}},
           {"solver", {{"k", k}, {"tol", tol}, {"seed", seed}}},
           {"analysis", {{"fit_radii", fit_radii}}},
           {"out", out},
           {"jobs", jobs}};
    if (!domain.is_null()) j["domain"] = domain;
    if (rho) j["analysis"]["rho"] = *rho;
    if (!claim.empty()) j["claim"] = claim;
    if (!params.empty()) j["params"] = params;
    if (!from.empty()) j["from"] = from;
    if (!to.empty()) j["to"] = to;
    j["steps"] = steps;
    j["count"] = count;
    if (!kind.empty()) j["kind"] = kind;
    if (!dirichlet.empty()) j["dirichlet"] = dirichlet;
    if (!interval.empty()) j["interval"] = interval;
    j["a3"] = a3_values;
    j["index"] = index;
    j["what"] = what;
    return j;
  }

  LadderOptions ladder() const {
    LadderOptions o;
    o.levels = levels;
    o.h0 = target_h;
    o.grading = grading;
    o.solver.tol = tol;
    o.solver.seed = seed;
    return o;
  }
};

template <class T>
T field(const json& doc, const std::string& path, const char* key, T fallback) {
  if (!doc.contains(key)) return fallback;
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(path + "." + key + ": wrong type");
  }
}

int line_of(const std::string& text, std::size_t byte) {
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + std::min(byte, text.size()), '\n'));
}

void load_config(const std::string& file, RunConfig& c) {
  std::ifstream in(file);
  if (!in) throw ConfigError(file + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(file + ":" + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  if (!doc.is_object()) throw ConfigError(file + ": top level must be an object");
  if (doc.contains("domain")) {
    domain_from_json(doc["domain"]);  // validate early for field diagnostics
    c.domain = doc["domain"];
  }
  if (doc.contains("mesh")) {
    const json& m = doc["mesh"];
    c.target_h = field(m, "mesh", "target_h", c.target_h);
    c.levels = field(m, "mesh", "levels", c.levels);
    if (m.contains("grading")) {
      c.grading.ratio = field(m["grading"], "mesh.grading", "ratio", c.grading.ratio);
      c.grading.layers = field(m["grading"], "mesh.grading", "layers", c.grading.layers);
    }
  }
  if (doc.contains("solver")) {
    const json& s = doc["solver"];
    c.k = field(s, "solver", "k", c.k);
    c.tol = field(s, "solver", "tol", c.tol);
    c.seed = field(s, "solver", "seed", c.seed);
  }
  if (doc.contains("analysis")) {
    const json& a = doc["analysis"];
    if (a.contains("rho")) c.rho = field(a, "analysis", "rho", 0.0);
    c.fit_radii = field(a, "analysis", "fit_radii", c.fit_radii);
  }
  c.out = field(doc, "config", "out", c.out);
  c.jobs = field(doc, "config", "jobs", c.jobs);
  c.claim = field(doc, "config", "claim", c.claim);
  c.params = field(doc, "config", "params", c.params);
  c.from = field(doc, "config", "from", c.from);
  c.to = field(doc, "config", "to", c.to);
  c.steps = field(doc, "config", "steps", c.steps);
  c.count = field(doc, "config", "count", c.count);
  c.kind = field(doc, "config", "kind", c.kind);
  c.dirichlet = field(doc, "config", "dirichlet", c.dirichlet);
  c.interval = field(doc, "config", "interval", c.interval);
  c.a3_values = field(doc, "config", "a3", c.a3_values);
  c.index = field(doc, "config", "index", c.index);
  c.what = field(doc, "config", "what", c.what);
}

LParams lparams(const std::vector<double>& p, const std::string& what) {
  if (p.size() != 4) throw ConfigError(what + ": expected four lengths a1,a2,a3,a4");
  LParams l{p[0], p[1], p[2], p[3]};
  l.validate();
  return l;
}

DomainSpec domain_of(const RunConfig& c) {
  if (c.domain.is_null()) throw ConfigError("a domain is required (--domain or config \"domain\")");
  return domain_from_json(c.domain);
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw Error("cannot write " + p.string());
  f << text;
}

fs::path prepare_out(const RunConfig& c) {
  const fs::path dir(c.out);
  fs::create_directories(dir);
  write_text(dir / "config.json", c.to_json().dump(2) + "\n");
  return dir;
}

int exit_code(Status s) {
  switch (s) {
    case Status::pass: return 0;
    case Status::fail: return 1;
    default: return 2;
  }
}

int report(const RunConfig& c, const std::string& name, const std::vector<VerificationOutcome>& outcomes,
           std::ostream& out) {
  const fs::path dir = prepare_out(c);
  const fs::path jp = dir / (name + ".json"), cp = dir / (name + "_summary.csv");
  write_text(jp, campaign_json(name, outcomes).dump(2) + "\n");
  std::ostringstream csv;
  write_summary_csv(csv, outcomes);
  write_text(cp, csv.str());
  for (const auto& o : outcomes) {
    out << o.claim << " " << o.domain << " [";
    for (std::size_t i = 0; i < o.params.size(); ++i) out << (i ? "," : "") << format_number(o.params[i]);
    out << "] " << status_name(o.status) << "\n";
    for (const auto& n : o.notes) out << "  " << n << "\n";
  }
  const Status s = overall(outcomes);
  out << "overall " << status_name(s) << "\n" << "report " << jp.string() << "\n";
  return exit_code(s);
}

// ---------------------------------------------------------------------------

int cmd_solve(const RunConfig& c, std::ostream& out) {
  const DomainSpec spec = domain_of(c);
  Ladder lad(spec, c.k, c.ladder());
  json rows = json::array();
  for (int i = 0; i < c.k; ++i) {
    const Quantity q = lad.value(i);
    out << i << " " << format_number(q.value) << " +- " << format_number(q.error) << "\n";
    rows.push_back({{"index", i}, {"lambda", q.value}, {"error", q.error},
                    {"finest", lad.finest().spectrum.lambda(i)}});
  }
  const fs::path dir = prepare_out(c);
  write_text(dir / "solve.json", json{{"domain", domain_to_json(spec)}, {"dofs", lad.dof_counts()},
                                      {"eigenvalues", rows}}.dump(2) + "\n");
  return 0;
}

int cmd_analyze(const RunConfig& c, std::ostream& out) {
  const DomainSpec spec = domain_of(c);
  const bool mixed = spec.has_dirichlet();
  const int index = c.index >= 0 ? c.index : (mixed ? 0 : 1);
  Ladder lad(spec, std::max(c.k, index + 1), c.ladder());
  SignNormalization sn = normalize_sign(lad.field(index), spec, mixed ? SignMode::first_mixed : SignMode::second_neumann);
  const FieldSample& u = sn.field;
  CriticalOptions co;
  co.rho = c.rho;
  MonotonicityOptions mo;
  mo.rho = c.rho;
  const CriticalPointReport rep = critical_points(u, spec, co);
  const auto mx = monotonicity(u, spec, Axis::x, mo), my = monotonicity(u, spec, Axis::y, mo);
  const NodalSet ns = nodal_set(u, spec);

  json recs = json::array();
  for (const auto& r : rep.records) {
    recs.push_back({{"x", r.location.x}, {"y", r.location.y}, {"locus", locus_name(r.locus)},
                    {"type", critical_type_name(r.type)}, {"arcs", r.arc_count}, {"degenerate", r.degenerate}});
    out << locus_name(r.locus) << " " << critical_type_name(r.type) << " (" << format_number(r.location.x) << ", "
        << format_number(r.location.y) << ")" << (r.degenerate ? " degenerate" : "") << "\n";
  }
  auto mono = [](const MonotonicityResult& m) {
    return json{{"sign", m.sign == MonotoneSign::strictly_positive   ? "positive"
                         : m.sign == MonotoneSign::strictly_negative ? "negative"
                                                                     : "mixed"},
                {"margin", m.margin}};
  };
  json corners = json::array();
  for (int v : spec.reflex_vertices) {
    CornerFitOptions fo;
    fo.radii = c.fit_radii;
    try {
      const CornerFit f = corner_fit(u, spec, v, mixed ? CornerFamily::mixed : CornerFamily::neumann, fo);
      corners.push_back({{"vertex", v}, {"coefficients", f.coefficients}, {"residual", f.residual}});
      out << "corner v" << v << " c1 " << format_number(f.coefficients.size() > 1 ? f.coefficients[1] : 0.0)
          << " residual " << format_number(f.residual) << "\n";
    } catch (const FitError& e) {
      corners.push_back({{"vertex", v}, {"error", e.what()}});
    }
  }
  out << "lambda " << format_number(lad.value(index).value) << "\n";
  out << "nodal polylines " << ns.polylines.size() << " domains " << ns.nodal_domains << "\n";

  const fs::path dir = prepare_out(c);
  write_text(dir / "analysis.json",
             json{{"domain", domain_to_json(spec)}, {"index", index}, {"lambda", quantity_json_value(lad.value(index))},
                  {"sign_ambiguous", sn.ambiguous}, {"critical", recs}, {"rho", rep.rho},
                  {"monotone_x", mono(mx)}, {"monotone_y", mono(my)},
                  {"nodal", {{"polylines", ns.polylines.size()}, {"domains", ns.nodal_domains}, {"degenerate", ns.degenerate}}},
                  {"corners", corners}}
                     .dump(2) + "\n");
  std::ostringstream f, n;
  write_field_dump(f, u, spec);
  write_nodal_dump(n, ns);
  write_text(dir / "field.csv", f.str());
  write_text(dir / "nodal.csv", n.str());
  return 0;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const LadderOptions lo = c.ladder();
  std::vector<std::function<VerificationOutcome()>> tasks;
  const std::string& claim = c.claim;
  std::vector<LParams> points;
  if (!c.params.empty()) points.push_back(lparams(c.params, "--params"));
  if (c.count > 0)
    for (const auto& p : random_lparams(c.count, c.seed)) points.push_back(p);

  auto need_points = [&] {
    if (points.empty()) throw ConfigError("--claim " + claim + " needs --params or --count");
  };
  auto battery = [&](std::vector<IneqConfig> (*configs)()) {
    need_points();
    std::vector<VerificationOutcome> all;
    // one task per parameter point; each returns several outcomes
    std::vector<std::vector<VerificationOutcome>> per(points.size());
    std::vector<std::function<VerificationOutcome()>> t;
    for (std::size_t i = 0; i < points.size(); ++i)
      t.push_back([&, i] {
        per[i] = ineq_battery(points[i], configs(), lo);
        return VerificationOutcome{};
      });
    run_parallel(t, c.jobs);
    for (auto& v : per) all.insert(all.end(), v.begin(), v.end());
    return all;
  };

  if (claim == "mainthm") {
    need_points();
    for (const auto& p : points) tasks.push_back([p, lo] { return check_mainthm(p, lo); });
  } else if (claim == "strictineq") {
    return report(c, claim, battery(strictineq_configs), out);
  } else if (claim == "dinclusion") {
    return report(c, claim, battery(inclusion_chain_configs), out);
  } else if (claim == "min-ineq") {
    return report(c, claim, battery(min_ineq_configs), out);
  } else if (claim == "opposite-ineq") {
    return report(c, claim, battery(opposite_ineq_configs), out);
  } else if (claim == "swiss") {
    need_points();
    for (const auto& p : points) tasks.push_back([p, lo] { return check_swiss_surface(p, lo); });
  } else if (claim == "rectangle-mixed") {
    const std::vector<double> rect = c.params.empty() ? std::vector<double>{2, 1} : c.params;
    if (rect.size() != 2) throw ConfigError("--params for rectangle-mixed: a,b");
    if (c.interval.size() != 2) throw ConfigError("--interval x0,x1 is required for rectangle-mixed");
    tasks.push_back([=] { return check_rectangle_mixed(rect[0], rect[1], c.interval[0], c.interval[1], lo); });
  } else if (claim == "mixedthm") {
    need_points();
    if (c.dirichlet.empty()) throw ConfigError("--dirichlet is required for mixedthm");
    for (const auto& p : points) tasks.push_back([p, lo, d = c.dirichlet] { return check_mixedthm(p, d, lo); });
  } else if (claim == "degenerate") {
    const std::vector<double> p = c.params.empty() ? std::vector<double>{1, 1, 1} : c.params;
    if (p.size() != 3) throw ConfigError("--params for degenerate: a1,a2,a3");
    tasks.push_back([=] { return check_degenerate_counterexample(p[0], p[1], p[2], 1.05, lo); });
  } else if (claim == "ltiled") {
    need_points();
    std::vector<DomainKind> kinds;
    if (c.kind.empty() || c.kind == "all")
      kinds = {DomainKind::T, DomainKind::U, DomainKind::O, DomainKind::H, DomainKind::cross};
    else
      kinds = {kind_from_name(c.kind)};
    for (const auto& p : points)
      for (DomainKind k : kinds) tasks.push_back([p, k, lo] { return check_ltiled(p, k, lo); });
  } else {
    throw ConfigError("unknown claim \"" + claim +
                      "\" (mainthm, strictineq, dinclusion, min-ineq, opposite-ineq, swiss, rectangle-mixed, "
                      "mixedthm, degenerate, ltiled)");
  }
  return report(c, claim, run_parallel(tasks, c.jobs), out);
}

int cmd_sweep(const RunConfig& c, std::ostream& out) {
  SweepOptions so;
  so.steps = c.steps;
  so.ladder = c.ladder();
  if (c.claim == "family-e2") return report(c, c.claim, {family_sweep(c.a3_values, so.ladder)}, out);
  int edge = 0;
  if (c.claim.rfind("crossing-e", 0) == 0) edge = std::atoi(c.claim.c_str() + 10);
  if (edge < 1 || edge > 6) throw ConfigError("sweep claims: crossing-e1 .. crossing-e6, family-e2");
  const LParams from = lparams(c.from, "--from"), to = lparams(c.to, "--to");
  const VerificationOutcome o = sweep_crossing(from, to, edge, so);
  if (o.details.contains("bracket")) {
    const auto& b = o.details["bracket"];
    out << "bracket t in [" << format_number(b["t_lo"].get<double>()) << ", " << format_number(b["t_hi"].get<double>())
        << "]\n";
  }
  return report(c, c.claim, {o}, out);
}

int cmd_surface(const RunConfig& c, std::ostream& out) {
  const LParams p = lparams(c.params.empty() ? std::vector<double>{1, 1, 1, 1} : c.params, "--params");
  VerificationOutcome o = check_swiss_surface(p, c.ladder());
  out << "lambda1(S) " << format_number(o.details["lambda1_surface"]["value"].get<double>()) << "\n";
  out << "mu2(L) " << format_number(o.details["mu2_L"]["value"].get<double>()) << "\n";
  out << "cone arcs " << o.details["cone"]["arcs"].get<int>() << "\n";
  return report(c, "surface", {o}, out);
}

int cmd_export(const RunConfig& c, std::ostream& out) {
  const DomainSpec spec = domain_of(c);
  const double h = c.target_h > 0 ? c.target_h : auto_h0(spec);
  TensorMesh mesh = build_mesh(spec, h, c.grading);
  for (int l = 1; l < c.levels; ++l) mesh = refine(mesh);
  const fs::path dir = prepare_out(c);
  const bool all = c.what == "all";
  write_text(dir / "domain.json", domain_to_json(spec).dump(2) + "\n");
  if (all || c.what == "mesh") {
    std::ostringstream s;
    write_mesh_dump(s, mesh);
    write_text(dir / "mesh.csv", s.str());
  }
  const Assembled sys = assemble(mesh, spec);
  if (all || c.what == "matrices") {
    std::ostringstream k, m;
    sys.K.write_coo(k);
    sys.M.write_coo(m);
    write_text(dir / "K.coo", k.str());
    write_text(dir / "M.coo", m.str());
  }
  if (all || c.what == "field") {
    const auto sp = std::make_shared<const TensorMesh>(mesh);
    const int index = c.index >= 0 ? c.index : (spec.has_dirichlet() ? 0 : 1);
    const Spectrum s = smallest_eigenpairs(sys.K, sys.M, index + 1, c.ladder().solver);
    std::ostringstream f;
    write_field_dump(f, FieldSample::from_dofs(sp, sys.dofs, s.pairs[index].vector), spec);
    write_text(dir / "field.csv", f.str());
  }
  out << "dofs " << sys.dofs.free_count() << "\n" << "wrote " << dir.string() << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eigenfunction hot-spot experiments on L-shaped and L-tiled domains"};
  app.require_subcommand(1);
  RunConfig c;
  c.jobs = default_jobs();
  std::string config_file, domain_arg, bc_arg, params_arg, from_arg, to_arg, dirichlet_arg, interval_arg, a3_arg;
  std::optional<int> k, levels, steps, jobs, count, index;
  std::optional<double> h, tol, rho;
  std::optional<std::string> out_dir, claim, kind, what;

  auto common = [&](CLI::App* s, bool domain) {
    s->add_option("--config", config_file, "JSON run configuration; flags override its fields");
    s->add_option("--out", out_dir, "output directory");
    s->add_option("--levels", levels, "mesh levels");
    s->add_option("--target-h", h, "coarsest target cell size");
    s->add_option("--tol", tol, "eigensolver tolerance");
    s->add_option("--jobs", jobs, "worker threads (default HOTSPOTS_JOBS or 1)");
    if (domain) {
      s->add_option("--domain", domain_arg, "kind:params, e.g. rect:2,1 or L:1,1,1,1");
      s->add_option("--bc", bc_arg, "boundary conditions, e.g. all:N,e1:D");
      s->add_option("--k", k, "number of eigenpairs");
    }
  };
  CLI::App* solve = app.add_subcommand("solve", "extrapolated eigenvalues of a domain");
  common(solve, true);
  CLI::App* analyze = app.add_subcommand("analyze", "critical points, monotonicity, nodal set, corner fits");
  common(analyze, true);
  analyze->add_option("--index", index, "eigenpair index (default: 1 Neumann, 0 mixed)");
  analyze->add_option("--rho", rho, "exclusion radius around singular vertices");
  CLI::App* verify = app.add_subcommand("verify", "run a claim checker");
  common(verify, false);
  verify->add_option("--claim", claim, "claim id");
  verify->add_option("--params", params_arg, "parameter list");
  verify->add_option("--count", count, "additional seeded random L's");
  verify->add_option("--kind", kind, "tiled kind for ltiled (T, U, O, H, cross or all)");
  verify->add_option("--dirichlet", dirichlet_arg, "Dirichlet edge labels for mixedthm, e.g. 1,5");
  verify->add_option("--interval", interval_arg, "x0,x1 of the Dirichlet piece for rectangle-mixed");
  CLI::App* sweep = app.add_subcommand("sweep", "eigenvalue crossing sweeps");
  common(sweep, false);
  sweep->add_option("--claim", claim, "crossing-e1, crossing-e2 or family-e2");
  sweep->add_option("--from", from_arg, "start L parameters");
  sweep->add_option("--to", to_arg, "end L parameters");
  sweep->add_option("--steps", steps, "grid steps before bisection");
  sweep->add_option("--a3", a3_arg, "a3 values for family-e2");
  CLI::App* surface = app.add_subcommand("surface", "Swiss cross surface check");
  common(surface, false);
  surface->add_option("--params", params_arg, "tile L parameters");
  CLI::App* exp = app.add_subcommand("export", "mesh, matrices and field dumps");
  common(exp, true);
  exp->add_option("--what", what, "mesh, matrices, field or all");
  exp->add_option("--index", index, "eigenpair index for the field dump");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsageError;
  }
  try {
    if (!config_file.empty()) load_config(config_file, c);
    for (CLI::App* s : app.get_subcommands()) c.command = s->get_name();
    if (!domain_arg.empty()) {
      DomainSpec d = parse_domain_arg(domain_arg);
      if (!bc_arg.empty()) d = assign_bc(d, parse_bc_arg(bc_arg));
      c.domain = domain_to_json(d);
    } else if (!bc_arg.empty()) {
      if (c.domain.is_null()) throw ConfigError("--bc needs a domain");
      c.domain = domain_to_json(assign_bc(domain_from_json(c.domain), parse_bc_arg(bc_arg)));
    }
    if (k) c.k = *k;
    if (levels) c.levels = *levels;
    if (steps) c.steps = *steps;
    if (jobs) c.jobs = *jobs;
    if (count) c.count = *count;
    if (index) c.index = *index;
    if (h) c.target_h = *h;
    if (tol) c.tol = *tol;
    if (rho) c.rho = *rho;
    if (out_dir) c.out = *out_dir;
    if (claim) c.claim = *claim;
    if (kind) c.kind = *kind;
    if (what) c.what = *what;
    if (!params_arg.empty()) c.params = parse_number_list(params_arg);
    if (!from_arg.empty()) c.from = parse_number_list(from_arg);
    if (!to_arg.empty()) c.to = parse_number_list(to_arg);
    if (!a3_arg.empty()) c.a3_values = parse_number_list(a3_arg);
    if (!interval_arg.empty()) c.interval = parse_number_list(interval_arg);
    if (!dirichlet_arg.empty()) {
      c.dirichlet.clear();
      for (double v : parse_number_list(dirichlet_arg)) c.dirichlet.push_back(static_cast<int>(v));
    }
    if (c.k < 1) throw ConfigError("--k must be positive");
    if (c.levels < 1) throw ConfigError("--levels must be positive");
    if (c.jobs < 1) throw ConfigError("--jobs must be positive");
    if ((c.command == "verify" || c.command == "sweep") && c.claim.empty()) throw ConfigError("--claim is required");

    out.precision(12);
    if (c.command == "solve") return cmd_solve(c, out);
    if (c.command == "analyze") return cmd_analyze(c, out);
    if (c.command == "verify") return cmd_verify(c, out);
    if (c.command == "sweep") return cmd_sweep(c, out);
    if (c.command == "surface") return cmd_surface(c, out);
    return cmd_export(c, out);
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kUsageError;
  } catch (const InvalidParameter& e) {
    err << "invalid parameter: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace hotspots::cli
