#include "hotspots/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <ostream>
#include <random>
#include <set>
#include <thread>

#include "hotspots/error.hpp"
#include "hotspots/io.hpp"

namespace hotspots {

namespace {

constexpr double kPi = std::numbers::pi;

std::string join_labels(const std::vector<int>& d) {
  if (d.empty()) return "none";
  std::string s;
  for (int l : d) s += (s.empty() ? "e" : "+e") + std::to_string(l);
  return s;
}

std::string params_text(const std::vector<double>& p) {
  std::string s;
  for (double v : p) s += (s.empty() ? "" : ",") + format_number(v);
  return s;
}

VerificationOutcome make_outcome(const std::string& claim, const DomainSpec& spec) {
  VerificationOutcome out;
  out.claim = claim;
  out.params = spec.params;
  out.domain = kind_name(spec.kind);
  return out;
}

void append_levels(VerificationOutcome& out, const Ladder& l) {
  for (int n : l.dof_counts()) out.levels.push_back(n);
}

nlohmann::json quantity_json(const Quantity& q) { return {{"value", q.value}, {"error", q.error}}; }

// Images of p under the group generated by the recorded reflections.
std::vector<Point> orbit(const DomainSpec& spec, Point p) {
  std::vector<Point> pts{p};
  for (const auto& r : spec.reflections) {
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) pts.push_back(r.apply(pts[i]));
  }
  return pts;
}

bool near_any(Point p, const std::vector<Point>& pts, double tol) {
  return std::any_of(pts.begin(), pts.end(), [&](Point q) { return distance(p, q) <= tol; });
}

// Node (over used classes) where the field attains its max / min.
std::pair<Point, Point> extreme_nodes(const FieldSample& u) {
  const auto& m = u.mesh();
  double hi = -std::numeric_limits<double>::infinity(), lo = -hi;
  Point phi, plo;
  for (int raw = 0; raw < m.raw_nodes(); ++raw) {
    if (m.node_class[raw] < 0) continue;
    const double v = u.node_value(raw);
    if (v > hi) {
      hi = v;
      phi = m.node(raw);
    }
    if (v < lo) {
      lo = v;
      plo = m.node(raw);
    }
  }
  return {phi, plo};
}

nlohmann::json records_json(const CriticalPointReport& rep) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& r : rep.records)
    a.push_back({{"x", r.location.x},
                 {"y", r.location.y},
                 {"locus", locus_name(r.locus)},
                 {"type", critical_type_name(r.type)},
                 {"arcs", r.arc_count},
                 {"degenerate", r.degenerate},
                 {"glued", r.glued},
                 {"edge", r.edge_label},
                 {"vertex", r.vertex}});
  return a;
}

bool strictly(const MonotonicityResult& m) { return m.sign != MonotoneSign::mixed; }

std::string sign_text(MonotoneSign s) {
  switch (s) {
    case MonotoneSign::strictly_positive: return "positive";
    case MonotoneSign::strictly_negative: return "negative";
    case MonotoneSign::mixed: return "mixed";
  }
  return "?";
}

nlohmann::json mono_json(const MonotonicityResult& m) {
  return {{"sign", sign_text(m.sign)}, {"margin", m.margin}, {"min", m.min_value},
          {"max", m.max_value},        {"samples", m.samples}, {"unresolved", m.unresolved},
          {"violations", m.violations}};
}

bool contains_any(const std::vector<int>& v, std::initializer_list<int> labels) {
  for (int l : labels)
    if (std::find(v.begin(), v.end(), l) != v.end()) return true;
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::degenerate: return "degenerate";
    case Status::inconclusive: return "inconclusive";
    case Status::fail: return "fail";
  }
  return "?";
}

Status worst(Status a, Status b) { return static_cast<int>(a) >= static_cast<int>(b) ? a : b; }

void VerificationOutcome::require(bool ok, const std::string& what) {
  if (!ok) mark(Status::fail, what);
}

void VerificationOutcome::mark(Status s, const std::string& note) {
  status = worst(status, s);
  notes.push_back(status_name(s) + ": " + note);
}

void VerificationOutcome::add_margin(const std::string& name, double value, double error) {
  margins.push_back({name, value, error});
  if (!(value > error)) {
    if (value < -error) mark(Status::fail, name + " is negative beyond its error bar");
    else mark(Status::inconclusive, name + " lies within its error bar");
  }
}

nlohmann::json VerificationOutcome::to_json() const {
  nlohmann::json m = nlohmann::json::array();
  for (const auto& x : margins) m.push_back({{"name", x.name}, {"value", x.value}, {"error", x.error}});
  return {{"claim", claim},   {"params", params}, {"domain", domain},       {"levels", levels},
          {"status", status_name(status)}, {"margins", m}, {"notes", notes}, {"artifacts", artifacts},
          {"details", details}};
}

Status overall(const std::vector<VerificationOutcome>& outcomes) {
  Status s = Status::pass;
  for (const auto& o : outcomes) s = worst(s, o.status);
  return s;
}

// ---------------------------------------------------------------------------

double auto_h0(const DomainSpec& spec) {
  double shortest = std::numeric_limits<double>::infinity();
  for (const auto& e : spec.edges) shortest = std::min(shortest, spec.edge_length(e));
  const double area = spec.area();
  return std::max(std::min(shortest / 4.0, std::sqrt(area / 600.0)), std::sqrt(area / 2400.0));
}

Ladder::Ladder(DomainSpec spec, int k, LadderOptions opts) : spec_(std::move(spec)), k_(k), opts_(opts) {
  if (opts_.levels < 1) throw InvalidParameter("a ladder needs at least one level");
  double h = opts_.h0 > 0.0 ? opts_.h0 : auto_h0(spec_);
  TensorMesh mesh = build_mesh(spec_, h, opts_.grading);
  for (int l = 0; l < opts_.levels; ++l) {
    if (l > 0) {
      mesh = refine(mesh);
      h *= 0.5;
    }
    solve_level(mesh, h);
  }
}

void Ladder::solve_level(TensorMesh mesh, double h) {
  LadderLevel lev;
  lev.mesh = std::make_shared<const TensorMesh>(std::move(mesh));
  lev.system = assemble(*lev.mesh, spec_);
  lev.spectrum = smallest_eigenpairs(lev.system.K, lev.system.M, std::min(k_, lev.system.dofs.free_count()),
                                     opts_.solver);
  lev.h = h;
  levels_.push_back(std::move(lev));
}

bool Ladder::can_extend() const {
  const int extra = static_cast<int>(levels_.size()) - opts_.levels;
  return extra < opts_.max_extra_levels && 4 * finest().system.dofs.free_count() <= opts_.max_dofs;
}

bool Ladder::extend() {
  if (!can_extend()) return false;
  solve_level(refine(*finest().mesh), 0.5 * finest().h);
  return true;
}

Extrapolation Ladder::extrapolation(int i) const {
  std::vector<std::pair<double, double>> seq;
  for (const auto& l : levels_) seq.push_back({l.h, l.spectrum.lambda(i)});
  if (seq.size() >= 3) return extrapolate(seq);
  Extrapolation e;
  e.lambda_star = seq.back().second;
  e.declined = true;
  e.error = seq.size() == 2 ? std::abs(seq[1].second - seq[0].second) : std::abs(seq.back().second);
  return e;
}

Quantity Ladder::value(int i) const {
  const Extrapolation e = extrapolation(i);
  return {e.lambda_star, std::max(e.error, 1e-12 * std::max(1.0, std::abs(e.lambda_star)))};
}

FieldSample Ladder::field(int i) const {
  const auto& l = finest();
  return FieldSample::from_dofs(l.mesh, l.system.dofs, l.spectrum.pairs[i].vector);
}

std::vector<int> Ladder::dof_counts() const {
  std::vector<int> out;
  for (const auto& l : levels_) out.push_back(l.system.dofs.free_count());
  return out;
}

void certify_less(VerificationOutcome& out, const std::string& name, const std::function<Quantity()>& a,
                  const std::function<Quantity()>& b, const std::vector<Ladder*>& grow) {
  for (;;) {
    const Quantity qa = a(), qb = b();
    const double m = qb.value - qa.value, e = qa.error + qb.error;
    if (std::abs(m) > e) break;
    // refine the ladder with the largest current error first
    bool grown = false;
    std::vector<Ladder*> order = grow;
    std::sort(order.begin(), order.end(), [](const Ladder* x, const Ladder* y) {
      return x->finest().system.dofs.free_count() < y->finest().system.dofs.free_count();
    });
    for (Ladder* l : order) {
      if (l->extend()) {
        grown = true;
        break;
      }
    }
    if (!grown) break;
  }
  const Quantity qa = a(), qb = b();
  out.add_margin(name, qb.value - qa.value, qa.error + qb.error);
}

// ---------------------------------------------------------------------------

VerificationOutcome check_mainthm(const LParams& p, const LadderOptions& opts) {
  const DomainSpec L = build_L(p);
  VerificationOutcome out = make_outcome("mainthm", L);
  Ladder lad(L, 3, opts);
  certify_less(out, "simplicity_gap", [&] {
    const Quantity q1 = lad.value(1), q2 = lad.value(2);
    return Quantity{q1.value, 10.0 * (q1.error + q2.error)};
  }, [&] { return Quantity{lad.value(2).value, 0.0}; }, {&lad});
  append_levels(out, lad);
  out.details["mu2"] = quantity_json(lad.value(1));
  out.details["lambda3"] = quantity_json(lad.value(2));

  const SignNormalization sn = normalize_sign(lad.field(1), L, SignMode::second_neumann);
  if (sn.ambiguous) out.mark(Status::degenerate, "sign anchor at the diametric vertex is ambiguous");
  const FieldSample& u = sn.field;
  const auto& mesh = u.mesh();
  const double h = mesh.max_cell_size();

  const CriticalPointReport rep = critical_points(u, L);
  out.details["critical"] = records_json(rep);
  out.details["rho"] = rep.rho;
  // Flat stretches (tangential derivative below noise over a long run) are
  // unresolved at this discretization rather than located critical points.
  std::vector<int> flat_edges;
  int located = 0;
  for (const auto& r : rep.non_vertex()) {
    if (r.degenerate && r.locus == Locus::edge) flat_edges.push_back(r.edge_label);
    else ++located;
  }
  out.require(located == 0, std::to_string(located) + " non-vertex critical points detected");
  if (!flat_edges.empty())
    out.mark(Status::degenerate, std::to_string(flat_edges.size()) + " boundary stretch(es) flat below noise level");
  auto on_flat_edge = [&](int vertex) {
    for (int l : flat_edges) {
      const Edge& e = L.edge(l);
      if (e.start == vertex || e.end == vertex) return true;
    }
    return false;
  };

  const auto mx = monotonicity(u, L, Axis::x), my = monotonicity(u, L, Axis::y);
  out.details["monotone_x"] = mono_json(mx);
  out.details["monotone_y"] = mono_json(my);
  out.require(mx.sign == MonotoneSign::strictly_positive, "d/dx u is not strictly positive outside the rho-balls");
  out.require(my.sign == MonotoneSign::strictly_negative, "d/dy u is not strictly negative outside the rho-balls");

  const Point dmax = L.vertices[(*L.diametric_vertices)[0]], dmin = L.vertices[(*L.diametric_vertices)[1]];
  const auto [pmax, pmin] = extreme_nodes(u);
  const double noise = 1e-6 * u.max_abs();
  auto extreme_check = [&](Point got, Point want, const std::string& what) {
    if (distance(got, want) <= 1e-9 * L.diameter()) return;
    if (std::abs(u.value(got) - u.value(want)) <= noise)
      out.mark(Status::degenerate, what + " ties the diametric vertex to within noise");
    else
      out.mark(Status::fail, what);
  };
  extreme_check(pmax, dmax, "maximum is not attained at (a1+a2, 0)");
  extreme_check(pmin, dmin, "minimum is not attained at (0, a3+a4)");
  for (const auto& r : rep.vertex_records()) {
    const bool misplaced = (r.type == CriticalType::maximum && distance(r.location, dmax) > 1e-12) ||
                           (r.type == CriticalType::minimum && distance(r.location, dmin) > 1e-12);
    if (!misplaced) continue;
    const std::string what = std::string("vertex ") + (r.type == CriticalType::maximum ? "maximum" : "minimum") +
                             " at v" + std::to_string(r.vertex) + " away from the diametric vertex";
    if (on_flat_edge(r.vertex)) out.mark(Status::degenerate, what + " (adjacent to a flat stretch)");
    else out.mark(Status::fail, what);
  }

  const NodalSet ns = nodal_set(u, L);
  out.details["nodal_polylines"] = ns.polylines.size();
  out.details["nodal_domains"] = ns.nodal_domains;
  out.require(ns.polylines.size() == 1 && !ns.polylines[0].closed, "nodal set is not a single open arc");
  out.require(ns.nodal_domains == 2, "nodal domain count is not 2");
  if (ns.polylines.size() == 1) {
    const auto& pl = ns.polylines[0];
    auto is_long = [](const NodalEndpoint& e) { return contains_any(e.closure_edges, {1, 6}); };
    auto is_other = [](const NodalEndpoint& e) { return contains_any(e.closure_edges, {2, 3, 4, 5}); };
    const bool ok = (is_long(pl.front) && is_other(pl.back)) || (is_long(pl.back) && is_other(pl.front));
    out.details["nodal_endpoints"] = {{{"x", pl.front.location.x}, {"y", pl.front.location.y}, {"closure", pl.front.closure_edges}},
                                      {{"x", pl.back.location.x}, {"y", pl.back.location.y}, {"closure", pl.back.closure_edges}}};
    out.require(ok, "nodal endpoints do not join a long outer edge to a short outer or inner edge");
    if (std::abs(p.a1 - p.a3) <= 1e-12 * p.a1 && std::abs(p.a2 - p.a4) <= 1e-12 * p.a2) {
      double dev = 0.0;
      for (const auto& q : pl.points) dev = std::max(dev, segment_distance(q, {0, 0}, {p.a1, p.a1}));
      const bool ends = (distance(pl.front.location, {0, 0}) <= 2 * h && distance(pl.back.location, {p.a1, p.a1}) <= 2 * h) ||
                        (distance(pl.back.location, {0, 0}) <= 2 * h && distance(pl.front.location, {p.a1, p.a1}) <= 2 * h);
      out.details["nodal_diagonal_deviation"] = dev;
      out.details["h"] = h;
      out.require(dev <= 2 * h && ends, "symmetric case: nodal arc is not the diagonal segment");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<IneqConfig> strictineq_configs() {
  std::vector<IneqConfig> c;
  for (int e = 1; e <= 6; ++e) c.push_back({"strictineq", IneqKind::mu2_below, {e}, {}});
  c.push_back({"strictineq", IneqKind::mu2_below, {1, 3, 5}, {}});
  c.push_back({"strictineq", IneqKind::mu2_below, {2, 4, 6}, {}});
  c.push_back({"strictineq", IneqKind::mu2_below, {1, 2, 3, 4, 5, 6}, {}});
  return c;
}

std::vector<IneqConfig> inclusion_chain_configs() {
  return {{"dinclusion", IneqKind::first_below, {1}, {1, 2}},
          {"dinclusion", IneqKind::first_below, {1, 2}, {1, 2, 3, 4, 5, 6}}};
}

std::vector<IneqConfig> min_ineq_configs() {
  return {{"min-ineq", IneqKind::min_below_mu2, {1}, {6}},
          {"min-ineq", IneqKind::min_below_mu2, {2}, {5}},
          {"min-ineq", IneqKind::min_below_mu2, {1}, {2}}};
}

std::vector<IneqConfig> opposite_ineq_configs() {
  return {{"opposite-ineq", IneqKind::first_below, {1}, {3, 5}},
          {"opposite-ineq", IneqKind::first_below, {2}, {4, 6}}};
}

std::vector<VerificationOutcome> ineq_battery(const LParams& p, const std::vector<IneqConfig>& configs,
                                              const LadderOptions& opts) {
  const DomainSpec L = build_L(p);
  std::map<std::vector<int>, std::unique_ptr<Ladder>> cache;
  auto ladder = [&](const std::vector<int>& d) -> Ladder& {
    std::vector<int> key = d;
    std::sort(key.begin(), key.end());
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, std::make_unique<Ladder>(key.empty() ? L : with_dirichlet(L, key), key.empty() ? 2 : 1, opts)).first;
    return *it->second;
  };
  std::vector<VerificationOutcome> outs;
  for (const auto& c : configs) {
    VerificationOutcome out = make_outcome(c.claim, L);
    Ladder& n = ladder({});
    Ladder& a = ladder(c.d1);
    auto mu2 = [&] { return n.value(1); };
    auto la = [&] { return a.value(0); };
    switch (c.kind) {
      case IneqKind::mu2_below:
        out.details["relation"] = "mu2 < lambda1[" + join_labels(c.d1) + "]";
        certify_less(out, "lambda1[" + join_labels(c.d1) + "]-mu2", mu2, la, {&n, &a});
        append_levels(out, n);
        append_levels(out, a);
        out.details["mu2"] = quantity_json(n.value(1));
        out.details["lambda1_d1"] = quantity_json(a.value(0));
        break;
      case IneqKind::min_below_mu2: {
        Ladder& b = ladder(c.d2);
        out.details["relation"] = "min(lambda1[" + join_labels(c.d1) + "], lambda1[" + join_labels(c.d2) + "]) < mu2";
        // the smaller of the two carries the inequality
        auto lmin = [&] {
          const Quantity qa = a.value(0), qb = b.value(0);
          return qa.value <= qb.value ? qa : qb;
        };
        certify_less(out, "mu2-min", lmin, mu2, {&n, &a, &b});
        append_levels(out, n);
        append_levels(out, a);
        append_levels(out, b);
        out.details["mu2"] = quantity_json(n.value(1));
        out.details["lambda1_d1"] = quantity_json(a.value(0));
        out.details["lambda1_d2"] = quantity_json(b.value(0));
        break;
      }
      case IneqKind::first_below: {
        Ladder& b = ladder(c.d2);
        out.details["relation"] = "lambda1[" + join_labels(c.d1) + "] < lambda1[" + join_labels(c.d2) + "]";
        certify_less(out, "lambda1[" + join_labels(c.d2) + "]-lambda1[" + join_labels(c.d1) + "]", la,
                     [&] { return b.value(0); }, {&a, &b});
        append_levels(out, a);
        append_levels(out, b);
        out.details["lambda1_d1"] = quantity_json(a.value(0));
        out.details["lambda1_d2"] = quantity_json(b.value(0));
        break;
      }
    }
    out.details["d1"] = c.d1;
    out.details["d2"] = c.d2;
    outs.push_back(std::move(out));
  }
  return outs;
}

// ---------------------------------------------------------------------------

VerificationOutcome check_swiss_surface(const LParams& p, const LadderOptions& opts) {
  const DomainSpec S = build_swiss_cross_surface(p);
  const DomainSpec L = build_L(p);
  VerificationOutcome out = make_outcome("swiss", S);
  Ladder ls(S, 3, opts);
  Ladder ln(L, 2, opts);
  const Quantity l1 = ls.value(1), mu2 = ln.value(1);
  const double rel = std::abs(l1.value - mu2.value) / mu2.value;
  const double bar = std::max(1e-2, 3.0 * (l1.error + mu2.error) / mu2.value);
  out.details["lambda1_surface"] = quantity_json(l1);
  out.details["mu2_L"] = quantity_json(mu2);
  out.details["relative_difference"] = rel;
  out.add_margin("surface_matches_mu2", bar - rel, 0.0);
  certify_less(out, "surface_simplicity_gap", [&] { return ls.value(1); }, [&] { return ls.value(2); }, {&ls});

  for (const auto& d : std::vector<std::vector<int>>{{1, 3, 5}, {2, 4, 6}, {1, 2, 3, 4, 5, 6}}) {
    Ladder lm(with_dirichlet(L, d), 1, opts);
    certify_less(out, "lambda1[" + join_labels(d) + "]-lambda1_surface", [&] { return ls.value(1); },
                 [&] { return lm.value(0); }, {&ls, &lm});
    out.details["lambda1[" + join_labels(d) + "]"] = quantity_json(lm.value(0));
    append_levels(out, lm);
  }
  append_levels(out, ls);
  append_levels(out, ln);

  const SignNormalization sn = normalize_sign(ls.field(1), S, SignMode::second_neumann);
  const FieldSample& u = sn.field;
  const double h = u.mesh().max_cell_size();
  const CriticalPointReport rep = critical_points(u, S);
  out.details["critical"] = records_json(rep);
  const LParams tile = *S.tile;
  std::vector<Point> images;
  for (Point v : tile.vertices())
    for (Point q : orbit(S, v)) images.push_back(q);
  const auto tv = tile.vertices();
  std::vector<Point> diam_images = orbit(S, tv[1]);
  for (Point q : orbit(S, tv[5])) diam_images.push_back(q);
  out.require(rep.records.size() == 6, "critical census has " + std::to_string(rep.records.size()) + " records, expected 6");
  int extrema = 0;
  for (const auto& r : rep.records) {
    out.require(near_any(r.location, images, 2 * h), "critical record away from every tiling-L vertex image");
    if (r.degenerate) out.mark(Status::fail, "degenerate-flagged record in the surface census");
    if (r.type == CriticalType::maximum || r.type == CriticalType::minimum) {
      ++extrema;
      out.require(near_any(r.location, diam_images, 2 * h), "extremum away from the diametric-vertex images");
    }
  }
  out.require(extrema == 2, std::to_string(extrema) + " extrema in the census, expected 2");

  double shortest = std::numeric_limits<double>::infinity();
  for (const auto& e : S.edges) shortest = std::min(shortest, S.edge_length(e));
  const ConeCensus cc = cone_census(u, S, 0.25 * shortest);
  out.details["cone"] = {{"arcs", cc.arc_count}, {"critical", cc.is_critical}, {"degenerate", cc.degenerate},
                         {"total_angle", cc.total_angle}, {"radius", 0.25 * shortest}};
  if (cc.degenerate) out.mark(Status::degenerate, "cone census is degenerate");
  out.require(cc.arc_count != 2, "cone census has 2 arcs");
  return out;
}

// ---------------------------------------------------------------------------

VerificationOutcome check_rectangle_mixed(double a, double b, double x0, double x1, const LadderOptions& opts) {
  const DomainSpec R0 = build_rectangle(a, b);
  const double tol = 1e-12 * R0.diameter();
  BcAssignment as;
  as.others = BcKind::neumann;
  const bool full = x0 <= tol && x1 >= a - tol;
  if (full) as.edges[1] = BcKind::dirichlet;
  else as.dirichlet_segments.push_back({{x0, 0.0}, {x1, 0.0}});
  const DomainSpec R = assign_bc(R0, as);
  VerificationOutcome out = make_outcome("rectangle-mixed", R);
  out.details["dirichlet"] = {x0, x1};
  Ladder lad(R, 2, opts);
  append_levels(out, lad);
  out.details["lambda1"] = quantity_json(lad.value(0));
  if (full) {
    const double exact = std::pow(kPi / (2 * b), 2);
    const Quantity q = lad.value(0);
    out.details["lambda1_exact"] = exact;
    out.add_margin("lambda1_relative_accuracy", 1e-3 - std::abs(q.value - exact) / exact, q.error / exact);
  }
  const FieldSample u = normalize_sign(lad.field(0), R, SignMode::first_mixed).field;
  const CriticalPointReport rep = critical_points(u, R);
  out.details["critical"] = records_json(rep);
  const double tube = std::max(rep.rho, 2.0 * u.mesh().max_cell_size());
  out.details["tube"] = tube;
  for (const auto& r : rep.non_vertex())
    out.require(b - r.location.y <= tube, "critical point at (" + format_number(r.location.x) + ", " +
                                              format_number(r.location.y) + ") is outside the top-edge tube");
  if (x0 <= tol && !full) {
    int maxima = 0;
    for (const auto& r : rep.vertex_records()) {
      if (r.type != CriticalType::maximum) continue;
      ++maxima;
      out.require(distance(r.location, {a, b}) <= tol, "vertex maximum is not the far top corner");
    }
    out.require(maxima == 1, std::to_string(maxima) + " vertex maxima, expected a single one");
    const auto [pmax, pmin] = extreme_nodes(u);
    out.require(distance(pmax, {a, b}) <= tol, "global maximum is not at the far top corner");
  }
  return out;
}

// ---------------------------------------------------------------------------

VerificationOutcome check_mixedthm(const LParams& p, const std::vector<int>& dirichlet, const LadderOptions& opts) {
  std::vector<int> d = dirichlet;
  std::sort(d.begin(), d.end());
  const DomainSpec L = with_dirichlet(build_L(p), d);
  VerificationOutcome out = make_outcome("mixedthm", L);
  out.details["dirichlet"] = d;
  if (d == std::vector<int>{1, 5} && std::abs(p.a3 - p.a4) <= 1e-12 * p.a3)
    out.notes.push_back("note: e1+e5 with a3 = a4 is the excluded separable configuration");
  if (d == std::vector<int>{2, 6} && std::abs(p.a1 - p.a2) <= 1e-12 * p.a1)
    out.notes.push_back("note: e2+e6 with a1 = a2 is the excluded separable configuration");
  Ladder lad(L, 2, opts);
  append_levels(out, lad);
  out.details["lambda1"] = quantity_json(lad.value(0));
  const FieldSample u = normalize_sign(lad.field(0), L, SignMode::first_mixed).field;
  const CriticalPointReport rep = critical_points(u, L);
  out.details["critical"] = records_json(rep);
  out.require(rep.interior().empty(), std::to_string(rep.interior().size()) + " interior critical points detected");
  const auto mx = monotonicity(u, L, Axis::x), my = monotonicity(u, L, Axis::y);
  out.details["monotone_x"] = mono_json(mx);
  out.details["monotone_y"] = mono_json(my);
  out.require(strictly(mx) || strictly(my), "not strictly monotone in either axis direction");
  if (d == std::vector<int>{1} || d == std::vector<int>{2}) {
    out.require(mx.sign == MonotoneSign::strictly_negative, "d/dx u is not strictly negative");
    out.require(my.sign == MonotoneSign::strictly_positive, "d/dy u is not strictly positive");
    const Point target = L.vertices[(*L.diametric_vertices)[1]];
    int maxima = 0;
    for (const auto& r : rep.records) {
      if (r.type != CriticalType::maximum) continue;
      ++maxima;
      out.require(r.locus == Locus::vertex && distance(r.location, target) < 1e-12,
                  "local maximum away from the diametric vertex (0, a3+a4)");
    }
    out.require(maxima == 1, std::to_string(maxima) + " local maxima, expected exactly one");
  }
  return out;
}

// ---------------------------------------------------------------------------

VerificationOutcome check_degenerate_counterexample(double a1, double a2, double a3, double perturbed_a4,
                                                    const LadderOptions& opts) {
  const DomainSpec L = with_dirichlet(build_L({a1, a2, a3, a3}), {1, 5});
  VerificationOutcome out = make_outcome("degenerate", L);
  Ladder lad(L, 2, opts);
  append_levels(out, lad);
  const double exact = std::pow(kPi / (2 * a3), 2);
  const Quantity q = lad.value(0);
  out.details["lambda1"] = quantity_json(q);
  out.details["lambda1_exact"] = exact;
  out.add_margin("lambda1_accuracy", 1e-3 - std::abs(q.value - exact), q.error);

  const FieldSample u = normalize_sign(lad.field(0), L, SignMode::first_mixed).field;
  const auto& fine = lad.finest();
  const auto Mf = fine.system.M.full();
  const auto& dofs = fine.system.dofs;
  Eigen::VectorXd uv(dofs.free_count()), sv(dofs.free_count());
  std::vector<Point> class_point(fine.mesh->ndof);
  for (int raw = fine.mesh->raw_nodes() - 1; raw >= 0; --raw)
    if (fine.mesh->node_class[raw] >= 0) class_point[fine.mesh->node_class[raw]] = fine.mesh->node(raw);
  for (int dd = 0; dd < dofs.free_count(); ++dd) {
    const int c = dofs.dof_to_class[dd];
    uv[dd] = u.values()[c];
    sv[dd] = std::sin(kPi * class_point[c].y / (2 * a3));
  }
  const double corr = std::abs(uv.dot(Mf * sv)) / std::sqrt(uv.dot(Mf * uv) * sv.dot(Mf * sv));
  out.details["correlation"] = corr;
  out.require(corr >= 1.0 - 1e-4, "correlation with the separable sine profile is below 1 - 1e-4");

  const auto mx = monotonicity(u, L, Axis::x);
  const double dx = std::max(std::abs(mx.min_value), std::abs(mx.max_value));
  out.details["max_abs_dx"] = dx;
  out.require(dx <= 1e-4, "x-derivative is not uniformly below 1e-4 in scaled units");

  const CriticalPointReport rep = critical_points(u, L);
  const double h = u.mesh().max_cell_size();
  bool segment = false;
  for (const auto& r : rep.records)
    segment = segment || (r.degenerate && r.locus != Locus::vertex && std::abs(r.location.y - a3) <= 2 * h);
  out.details["critical"] = records_json(rep);
  out.require(segment, "no degenerate-flagged critical set along y = a3");

  const DomainSpec Lp = with_dirichlet(build_L({a1, a2, a3, perturbed_a4}), {1, 5});
  Ladder lp(Lp, 1, opts);
  append_levels(out, lp);
  const FieldSample up = normalize_sign(lp.field(0), Lp, SignMode::first_mixed).field;
  const CriticalPointReport rp = critical_points(up, Lp);
  out.details["perturbed_a4"] = perturbed_a4;
  out.details["perturbed_critical"] = records_json(rp);
  out.require(rp.interior().empty(), "perturbed domain still has interior critical points");
  return out;
}

// ---------------------------------------------------------------------------

std::vector<int> mirror_edges(DomainKind kind) {
  switch (kind) {
    case DomainKind::T: return {1};
    case DomainKind::U: return {2};
    case DomainKind::cross:
    case DomainKind::cross_surface: return {1, 6};
    case DomainKind::H: return {1, 2};
    case DomainKind::O: return {2, 5};
    default: return {};
  }
}

VerificationOutcome check_ltiled(const LParams& p, DomainKind kind, const LadderOptions& opts) {
  const DomainSpec T = build_tiled(p, kind);
  const DomainSpec L = build_L(p);
  VerificationOutcome out = make_outcome("ltiled", T);
  const double h0 = opts.h0 > 0.0 ? opts.h0 : auto_h0(L);
  const auto mesh = std::make_shared<const TensorMesh>(refine(build_mesh(T, h0, opts.grading)));
  const Assembled sys = assemble(*mesh, T);
  const int kd = 6;
  const Spectrum direct = smallest_eigenpairs(sys.K, sys.M, kd, opts.solver);
  out.levels.push_back(sys.dofs.free_count());

  const std::vector<int> mirrors = mirror_edges(kind);
  std::vector<double> merged;
  nlohmann::json parts = nlohmann::json::array();
  for (int mask = 0; mask < (1 << mirrors.size()); ++mask) {
    std::vector<int> d;
    for (std::size_t b = 0; b < mirrors.size(); ++b)
      if (mask & (1 << b)) d.push_back(mirrors[b]);
    const DomainSpec Ls = d.empty() ? L : with_dirichlet(L, d);
    const TensorMesh sub = restrict_mesh(*mesh, Ls);
    const Assembled ss = assemble(sub, Ls);
    const Spectrum sp = smallest_eigenpairs(ss.K, ss.M, std::min(4, ss.dofs.free_count()), opts.solver);
    out.levels.push_back(ss.dofs.free_count());
    for (double l : sp.lambdas()) merged.push_back(l);
    parts.push_back({{"dirichlet", d}, {"lambdas", sp.lambdas()}});
  }
  std::sort(merged.begin(), merged.end());
  out.details["parts"] = parts;
  out.details["direct"] = direct.lambdas();
  double worst_rel = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double dl = direct.lambda(i), ml = merged[i];
    worst_rel = std::max(worst_rel, std::abs(dl - ml) / std::max(1.0, std::abs(dl)));
  }
  out.details["decomposition_relative_difference"] = worst_rel;
  out.require(worst_rel <= 1e-8, "direct and decomposed spectra differ by " + format_number(worst_rel));

  for (const auto& c : direct.clusters) {
    if (c.front() > 3) break;
    out.require(c.size() <= 2, "eigenvalue cluster of multiplicity " + std::to_string(c.size()));
  }
  const auto& mu2_cluster = direct.clusters[direct.cluster_of(1)];
  out.details["mu2"] = direct.lambda(1);
  out.details["mu2_multiplicity"] = mu2_cluster.size();

  // Parity-adapted basis of the mu2 eigenspace.
  const int n = sys.dofs.free_count();
  const double tol = 1e-9 * T.diameter();
  std::vector<int> class_raw(mesh->ndof, -1);
  for (int raw = 0; raw < mesh->raw_nodes(); ++raw)
    if (mesh->node_class[raw] >= 0 && class_raw[mesh->node_class[raw]] < 0) class_raw[mesh->node_class[raw]] = raw;
  std::vector<std::vector<int>> perms;
  for (const auto& r : T.reflections) {
    std::vector<int> perm(n);
    for (int dd = 0; dd < n; ++dd) {
      const Point q = r.apply(mesh->node(class_raw[sys.dofs.dof_to_class[dd]]));
      const int raw = mesh->node_at(q, tol);
      if (raw < 0 || mesh->node_class[raw] < 0) throw MeshError("mesh is not symmetric under the domain reflections");
      perm[dd] = sys.dofs.class_to_dof[mesh->node_class[raw]];
    }
    perms.push_back(std::move(perm));
  }
  std::vector<Eigen::VectorXd> basis;
  std::vector<std::string> characters;
  for (int ch = 0; ch < (1 << perms.size()); ++ch) {
    Eigen::MatrixXd W(n, mu2_cluster.size());
    for (std::size_t j = 0; j < mu2_cluster.size(); ++j) {
      Eigen::VectorXd v = direct.pairs[mu2_cluster[j]].vector;
      for (std::size_t r = 0; r < perms.size(); ++r) {
        Eigen::VectorXd rv(n);
        for (int dd = 0; dd < n; ++dd) rv[dd] = v[perms[r][dd]];
        v = 0.5 * (v + ((ch >> r) & 1 ? -1.0 : 1.0) * rv);
      }
      W.col(j) = v;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(W, Eigen::ComputeThinU);
    for (int j = 0; j < svd.singularValues().size(); ++j) {
      if (svd.singularValues()[j] <= 1e-6 * std::sqrt(static_cast<double>(n)) * 1e-3) continue;
      if (svd.singularValues()[j] <= 1e-6 * W.norm()) continue;
      basis.push_back(svd.matrixU().col(j));
      std::string name;
      for (std::size_t r = 0; r < perms.size(); ++r) name += (ch >> r) & 1 ? "odd" : "even";
      characters.push_back(name);
    }
  }
  out.details["basis_characters"] = characters;
  out.require(basis.size() == mu2_cluster.size(), "parity projections do not span the eigenspace");
  nlohmann::json per = nlohmann::json::array();
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const FieldSample u = FieldSample::from_dofs(mesh, sys.dofs, basis[j]);
    const CriticalPointReport rep = critical_points(u, T);
    const auto mx = monotonicity(u, T, Axis::x), my = monotonicity(u, T, Axis::y);
    per.push_back({{"character", characters[j]}, {"interior_critical", rep.interior().size()},
                   {"monotone_x", mono_json(mx)}, {"monotone_y", mono_json(my)}});
    out.require(rep.interior().empty(), characters[j] + " basis function has interior critical points");
    out.require(strictly(mx) || strictly(my), characters[j] + " basis function is not monotone in an axis direction");
  }
  out.details["basis"] = per;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct SweepPoint {
  double t;
  double mu2;
  double lambda;
};

SweepPoint sweep_eval(const LParams& from, const LParams& to, int edge, double t, const LadderOptions& opts) {
  const LParams lp = from.lerp(to, t);
  const DomainSpec L = build_L(lp);
  const double h0 = opts.h0 > 0.0 ? opts.h0 : auto_h0(L);
  const TensorMesh m = refine(build_mesh(L, h0, opts.grading));
  const Assembled an = assemble(m, L);
  const double mu2 = smallest_eigenpairs(an.K, an.M, 2, opts.solver).lambda(1);
  const DomainSpec Ld = with_dirichlet(L, {edge});
  const Assembled ad = assemble(m, Ld);
  const double lam = smallest_eigenpairs(ad.K, ad.M, 1, opts.solver).lambda(0);
  return {t, mu2, lam};
}

}  // namespace

VerificationOutcome sweep_crossing(const LParams& from, const LParams& to, int edge, const SweepOptions& opts) {
  if (edge < 1 || edge > 6) throw InvalidParameter("crossing edge must be one of e1..e6");
  VerificationOutcome out = make_outcome("crossing-e" + std::to_string(edge), build_L(to));
  out.params = {from.a1, from.a2, from.a3, from.a4, to.a1, to.a2, to.a3, to.a4};
  std::vector<SweepPoint> pts;
  nlohmann::json grid = nlohmann::json::array();
  const int steps = std::max(1, opts.steps);
  for (int s = 0; s <= steps; ++s) {
    pts.push_back(sweep_eval(from, to, edge, static_cast<double>(s) / steps, opts.ladder));
    grid.push_back({pts.back().t, pts.back().mu2, pts.back().lambda});
  }
  out.details["grid"] = grid;
  auto f = [](const SweepPoint& p) { return p.mu2 - p.lambda; };
  int k = -1;
  for (int s = 0; s < steps; ++s)
    if ((f(pts[s]) > 0) != (f(pts[s + 1]) > 0)) {
      k = s;
      break;
    }

  // Endpoint certification with error bars.
  const DomainSpec L1 = build_L(to), L0 = build_L(from);
  Ladder n1(L1, 2, opts.ladder), d1(with_dirichlet(L1, {edge}), 1, opts.ladder);
  Ladder n0(L0, 2, opts.ladder), d0(with_dirichlet(L0, {edge}), 1, opts.ladder);
  append_levels(out, n0);
  append_levels(out, n1);
  out.details["from"] = {{"mu2", quantity_json(n0.value(1))}, {"lambda1", quantity_json(d0.value(0))}};
  out.details["to"] = {{"mu2", quantity_json(n1.value(1))}, {"lambda1", quantity_json(d1.value(0))}};
  const bool to_below = n1.value(1).value < d1.value(0).value;
  if (to_below)
    certify_less(out, "to:lambda1-mu2", [&] { return n1.value(1); }, [&] { return d1.value(0); }, {&n1, &d1});
  else
    certify_less(out, "from:lambda1-mu2", [&] { return n0.value(1); }, [&] { return d0.value(0); }, {&n0, &d0});
  if (edge == 1) {
    const double lower = std::pow(kPi / (2 * (to.a3 + to.a4)), 2);
    const double upper = std::pow(3 * kPi / (2 * to.a2), 2);
    certify_less(out, "to:lambda1-lower_bound", [&] { return Quantity{lower, 0.0}; }, [&] { return d1.value(0); }, {&d1});
    certify_less(out, "to:mu2_upper_bound-mu2", [&] { return n1.value(1); }, [&] { return Quantity{upper, 0.0}; }, {&n1});
    out.details["sandwich"] = {{"lambda1_lower", lower}, {"mu2_upper", upper}};
  } else if (edge == 2) {
    const double upper = std::pow(3 * kPi / (2 * to.a3), 2);
    certify_less(out, "to:mu2_upper_bound-mu2", [&] { return n1.value(1); }, [&] { return Quantity{upper, 0.0}; }, {&n1});
    out.details["sandwich"] = {{"mu2_upper", upper}};
  }

  if (k < 0) {
    out.mark(Status::inconclusive, "no sign change of mu2 - lambda1 along the path");
    return out;
  }
  SweepPoint lo = pts[k], hi = pts[k + 1];
  while (hi.t - lo.t > opts.bracket_width) {
    const SweepPoint mid = sweep_eval(from, to, edge, 0.5 * (lo.t + hi.t), opts.ladder);
    if ((f(mid) > 0) == (f(lo) > 0)) lo = mid;
    else hi = mid;
  }
  out.details["bracket"] = {{"t_lo", lo.t}, {"t_hi", hi.t}, {"f_lo", f(lo)}, {"f_hi", f(hi)}, {"width", hi.t - lo.t}};
  // error bars at the bracket ends
  nlohmann::json ends = nlohmann::json::array();
  for (const SweepPoint& sp : {lo, hi}) {
    const DomainSpec Lt = build_L(from.lerp(to, sp.t));
    Ladder nt(Lt, 2, opts.ladder), dt(with_dirichlet(Lt, {edge}), 1, opts.ladder);
    ends.push_back({{"t", sp.t}, {"mu2", quantity_json(nt.value(1))}, {"lambda1", quantity_json(dt.value(0))}});
  }
  out.details["bracket_ends"] = ends;
  out.add_margin("bracket_width", opts.bracket_width - (hi.t - lo.t) + 1e-15, 0.0);
  return out;
}

VerificationOutcome family_sweep(const std::vector<double>& a3_values, const LadderOptions& opts) {
  VerificationOutcome out;
  out.claim = "family-e2";
  out.domain = "L";
  out.params = a3_values;
  nlohmann::json rows = nlohmann::json::array();
  double envelope = std::numeric_limits<double>::infinity();
  bool found = false;
  for (double a3 : a3_values) {
    const LParams lp{kPi / 4, kPi / 4, a3, 1.0};
    const DomainSpec L = build_L(lp);
    Ladder n(L, 2, opts), d(with_dirichlet(L, {2}), 1, opts);
    append_levels(out, n);
    const Quantity mu2 = n.value(1), lam = d.value(0);
    envelope = std::min(envelope, lam.value);
    const double upper = std::pow(3 * kPi / (2 * a3), 2);
    rows.push_back({{"a3", a3}, {"mu2", quantity_json(mu2)}, {"lambda1_e2", quantity_json(lam)}, {"mu2_upper", upper}});
    out.require(mu2.value <= upper + mu2.error, "mu2 exceeds (3 pi / (2 a3))^2 at a3 = " + format_number(a3));
    if (lam.value - mu2.value > lam.error + mu2.error) found = true;
  }
  out.details["rows"] = rows;
  out.details["lambda1_e2_envelope"] = envelope;
  if (!found) out.mark(Status::inconclusive, "no family member certifies mu2 < lambda1[e2]");
  return out;
}

std::vector<LParams> random_lparams(int count, std::uint64_t seed, double lo, double hi) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  std::vector<LParams> out;
  for (int i = 0; i < count; ++i) {
    LParams p;
    p.a1 = std::exp(u(rng));
    p.a2 = std::exp(u(rng));
    p.a3 = std::exp(u(rng));
    p.a4 = std::exp(u(rng));
    out.push_back(p);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<VerificationOutcome> run_parallel(const std::vector<std::function<VerificationOutcome()>>& tasks,
                                              int jobs) {
  std::vector<VerificationOutcome> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (const std::exception& e) {
        results[i].claim = "error";
        results[i].mark(Status::fail, std::string("exception: ") + e.what());
      }
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  if (n == 1) {
    worker();
    return results;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return results;
}

int default_jobs() {
  if (const char* env = std::getenv("HOTSPOTS_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

nlohmann::json campaign_json(const std::string& name, const std::vector<VerificationOutcome>& outcomes) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& o : outcomes) a.push_back(o.to_json());
  return {{"campaign", name}, {"status", status_name(overall(outcomes))}, {"outcomes", a}};
}

void write_summary_csv(std::ostream& os, const std::vector<VerificationOutcome>& outcomes) {
  os << "claim,domain,params,levels,status,margin,value,error\n";
  for (const auto& o : outcomes) {
    std::string levels;
    for (int l : o.levels) levels += (levels.empty() ? "" : ";") + std::to_string(l);
    const Margin* w = nullptr;
    for (const auto& m : o.margins)
      if (!w || m.value - m.error < w->value - w->error) w = &m;
    os << o.claim << "," << o.domain << ",\"" << params_text(o.params) << "\"," << levels << ","
       << status_name(o.status) << "," << (w ? w->name : "") << "," << (w ? format_number(w->value) : "") << ","
       << (w ? format_number(w->error) : "") << "\n";
  }
}

}  // namespace hotspots
