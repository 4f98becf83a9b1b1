#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "hotspots/analysis.hpp"
#include "hotspots/error.hpp"

namespace hotspots {

namespace {

constexpr double kPi = std::numbers::pi;

struct Sector {
  int vertex;
  double start;  // direction of the outgoing edge
  double width;  // interior angle
};

double direction_angle(Point d) { return std::atan2(d.y, d.x); }

// Wedges swept counterclockwise around the surface point represented by
// vertex v; a single wedge on a domain with boundary.
std::vector<Sector> vertex_sectors(const DomainSpec& spec, int v) {
  std::vector<Sector> out;
  int cur = v;
  for (std::size_t guard = 0; guard <= spec.vertices.size(); ++guard) {
    const Edge& eo = spec.edges[spec.outgoing_edge(cur)];
    out.push_back({cur, direction_angle(spec.end_point(eo) - spec.start_point(eo)),
                   spec.interior_angle(cur)});
    const Edge& ei = spec.edges[spec.incoming_edge(cur)];
    if (ei.bc.kind != BcKind::periodic) break;
    cur = spec.edges[ei.bc.partner].start;
    if (cur == v) break;
  }
  return out;
}

double sectors_total(const std::vector<Sector>& s) {
  double t = 0.0;
  for (const auto& x : s) t += x.width;
  return t;
}

Point sector_point(const DomainSpec& spec, const std::vector<Sector>& sectors, double phi, double r) {
  for (const auto& s : sectors) {
    if (phi <= s.width || &s == &sectors.back()) {
      const double a = s.start + std::min(phi, s.width);
      return spec.vertices[s.vertex] + r * Point{std::cos(a), std::sin(a)};
    }
    phi -= s.width;
  }
  return spec.vertices[sectors.front().vertex];
}

// Value at q, following identifications when q has left the polygon.
double surface_value(const FieldSample& u, const DomainSpec& spec, Point q) {
  const auto& m = u.mesh();
  auto inside = [&](Point c) {
    const auto [i, j] = m.locate(c);
    return i >= 0 && m.active(i, j);
  };
  if (inside(q)) return u.value(q);
  // Cross the identified edge nearest to q.
  double best = std::numeric_limits<double>::infinity();
  Point target;
  for (const auto& pp : spec.periodic_pairs) {
    const Edge& ea = spec.edges[pp.edge_a];
    const Edge& eb = spec.edges[pp.edge_b];
    const double da = segment_distance(q, spec.start_point(ea), spec.end_point(ea));
    const double db = segment_distance(q, spec.start_point(eb), spec.end_point(eb));
    if (da < best && inside(q + pp.shift)) {
      best = da;
      target = q + pp.shift;
    }
    if (db < best && inside(q - pp.shift)) {
      best = db;
      target = q - pp.shift;
    }
  }
  if (best < std::numeric_limits<double>::infinity()) return u.value(target);
  return std::numeric_limits<double>::quiet_NaN();
}

RingCensus count_signs(const std::vector<double>& d, bool closed, double zero_tol) {
  RingCensus rc;
  rc.closed = closed;
  std::vector<int> signs;
  for (double x : d) {
    if (std::isnan(x)) continue;
    if (x > zero_tol) {
      ++rc.positive;
      signs.push_back(1);
    } else if (x < -zero_tol) {
      ++rc.negative;
      signs.push_back(-1);
    } else {
      ++rc.near_zero;
    }
  }
  for (std::size_t k = 1; k < signs.size(); ++k) rc.sign_changes += signs[k] != signs[k - 1];
  if (closed && signs.size() > 1) rc.sign_changes += signs.back() != signs.front();
  return rc;
}

// Local cell size, following identifications for points just outside the polygon.
double local_h(const TensorMesh& m, const DomainSpec& spec, Point p) {
  double h = m.local_cell_size(p);
  for (const auto& pp : spec.periodic_pairs) {
    if (h > 0.0) break;
    h = std::max(m.local_cell_size(p + pp.shift), m.local_cell_size(p - pp.shift));
  }
  return h > 0.0 ? h : m.max_cell_size();
}

double boundary_distance(const DomainSpec& spec, Point p, bool include_periodic) {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& e : spec.edges) {
    if (!include_periodic && e.bc.kind == BcKind::periodic) continue;
    d = std::min(d, segment_distance(p, spec.start_point(e), spec.end_point(e)));
  }
  return d;
}

struct Candidate {
  Point p;
  bool degenerate;
  bool glued;
};

// Common zeros of two bilinear functions on [0,1]^2, given by corner values
// f00, f10, f01, f11.
std::vector<std::pair<double, double>> bilinear_common_zeros(const double gx[4], const double gy[4]) {
  const double a0 = gx[0], a1 = gx[1] - gx[0], a2 = gx[2] - gx[0], a3 = gx[3] - gx[1] - gx[2] + gx[0];
  const double b0 = gy[0], b1 = gy[1] - gy[0], b2 = gy[2] - gy[0], b3 = gy[3] - gy[1] - gy[2] + gy[0];
  const double c2 = b2 * a3 - a2 * b3;
  const double c1 = b0 * a3 + b2 * a1 - a0 * b3 - a2 * b1;
  const double c0 = b0 * a1 - a0 * b1;
  std::vector<double> ts;
  const double cs = std::max({std::abs(c0), std::abs(c1), std::abs(c2)});
  if (cs == 0.0) return {};
  if (std::abs(c2) < 1e-12 * cs) {
    if (std::abs(c1) > 1e-14 * cs) ts.push_back(-c0 / c1);
  } else {
    const double disc = c1 * c1 - 4 * c2 * c0;
    if (disc >= 0.0) {
      const double sq = std::sqrt(disc);
      const double q = -0.5 * (c1 + (c1 >= 0 ? sq : -sq));
      ts.push_back(q / c2);
      if (q != 0.0) ts.push_back(c0 / q);
    }
  }
  const double eps = 1e-9;
  const double gscale = std::max({std::abs(gx[0]), std::abs(gx[1]), std::abs(gx[2]), std::abs(gx[3]),
                                  std::abs(gy[0]), std::abs(gy[1]), std::abs(gy[2]), std::abs(gy[3])});
  std::vector<std::pair<double, double>> out;
  for (double t : ts) {
    if (t < -eps || t > 1 + eps) continue;
    double s;
    const double dx = a1 + a3 * t, dy = b1 + b3 * t;
    if (std::abs(dx) >= std::abs(dy) && dx != 0.0) s = -(a0 + a2 * t) / dx;
    else if (dy != 0.0) s = -(b0 + b2 * t) / dy;
    else continue;
    if (s < -eps || s > 1 + eps) continue;
    s = std::clamp(s, 0.0, 1.0);
    t = std::clamp(t, 0.0, 1.0);
    const double fx = a0 + a1 * s + a2 * t + a3 * s * t;
    const double fy = b0 + b1 * s + b2 * t + b3 * s * t;
    if (std::abs(fx) > 1e-6 * gscale || std::abs(fy) > 1e-6 * gscale) continue;
    out.push_back({s, t});
  }
  return out;
}

// Point of the zero curve of a bilinear function closest to the cell centre,
// estimated from its crossings of the cell sides.
std::optional<std::pair<double, double>> bilinear_zero_curve_point(const double f[4]) {
  const double lo = std::min({f[0], f[1], f[2], f[3]}), hi = std::max({f[0], f[1], f[2], f[3]});
  if (!(lo < 0.0 && hi > 0.0)) return std::nullopt;
  // sides: bottom (00-10), right (10-11), top (01-11), left (00-01)
  const std::array<std::array<int, 2>, 4> sides{{{0, 1}, {1, 3}, {2, 3}, {0, 2}}};
  const std::array<std::pair<double, double>, 4> corner{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
  double sx = 0, sy = 0;
  int n = 0;
  for (const auto& sd : sides) {
    const double fa = f[sd[0]], fb = f[sd[1]];
    if ((fa < 0) == (fb < 0)) continue;
    const double w = fa / (fa - fb);
    sx += corner[sd[0]].first + w * (corner[sd[1]].first - corner[sd[0]].first);
    sy += corner[sd[0]].second + w * (corner[sd[1]].second - corner[sd[0]].second);
    ++n;
  }
  if (n == 0) return std::nullopt;
  return std::make_pair(sx / n, sy / n);
}

CriticalType type_from_ring(const RingCensus& rc, bool open_quarter, bool& regular) {
  regular = false;
  const bool below = rc.negative > 0 && rc.positive == 0;
  const bool above = rc.positive > 0 && rc.negative == 0;
  if (rc.sign_changes == 0) {
    if (below) return CriticalType::maximum;
    if (above) return CriticalType::minimum;
    return CriticalType::degenerate;
  }
  if (rc.closed) {
    if (rc.sign_changes == 2) regular = true;
    return CriticalType::saddle;
  }
  if (rc.sign_changes == 1 && !open_quarter) regular = true;
  return CriticalType::saddle;
}

}  // namespace

std::string locus_name(Locus l) {
  switch (l) {
    case Locus::interior: return "interior";
    case Locus::edge: return "edge";
    case Locus::vertex: return "vertex";
  }
  return "?";
}

std::string critical_type_name(CriticalType t) {
  switch (t) {
    case CriticalType::maximum: return "max";
    case CriticalType::minimum: return "min";
    case CriticalType::saddle: return "saddle";
    case CriticalType::degenerate: return "degenerate";
  }
  return "?";
}

std::vector<CriticalRecord> CriticalPointReport::non_vertex() const {
  std::vector<CriticalRecord> out;
  for (const auto& r : records)
    if (r.locus != Locus::vertex) out.push_back(r);
  return out;
}

std::vector<CriticalRecord> CriticalPointReport::vertex_records() const {
  std::vector<CriticalRecord> out;
  for (const auto& r : records)
    if (r.locus == Locus::vertex) out.push_back(r);
  return out;
}

std::vector<CriticalRecord> CriticalPointReport::interior() const {
  std::vector<CriticalRecord> out;
  for (const auto& r : records)
    if (r.locus == Locus::interior) out.push_back(r);
  return out;
}

bool CriticalPointReport::any_degenerate() const {
  return std::any_of(records.begin(), records.end(), [](const auto& r) { return r.degenerate; });
}

RingCensus ring_census(const FieldSample& u, const DomainSpec& spec, Point p, double r,
                       int samples_per_2pi, double zero_tol) {
  const double tol = 1e-9 * spec.diameter();
  const int v = spec.vertex_at(p, tol);
  const double up = surface_value(u, spec, p);
  std::vector<double> d;
  double total = 0.0;
  bool closed = true;
  if (v >= 0) {
    const auto sectors = vertex_sectors(spec, v);
    total = sectors_total(sectors);
    closed = spec.is_surface() || std::abs(total - 2 * kPi) < 1e-9;
    if (!spec.is_surface()) closed = false;
    const int n = std::max(8, static_cast<int>(std::ceil(samples_per_2pi * total / (2 * kPi))));
    for (int k = 0; k < n; ++k) {
      // open wedges include both edge directions
      const double phi = closed ? total * k / n : total * k / (n - 1);
      d.push_back(surface_value(u, spec, sector_point(spec, sectors, phi, r)) - up);
    }
  } else {
    const int ei = spec.edge_at(p, tol);
    if (ei >= 0 && spec.edges[ei].bc.kind != BcKind::periodic) {
      const Edge& e = spec.edges[ei];
      const double a0 = direction_angle(spec.end_point(e) - spec.start_point(e));
      total = kPi;
      closed = false;
      const int n = std::max(8, samples_per_2pi / 2);
      for (int k = 0; k < n; ++k) {
        const double a = a0 + total * k / (n - 1);
        d.push_back(u.value(p + r * Point{std::cos(a), std::sin(a)}) - up);
      }
    } else {
      total = 2 * kPi;
      for (int k = 0; k < samples_per_2pi; ++k) {
        const double a = total * k / samples_per_2pi;
        d.push_back(surface_value(u, spec, p + r * Point{std::cos(a), std::sin(a)}) - up);
      }
    }
  }
  RingCensus rc = count_signs(d, closed, zero_tol);
  rc.total_angle = total;
  return rc;
}

CriticalPointReport critical_points(const FieldSample& u, const DomainSpec& spec,
                                    const CriticalOptions& opts) {
  const auto& m = u.mesh();
  const double diam = spec.diameter();
  const double umax = u.max_abs();
  const double scale = umax / diam;
  const double noise = opts.noise_rel * scale;
  const double zero_tol = 1e-9 * umax;
  const auto G = u.recovered_gradient(spec);

  CriticalPointReport rep;
  std::vector<std::pair<Point, double>> balls;
  for (int v : spec.singular_vertices()) {
    const double rho = opts.rho ? *opts.rho : default_exclusion_radius(spec, m, v);
    balls.push_back({spec.vertices[v], rho});
    rep.rho = std::max(rep.rho, rho);
  }
  if (balls.empty()) rep.rho = opts.rho ? *opts.rho : 0.0;
  auto excluded = [&](Point p) {
    for (const auto& [c, rho] : balls)
      if (distance(p, c) < rho) return true;
    return false;
  };
  auto classify_ring = [&](Point p, double r, bool quarter, CriticalRecord& rec) {
    const RingCensus rc = ring_census(u, spec, p, r, opts.ring_samples, zero_tol);
    bool regular = false;
    rec.type = type_from_ring(rc, quarter, regular);
    rec.arc_count = rc.sign_changes;
    return !regular;
  };

  double shortest = std::numeric_limits<double>::infinity();
  for (const auto& e : spec.edges) shortest = std::min(shortest, spec.edge_length(e));
  auto vertex_radius = [&](int v) {
    return std::min(3.0 * std::max(m.local_cell_size(spec.vertices[v]), 1e-12), 0.25 * shortest);
  };
  // Zeros inside a vertex's classification ring belong to the vertex record.
  auto near_vertex = [&](Point p) {
    for (int v = 0; v < static_cast<int>(spec.vertices.size()); ++v)
      if (distance(p, spec.vertices[v]) < vertex_radius(v)) return true;
    return false;
  };

  // Interior (and glued-edge) candidates from zeros of the recovered gradient.
  std::vector<Candidate> cands;
  for (int j = 0; j < m.ny(); ++j)
    for (int i = 0; i < m.nx(); ++i) {
      if (!m.active(i, j)) continue;
      const int raw[4] = {m.node_index(i, j), m.node_index(i + 1, j), m.node_index(i, j + 1),
                          m.node_index(i + 1, j + 1)};
      double gx[4], gy[4];
      bool flatx = true, flaty = true;
      for (int c = 0; c < 4; ++c) {
        const Point g = G[m.node_class[raw[c]]];
        gx[c] = g.x;
        gy[c] = g.y;
        flatx = flatx && std::abs(g.x) <= noise;
        flaty = flaty && std::abs(g.y) <= noise;
      }
      const double hx = m.x_lines[i + 1] - m.x_lines[i], hy = m.y_lines[j + 1] - m.y_lines[j];
      auto to_global = [&](double s, double t) {
        return Point{m.x_lines[i] + s * hx, m.y_lines[j] + t * hy};
      };
      std::vector<std::pair<Point, bool>> pts;
      if (flatx && flaty) {
        pts.push_back({to_global(0.5, 0.5), true});
      } else if (flatx || flaty) {
        if (auto st = bilinear_zero_curve_point(flatx ? gy : gx))
          pts.push_back({to_global(st->first, st->second), true});
      } else {
        const bool sx = *std::min_element(gx, gx + 4) <= 0 && *std::max_element(gx, gx + 4) >= 0;
        const bool sy = *std::min_element(gy, gy + 4) <= 0 && *std::max_element(gy, gy + 4) >= 0;
        if (!sx || !sy) continue;
        for (const auto& [s, t] : bilinear_common_zeros(gx, gy)) pts.push_back({to_global(s, t), false});
      }
      const double hl = std::max(hx, hy);
      for (auto [p, degen] : pts) {
        if (excluded(p)) continue;
        if (spec.vertex_at(p, 1e-3 * hl) >= 0 || near_vertex(p)) continue;
        const int ei = spec.edge_at(p, 1e-3 * hl);
        bool glued = false;
        if (ei >= 0) {
          const Edge& e = spec.edges[ei];
          if (e.bc.kind != BcKind::periodic) continue;  // edge scan handles true boundary
          glued = true;
          for (const auto& pp : spec.periodic_pairs)
            if (pp.edge_b == ei) p = p - pp.shift;
        }
        cands.push_back({p, degen, glued});
      }
    }

  // Cluster candidates lying within about a cell of each other.
  const int nc = static_cast<int>(cands.size());
  std::vector<int> parent(nc);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  for (int a = 0; a < nc; ++a) {
    const double ha = local_h(m, spec, cands[a].p);
    for (int b = a + 1; b < nc; ++b)
      if (distance(cands[a].p, cands[b].p) <= 1.5 * ha) parent[find(b)] = find(a);
  }
  std::vector<std::vector<int>> groups(nc);
  for (int a = 0; a < nc; ++a) groups[find(a)].push_back(a);
  for (const auto& g : groups) {
    if (g.empty()) continue;
    Point c{0, 0};
    bool degen = false, glued = false;
    for (int a : g) {
      c = c + cands[a].p;
      degen = degen || cands[a].degenerate;
      glued = glued || cands[a].glued;
    }
    c = (1.0 / g.size()) * c;
    double extent = 0.0;
    for (int a : g)
      for (int b : g) extent = std::max(extent, distance(cands[a].p, cands[b].p));
    const double h = std::max(local_h(m, spec, c), local_h(m, spec, cands[g[0]].p));
    degen = degen || extent > 3.0 * h;
    CriticalRecord rec;
    rec.location = degen ? cands[g[0]].p : c;
    rec.locus = Locus::interior;
    rec.glued = glued;
    rec.degenerate = degen;
    rec.cells = static_cast<int>(g.size());
    double r = 2.5 * std::max(h, 1e-12);
    if (!glued) r = std::min(r, 0.8 * boundary_distance(spec, rec.location, spec.is_surface() ? false : true));
    const bool keep = classify_ring(rec.location, r, false, rec);
    if (degen) rec.type = CriticalType::degenerate;
    if (keep || degen) rep.records.push_back(rec);
    else ++rep.discarded_regular;
  }

  // Edge-interior candidates: sign changes of the tangential derivative on Neumann edges.
  const double tol = 1e-9 * diam;
  for (const auto& e : spec.edges) {
    if (e.bc.kind != BcKind::neumann) continue;
    const Point a = spec.start_point(e), b = spec.end_point(e);
    const double len = distance(a, b);
    const Point tau = (1.0 / len) * (b - a);
    struct Sample {
      double s;
      double g;
      Point p;
    };
    std::vector<Sample> samples;
    const double x0 = std::min(a.x, b.x), x1 = std::max(a.x, b.x);
    const double y0 = std::min(a.y, b.y), y1 = std::max(a.y, b.y);
    for (int jj = 0; jj <= m.ny(); ++jj) {
      if (m.y_lines[jj] < y0 - tol || m.y_lines[jj] > y1 + tol) continue;
      for (int ii = 0; ii <= m.nx(); ++ii) {
        if (m.x_lines[ii] < x0 - tol || m.x_lines[ii] > x1 + tol) continue;
        const int cls = m.node_class[m.node_index(ii, jj)];
        if (cls < 0) continue;
        const Point p = m.node(ii, jj);
        const double s = dot(p - a, tau);
        if (s <= tol || s >= len - tol || excluded(p)) continue;
        samples.push_back({s, dot(G[cls], tau), p});
      }
    }
    std::sort(samples.begin(), samples.end(), [](const Sample& l, const Sample& r) { return l.s < r.s; });
    if (samples.size() < 2) continue;

    // Long near-zero runs mark a degenerate (critical) stretch of the edge.
    std::size_t k = 0;
    std::vector<std::pair<double, double>> flat_runs;
    while (k < samples.size()) {
      if (std::abs(samples[k].g) > noise) {
        ++k;
        continue;
      }
      std::size_t l = k;
      while (l + 1 < samples.size() && std::abs(samples[l + 1].g) <= noise) ++l;
      const double lo = k > 0 ? samples[k - 1].s : samples[k].s;
      const double hi = l + 1 < samples.size() ? samples[l + 1].s : samples[l].s;
      if (hi - lo > 0.25 * len) flat_runs.push_back({samples[k].s, samples[l].s});
      k = l + 1;
    }
    for (const auto& [lo, hi] : flat_runs) {
      CriticalRecord rec;
      rec.location = a + (0.5 * (lo + hi)) * tau;
      rec.locus = Locus::edge;
      rec.edge_label = e.label;
      rec.degenerate = true;
      rec.type = CriticalType::degenerate;
      const double h = std::max(m.local_cell_size(rec.location), 1e-12);
      const RingCensus rc = ring_census(u, spec, rec.location, 2.5 * h, opts.ring_samples, zero_tol);
      rec.arc_count = rc.sign_changes;
      rec.cells = 0;
      for (const auto& sm : samples)
        if (sm.s >= lo && sm.s <= hi) ++rec.cells;
      rep.records.push_back(rec);
    }
    auto in_flat = [&](double s) {
      for (const auto& [lo, hi] : flat_runs)
        if (s >= lo - 1e-12 && s <= hi + 1e-12) return true;
      return false;
    };

    std::vector<double> zeros;
    int last = -1;
    for (std::size_t q = 0; q < samples.size(); ++q) {
      if (std::abs(samples[q].g) <= noise || in_flat(samples[q].s)) continue;
      if (last >= 0 && (samples[last].g > 0) != (samples[q].g > 0)) {
        const double ga = samples[last].g, gb = samples[q].g;
        zeros.push_back(samples[last].s + (samples[q].s - samples[last].s) * ga / (ga - gb));
      }
      last = static_cast<int>(q);
    }
    // Merge sign changes that are closer than two cells.
    std::vector<std::vector<double>> zgroups;
    for (double z : zeros) {
      const double h = m.local_cell_size(a + z * tau);
      if (!zgroups.empty() && z - zgroups.back().back() <= 2.0 * h) zgroups.back().push_back(z);
      else zgroups.push_back({z});
    }
    for (const auto& zg : zgroups) {
      CriticalRecord rec;
      rec.location = a + (std::accumulate(zg.begin(), zg.end(), 0.0) / zg.size()) * tau;
      rec.locus = Locus::edge;
      rec.edge_label = e.label;
      rec.cells = static_cast<int>(zg.size());
      const double h = std::max(m.local_cell_size(rec.location), 1e-12);
      double r = 2.5 * h;
      for (const auto& f : spec.edges)
        if (&f != &e) r = std::min(r, 0.8 * segment_distance(rec.location, spec.start_point(f), spec.end_point(f)));
      const bool keep = classify_ring(rec.location, r, false, rec);
      rec.degenerate = zg.size() > 1 && (zg.size() % 2 == 0);
      if (keep) rep.records.push_back(rec);
      else ++rep.discarded_regular;
    }
  }

  // Vertex records, kept apart from the non-vertex counts.
  const auto classes = vertex_classes(spec);
  for (int v = 0; v < static_cast<int>(spec.vertices.size()); ++v) {
    if (spec.is_surface() && classes[v] != v) continue;
    const Edge& ein = spec.edges[spec.incoming_edge(v)];
    const Edge& eout = spec.edges[spec.outgoing_edge(v)];
    if (ein.bc.kind == BcKind::dirichlet || eout.bc.kind == BcKind::dirichlet) continue;
    const double r = vertex_radius(v);
    CriticalRecord rec;
    rec.location = spec.vertices[v];
    rec.locus = Locus::vertex;
    rec.vertex = v;
    const bool quarter = !spec.is_surface() && std::abs(spec.interior_angle(v) - 0.5 * kPi) < 1e-9;
    const bool keep = classify_ring(rec.location, r, quarter, rec);
    if (keep) rep.records.push_back(rec);
  }
  return rep;
}

Point cone_chart_point(const DomainSpec& surface, double phi, double r) {
  if (surface.cone_orbit.empty()) throw InvalidParameter("domain has no cone point");
  const auto sectors = vertex_sectors(surface, surface.cone_orbit.front());
  return sector_point(surface, sectors, phi, r);
}

ConeCensus cone_census(const FieldSample& u, const DomainSpec& surface, double radius,
                       int samples_per_2pi) {
  if (surface.cone_orbit.empty()) throw InvalidParameter("domain has no cone point");
  const int v = surface.cone_orbit.front();
  const auto sectors = vertex_sectors(surface, v);
  ConeCensus cc;
  cc.total_angle = sectors_total(sectors);
  const int n = static_cast<int>(std::ceil(samples_per_2pi * cc.total_angle / (2 * kPi)));
  const double up = u.value(surface.vertices[v]);
  const double umax = u.max_abs();
  std::vector<double> d;
  int small = 0;
  for (int k = 0; k < n; ++k) {
    const double phi = cc.total_angle * k / n;
    const double x = surface_value(u, surface, sector_point(surface, sectors, phi, radius)) - up;
    if (std::abs(x) < 1e-9 * umax) ++small;
    d.push_back(x);
  }
  cc.samples = n;
  const RingCensus rc = count_signs(d, true, 1e-9 * umax);
  cc.arc_count = rc.sign_changes;
  cc.degenerate = small > n / 10;
  cc.is_critical = !cc.degenerate && cc.arc_count != 2;
  return cc;
}

}  // namespace hotspots
