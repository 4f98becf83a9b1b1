#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <ostream>

#include "hotspots/analysis.hpp"

namespace hotspots {

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int a) {
    while (p[a] != a) a = p[a] = p[p[a]];
    return a;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

NodalEndpoint describe(Point p, const DomainSpec& spec, const TensorMesh& m) {
  NodalEndpoint ep;
  ep.location = p;
  const double h = std::max(m.local_cell_size(p), m.max_cell_size() * 1e-6);
  const int ei = spec.edge_at(p, 1e-9 * spec.diameter());
  if (ei >= 0) ep.edge_label = spec.edges[ei].label;
  double best = std::numeric_limits<double>::infinity();
  for (int v = 0; v < static_cast<int>(spec.vertices.size()); ++v) {
    const double d = distance(p, spec.vertices[v]);
    if (d <= 1.01 * h && d < best) {
      best = d;
      ep.vertex = v;
    }
  }
  for (const auto& e : spec.edges)
    if (segment_distance(p, spec.start_point(e), spec.end_point(e)) <= 1.01 * h)
      ep.closure_edges.push_back(e.label);
  return ep;
}

}  // namespace

NodalSet nodal_set(const FieldSample& u, const DomainSpec& spec) {
  const auto& m = u.mesh();
  const double umax = u.max_abs();
  auto val = [&](int raw) {
    const double v = u.node_value(raw);
    return v == 0.0 ? 1e-30 : v;
  };

  NodalSet out;
  int flat_cells = 0, cells = 0;

  // Crossing points keyed by the (class, class) pair of their grid edge, so
  // that identified edges of a surface share crossings.
  std::map<std::pair<int, int>, int> crossing_id;
  std::vector<Point> crossing_pt;
  std::vector<std::array<int, 2>> segments;
  auto crossing = [&](int ra, int rb) {
    const int ca = m.node_class[ra], cb = m.node_class[rb];
    const auto key = std::minmax(ca, cb);
    auto it = crossing_id.find(key);
    if (it != crossing_id.end()) return it->second;
    const double va = val(ra), vb = val(rb);
    const double w = va / (va - vb);
    const Point p = m.node(ra) + w * (m.node(rb) - m.node(ra));
    const int id = static_cast<int>(crossing_pt.size());
    crossing_pt.push_back(p);
    crossing_id.emplace(key, id);
    return id;
  };

  Dsu dsu(m.ndof);
  for (int j = 0; j < m.ny(); ++j)
    for (int i = 0; i < m.nx(); ++i) {
      if (!m.active(i, j)) continue;
      ++cells;
      // counterclockwise corners 00, 10, 11, 01
      const int r[4] = {m.node_index(i, j), m.node_index(i + 1, j), m.node_index(i + 1, j + 1),
                        m.node_index(i, j + 1)};
      double v[4];
      for (int c = 0; c < 4; ++c) v[c] = val(r[c]);
      const double centre = 0.25 * (v[0] + v[1] + v[2] + v[3]);
      if (std::abs(u.cell_value(i, j, 0.5, 0.5)) < 1e-10 * umax) ++flat_cells;

      for (int c = 0; c < 4; ++c) {
        const int d = (c + 1) % 4;
        if ((v[c] > 0) == (v[d] > 0)) dsu.unite(m.node_class[r[c]], m.node_class[r[d]]);
      }
      std::vector<int> cut;  // sides 0..3 with a sign change; side c joins corner c and c+1
      for (int c = 0; c < 4; ++c)
        if ((v[c] > 0) != (v[(c + 1) % 4] > 0)) cut.push_back(c);
      auto side_point = [&](int s) { return crossing(r[s], r[(s + 1) % 4]); };
      if (cut.size() == 2) {
        segments.push_back({side_point(cut[0]), side_point(cut[1])});
      } else if (cut.size() == 4) {
        const bool join02 = (centre > 0) == (v[0] > 0);
        if (join02) {
          dsu.unite(m.node_class[r[0]], m.node_class[r[2]]);
          // corners 1 and 3 are cut off
          segments.push_back({side_point(0), side_point(1)});
          segments.push_back({side_point(2), side_point(3)});
        } else {
          dsu.unite(m.node_class[r[1]], m.node_class[r[3]]);
          segments.push_back({side_point(3), side_point(0)});
          segments.push_back({side_point(1), side_point(2)});
        }
      }
    }
  out.degenerate = cells > 0 && flat_cells > 0.05 * cells;

  std::vector<bool> used(m.ndof, false);
  for (int raw = 0; raw < m.raw_nodes(); ++raw)
    if (m.node_class[raw] >= 0) used[m.node_class[raw]] = true;
  std::vector<bool> root(m.ndof, false);
  for (int c = 0; c < m.ndof; ++c)
    if (used[c]) root[dsu.find(c)] = true;
  out.nodal_domains = static_cast<int>(std::count(root.begin(), root.end(), true));

  // Chain segments into polylines.
  const int np = static_cast<int>(crossing_pt.size());
  std::vector<std::vector<int>> incident(np);
  for (int s = 0; s < static_cast<int>(segments.size()); ++s) {
    incident[segments[s][0]].push_back(s);
    incident[segments[s][1]].push_back(s);
  }
  std::vector<bool> seg_used(segments.size(), false);
  auto walk = [&](int start_pt, int first_seg, std::vector<int>& pts) {
    int cur = start_pt, seg = first_seg;
    while (seg >= 0 && !seg_used[seg]) {
      seg_used[seg] = true;
      const int nxt = segments[seg][0] == cur ? segments[seg][1] : segments[seg][0];
      pts.push_back(nxt);
      cur = nxt;
      seg = -1;
      for (int t : incident[cur])
        if (!seg_used[t]) {
          seg = t;
          break;
        }
    }
  };
  auto emit = [&](const std::vector<int>& ids, bool closed) {
    NodalPolyline pl;
    for (int id : ids) pl.points.push_back(crossing_pt[id]);
    pl.closed = closed;
    pl.front = describe(pl.points.front(), spec, m);
    pl.back = describe(pl.points.back(), spec, m);
    out.polylines.push_back(std::move(pl));
  };
  // open chains start at crossings of degree one
  for (int p = 0; p < np; ++p) {
    if (incident[p].size() != 1 || seg_used[incident[p][0]]) continue;
    std::vector<int> ids{p};
    walk(p, incident[p][0], ids);
    emit(ids, false);
  }
  for (int s = 0; s < static_cast<int>(segments.size()); ++s) {
    if (seg_used[s]) continue;
    std::vector<int> ids{segments[s][0]};
    walk(segments[s][0], s, ids);
    emit(ids, ids.size() > 2 && ids.front() == ids.back());
  }
  return out;
}

void write_nodal_dump(std::ostream& os, const NodalSet& set) {
  os.precision(12);
  os << "polyline,x,y\n";
  for (std::size_t k = 0; k < set.polylines.size(); ++k)
    for (const auto& p : set.polylines[k].points) os << k << "," << p.x << "," << p.y << "\n";
}

}  // namespace hotspots
