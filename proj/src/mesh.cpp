#include "hotspots/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "hotspots/error.hpp"

namespace hotspots {

namespace {

int find_line(const std::vector<double>& lines, double v, double tol) {
  auto it = std::lower_bound(lines.begin(), lines.end(), v - tol);
  if (it != lines.end() && std::abs(*it - v) <= tol) return static_cast<int>(it - lines.begin());
  return -1;
}

std::vector<double> subdivide(const std::vector<double>& breaks, double h) {
  std::vector<double> lines{breaks.front()};
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    const double a = breaks[k], b = breaks[k + 1];
    const int n = std::max(1, static_cast<int>(std::ceil((b - a) / h - 1e-9)));
    for (int s = 1; s < n; ++s) lines.push_back(a + (b - a) * s / n);
    lines.push_back(b);
  }
  return lines;
}

std::vector<double> axis_lines(std::vector<double> breaks, const std::vector<double>& graded,
                               double h, const GradingOptions& g, double diam) {
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    if (breaks[k + 1] - breaks[k] < 1e-12 * diam) {
      throw MeshError("degenerate mesh interval between breakpoints " + std::to_string(breaks[k]) +
                      " and " + std::to_string(breaks[k + 1]));
    }
  }
  std::vector<double> extra;
  if (g.layers > 0 && g.ratio < 1.0) {
    for (double v : graded) {
      const int k = find_line(breaks, v, 1e-12 * diam);
      if (k < 0) continue;
      for (int side : {-1, 1}) {
        const int nb = k + side;
        if (nb < 0 || nb >= static_cast<int>(breaks.size())) continue;
        const double gap = std::abs(breaks[nb] - breaks[k]);
        const double s = std::min(h, 0.5 * gap);
        double off = s;
        for (int l = 0; l < g.layers; ++l) {
          off *= g.ratio;
          extra.push_back(breaks[k] + side * off);
        }
      }
    }
  }
  breaks.insert(breaks.end(), extra.begin(), extra.end());
  std::sort(breaks.begin(), breaks.end());
  std::vector<double> merged;
  for (double v : breaks) {
    if (merged.empty() || v - merged.back() > 1e-10 * diam) merged.push_back(v);
  }
  return subdivide(merged, h);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

void compute_classes(TensorMesh& m) {
  const int nx = m.nx(), ny = m.ny();
  std::vector<std::uint8_t> used(m.raw_nodes(), 0);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      if (m.active(i, j)) {
        used[m.node_index(i, j)] = used[m.node_index(i + 1, j)] = 1;
        used[m.node_index(i, j + 1)] = used[m.node_index(i + 1, j + 1)] = 1;
      }

  const double diam = std::hypot(m.x_lines.back() - m.x_lines.front(),
                                 m.y_lines.back() - m.y_lines.front());
  const double tol = 1e-9 * diam;
  UnionFind uf(m.raw_nodes());
  for (const auto& id : m.identifications) {
    const double x0 = std::min(id.a0.x, id.a1.x), x1 = std::max(id.a0.x, id.a1.x);
    const double y0 = std::min(id.a0.y, id.a1.y), y1 = std::max(id.a0.y, id.a1.y);
    for (int j = 0; j <= ny; ++j) {
      const double y = m.y_lines[j];
      if (y < y0 - tol || y > y1 + tol) continue;
      for (int i = 0; i <= nx; ++i) {
        const double x = m.x_lines[i];
        if (x < x0 - tol || x > x1 + tol) continue;
        const int raw = m.node_index(i, j);
        if (!used[raw]) continue;
        const int partner = m.node_at(Point{x, y} + id.shift, tol);
        if (partner < 0 || !used[partner]) {
          throw MeshError("periodic partner node missing; mesh lines are not translation-compatible");
        }
        uf.unite(raw, partner);
      }
    }
  }

  m.node_class.assign(m.raw_nodes(), -1);
  std::vector<int> root_class(m.raw_nodes(), -1);
  int next = 0;
  for (int raw = 0; raw < m.raw_nodes(); ++raw) {
    if (!used[raw]) continue;
    const int r = uf.find(raw);
    if (root_class[r] < 0) root_class[r] = next++;
    m.node_class[raw] = root_class[r];
  }
  m.ndof = next;
}

}  // namespace

int TensorMesh::active_count() const {
  return static_cast<int>(std::count(active_cells.begin(), active_cells.end(), 1));
}

double TensorMesh::active_area() const {
  double a = 0.0;
  for (int j = 0; j < ny(); ++j)
    for (int i = 0; i < nx(); ++i)
      if (active(i, j)) a += (x_lines[i + 1] - x_lines[i]) * (y_lines[j + 1] - y_lines[j]);
  return a;
}

double TensorMesh::max_cell_size() const {
  double h = 0.0;
  for (int j = 0; j < ny(); ++j)
    for (int i = 0; i < nx(); ++i)
      if (active(i, j))
        h = std::max({h, x_lines[i + 1] - x_lines[i], y_lines[j + 1] - y_lines[j]});
  return h;
}

std::pair<int, int> TensorMesh::locate(Point p) const {
  auto bracket = [](const std::vector<double>& lines, double v, std::vector<int>& out) {
    const double tol = 1e-12 * (lines.back() - lines.front());
    const int n = static_cast<int>(lines.size()) - 1;
    const int k = static_cast<int>(std::upper_bound(lines.begin(), lines.end(), v) - lines.begin()) - 1;
    for (int c : {k, k - 1, k + 1}) {
      if (c >= 0 && c < n && lines[c] - tol <= v && v <= lines[c + 1] + tol) out.push_back(c);
    }
  };
  std::vector<int> is, js;
  bracket(x_lines, p.x, is);
  bracket(y_lines, p.y, js);
  for (int j : js)
    for (int i : is)
      if (active(i, j)) return {i, j};
  return {-1, -1};
}

double TensorMesh::local_cell_size(Point p) const {
  const auto [ci, cj] = locate(p);
  if (ci < 0) return 0.0;
  double h = 0.0;
  for (int j = std::max(0, cj - 1); j <= std::min(ny() - 1, cj + 1); ++j)
    for (int i = std::max(0, ci - 1); i <= std::min(nx() - 1, ci + 1); ++i) {
      if (!active(i, j)) continue;
      const bool touches = p.x >= x_lines[i] - 1e-12 && p.x <= x_lines[i + 1] + 1e-12 &&
                           p.y >= y_lines[j] - 1e-12 && p.y <= y_lines[j + 1] + 1e-12;
      if (touches) h = std::max({h, x_lines[i + 1] - x_lines[i], y_lines[j + 1] - y_lines[j]});
    }
  return h;
}

int TensorMesh::node_at(Point p, double tol) const {
  const int i = find_line(x_lines, p.x, tol);
  const int j = find_line(y_lines, p.y, tol);
  if (i < 0 || j < 0) return -1;
  return node_index(i, j);
}

TensorMesh build_mesh(const DomainSpec& spec, double target_h, const GradingOptions& grading) {
  if (!(target_h > 0.0) || !std::isfinite(target_h)) throw MeshError("target_h must be positive");
  if (grading.layers < 0 || !(grading.ratio > 0.0) || grading.ratio > 1.0)
    throw MeshError("grading ratio must lie in (0,1] and layers must be nonnegative");
  const double diam = spec.diameter();

  std::vector<double> xb, yb, gx, gy;
  for (const auto& v : spec.vertices) {
    xb.push_back(v.x);
    yb.push_back(v.y);
  }
  for (const auto& r : spec.reflections) (r.normal == Axis::x ? xb : yb).push_back(r.offset);
  TensorMesh m;
  m.grading = grading;
  for (int v : spec.singular_vertices()) {
    gx.push_back(spec.vertices[v].x);
    gy.push_back(spec.vertices[v].y);
    m.graded_vertices.push_back(spec.vertices[v]);
  }
  m.x_lines = axis_lines(xb, gx, target_h, grading, diam);
  m.y_lines = axis_lines(yb, gy, target_h, grading, diam);

  m.active_cells.assign(static_cast<std::size_t>(m.nx()) * m.ny(), 0);
  for (int j = 0; j < m.ny(); ++j)
    for (int i = 0; i < m.nx(); ++i) {
      const Point c{0.5 * (m.x_lines[i] + m.x_lines[i + 1]),
                    0.5 * (m.y_lines[j] + m.y_lines[j + 1])};
      m.active_cells[m.cell_index(i, j)] = spec.contains(c) ? 1 : 0;
    }
  for (const auto& pp : spec.periodic_pairs) {
    const Edge& a = spec.edges[pp.edge_a];
    m.identifications.push_back({spec.start_point(a), spec.end_point(a), pp.shift});
  }
  compute_classes(m);
  return m;
}

TensorMesh restrict_mesh(const TensorMesh& mesh, const DomainSpec& sub) {
  const auto bb = sub.bounding_box();
  const double tol = 1e-10 * sub.diameter();
  auto clip = [tol](const std::vector<double>& lines, double lo, double hi) {
    std::vector<double> out;
    for (double v : lines)
      if (v >= lo - tol && v <= hi + tol) out.push_back(v);
    return out;
  };
  TensorMesh m;
  m.grading = mesh.grading;
  m.x_lines = clip(mesh.x_lines, bb[0], bb[2]);
  m.y_lines = clip(mesh.y_lines, bb[1], bb[3]);
  if (m.x_lines.size() < 2 || m.y_lines.size() < 2 || std::abs(m.x_lines.front() - bb[0]) > tol ||
      std::abs(m.x_lines.back() - bb[2]) > tol || std::abs(m.y_lines.front() - bb[1]) > tol ||
      std::abs(m.y_lines.back() - bb[3]) > tol)
    throw MeshError("sub-domain bounding box is not aligned with the grid");
  for (const auto& p : mesh.graded_vertices)
    if (p.x >= bb[0] - tol && p.x <= bb[2] + tol && p.y >= bb[1] - tol && p.y <= bb[3] + tol)
      m.graded_vertices.push_back(p);
  m.active_cells.assign(static_cast<std::size_t>(m.nx()) * m.ny(), 0);
  for (int j = 0; j < m.ny(); ++j)
    for (int i = 0; i < m.nx(); ++i) {
      const Point c{0.5 * (m.x_lines[i] + m.x_lines[i + 1]), 0.5 * (m.y_lines[j] + m.y_lines[j + 1])};
      m.active_cells[m.cell_index(i, j)] = sub.contains(c) ? 1 : 0;
    }
  for (const auto& pp : sub.periodic_pairs) {
    const Edge& a = sub.edges[pp.edge_a];
    m.identifications.push_back({sub.start_point(a), sub.end_point(a), pp.shift});
  }
  compute_classes(m);
  return m;
}

TensorMesh refine(const TensorMesh& mesh) {
  auto halve = [](const std::vector<double>& lines) {
    std::vector<double> out;
    for (std::size_t k = 0; k + 1 < lines.size(); ++k) {
      out.push_back(lines[k]);
      out.push_back(0.5 * (lines[k] + lines[k + 1]));
    }
    out.push_back(lines.back());
    return out;
  };
  TensorMesh m;
  m.grading = mesh.grading;
  m.graded_vertices = mesh.graded_vertices;
  m.identifications = mesh.identifications;
  m.x_lines = halve(mesh.x_lines);
  m.y_lines = halve(mesh.y_lines);
  m.active_cells.assign(static_cast<std::size_t>(m.nx()) * m.ny(), 0);
  for (int j = 0; j < m.ny(); ++j)
    for (int i = 0; i < m.nx(); ++i) m.active_cells[m.cell_index(i, j)] = mesh.active(i / 2, j / 2);
  compute_classes(m);
  return m;
}

void write_mesh_dump(std::ostream& os, const TensorMesh& m) {
  os << "# tensor mesh nx=" << m.nx() << " ny=" << m.ny() << " active=" << m.active_count()
     << " ndof=" << m.ndof << "\n";
  os << "x,y,class\n";
  os.precision(12);
  for (int raw = 0; raw < m.raw_nodes(); ++raw) {
    if (m.node_class[raw] < 0) continue;
    const Point p = m.node(raw);
    os << p.x << "," << p.y << "," << m.node_class[raw] << "\n";
  }
}

}  // namespace hotspots
