#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hotspots/geometry.hpp"

namespace hotspots {

/// A pair of identified boundary segments: every point p of [a0, a1]
/// is the same surface point as p + shift.
struct Identification {
  Point a0;
  Point a1;
  Point shift;
};

struct GradingOptions {
  double ratio = 0.5;
  int layers = 6;
};

/// Tensor-product grid restricted to the cells inside a rectilinear polygon.
/// Raw nodes are numbered j * (nx + 1) + i; cells j * nx + i.
struct TensorMesh {
  std::vector<double> x_lines;
  std::vector<double> y_lines;
  std::vector<std::uint8_t> active_cells;
  std::vector<int> node_class;  // raw node -> DOF class, -1 for nodes of no active cell
  int ndof = 0;
  GradingOptions grading;
  std::vector<Point> graded_vertices;
  std::vector<Identification> identifications;

  int nx() const { return static_cast<int>(x_lines.size()) - 1; }
  int ny() const { return static_cast<int>(y_lines.size()) - 1; }
  int raw_nodes() const { return (nx() + 1) * (ny() + 1); }
  int node_index(int i, int j) const { return j * (nx() + 1) + i; }
  int cell_index(int i, int j) const { return j * nx() + i; }
  bool active(int i, int j) const { return active_cells[cell_index(i, j)] != 0; }
  Point node(int i, int j) const { return {x_lines[i], y_lines[j]}; }
  Point node(int raw) const { return node(raw % (nx() + 1), raw / (nx() + 1)); }

  int active_count() const;
  double active_area() const;
  double max_cell_size() const;
  /// Largest side of the active cells touching p; 0 if p lies in no active cell.
  double local_cell_size(Point p) const;
  /// Cell (i, j) containing p, preferring active cells; {-1, -1} if none.
  std::pair<int, int> locate(Point p) const;
  /// Raw node at p within `tol`, or -1.
  int node_at(Point p, double tol) const;
};

/// Grid through every vertex and symmetry-axis coordinate of `spec`; each
/// interval between breakpoints is cut into ceil(len / target_h) equal cells.
/// Geometric layers are added next to every reflex and flat vertex.
TensorMesh build_mesh(const DomainSpec& spec, double target_h,
                      const GradingOptions& grading = {});

/// The grid lines of `mesh` inside the bounding box of `sub`, with cells
/// activated by `sub`. Used to solve sub-problems on exactly matching meshes.
TensorMesh restrict_mesh(const TensorMesh& mesh, const DomainSpec& sub);

/// Uniform 2x2 refinement of every cell with node classes recomputed.
TensorMesh refine(const TensorMesh& mesh);

/// Debug dump: header line then "x,y,class" rows.
void write_mesh_dump(std::ostream& os, const TensorMesh& mesh);

}  // namespace hotspots
