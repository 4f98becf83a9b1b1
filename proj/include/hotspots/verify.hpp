#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "hotspots/analysis.hpp"
#include "hotspots/assembly.hpp"
#include "hotspots/eigensolve.hpp"
#include "hotspots/geometry.hpp"
#include "hotspots/mesh.hpp"

namespace hotspots {

// ---------------------------------------------------------------------------
// Outcomes

/// Ordered by severity; combining outcomes keeps the most severe status.
enum class Status { pass, degenerate, inconclusive, fail };

std::string status_name(Status s);
Status worst(Status a, Status b);

struct Quantity {
  double value = 0.0;
  double error = 0.0;
};

struct Margin {
  std::string name;
  double value = 0.0;
  double error = 0.0;
};

struct VerificationOutcome {
  std::string claim;
  std::vector<double> params;
  std::string domain;
  std::vector<int> levels;  // free DOF count of every mesh level used
  Status status = Status::pass;
  std::vector<Margin> margins;
  std::vector<std::string> notes;
  std::vector<std::string> artifacts;
  nlohmann::json details = nlohmann::json::object();

  /// A boolean assertion: fail with a note when false.
  void require(bool ok, const std::string& what);
  void mark(Status s, const std::string& note);
  /// Records value > 0 as certified when value > error, failed when
  /// value < -error, inconclusive otherwise.
  void add_margin(const std::string& name, double value, double error);

  nlohmann::json to_json() const;
};

Status overall(const std::vector<VerificationOutcome>& outcomes);

// ---------------------------------------------------------------------------
// Mesh ladders

struct LadderOptions {
  int levels = 3;
  double h0 = 0.0;  // 0: auto_h0
  GradingOptions grading;
  SolverOptions solver;
  int max_extra_levels = 1;  // escalation budget for inconclusive margins
  int max_dofs = 60000;
};

/// min(shortest edge / 4, sqrt(area / 600)), but never finer than sqrt(area / 2400).
double auto_h0(const DomainSpec& spec);

struct LadderLevel {
  std::shared_ptr<const TensorMesh> mesh;
  Assembled system;
  Spectrum spectrum;
  double h = 0.0;
};

/// The k smallest eigenvalues on a sequence of uniformly refined meshes,
/// extrapolated per index.
class Ladder {
 public:
  Ladder(DomainSpec spec, int k, LadderOptions opts = {});

  /// Adds one refinement level if the escalation budget allows it.
  bool extend();
  bool can_extend() const;

  Quantity value(int i) const;
  Extrapolation extrapolation(int i) const;
  const LadderLevel& finest() const { return levels_.back(); }
  const std::vector<LadderLevel>& levels() const { return levels_; }
  FieldSample field(int i) const;
  std::vector<int> dof_counts() const;
  const DomainSpec& spec() const { return spec_; }
  int k() const { return k_; }

 private:
  void solve_level(TensorMesh mesh, double h);

  DomainSpec spec_;
  int k_;
  LadderOptions opts_;
  std::vector<LadderLevel> levels_;
};

/// Certifies a < b, escalating the ladders while the margin is within its
/// error bar and the budget allows. Adds the margin b - a to `out`.
void certify_less(VerificationOutcome& out, const std::string& name,
                  const std::function<Quantity()>& a, const std::function<Quantity()>& b,
                  const std::vector<Ladder*>& grow);

// ---------------------------------------------------------------------------
// Claim checkers

VerificationOutcome check_mainthm(const LParams& params, const LadderOptions& opts = {});

enum class IneqKind {
  mu2_below,        // mu2 < lambda^{D1}
  min_below_mu2,    // min(lambda^{D1}, lambda^{D2}) < mu2
  first_below,      // lambda^{D1} < lambda^{D2}
};

struct IneqConfig {
  std::string claim;
  IneqKind kind = IneqKind::mu2_below;
  std::vector<int> d1;
  std::vector<int> d2;
};

/// Single edges, the two alternating 3-edge sets and the full boundary.
std::vector<IneqConfig> strictineq_configs();
/// lambda^{e1} < lambda^{e1 u e2} < lambda^{full}.
std::vector<IneqConfig> inclusion_chain_configs();
/// The three min-inequalities against mu2.
std::vector<IneqConfig> min_ineq_configs();
/// lambda^{e1} < lambda^{e3 u e5} and lambda^{e2} < lambda^{e4 u e6}.
std::vector<IneqConfig> opposite_ineq_configs();

std::vector<VerificationOutcome> ineq_battery(const LParams& params, const std::vector<IneqConfig>& configs,
                                              const LadderOptions& opts = {});

VerificationOutcome check_swiss_surface(const LParams& params, const LadderOptions& opts = {});

/// a x b rectangle with Dirichlet data on [x0, x1] x {0}.
VerificationOutcome check_rectangle_mixed(double a, double b, double x0, double x1,
                                          const LadderOptions& opts = {});

VerificationOutcome check_mixedthm(const LParams& params, const std::vector<int>& dirichlet,
                                   const LadderOptions& opts = {});

/// L(a1, a2, a3, a3) with D = e1 u e5, plus the perturbed L(a1, a2, a3, perturbed_a4).
VerificationOutcome check_degenerate_counterexample(double a1, double a2, double a3,
                                                    double perturbed_a4 = 1.05,
                                                    const LadderOptions& opts = {});

VerificationOutcome check_ltiled(const LParams& params, DomainKind kind, const LadderOptions& opts = {});

/// Labels of the tiling-L edges lying on the mirror lines of a tiled domain.
std::vector<int> mirror_edges(DomainKind kind);

struct SweepOptions {
  int steps = 20;
  double bracket_width = 1e-2;
  LadderOptions ladder;
};

/// Sign change of mu2 - lambda^{e_edge} along the linear path from -> to.
VerificationOutcome sweep_crossing(const LParams& from, const LParams& to, int edge,
                                   const SweepOptions& opts = {});

/// L(pi/4, pi/4, a3, 1) for the given a3 values: mu2 against lambda^{e2}.
VerificationOutcome family_sweep(const std::vector<double>& a3_values, const LadderOptions& opts = {});

/// Log-uniform samples in [lo, hi]^4.
std::vector<LParams> random_lparams(int count, std::uint64_t seed = 0x5EED, double lo = 0.2, double hi = 5.0);

// ---------------------------------------------------------------------------
// Campaign plumbing

/// Runs tasks on `jobs` worker threads; results keep the task order.
std::vector<VerificationOutcome> run_parallel(const std::vector<std::function<VerificationOutcome()>>& tasks,
                                              int jobs);

/// HOTSPOTS_JOBS if set and positive, else 1.
int default_jobs();

nlohmann::json campaign_json(const std::string& name, const std::vector<VerificationOutcome>& outcomes);

/// claim,domain,params,levels,status,margin,value,error (one row per outcome, worst margin).
void write_summary_csv(std::ostream& os, const std::vector<VerificationOutcome>& outcomes);

}  // namespace hotspots
