#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hspec/clique.hpp"
#include "hspec/hypergraph.hpp"
#include "hspec/lagrange.hpp"
#include "hspec/spectral.hpp"

namespace hspec {

/// One inequality evaluated on a concrete hypergraph. Slack is oriented as
/// rhs - lhs, so slack >= 0 means the inequality holds as written.
/// Inapplicable records carry the reason in `note` and NaN sides.
struct BoundRecord {
  std::string name;
  bool applicable = false;
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
  double slack = 0.0;
  bool equality = false;  // |slack| < 1e-8
  std::string note;
};

struct BoundReport {
  std::vector<BoundRecord> records;
  bool spectral_converged = true;
  bool lagrangian_converged = true;

  /// True when some applicable record fails by more than `tol`. The checked
  /// inequalities are theorems, so this signals an implementation bug.
  bool has_violation(double tol = 1e-6) const;
};

struct AnalysisConfig {
  PowerIterationConfig power;
  int starts = 32;
  std::uint64_t seed = 0;
  double lagrange_tol = 1e-10;
};

/// Full pipeline output: shared quantities plus the bound records built
/// from them.
struct Analysis {
  int n = 0;
  int rank = 0;
  std::vector<int> types;
  std::vector<std::pair<int, long>> edge_count_by_type;
  std::vector<std::vector<int>> components;
  CliqueResult clique;
  std::optional<SpectralResult> spectral;
  std::string spectral_note;  // why spectral is absent, when it is
  std::optional<LagrangianResult> lagrangian;
  std::string lagrangian_note;
  bool ms_hypothesis = false;
  std::optional<double> predicted_lagrangian;  // when hypothesis holds, m >= 3
  BoundReport bounds;
};

// Individual checks. `rho`, `U` (eigenvector entry sum), `omega` and
// `measured_L` come from the spectral / clique / lagrange modules so one
// pipeline run can feed every record.

/// rho >= sum_{s in R} C(omega-1, s-1); equality characterizes complete
/// R-graphs (connected case).
BoundRecord check_lower_bound_rho(const Hypergraph& h, double rho, int omega);

/// omega <= m-2 + ((m-1)! rho)^{1/(m-1)}, for edge types exactly {m-1, m}.
BoundRecord check_omega_upper(const Hypergraph& h, double rho, int omega);

/// rho <= m (U/omega)^m C(omega+1, m), under the clique-value hypothesis
/// (types exactly {m-1, m}, m >= 3, complete or nonadjacent twins).
BoundRecord check_rho_upper_U(const Hypergraph& h, double rho, double U,
                              int omega);

/// rho <= m n^{m-1} / omega^m * C(omega+1, m), same applicability.
BoundRecord check_rho_upper_n(const Hypergraph& h, double rho, int omega);

/// omega >= M^2 / (M^2 - rho) for connected 2-graphs, M the entry sum of
/// the 2-norm-normalized principal eigenvector.
BoundRecord check_wilf_2graph(const Hypergraph& h, double rho, double U,
                              int omega);

/// measured L(H) against the clique prediction (1/omega)^m C(omega+1, m);
/// equality expected within optimizer tolerance when applicable.
BoundRecord check_ms_value(const Hypergraph& h, double measured_L, int omega);

/// Runs clique, spectral and Lagrangian analyses once and evaluates every
/// record. Non-convergence is captured in the report flags rather than
/// thrown, so a partial report always comes back.
Analysis analyze_hypergraph(const Hypergraph& h, const AnalysisConfig& cfg = {});

/// Just the records of analyze_hypergraph.
BoundReport full_report(const Hypergraph& h, const AnalysisConfig& cfg = {});

// Serialization. JSON field names are stable:
// name, applicable, lhs, rhs, satisfied, slack, equality, note.
std::string bounds_to_json(const BoundReport& report);
std::string bounds_to_text(const BoundReport& report);
std::string analysis_to_json(const Analysis& a);
std::string analysis_to_text(const Analysis& a);

}  // namespace hspec
