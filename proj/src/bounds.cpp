#include "hspec/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>

#include <json.hpp>

#include "hspec/comb.hpp"
#include "hspec/util.hpp"

namespace hspec {

namespace {

constexpr double kSatisfiedTol = 1e-8;
constexpr double kEqualityTol = 1e-8;
const double kNaN = std::numeric_limits<double>::quiet_NaN();

BoundRecord applicable_record(std::string name, double lhs, double rhs,
                              std::string note) {
  BoundRecord r;
  r.name = std::move(name);
  r.applicable = true;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.satisfied = r.slack >= -kSatisfiedTol;
  r.equality = std::abs(r.slack) < kEqualityTol;
  r.note = std::move(note);
  return r;
}

BoundRecord inapplicable_record(std::string name, std::string reason) {
  BoundRecord r;
  r.name = std::move(name);
  r.applicable = false;
  r.lhs = kNaN;
  r.rhs = kNaN;
  r.slack = kNaN;
  r.satisfied = false;
  r.equality = false;
  r.note = std::move(reason);
  return r;
}

bool types_are_m_and_m1(const Hypergraph& h) {
  const int m = h.rank();
  if (m < 2) return false;
  const std::vector<int> types = edge_types(h);
  return types.size() == 2 && types[0] == m - 1 && types[1] == m;
}

// The clique-value theorem scope: edge types exactly {m-1, m}, m >= 3, and
// either the complete {m,m-1}-graph or a nonadjacent twin pair. This is
// deliberately stricter than ms_hypothesis_holds, whose type clause admits
// pure m-uniform inputs for which the predicted value is not a theorem.
bool in_clique_value_scope(const Hypergraph& h, std::string* reason) {
  if (h.rank() < 3) {
    if (reason) *reason = "requires rank m >= 3";
    return false;
  }
  if (!types_are_m_and_m1(h)) {
    if (reason) *reason = "requires edge types exactly {m, m-1}";
    return false;
  }
  if (!is_complete_r_graph(h) && !find_nonadjacent_twins(h).has_value()) {
    if (reason) {
      *reason = "neither a complete {m,m-1}-graph nor nonadjacent twins";
    }
    return false;
  }
  return true;
}

}  // namespace

bool BoundReport::has_violation(double tol) const {
  for (const BoundRecord& r : records) {
    if (r.applicable && !r.satisfied && r.slack < -tol) return true;
  }
  return false;
}

BoundRecord check_lower_bound_rho(const Hypergraph& h, double rho, int omega) {
  double bound = 0.0;
  for (int s : edge_types(h)) bound += binom_double(omega - 1, s - 1);
  std::string note;
  if (is_complete_r_graph(h)) {
    note = "complete R-graph: equality expected";
  }
  const std::vector<int> types = edge_types(h);
  if (types.size() == 1) {
    if (!note.empty()) note += "; ";
    note += "uniform " + std::to_string(types[0]) +
            "-graph: bound specializes to C(omega-1, m-1)";
  }
  return applicable_record("rho_lower_clique", bound, rho, std::move(note));
}

BoundRecord check_omega_upper(const Hypergraph& h, double rho, int omega) {
  if (!types_are_m_and_m1(h)) {
    std::string reason = "requires edge types exactly {m, m-1}";
    const std::vector<int> types = edge_types(h);
    if (types.size() == 1 && types[0] == h.rank()) {
      reason += "; uniform input is covered by the rho_lower_clique record";
    }
    return inapplicable_record("omega_upper_rho", std::move(reason));
  }
  const int m = h.rank();
  const double rhs =
      m - 2 + std::pow(factorial(m - 1).convert_to<double>() * rho,
                       1.0 / (m - 1));
  return applicable_record("omega_upper_rho", omega, rhs, "");
}

BoundRecord check_rho_upper_U(const Hypergraph& h, double rho, double U,
                              int omega) {
  std::string reason;
  if (!in_clique_value_scope(h, &reason)) {
    return inapplicable_record("rho_upper_eigvec_sum", std::move(reason));
  }
  const int m = h.rank();
  const double rhs = m * detail::ipow(U / omega, m) * binom_double(omega + 1, m);
  std::string note;
  if (!is_connected(h)) {
    note = "U summed over the achieving component of a disconnected input";
  }
  return applicable_record("rho_upper_eigvec_sum", rho, rhs, std::move(note));
}

BoundRecord check_rho_upper_n(const Hypergraph& h, double rho, int omega) {
  std::string reason;
  if (!in_clique_value_scope(h, &reason)) {
    return inapplicable_record("rho_upper_dimension", std::move(reason));
  }
  const int m = h.rank();
  const double n = h.vertex_count();
  const double rhs = m * detail::ipow(n, m - 1) / detail::ipow(omega, m) *
                     binom_double(omega + 1, m);
  return applicable_record("rho_upper_dimension", rho, rhs, "");
}

BoundRecord check_wilf_2graph(const Hypergraph& h, double rho, double U,
                              int omega) {
  const std::vector<int> types = edge_types(h);
  if (types != std::vector<int>{2}) {
    return inapplicable_record("wilf_clique_lower", "requires a 2-graph");
  }
  if (!is_connected(h)) {
    return inapplicable_record("wilf_clique_lower", "requires a connected graph");
  }
  const double m2 = U * U;
  if (!(m2 > rho)) {
    return inapplicable_record("wilf_clique_lower",
                               "degenerate: M^2 <= rho");
  }
  return applicable_record("wilf_clique_lower", m2 / (m2 - rho), omega,
                           "M is the entry sum of the 2-norm-unit eigenvector");
}

BoundRecord check_ms_value(const Hypergraph& h, double measured_L, int omega) {
  std::string reason;
  if (!in_clique_value_scope(h, &reason)) {
    if (ms_hypothesis_holds(h)) {
      reason += "; outside theorem hypothesis, measured value reported only";
    }
    return inapplicable_record("motzkin_straus_value", std::move(reason));
  }
  const double predicted = predicted_L(omega, h.rank());
  return applicable_record("motzkin_straus_value", measured_L, predicted,
                           "equality expected within optimizer tolerance");
}

Analysis analyze_hypergraph(const Hypergraph& h, const AnalysisConfig& cfg) {
  Analysis a;
  a.n = h.vertex_count();
  a.rank = h.rank();
  a.types = edge_types(h);
  std::map<int, long> counts;
  for (const Edge& e : h.edges()) ++counts[static_cast<int>(e.size())];
  a.edge_count_by_type.assign(counts.begin(), counts.end());
  a.components = connected_components(h);
  a.clique = clique_number(h);
  a.ms_hypothesis = ms_hypothesis_holds(h);

  if (h.edge_count() == 0) {
    a.spectral_note = "skipped: no edges";
    a.lagrangian_note = "skipped: no edges";
  } else {
    if (h.rank() < 2) {
      a.spectral_note = "skipped: rank 1 has a degenerate eigenproblem";
    } else {
      try {
        a.spectral = spectral_radius(h, cfg.power);
      } catch (const ConvergenceError& e) {
        a.bounds.spectral_converged = false;
        a.spectral_note = std::string("power iteration did not converge: ") +
                          e.what();
      }
    }
    try {
      a.lagrangian = maximize_L(h, cfg.starts, cfg.seed, cfg.lagrange_tol);
    } catch (const Error& e) {
      if (e.code() != errc::not_converged) throw;
      a.bounds.lagrangian_converged = false;
      a.lagrangian_note = std::string("optimizer did not converge: ") + e.what();
    }
  }

  if (a.ms_hypothesis && a.rank >= 3) {
    a.predicted_lagrangian = predicted_L(a.clique.omega, a.rank);
  }

  const int omega = a.clique.omega;
  auto& records = a.bounds.records;
  if (a.spectral) {
    const double rho = a.spectral->rho;
    const double U = principal_eigenvector_sum(*a.spectral);
    records.push_back(check_lower_bound_rho(h, rho, omega));
    records.push_back(check_omega_upper(h, rho, omega));
    records.push_back(check_rho_upper_U(h, rho, U, omega));
    records.push_back(check_rho_upper_n(h, rho, omega));
    records.push_back(check_wilf_2graph(h, rho, U, omega));
  } else {
    const std::string why =
        a.spectral_note.empty() ? "spectral radius unavailable" : a.spectral_note;
    records.push_back(inapplicable_record("rho_lower_clique", why));
    records.push_back(inapplicable_record("omega_upper_rho", why));
    records.push_back(inapplicable_record("rho_upper_eigvec_sum", why));
    records.push_back(inapplicable_record("rho_upper_dimension", why));
    records.push_back(inapplicable_record("wilf_clique_lower", why));
  }
  if (a.lagrangian) {
    records.push_back(check_ms_value(h, a.lagrangian->value, omega));
  } else {
    const std::string why = a.lagrangian_note.empty()
                                ? "Lagrangian value unavailable"
                                : a.lagrangian_note;
    records.push_back(inapplicable_record("motzkin_straus_value", why));
  }

  // Consistency between the two upper bounds: the dimension form dominates
  // the eigenvector-sum form whenever both apply.
  BoundRecord* by_u = nullptr;
  BoundRecord* by_n = nullptr;
  for (BoundRecord& r : records) {
    if (r.name == "rho_upper_eigvec_sum") by_u = &r;
    if (r.name == "rho_upper_dimension") by_n = &r;
  }
  if (by_u && by_n && by_u->applicable && by_n->applicable &&
      by_n->rhs < by_u->rhs - 1e-10) {
    by_n->satisfied = false;
    by_n->note += (by_n->note.empty() ? "" : "; ");
    by_n->note += "dominance violated: bound fell below the eigenvector-sum bound";
  }

  return a;
}

BoundReport full_report(const Hypergraph& h, const AnalysisConfig& cfg) {
  return analyze_hypergraph(h, cfg).bounds;
}

// --- serialization --------------------------------------------------------

namespace {

nlohmann::ordered_json record_to_json(const BoundRecord& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["applicable"] = r.applicable;
  if (r.applicable) {
    j["lhs"] = round12(r.lhs);
    j["rhs"] = round12(r.rhs);
    j["satisfied"] = r.satisfied;
    j["slack"] = round12(r.slack);
    j["equality"] = r.equality;
  } else {
    j["lhs"] = nullptr;
    j["rhs"] = nullptr;
    j["satisfied"] = nullptr;
    j["slack"] = nullptr;
    j["equality"] = nullptr;
  }
  j["note"] = r.note;
  return j;
}

nlohmann::ordered_json records_to_json(const BoundReport& report) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const BoundRecord& r : report.records) arr.push_back(record_to_json(r));
  return arr;
}

std::vector<double> rounded(const std::vector<double>& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = round12(v[i]);
  return out;
}

}  // namespace

std::string bounds_to_json(const BoundReport& report) {
  nlohmann::ordered_json j;
  j["schema"] = "hspec/1";
  j["spectral_converged"] = report.spectral_converged;
  j["lagrangian_converged"] = report.lagrangian_converged;
  j["bounds"] = records_to_json(report);
  return j.dump(2);
}

std::string bounds_to_text(const BoundReport& report) {
  std::ostringstream os;
  os << std::left << std::setw(24) << "bound" << std::setw(20) << "lhs"
     << std::setw(20) << "rhs" << std::setw(11) << "satisfied"
     << std::setw(22) << "slack" << std::setw(10) << "equality"
     << "note" << '\n';
  for (const BoundRecord& r : report.records) {
    os << std::left << std::setw(24) << r.name;
    if (r.applicable) {
      os << std::setw(20) << fmt12(r.lhs) << std::setw(20) << fmt12(r.rhs)
         << std::setw(11) << (r.satisfied ? "yes" : "NO")
         << std::setw(22) << fmt12(r.slack)
         << std::setw(10) << (r.equality ? "yes" : "no");
    } else {
      os << std::setw(20) << "-" << std::setw(20) << "-" << std::setw(11)
         << "-" << std::setw(22) << "-" << std::setw(10) << "-";
    }
    os << r.note << '\n';
  }
  return os.str();
}

std::string analysis_to_json(const Analysis& a) {
  nlohmann::ordered_json j;
  j["schema"] = "hspec/1";
  j["n"] = a.n;
  j["rank"] = a.rank;
  j["edge_types"] = a.types;
  long edge_total = 0;
  nlohmann::ordered_json by_type = nlohmann::ordered_json::object();
  for (const auto& [card, count] : a.edge_count_by_type) {
    by_type[std::to_string(card)] = count;
    edge_total += count;
  }
  j["edge_count"] = edge_total;
  j["edge_count_by_type"] = by_type;
  j["components"] = a.components;
  j["clique"] = {{"omega", a.clique.omega},
                 {"witness", a.clique.witness},
                 {"nodes_explored", a.clique.nodes_explored}};
  if (a.spectral) {
    const SpectralResult& s = *a.spectral;
    nlohmann::ordered_json js;
    js["rho"] = round12(s.rho);
    js["lambda_lo"] = round12(s.lambda_lo);
    js["lambda_hi"] = round12(s.lambda_hi);
    js["iterations"] = s.iterations;
    js["residual"] = round12(s.residual);
    js["positive_support"] = s.positive_support;
    js["eigenvector_sum"] = round12(principal_eigenvector_sum(s));
    js["component_rho"] = rounded(s.component_rho);
    js["eigenvector"] = rounded(s.eigenvector);
    j["spectral"] = js;
  } else {
    j["spectral"] = nullptr;
    j["spectral_note"] = a.spectral_note;
  }
  if (a.lagrangian) {
    const LagrangianResult& l = *a.lagrangian;
    j["lagrangian"] = {{"value", round12(l.value)},
                       {"maximizer", rounded(l.maximizer.weights())},
                       {"kkt_residual", round12(l.kkt_residual)},
                       {"starts_used", l.starts_used}};
  } else {
    j["lagrangian"] = nullptr;
    j["lagrangian_note"] = a.lagrangian_note;
  }
  j["ms_hypothesis_holds"] = a.ms_hypothesis;
  if (a.predicted_lagrangian) {
    j["predicted_lagrangian"] = round12(*a.predicted_lagrangian);
  } else {
    j["predicted_lagrangian"] = nullptr;
  }
  j["spectral_converged"] = a.bounds.spectral_converged;
  j["lagrangian_converged"] = a.bounds.lagrangian_converged;
  j["bounds"] = records_to_json(a.bounds);
  return j.dump(2);
}

std::string analysis_to_text(const Analysis& a) {
  std::ostringstream os;
  os << "n:               " << a.n << '\n';
  os << "rank:            " << a.rank << '\n';
  os << "edge types:      {";
  for (std::size_t i = 0; i < a.types.size(); ++i) {
    if (i) os << ", ";
    os << a.types[i];
  }
  os << "}\n";
  os << "edges by type:   ";
  long edge_total = 0;
  for (std::size_t i = 0; i < a.edge_count_by_type.size(); ++i) {
    if (i) os << ", ";
    os << a.edge_count_by_type[i].first << ": "
       << a.edge_count_by_type[i].second;
    edge_total += a.edge_count_by_type[i].second;
  }
  os << " (total " << edge_total << ")\n";
  os << "components:      ";
  for (std::size_t c = 0; c < a.components.size(); ++c) {
    if (c) os << ' ';
    os << '{';
    for (std::size_t i = 0; i < a.components[c].size(); ++i) {
      if (i) os << ',';
      os << a.components[c][i];
    }
    os << '}';
  }
  os << '\n';
  os << "omega:           " << a.clique.omega << "  witness {";
  for (std::size_t i = 0; i < a.clique.witness.size(); ++i) {
    if (i) os << ',';
    os << a.clique.witness[i];
  }
  os << "}\n";
  if (a.spectral) {
    os << "rho:             " << fmt12(a.spectral->rho) << '\n';
    if (a.components.size() > 1) {
      os << "component rho:   ";
      for (std::size_t i = 0; i < a.spectral->component_rho.size(); ++i) {
        if (i) os << ' ';
        os << fmt12(a.spectral->component_rho[i]);
      }
      os << '\n';
    }
    os << "U (eigvec sum):  " << fmt12(principal_eigenvector_sum(*a.spectral))
       << '\n';
    os << "residual:        " << fmt12(a.spectral->residual) << '\n';
  } else {
    os << "rho:             " << a.spectral_note << '\n';
  }
  if (a.lagrangian) {
    os << "L (measured):    " << fmt12(a.lagrangian->value) << '\n';
    os << "maximizer:       ";
    const auto& w = a.lagrangian->maximizer.weights();
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) os << ' ';
      os << fmt12(w[i]);
    }
    os << '\n';
  } else {
    os << "L (measured):    " << a.lagrangian_note << '\n';
  }
  os << "M-S hypothesis:  " << (a.ms_hypothesis ? "holds" : "does not hold")
     << '\n';
  if (a.predicted_lagrangian) {
    os << "L (predicted):   " << fmt12(*a.predicted_lagrangian) << '\n';
  }
  os << '\n' << bounds_to_text(a.bounds);
  return os.str();
}

}  // namespace hspec
