#pragma once

#include <Eigen/Dense>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace grcc {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Error categories map one-to-one onto CLI exit codes.
enum class ErrorCategory { parse, model, solver, certification, usage };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory cat, const std::string& msg)
      : std::runtime_error(msg), category_(cat) {}
  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(ErrorCategory::parse, msg) {}
};

class ModelError : public Error {
 public:
  explicit ModelError(const std::string& msg) : Error(ErrorCategory::model, msg) {}
};

class SolverError : public Error {
 public:
  explicit SolverError(const std::string& msg) : Error(ErrorCategory::solver, msg) {}
};

enum class BusType { slack, pv, pq };

inline bool exact_equal(const MatrixXd& a, const MatrixXd& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         (a.rows() == 0 || a.cols() == 0 || (a.array() == b.array()).all());
}

struct Bus {
  int id = 0;
  BusType type = BusType::pq;
  bool operator==(const Bus&) const = default;
};

struct Branch {
  int from = 0;            // bus id
  int to = 0;              // bus id
  double reactance = 0.0;  // pu
  double flow_limit = 0.0; // pu MW; +inf means unlimited
  bool operator==(const Branch&) const = default;
};

struct Generator {
  int bus = 0;
  double p_min = 0.0;      // pu MW
  double p_max = 0.0;      // pu MW
  double adj_down = 0.0;   // pu MW, <= 0
  double adj_up = 0.0;     // pu MW, >= 0
  double cost_quad = 0.0;  // cost = cost_quad*p^2 + cost_lin*p + cost_const, p in pu
  double cost_lin = 0.0;
  double cost_const = 0.0;
  bool operator==(const Generator&) const = default;
};

struct WindFarm {
  int bus = 0;
  double forecast = 0.0;   // pu MW
  bool operator==(const WindFarm&) const = default;
};

// All quantities per-unit on base_mva. Loads are a per-bus vector aligned
// with `buses`.
struct PowerCase {
  std::string name;
  double base_mva = 100.0;
  std::vector<Bus> buses;
  std::vector<Branch> branches;
  std::vector<Generator> generators;
  VectorXd loads;                 // size = buses.size()
  std::vector<WindFarm> wind_farms;

  int bus_index(int bus_id) const;          // position in `buses`, -1 if absent
  int slack_bus() const;                    // bus id of the slack

  bool operator==(const PowerCase& o) const {
    return name == o.name && base_mva == o.base_mva && buses == o.buses &&
           branches == o.branches && generators == o.generators &&
           exact_equal(loads, o.loads) && wind_farms == o.wind_farms;
  }
};

enum class SigmaSumMode { full_covariance, paper_literal };

struct SolverTolerances {
  double lp_tol = 1e-8;
  double cone_tol = 1e-9;
  int max_iterations = 200;
  bool operator==(const SolverTolerances&) const = default;
};

// Study configuration: risk levels, ambiguity radii and statistical moments.
// Vectors are fully broadcast at parse time (one entry per generator/line/farm).
struct StudyConfig {
  std::string name;
  VectorXd eps_gen;   // per generator, in (0,1)
  VectorXd eps_adj;   // per generator
  VectorXd eps_line;  // per branch
  double gamma1 = 0.1;
  double gamma2 = 1.1;
  VectorXd mu0;       // per wind farm, pu MW
  MatrixXd sigma0;    // farms x farms, pu MW^2, symmetric PSD
  SigmaSumMode sigma_s_mode = SigmaSumMode::full_covariance;
  int slack_bus = -1;                 // -1: use the case's slack
  SolverTolerances tolerances;
  std::vector<int> wind_expansion_buses;  // candidate buses for wind sweeps

  bool operator==(const StudyConfig& o) const {
    return name == o.name && exact_equal(eps_gen, o.eps_gen) &&
           exact_equal(eps_adj, o.eps_adj) && exact_equal(eps_line, o.eps_line) &&
           gamma1 == o.gamma1 && gamma2 == o.gamma2 && exact_equal(mu0, o.mu0) &&
           exact_equal(sigma0, o.sigma0) && sigma_s_mode == o.sigma_s_mode &&
           slack_bus == o.slack_bus && tolerances == o.tolerances &&
           wind_expansion_buses == o.wind_expansion_buses;
  }
};

inline int PowerCase::bus_index(int bus_id) const {
  for (size_t i = 0; i < buses.size(); ++i)
    if (buses[i].id == bus_id) return static_cast<int>(i);
  return -1;
}

inline int PowerCase::slack_bus() const {
  for (const auto& b : buses)
    if (b.type == BusType::slack) return b.id;
  return -1;
}

}  // namespace grcc
