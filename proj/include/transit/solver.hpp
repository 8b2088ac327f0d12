#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "transit/assign.hpp"

namespace transit {

struct SolverOptions {
  double epsilon1 = 1e-6;     // merit stopping tolerance
  double gamma = 1e-4;        // Armijo sufficient-decrease constant
  int max_iters = 500;        // outer projected-gradient iterations
  int max_backtracks = 40;    // 2^-i line-search halvings
  double fd_step = 1e-4;      // central-difference step for dx/dv
  bool active_set_fd = true;  // restrict FD coordinates to the active set
  double active_band_frac = 0.02;  // |q| <= frac*u counts as active
  double regularizer = -1.0;  // <0 = auto (1e-6*eta1; 1e-2*eta1 if eta2==0)
  bool use_initializer = true;     // relaxed capacitated warm start for v0
  uint64_t seed = 20240901;        // multi-start RNG seed
  int residual_restarts = 20;      // solve_residual_min multi-start budget
  bool log = false;
};

struct SolveResult {
  bool certified = false;      // verify_rueip passed at the final point
  bool stalled = false;
  std::vector<route_t> routes;
  std::vector<double> f;
  std::vector<double> x;
  std::vector<double> v;       // priority-arc anxiety prices (size = arcs)
  std::vector<double> mu;      // per demand class
  double merit_value = 0.0;
  double residual = 0.0;       // max NCP residual at the final point
  int iterations = 0;
  std::vector<double> merit_trajectory;  // accepted-step merit values
  std::string log;
};

// Effective regularizer for an instance under the given options.
double effective_regularizer(const Instance& inst, const SolverOptions& opts);

// Merit gradient via the FB chain rule with finite-difference flow
// sensitivities. `coords` (optional) limits FD to those v-coordinates; the
// returned vector is always full-size with zeros elsewhere.
std::vector<double> gradient_merit(const EAGraph& g, const CostModel& cm,
                                   const std::vector<double>& v,
                                   const SolverOptions& opts,
                                   const AssignState* warm = nullptr,
                                   const std::vector<int>* coords = nullptr);

// Projected-gradient implicit method on the MPEC reformulation.
// `warm_f` (optional, aligned with `warm_routes`) seeds the column pool.
SolveResult solve_implicit(const EAGraph& g, const SolverOptions& opts = {},
                           const std::vector<route_t>* warm_routes = nullptr,
                           const std::vector<double>* warm_f = nullptr,
                           const std::vector<double>* v0 = nullptr);

// Direct minimization of the summed squared FB residuals of the arc-level
// NCP over (f, mu, v) (Levenberg-Marquardt + seeded multi-start). Accepted
// only when the residual meets epsilon1 and verify_rueip certifies.
SolveResult solve_residual_min(const EAGraph& g, const SolverOptions& opts = {},
                               const std::vector<double>* f0 = nullptr,
                               const std::vector<double>* mu0 = nullptr,
                               const std::vector<double>* v0 = nullptr,
                               const std::vector<route_t>* routes0 = nullptr);

}  // namespace transit
