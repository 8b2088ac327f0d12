#pragma once

#include <functional>
#include <vector>

#include "transit/equilibrium.hpp"

namespace transit {

struct AssignOptions {
  double tol_gap = 1e-10;       // relative equilibration gap
  int max_outer = 200;          // column generation rounds
  int max_inner = 60;           // gradient-projection sweeps per round
};

struct AssignState {
  std::vector<route_t> routes;     // column pool (all classes)
  std::vector<double> f;           // route flows
  std::vector<double> x;           // arc flows
  std::vector<double> mu;          // per-class minimum generalized cost
  bool converged = false;
  int outer_iterations = 0;
};

// Cheapest route for one class under generalized costs c + extra arc prices.
// `v` prices priority arcs; `arc_extra` (optional) adds arbitrary per-arc
// costs (used by the relaxed capacitated initializer).
route_t shortest_generalized_route(const EAGraph& g, const CostModel& cm, int demand,
                                   const std::vector<double>& x,
                                   const std::vector<double>& v,
                                   const std::vector<double>* arc_extra = nullptr);

// Lower-level generalized user equilibrium at fixed anxiety prices v:
// route-based gradient projection with column generation. `warm` (optional)
// seeds the column pool and flows.
AssignState solve_generalized_ue(const EAGraph& g, const CostModel& cm,
                                 const std::vector<double>& v,
                                 const AssignOptions& opts = {},
                                 const AssignState* warm = nullptr,
                                 const std::vector<double>* arc_extra = nullptr);

struct RelaxedResult {
  AssignState state;
  std::vector<double> nu;  // riding-arc capacity multipliers
  double max_violation = 0.0;
  bool converged = false;
};

// Relaxed capacitated UE (riding-arc capacities via augmented Lagrangian);
// produces the initializer state for the implicit method.
RelaxedResult solve_relaxed_capacitated(const EAGraph& g, const CostModel& cm,
                                        const AssignOptions& opts = {},
                                        int max_alm_iters = 20,
                                        double tol_violation = 1e-6);

// v0_A = nu_riding(A) on priority arcs whose residual capacity is <= 0 at
// the relaxed solution, else 0.
std::vector<double> initial_v(const EAGraph& g, const RelaxedResult& relaxed);

}  // namespace transit
