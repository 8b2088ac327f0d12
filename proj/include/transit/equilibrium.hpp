#pragma once

#include <string>
#include <vector>

#include "transit/costs.hpp"

namespace transit {

// Residual capacity q_A(x) = u_riding(A) - sum of flows on arcs with equal
// or higher priority at head(A), for every priority arc A.
std::vector<double> residual_capacities(const EAGraph& g, const std::vector<double>& x);

// Route available capacity Q_r = min q_A over the route's priority arcs.
double route_capacity(const EAGraph& g, const route_t& r, const std::vector<double>& q);

// Relative available capacity Q^{r_to, r_from} = min q_A over priority arcs
// of r_to that are not priority arcs of r_from (+inf if the set is empty).
double relative_route_capacity(const EAGraph& g, const route_t& r_to,
                               const route_t& r_from, const std::vector<double>& q);

struct RouteDiagnostics {
  double flow = 0.0;
  double cost = 0.0;       // c_r at the given flows (no regularizer)
  double capacity = 0.0;   // Q_r
  double q_tilde = 0.0;    // sum of Q over strictly cheaper routes
  double q_hat = 0.0;      // sum of Q^{r',r} over strictly cheaper routes
  double v_recon = 0.0;    // route-level V reconstructed from (f, mu, Q)
};

struct EquilibriumReport {
  bool feasible = false;        // demand satisfied & capacities respected
  bool ueip = false;
  bool rueip = false;
  std::vector<RouteDiagnostics> routes;  // aligned with the route list
  std::vector<double> mu;                // per demand class (max used cost)
  std::vector<std::string> violations;
};

inline constexpr double kTolCost = 1e-6;   // strict-dominance comparison
inline constexpr double kTolCert = 1e-4;   // certification tolerance

EquilibriumReport verify_ueip(const EAGraph& g, const CostModel& cm,
                              const std::vector<route_t>& routes,
                              const std::vector<double>& f,
                              double tol = kTolCert);
EquilibriumReport verify_rueip(const EAGraph& g, const CostModel& cm,
                               const std::vector<route_t>& routes,
                               const std::vector<double>& f,
                               double tol = kTolCert);

// Fischer-Burmeister function and merit.
double fb(double a, double b);
// Merit Psi(v, x) = sum over priority arcs of fb(v_A, q_A(x))^2.
double merit(const EAGraph& g, const std::vector<double>& v, const std::vector<double>& x);

// Natural (min-based) residual vectors of the two NCP formulations.
// Route-level: 0<=f _|_ c+V-mu>=0; 0<=mu _|_ sum f-d>=0; 0<=V _|_ Q>=0.
std::vector<double> route_ncp_residuals(const EAGraph& g, const CostModel& cm,
                                        const std::vector<route_t>& routes,
                                        const std::vector<double>& f,
                                        const std::vector<double>& mu,
                                        const std::vector<double>& V);
// Arc-level: 0<=f _|_ chat-mu>=0; 0<=mu _|_ sum f-d>=0; 0<=v _|_ q>=0.
std::vector<double> arc_ncp_residuals(const EAGraph& g, const CostModel& cm,
                                      const std::vector<route_t>& routes,
                                      const std::vector<double>& f,
                                      const std::vector<double>& mu,
                                      const std::vector<double>& v);

// Route-level V reconstruction from (f, mu): V = 0 where Q > 0;
// mu - c where Q = 0 and f > 0; max(mu - c, 0) where Q = 0 and f = 0.
std::vector<double> reconstruct_route_v(const EAGraph& g, const CostModel& cm,
                                        const std::vector<route_t>& routes,
                                        const std::vector<double>& f,
                                        const std::vector<double>& mu,
                                        double tol = kTolCert);

}  // namespace transit
