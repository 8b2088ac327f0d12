#include "transit/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace transit {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::vector<double> residual_capacities(const EAGraph& g, const std::vector<double>& x) {
  std::vector<double> q(g.arcs.size(), kInf);
  for (size_t nid = 0; nid < g.nodes.size(); ++nid) {
    const auto& prio = g.priority_order[nid];
    if (prio.empty()) continue;
    int ride = g.riding_arc_of_dep[nid];
    double u = ride >= 0 ? g.arcs[ride].capacity : g.arcs[prio.front()].capacity;
    double used = 0.0;
    for (int aid : prio) {
      used += x[aid];
      q[aid] = u - used;
    }
  }
  return q;
}

double route_capacity(const EAGraph& g, const route_t& r, const std::vector<double>& q) {
  (void)g;
  double m = kInf;
  for (int aid : r.priority) m = std::min(m, q[aid]);
  return m;
}

double relative_route_capacity(const EAGraph& g, const route_t& r_to,
                               const route_t& r_from, const std::vector<double>& q) {
  (void)g;
  double m = kInf;
  for (int aid : r_to.priority) {
    bool shared = std::find(r_from.priority.begin(), r_from.priority.end(), aid) !=
                  r_from.priority.end();
    if (!shared) m = std::min(m, q[aid]);
  }
  return m;  // +inf when every priority arc of r_to is shared with r_from
}

double fb(double a, double b) { return std::sqrt(a * a + b * b) - (a + b); }

double merit(const EAGraph& g, const std::vector<double>& v, const std::vector<double>& x) {
  auto q = residual_capacities(g, x);
  double psi = 0.0;
  for (int aid : g.priority_arcs) {
    double phi = fb(v[aid], q[aid]);
    psi += phi * phi;
  }
  return psi;
}

namespace {

// Shared diagnostics assembly for both notions of equilibrium.
EquilibriumReport make_report(const EAGraph& g, const CostModel& cm,
                              const std::vector<route_t>& routes,
                              const std::vector<double>& f, double tol, bool relative) {
  EquilibriumReport rep;
  const Instance& inst = *g.inst;
  auto x = arc_flows(g, routes, f);
  auto q = residual_capacities(g, x);

  rep.routes.resize(routes.size());
  std::vector<double> cost(routes.size());
  for (size_t r = 0; r < routes.size(); ++r) {
    cost[r] = cm.route_cost(routes[r], x);
    rep.routes[r].flow = f[r];
    rep.routes[r].cost = cost[r];
    rep.routes[r].capacity = route_capacity(g, routes[r], q);
  }

  // Feasibility: demand conservation and riding capacities.
  rep.feasible = true;
  std::vector<double> served(inst.demand.size(), 0.0);
  for (size_t r = 0; r < routes.size(); ++r) {
    served[routes[r].demand] += f[r];
    if (f[r] < -tol) {
      rep.feasible = false;
      rep.violations.push_back("negative flow on route " + routes[r].label);
    }
  }
  for (size_t w = 0; w < inst.demand.size(); ++w) {
    if (std::abs(served[w] - inst.demand[w].quantity) >
        tol * std::max(1.0, inst.demand[w].quantity)) {
      rep.feasible = false;
      std::ostringstream os;
      os << "demand class " << w << " served " << served[w] << " of "
         << inst.demand[w].quantity;
      rep.violations.push_back(os.str());
    }
  }
  for (const auto& a : g.arcs)
    if (a.kind == ArcKind::Riding && x[a.id] > a.capacity + tol) {
      rep.feasible = false;
      rep.violations.push_back("capacity exceeded on " + g.describe_arc(a.id));
    }

  // mu per class: maximum cost among used routes.
  rep.mu.assign(inst.demand.size(), 0.0);
  std::vector<bool> any(inst.demand.size(), false);
  for (size_t r = 0; r < routes.size(); ++r)
    if (f[r] > tol) {
      int w = routes[r].demand;
      rep.mu[w] = any[w] ? std::max(rep.mu[w], cost[r]) : cost[r];
      any[w] = true;
    }

  // Dominance sums.
  bool clean = true;
  for (size_t r = 0; r < routes.size(); ++r) {
    double qt = 0.0, qh = 0.0;
    for (size_t r2 = 0; r2 < routes.size(); ++r2) {
      if (r2 == r || routes[r2].demand != routes[r].demand) continue;
      if (cost[r2] < cost[r] - kTolCost) {
        qt += rep.routes[r2].capacity;
        qh += relative_route_capacity(g, routes[r2], routes[r], q);
      }
    }
    rep.routes[r].q_tilde = qt;
    rep.routes[r].q_hat = qh;
    double gate = relative ? qh : qt;
    if (f[r] > tol && gate > tol) {
      clean = false;
      std::ostringstream os;
      os << (relative ? "R-UEIP" : "UEIP") << " violation on route " << routes[r].label
         << ": flow " << f[r] << ", " << (relative ? "Qhat " : "Qtilde ") << gate;
      rep.violations.push_back(os.str());
    }
    // Route-level V reconstruction for reporting.
    double Q = rep.routes[r].capacity;
    double m = rep.mu[routes[r].demand];
    if (Q > tol)
      rep.routes[r].v_recon = 0.0;
    else if (f[r] > tol)
      rep.routes[r].v_recon = m - cost[r];
    else
      rep.routes[r].v_recon = std::max(m - cost[r], 0.0);
  }

  if (relative)
    rep.rueip = rep.feasible && clean;
  else
    rep.ueip = rep.feasible && clean;
  return rep;
}

}  // namespace

EquilibriumReport verify_ueip(const EAGraph& g, const CostModel& cm,
                              const std::vector<route_t>& routes,
                              const std::vector<double>& f, double tol) {
  return make_report(g, cm, routes, f, tol, false);
}

EquilibriumReport verify_rueip(const EAGraph& g, const CostModel& cm,
                               const std::vector<route_t>& routes,
                               const std::vector<double>& f, double tol) {
  return make_report(g, cm, routes, f, tol, true);
}

std::vector<double> reconstruct_route_v(const EAGraph& g, const CostModel& cm,
                                        const std::vector<route_t>& routes,
                                        const std::vector<double>& f,
                                        const std::vector<double>& mu, double tol) {
  auto x = arc_flows(g, routes, f);
  auto q = residual_capacities(g, x);
  std::vector<double> V(routes.size(), 0.0);
  for (size_t r = 0; r < routes.size(); ++r) {
    double Q = route_capacity(g, routes[r], q);
    double c = cm.route_cost(routes[r], x);
    double m = mu[routes[r].demand];
    if (Q > tol)
      V[r] = 0.0;
    else if (f[r] > tol)
      V[r] = m - c;
    else
      V[r] = std::max(m - c, 0.0);
  }
  return V;
}

namespace {
double natural_residual(double a, double b) { return std::abs(std::min(a, b)); }
}  // namespace

std::vector<double> route_ncp_residuals(const EAGraph& g, const CostModel& cm,
                                        const std::vector<route_t>& routes,
                                        const std::vector<double>& f,
                                        const std::vector<double>& mu,
                                        const std::vector<double>& V) {
  auto x = arc_flows(g, routes, f);
  auto q = residual_capacities(g, x);
  std::vector<double> res;
  for (size_t r = 0; r < routes.size(); ++r) {
    double c = cm.route_cost(routes[r], x);
    res.push_back(natural_residual(f[r], c + V[r] - mu[routes[r].demand]));
  }
  std::vector<double> served(g.inst->demand.size(), 0.0);
  for (size_t r = 0; r < routes.size(); ++r) served[routes[r].demand] += f[r];
  for (size_t w = 0; w < g.inst->demand.size(); ++w)
    res.push_back(natural_residual(mu[w], served[w] - g.inst->demand[w].quantity));
  for (size_t r = 0; r < routes.size(); ++r)
    res.push_back(natural_residual(V[r], route_capacity(g, routes[r], q)));
  return res;
}

std::vector<double> arc_ncp_residuals(const EAGraph& g, const CostModel& cm,
                                      const std::vector<route_t>& routes,
                                      const std::vector<double>& f,
                                      const std::vector<double>& mu,
                                      const std::vector<double>& v) {
  auto x = arc_flows(g, routes, f);
  auto q = residual_capacities(g, x);
  std::vector<double> res;
  for (size_t r = 0; r < routes.size(); ++r) {
    double chat = cm.route_generalized_cost(routes[r], x, v);
    res.push_back(natural_residual(f[r], chat - mu[routes[r].demand]));
  }
  std::vector<double> served(g.inst->demand.size(), 0.0);
  for (size_t r = 0; r < routes.size(); ++r) served[routes[r].demand] += f[r];
  for (size_t w = 0; w < g.inst->demand.size(); ++w)
    res.push_back(natural_residual(mu[w], served[w] - g.inst->demand[w].quantity));
  for (int aid : g.priority_arcs) res.push_back(natural_residual(v[aid], q[aid]));
  return res;
}

}  // namespace transit
