#include "transit/costs.hpp"

#include <algorithm>
#include <stdexcept>

namespace transit {

std::vector<Minute> free_flow_latest_departure(const EAGraph& g) {
  const Instance& inst = *g.inst;
  std::vector<Minute> tau(inst.demand.size(), kNegInf);
  for (size_t w = 0; w < inst.demand.size(); ++w) {
    const DemandClass& d = inst.demand[w];
    if (d.tau_free) {
      tau[w] = *d.tau_free;
      continue;
    }
    Minute best_any = kNegInf, best_on_time = kNegInf;
    // Candidate set-out times, latest first.
    std::vector<int> setouts;
    for (size_t nid = 0; nid < g.nodes.size(); ++nid)
      if (g.nodes[nid].kind == NodeKind::SetOut && g.nodes[nid].origin == d.origin)
        setouts.push_back(static_cast<int>(nid));
    for (int sn : setouts) {
      Minute t = g.nodes[sn].start_time;
      // Capacity-free earliest arrival: BFS reachability from the set-out,
      // then the best egress into this class's destination.
      std::vector<char> seen(g.nodes.size(), 0);
      std::vector<int> stack{sn};
      seen[sn] = 1;
      Minute arrive = kPosInf;
      while (!stack.empty()) {
        int nid = stack.back();
        stack.pop_back();
        for (int aid : g.out_arcs[nid]) {
          const ActivityArc& a = g.arcs[aid];
          if (a.kind == ArcKind::Egress) {
            if (a.head == g.dest_node[d.destination])
              arrive = std::min(arrive, g.nodes[a.tail].timestamp + a.walk);
            continue;
          }
          if (!seen[a.head]) {
            seen[a.head] = 1;
            stack.push_back(a.head);
          }
        }
      }
      if (arrive < kPosInf) {
        best_any = std::max(best_any, t);
        if (arrive <= d.window_end) best_on_time = std::max(best_on_time, t);
      }
    }
    tau[w] = best_on_time > kNegInf ? best_on_time : best_any;
  }
  return tau;
}

CostModel::CostModel(const EAGraph& graph, double reg) : g(&graph), regularizer(reg) {
  tau_free = free_flow_latest_departure(graph);
}

double CostModel::arc_cost(int arc, int w, double x_a, bool regularized) const {
  const ActivityArc& a = g->arcs[arc];
  const CostParams& p = g->inst->params;
  switch (a.kind) {
    case ArcKind::Access: {
      Minute t = g->nodes[a.head].start_time;
      Minute tf = tau_free[w];
      return (tf > kNegInf && tf > t) ? p.eta5 * static_cast<double>(tf - t) : 0.0;
    }
    case ArcKind::Boarding:
    case ArcKind::Transfer:
      return p.eta1 * static_cast<double>(a.duration);
    case ArcKind::Dwelling:
      return p.eta1 * a.duration + p.eta2 * std::max(0.0, x_a / a.capacity - p.rho);
    case ArcKind::Riding: {
      double c = p.eta1 * a.duration + a.fare +
                 p.eta2 * std::max(0.0, x_a / a.capacity - p.rho);
      if (regularized) c += regularizer * x_a / a.capacity;
      return c;
    }
    case ArcKind::Egress: {
      const DemandClass& d = g->inst->demand[w];
      Minute arrive = g->nodes[a.tail].timestamp + a.walk;
      double c = static_cast<double>(a.walk);
      if (arrive < d.window_begin) c += p.eta3 * static_cast<double>(d.window_begin - arrive);
      if (arrive > d.window_end) c += p.eta4 * static_cast<double>(arrive - d.window_end);
      return c;
    }
  }
  return 0.0;
}

double CostModel::arc_cost_derivative(int arc, double x_a, bool regularized) const {
  const ActivityArc& a = g->arcs[arc];
  const CostParams& p = g->inst->params;
  if (a.kind != ArcKind::Riding && a.kind != ArcKind::Dwelling) return 0.0;
  // Right-hand one-sided derivative of the crowding term.
  double der = (x_a / a.capacity >= p.rho) ? p.eta2 / a.capacity : 0.0;
  if (regularized && a.kind == ArcKind::Riding) der += regularizer / a.capacity;
  return der;
}

double CostModel::route_cost(const route_t& r, const std::vector<double>& x,
                             bool regularized) const {
  double c = 0.0;
  for (int aid : r.arcs) c += arc_cost(aid, r.demand, x[aid], regularized);
  return c;
}

double CostModel::route_generalized_cost(const route_t& r, const std::vector<double>& x,
                                         const std::vector<double>& v,
                                         bool regularized) const {
  double c = route_cost(r, x, regularized);
  for (int aid : r.priority) c += v[aid];
  return c;
}

std::vector<double> arc_flows(const EAGraph& g, const std::vector<route_t>& routes,
                              const std::vector<double>& f) {
  if (routes.size() != f.size()) throw std::runtime_error("arc_flows: size mismatch");
  std::vector<double> x(g.arcs.size(), 0.0);
  for (size_t r = 0; r < routes.size(); ++r)
    if (f[r] != 0.0)
      for (int aid : routes[r].arcs) x[aid] += f[r];
  return x;
}

}  // namespace transit
