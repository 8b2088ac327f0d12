#pragma once

#include <vector>

#include "transit/eagraph.hpp"

namespace transit {

// Free-flow latest departure tau_free per demand class: the latest candidate
// set-out time whose capacity-free earliest arrival (incl. egress walk) is
// within the desired window end. Honors DemandClass::tau_free overrides.
std::vector<Minute> free_flow_latest_departure(const EAGraph& g);

struct CostModel {
  const EAGraph* g = nullptr;
  std::vector<Minute> tau_free;   // per demand class
  // Strictly increasing riding-arc regularizer slope (cost += reg * x / u);
  // keeps the lower level single-valued when eta2 == 0. Excluded from
  // reported costs.
  double regularizer = 0.0;

  explicit CostModel(const EAGraph& graph, double reg = 0.0);

  // Flow-dependent arc cost for demand class `w` given total arc flow x_a.
  // `regularized` adds the epsilon term (used inside the assignment loop).
  double arc_cost(int arc, int w, double x_a, bool regularized) const;
  // d(arc_cost)/dx, right-hand one-sided derivative of the crowding term.
  double arc_cost_derivative(int arc, double x_a, bool regularized) const;

  double route_cost(const route_t& r, const std::vector<double>& x,
                    bool regularized = false) const;
  // Generalized cost: route cost plus the anxiety prices v on the route's
  // priority arcs.
  double route_generalized_cost(const route_t& r, const std::vector<double>& x,
                                const std::vector<double>& v,
                                bool regularized = false) const;
};

// Aggregates route flows into arc flows (x has size g.arcs.size()).
std::vector<double> arc_flows(const EAGraph& g, const std::vector<route_t>& routes,
                              const std::vector<double>& f);

}  // namespace transit
