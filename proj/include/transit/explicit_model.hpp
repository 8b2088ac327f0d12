#pragma once

#include <string>
#include <vector>

#include "transit/costs.hpp"

namespace transit {

// A transit plan: the line/board-stop/alight-stop sequence a passenger
// commits to, independent of runs. Runs are chosen during loading (FCFS).
struct PlanLeg {
  int line = -1;
  int board_pos = -1;   // position in the line's stop sequence
  int alight_pos = -1;
};

struct TransitPlan {
  int demand = -1;
  std::vector<PlanLeg> legs;
  std::string label;
};

// Plan-flow commodity: (demand class, plan, set-out time).
struct PlanCommodity {
  int plan = -1;          // index into the plan list
  Minute start_time = kNegInf;
};

std::vector<TransitPlan> enumerate_plans(const EAGraph& g, int demand, int max_transfers);
std::vector<TransitPlan> enumerate_all_plans(const EAGraph& g, int max_transfers);

struct DnlResult {
  std::vector<double> x;  // total arc flows
  // Per commodity, per arc flow (sparse by construction, stored dense over
  // the commodity's admissible arcs only via parallel arrays).
  std::vector<std::vector<int>> commodity_arcs;
  std::vector<std::vector<double>> commodity_flows;
  // Residual boarding room per departure node after loading.
  std::vector<double> residual_capacity;  // indexed by node id
  // Induced route flows / costs per commodity (path decomposition).
  std::vector<std::vector<route_t>> commodity_routes;
  std::vector<std::vector<double>> commodity_route_flows;
};

// Dynamic network loading with continuance priority + FCFS + equal-probability
// rationing, processing events in topological-chronological order.
DnlResult dnl(const EAGraph& g, const std::vector<TransitPlan>& plans,
              const std::vector<PlanCommodity>& commodities,
              const std::vector<double>& g_flows);

// Expected (flow-weighted average) cost per commodity; zero-flow commodities
// get the cost of an infinitesimal injection following first-available-run
// choices against the loaded residual capacities.
std::vector<double> expected_costs(const EAGraph& g, const CostModel& cm,
                                   const std::vector<TransitPlan>& plans,
                                   const std::vector<PlanCommodity>& commodities,
                                   const std::vector<double>& g_flows,
                                   const DnlResult& loaded);

double relative_gap(const EAGraph& g, const std::vector<TransitPlan>& plans,
                    const std::vector<PlanCommodity>& commodities,
                    const std::vector<double>& g_flows,
                    const std::vector<double>& e);

struct MsaOptions {
  double tol_rg = 1e-5;
  int max_iters = 2000000;
  int max_transfers = 2;
  bool log = false;
};

struct MsaResult {
  bool converged = false;
  std::vector<TransitPlan> plans;
  std::vector<PlanCommodity> commodities;
  std::vector<double> g_flows;
  std::vector<double> e;       // expected costs at the final loading
  DnlResult loaded;
  double rg = 0.0;
  int iterations = 0;
};

MsaResult solve_msa(const EAGraph& g, const CostModel& cm, const MsaOptions& opts = {});

}  // namespace transit
