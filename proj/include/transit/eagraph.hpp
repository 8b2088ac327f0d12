#pragma once

#include <string>
#include <vector>

#include "transit/instance.hpp"

namespace transit {

enum class NodeKind { Origin, Destination, SetOut, VehicleDeparture, VehicleArrival };
enum class ArcKind { Access, Boarding, Dwelling, Riding, Transfer, Egress };

inline bool is_priority_kind(ArcKind k) {
  return k == ArcKind::Boarding || k == ArcKind::Dwelling || k == ArcKind::Transfer;
}

struct EventNode {
  NodeKind kind;
  int origin = -1;       // Origin / SetOut
  int destination = -1;  // Destination
  int line = -1;         // vehicle events
  int run = -1;
  int stop_pos = -1;     // position within the line's stop sequence
  Minute start_time = kNegInf;  // SetOut
  Minute timestamp = kNegInf;   // event time (set-out, departure, arrival)
};

struct ActivityArc {
  int id = -1;
  ArcKind kind;
  int tail = -1;
  int head = -1;
  // Constant part of the in-vehicle duration (riding/dwelling/transfer wait).
  Minute duration = 0;
  double fare = 0.0;        // riding arcs
  double capacity = 0.0;    // riding/dwelling capacity u_A (line capacity)
  Minute walk = 0;          // access / egress walk minutes
  // Arrival time of the feeding passenger stream at the stop; orders
  // boarding/transfer arcs at a departure event (FCFS).
  Minute stop_arrival = kNegInf;
};

struct EAGraph {
  const Instance* inst = nullptr;
  std::vector<EventNode> nodes;
  std::vector<ActivityArc> arcs;
  std::vector<std::vector<int>> out_arcs;
  std::vector<std::vector<int>> in_arcs;

  std::vector<int> origin_node;        // per origin index
  std::vector<int> dest_node;          // per destination index
  std::vector<std::vector<Minute>> start_times;  // resolved per origin

  // Nodes in topological-chronological processing order.
  std::vector<int> topo_order;

  // Priority structure: for every VehicleDeparture node, its incoming
  // boarding/dwelling/transfer arcs in priority order (dwelling first, then
  // ascending arrival time at the stop, deterministic tie-break).
  std::vector<std::vector<int>> priority_order;  // indexed by node id
  std::vector<int> priority_arcs;                // all priority arc ids
  std::vector<int> riding_arc_of_dep;            // node id -> outgoing riding arc (or -1)

  int node_count(NodeKind k) const;
  std::string describe_node(int id) const;
  std::string describe_arc(int id) const;
};

// A route: acyclic event path origin -> ... -> destination for one demand
// class, with its priority arc subset cached.
struct route_t {
  int demand = -1;  // index into Instance::demand
  std::vector<int> arcs;
  std::vector<int> priority;  // subset of `arcs` (boarding/dwelling/transfer)
  Minute start_time = kNegInf;
  Minute arrival_time = kPosInf;  // at the destination, incl. egress walk
  std::string label;              // human-readable "8:15 - Line 2 - Stop D - Line 1"
};

EAGraph build_graph(const Instance& inst);

// All simple routes for one demand class (DFS over the DAG; bounded by an
// optional transfer limit, <0 = unbounded).
std::vector<route_t> enumerate_routes(const EAGraph& g, int demand, int max_transfers = -1);
std::vector<route_t> enumerate_all_routes(const EAGraph& g, int max_transfers = -1);

}  // namespace transit
