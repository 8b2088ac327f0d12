#include "transit/eagraph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace transit {

namespace {

int kind_rank(ArcKind k) {
  switch (k) {
    case ArcKind::Dwelling: return 0;
    case ArcKind::Boarding: return 1;
    case ArcKind::Transfer: return 2;
    default: return 3;
  }
}

// Chronological rank for nodes sharing a timestamp: arrivals resolve before
// departures so same-minute transfers are loadable.
int node_rank(NodeKind k) {
  switch (k) {
    case NodeKind::Origin: return 0;
    case NodeKind::SetOut: return 1;
    case NodeKind::VehicleArrival: return 2;
    case NodeKind::VehicleDeparture: return 3;
    case NodeKind::Destination: return 4;
  }
  return 5;
}

}  // namespace

int EAGraph::node_count(NodeKind k) const {
  int n = 0;
  for (const auto& e : nodes) n += (e.kind == k);
  return n;
}

std::string EAGraph::describe_node(int id) const {
  const EventNode& e = nodes[id];
  std::ostringstream os;
  switch (e.kind) {
    case NodeKind::Origin: os << "origin " << inst->origins[e.origin]; break;
    case NodeKind::Destination: os << "destination " << inst->destinations[e.destination]; break;
    case NodeKind::SetOut:
      os << "set-out " << inst->origins[e.origin] << " @ " << format_minute(e.start_time);
      break;
    case NodeKind::VehicleDeparture:
    case NodeKind::VehicleArrival: {
      const Line& line = inst->lines[e.line];
      os << (e.kind == NodeKind::VehicleDeparture ? "dep " : "arr ") << line.id << " run "
         << (e.run + 1) << " @ " << inst->stops[line.stops[e.stop_pos]] << " "
         << format_minute(e.timestamp);
      break;
    }
  }
  return os.str();
}

std::string EAGraph::describe_arc(int id) const {
  const ActivityArc& a = arcs[id];
  static const char* names[] = {"access", "boarding", "dwelling", "riding", "transfer", "egress"};
  std::ostringstream os;
  os << names[static_cast<int>(a.kind)] << " [" << describe_node(a.tail) << " -> "
     << describe_node(a.head) << "]";
  return os.str();
}

EAGraph build_graph(const Instance& inst) {
  EAGraph g;
  g.inst = &inst;

  auto add_node = [&](EventNode e) {
    g.nodes.push_back(e);
    return static_cast<int>(g.nodes.size()) - 1;
  };

  g.origin_node.assign(inst.origins.size(), -1);
  g.dest_node.assign(inst.destinations.size(), -1);
  for (size_t o = 0; o < inst.origins.size(); ++o) {
    EventNode e;
    e.kind = NodeKind::Origin;
    e.origin = static_cast<int>(o);
    e.timestamp = kNegInf;
    g.origin_node[o] = add_node(e);
  }
  for (size_t d = 0; d < inst.destinations.size(); ++d) {
    EventNode e;
    e.kind = NodeKind::Destination;
    e.destination = static_cast<int>(d);
    e.timestamp = kPosInf;
    g.dest_node[d] = add_node(e);
  }

  // Walk lookup tables.
  std::vector<std::vector<std::pair<int, Minute>>> access_of(inst.origins.size());
  for (const auto& w : inst.walk_access) access_of[w.place].push_back({w.stop, w.minutes});
  std::vector<std::vector<std::pair<int, Minute>>> egress_of(inst.destinations.size());
  for (const auto& w : inst.walk_egress) egress_of[w.place].push_back({w.stop, w.minutes});

  // Vehicle event nodes. Arrival nodes at a run's first stop and departure
  // nodes at its last stop carry sentinel timestamps and no usable activity,
  // so they are not materialized.
  std::map<std::tuple<int, int, int>, int> dep_node, arr_node;
  for (size_t l = 0; l < inst.lines.size(); ++l) {
    const Line& line = inst.lines[l];
    int n = static_cast<int>(line.stops.size());
    for (size_t jr = 0; jr < line.runs.size(); ++jr) {
      const Run& run = line.runs[jr];
      for (int i = 0; i < n; ++i) {
        EventNode e;
        e.line = static_cast<int>(l);
        e.run = static_cast<int>(jr);
        e.stop_pos = i;
        if (i < n - 1) {
          e.kind = NodeKind::VehicleDeparture;
          e.timestamp = run.departures[i];
          dep_node[{(int)l, (int)jr, i}] = add_node(e);
        }
        if (i > 0) {
          e.kind = NodeKind::VehicleArrival;
          e.timestamp = run.arrivals[i];
          arr_node[{(int)l, (int)jr, i}] = add_node(e);
        }
      }
    }
  }

  // Candidate set-out times.
  g.start_times.assign(inst.origins.size(), {});
  if (inst.auto_start_times) {
    for (size_t o = 0; o < inst.origins.size(); ++o) {
      std::set<Minute> cand;
      for (auto [stop, walk] : access_of[o])
        for (const auto& line : inst.lines)
          for (size_t i = 0; i + 1 < line.stops.size(); ++i)
            if (line.stops[i] == stop)
              for (const auto& run : line.runs)
                if (is_finite(run.departures[i])) cand.insert(run.departures[i] - walk);
      g.start_times[o].assign(cand.begin(), cand.end());
    }
  } else {
    g.start_times = inst.start_times;
  }

  std::vector<std::vector<int>> setout_nodes(inst.origins.size());
  for (size_t o = 0; o < inst.origins.size(); ++o)
    for (Minute t : g.start_times[o]) {
      EventNode e;
      e.kind = NodeKind::SetOut;
      e.origin = static_cast<int>(o);
      e.start_time = t;
      e.timestamp = t;
      setout_nodes[o].push_back(add_node(e));
    }

  auto add_arc = [&](ActivityArc a) {
    a.id = static_cast<int>(g.arcs.size());
    g.arcs.push_back(a);
    return a.id;
  };

  // (1) Access.
  for (size_t o = 0; o < inst.origins.size(); ++o)
    for (int sn : setout_nodes[o]) {
      ActivityArc a;
      a.kind = ArcKind::Access;
      a.tail = g.origin_node[o];
      a.head = sn;
      add_arc(a);
    }

  // (2) Boarding: set-out -> departure when the passenger can reach the stop
  // in time, optionally limited to the earliest K feasible runs per
  // (stop, line).
  int K = inst.boarding_runs_limit;
  for (size_t o = 0; o < inst.origins.size(); ++o)
    for (int sn : setout_nodes[o]) {
      Minute t = g.nodes[sn].start_time;
      for (auto [stop, walk] : access_of[o]) {
        for (size_t l = 0; l < inst.lines.size(); ++l) {
          const Line& line = inst.lines[l];
          for (size_t i = 0; i + 1 < line.stops.size(); ++i) {
            if (line.stops[i] != stop) continue;
            // Runs sorted by departure at this stop.
            std::vector<std::pair<Minute, int>> deps;
            for (size_t jr = 0; jr < line.runs.size(); ++jr) {
              Minute dep = line.runs[jr].departures[i];
              if (is_finite(dep) && dep >= t + walk) deps.push_back({dep, (int)jr});
            }
            std::sort(deps.begin(), deps.end());
            int limit = K > 0 ? std::min<int>(K, deps.size()) : (int)deps.size();
            for (int k = 0; k < limit; ++k) {
              ActivityArc a;
              a.kind = ArcKind::Boarding;
              a.tail = sn;
              a.head = dep_node.at({(int)l, deps[k].second, (int)i});
              a.duration = deps[k].first - t;  // waiting measured from set-out
              a.capacity = line.capacity;
              a.stop_arrival = t + walk;
              add_arc(a);
            }
          }
        }
      }
    }

  // (3) Dwelling at interior stops, (4) riding between consecutive stops.
  for (size_t l = 0; l < inst.lines.size(); ++l) {
    const Line& line = inst.lines[l];
    int n = static_cast<int>(line.stops.size());
    for (size_t jr = 0; jr < line.runs.size(); ++jr) {
      const Run& run = line.runs[jr];
      for (int i = 1; i < n - 1; ++i) {
        ActivityArc a;
        a.kind = ArcKind::Dwelling;
        a.tail = arr_node.at({(int)l, (int)jr, i});
        a.head = dep_node.at({(int)l, (int)jr, i});
        a.duration = run.departures[i] - run.arrivals[i];
        a.capacity = line.capacity;
        add_arc(a);
      }
      for (int i = 0; i < n - 1; ++i) {
        ActivityArc a;
        a.kind = ArcKind::Riding;
        a.tail = dep_node.at({(int)l, (int)jr, i});
        a.head = arr_node.at({(int)l, (int)jr, i + 1});
        a.duration = run.arrivals[i + 1] - run.departures[i];
        a.fare = line.fares.empty() ? 0.0 : line.fares[i];
        a.capacity = line.capacity;
        add_arc(a);
      }
    }
  }

  // (5) Transfers between distinct lines at shared stops.
  for (const auto& [akey, an] : arr_node) {
    auto [l, jr, i] = akey;
    Minute tarr = g.nodes[an].timestamp;
    int stop = inst.lines[l].stops[i];
    for (const auto& [dkey, dn] : dep_node) {
      auto [l2, jr2, i2] = dkey;
      if (l2 == l) continue;  // whole-line exclusion (see enumeration fixtures)
      if (inst.lines[l2].stops[i2] != stop) continue;
      Minute tdep = g.nodes[dn].timestamp;
      if (!is_finite(tdep) || tarr > tdep) continue;
      ActivityArc a;
      a.kind = ArcKind::Transfer;
      a.tail = an;
      a.head = dn;
      a.duration = tdep - tarr;
      a.capacity = inst.lines[l2].capacity;
      a.stop_arrival = tarr;
      add_arc(a);
    }
  }

  // (6) Egress.
  for (const auto& [akey, an] : arr_node) {
    auto [l, jr, i] = akey;
    int stop = inst.lines[l].stops[i];
    for (size_t d = 0; d < inst.destinations.size(); ++d)
      for (auto [s, walk] : egress_of[d])
        if (s == stop) {
          ActivityArc a;
          a.kind = ArcKind::Egress;
          a.tail = an;
          a.head = g.dest_node[d];
          a.walk = walk;
          add_arc(a);
        }
  }

  // Adjacency.
  g.out_arcs.assign(g.nodes.size(), {});
  g.in_arcs.assign(g.nodes.size(), {});
  for (const auto& a : g.arcs) {
    g.out_arcs[a.tail].push_back(a.id);
    g.in_arcs[a.head].push_back(a.id);
  }

  // Priority structure per departure event: continuance (dwelling) first,
  // then boarding/transfer in FCFS order of arrival at the stop, with a
  // deterministic tie-break.
  g.priority_order.assign(g.nodes.size(), {});
  g.riding_arc_of_dep.assign(g.nodes.size(), -1);
  for (size_t nid = 0; nid < g.nodes.size(); ++nid) {
    if (g.nodes[nid].kind != NodeKind::VehicleDeparture) continue;
    for (int aid : g.out_arcs[nid])
      if (g.arcs[aid].kind == ArcKind::Riding) g.riding_arc_of_dep[nid] = aid;
    std::vector<int> prio;
    for (int aid : g.in_arcs[nid])
      if (is_priority_kind(g.arcs[aid].kind)) prio.push_back(aid);
    std::sort(prio.begin(), prio.end(), [&](int lhs, int rhs) {
      const ActivityArc& a = g.arcs[lhs];
      const ActivityArc& b = g.arcs[rhs];
      bool adw = a.kind == ArcKind::Dwelling, bdw = b.kind == ArcKind::Dwelling;
      if (adw != bdw) return adw;
      if (a.stop_arrival != b.stop_arrival) return a.stop_arrival < b.stop_arrival;
      if (a.kind != b.kind) return kind_rank(a.kind) < kind_rank(b.kind);
      const EventNode& ta = g.nodes[a.tail];
      const EventNode& tb = g.nodes[b.tail];
      auto key = [](const EventNode& e) {
        return std::make_tuple(e.line, e.run, e.origin, e.start_time);
      };
      if (key(ta) != key(tb)) return key(ta) < key(tb);
      return lhs < rhs;
    });
    g.priority_order[nid] = std::move(prio);
    for (int aid : g.priority_order[nid]) g.priority_arcs.push_back(aid);
  }
  std::sort(g.priority_arcs.begin(), g.priority_arcs.end());

  // Topological-chronological order (Kahn with a deterministic min-heap).
  std::vector<int> indeg(g.nodes.size(), 0);
  for (const auto& a : g.arcs) ++indeg[a.head];
  using Key = std::tuple<Minute, int, int>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> heap;
  for (size_t nid = 0; nid < g.nodes.size(); ++nid)
    if (indeg[nid] == 0)
      heap.push({g.nodes[nid].timestamp, node_rank(g.nodes[nid].kind), (int)nid});
  while (!heap.empty()) {
    auto [ts, rk, nid] = heap.top();
    heap.pop();
    g.topo_order.push_back(nid);
    for (int aid : g.out_arcs[nid]) {
      int h = g.arcs[aid].head;
      if (--indeg[h] == 0)
        heap.push({g.nodes[h].timestamp, node_rank(g.nodes[h].kind), h});
    }
  }
  if (g.topo_order.size() != g.nodes.size())
    throw std::runtime_error("event-activity graph contains a cycle (timetable inconsistency)");
  return g;
}

namespace {

std::string route_label(const EAGraph& g, const route_t& r) {
  std::ostringstream os;
  os << format_minute(r.start_time);
  int current_line = -1;
  for (int aid : r.arcs) {
    const ActivityArc& a = g.arcs[aid];
    if (a.kind == ArcKind::Boarding || a.kind == ArcKind::Transfer) {
      const EventNode& h = g.nodes[a.head];
      const Line& line = g.inst->lines[h.line];
      if (a.kind == ArcKind::Transfer) {
        os << " - Stop " << g.inst->stops[line.stops[h.stop_pos]];
      }
      os << " - " << line.id;
      if (line.runs.size() > 1) os << " Run " << (h.run + 1);
      current_line = h.line;
    }
  }
  (void)current_line;
  return os.str();
}

void dfs_routes(const EAGraph& g, int demand, int node, int dest_node, int transfers,
                int max_transfers, std::vector<int>& stack, std::vector<route_t>& out) {
  if (node == dest_node) {
    route_t r;
    r.demand = demand;
    r.arcs = stack;
    for (int aid : stack)
      if (is_priority_kind(g.arcs[aid].kind)) r.priority.push_back(aid);
    r.start_time = g.nodes[g.arcs[stack.front()].head].start_time;
    const ActivityArc& last = g.arcs[stack.back()];
    r.arrival_time = g.nodes[last.tail].timestamp + last.walk;
    r.label = route_label(g, r);
    out.push_back(std::move(r));
    return;
  }
  for (int aid : g.out_arcs[node]) {
    const ActivityArc& a = g.arcs[aid];
    // Stay within this class's commodity sub-network.
    if (a.kind == ArcKind::Egress && a.head != dest_node) continue;
    int tr = transfers + (a.kind == ArcKind::Transfer ? 1 : 0);
    if (max_transfers >= 0 && tr > max_transfers) continue;
    stack.push_back(aid);
    dfs_routes(g, demand, a.head, dest_node, tr, max_transfers, stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<route_t> enumerate_routes(const EAGraph& g, int demand, int max_transfers) {
  const DemandClass& d = g.inst->demand[demand];
  std::vector<route_t> out;
  std::vector<int> stack;
  dfs_routes(g, demand, g.origin_node[d.origin], g.dest_node[d.destination], 0,
             max_transfers, stack, out);
  std::sort(out.begin(), out.end(), [](const route_t& a, const route_t& b) {
    if (a.start_time != b.start_time) return a.start_time < b.start_time;
    if (a.arrival_time != b.arrival_time) return a.arrival_time < b.arrival_time;
    return a.label < b.label;
  });
  return out;
}

std::vector<route_t> enumerate_all_routes(const EAGraph& g, int max_transfers) {
  std::vector<route_t> out;
  for (size_t w = 0; w < g.inst->demand.size(); ++w) {
    auto rs = enumerate_routes(g, static_cast<int>(w), max_transfers);
    out.insert(out.end(), rs.begin(), rs.end());
  }
  return out;
}

}  // namespace transit
