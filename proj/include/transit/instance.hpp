#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "transit/time.hpp"

namespace transit {

struct Run {
  // arrivals[i]/departures[i] aligned with the line's stop sequence.
  // arrivals.front() == kNegInf, departures.back() == kPosInf.
  std::vector<Minute> arrivals;
  std::vector<Minute> departures;
};

struct Line {
  std::string id;
  std::vector<int> stops;      // indices into Instance::stops
  double capacity = 0.0;       // per run, passengers
  std::vector<double> fares;   // per segment (size n_stops - 1), default 0
  std::vector<Run> runs;
};

struct WalkLink {
  int place = -1;  // origin or destination index
  int stop = -1;
  Minute minutes = 0;
};

struct DemandClass {
  int origin = -1;
  int destination = -1;
  std::string label;           // passenger class tag
  double quantity = 0.0;
  Minute window_begin = kNegInf;  // desired arrival window [tau-, tau+]
  Minute window_end = kPosInf;
  std::optional<Minute> tau_free;  // free-flow latest departure override
};

struct CostParams {
  double eta1 = 1.0;  // value of time (waiting / riding / dwelling minutes)
  double eta2 = 0.0;  // crowding disutility slope
  double eta3 = 0.0;  // early-arrival penalty per minute
  double eta4 = 0.0;  // late-arrival penalty per minute
  double eta5 = 0.0;  // early-departure (before tau_free) penalty per minute
  double rho = 0.8;   // comfortable occupancy ratio
};

struct Instance {
  std::string name;
  std::string notes;  // free-form provenance / assumptions header
  std::vector<std::string> stops;
  std::vector<std::string> origins;
  std::vector<std::string> destinations;
  std::vector<Line> lines;
  std::vector<WalkLink> walk_access;   // origin -> stop
  std::vector<WalkLink> walk_egress;   // destination -> stop
  std::vector<DemandClass> demand;
  CostParams params;
  // Candidate set-out times per origin. Empty inner vector + auto_start ==
  // derive candidates as {departure - walk} over reachable stop events.
  std::vector<std::vector<Minute>> start_times;
  bool auto_start_times = false;
  // Optional cap on how many future runs a set-out event may board per
  // (stop, line); 0 = unbounded.
  int boarding_runs_limit = 0;

  int stop_index(const std::string& id) const;
  int origin_index(const std::string& id) const;
  int destination_index(const std::string& id) const;
};

struct ValidationIssue {
  bool fatal = false;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const {
    for (const auto& i : issues)
      if (i.fatal) return false;
    return true;
  }
};

// Throws std::runtime_error on malformed JSON / schema errors.
Instance load_instance(const std::string& path);
Instance parse_instance_json(const std::string& text);
std::string instance_to_json(const Instance& inst);

// Structural validation: timetable monotonicity, sentinel placement, walk
// link references, demand references, capacity positivity, window sanity.
ValidationReport validate_instance(const Instance& inst);

}  // namespace transit
