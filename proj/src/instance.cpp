#include "transit/instance.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace transit {

using nlohmann::json;

namespace {

int index_of(const std::vector<std::string>& v, const std::string& id) {
  auto it = std::find(v.begin(), v.end(), id);
  return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}

Minute require_minute(const json& j, const std::string& context) {
  std::string text = j.is_string() ? j.get<std::string>() : j.dump();
  auto m = parse_minute(text);
  if (!m) throw std::runtime_error("bad time value '" + text + "' in " + context);
  return *m;
}

json minute_to_json(Minute t) {
  if (!is_finite(t)) return json(t >= kPosInf ? "inf" : "-inf");
  return json(t);
}

}  // namespace

int Instance::stop_index(const std::string& id) const { return index_of(stops, id); }
int Instance::origin_index(const std::string& id) const { return index_of(origins, id); }
int Instance::destination_index(const std::string& id) const {
  return index_of(destinations, id);
}

Instance parse_instance_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("JSON parse error: ") + e.what());
  }
  Instance inst;
  inst.name = j.value("name", "");
  inst.notes = j.value("notes", "");
  if (!j.contains("stops") || !j.contains("lines") || !j.contains("demand"))
    throw std::runtime_error("instance requires 'stops', 'lines' and 'demand'");
  for (const auto& s : j.at("stops")) inst.stops.push_back(s.get<std::string>());

  for (const auto& jl : j.at("lines")) {
    Line line;
    line.id = jl.at("id").get<std::string>();
    for (const auto& s : jl.at("stop_sequence")) {
      int idx = inst.stop_index(s.get<std::string>());
      if (idx < 0) throw std::runtime_error("line " + line.id + ": unknown stop " + s.dump());
      line.stops.push_back(idx);
    }
    line.capacity = jl.at("capacity").get<double>();
    size_t nseg = line.stops.empty() ? 0 : line.stops.size() - 1;
    if (jl.contains("fares")) {
      for (const auto& f : jl.at("fares")) line.fares.push_back(f.get<double>());
      if (line.fares.size() != nseg)
        throw std::runtime_error("line " + line.id + ": fares size mismatch");
    } else {
      line.fares.assign(nseg, 0.0);
    }
    for (const auto& jr : jl.at("runs")) {
      Run run;
      for (const auto& t : jr.at("arrivals"))
        run.arrivals.push_back(require_minute(t, "line " + line.id + " arrivals"));
      for (const auto& t : jr.at("departures"))
        run.departures.push_back(require_minute(t, "line " + line.id + " departures"));
      line.runs.push_back(std::move(run));
    }
    inst.lines.push_back(std::move(line));
  }

  auto read_walks = [&](const char* key, std::vector<std::string>& places,
                        std::vector<WalkLink>& links, const char* place_key) {
    if (!j.contains(key)) return;
    for (const auto& jw : j.at(key)) {
      std::string place = jw.at(place_key).get<std::string>();
      int pidx = index_of(places, place);
      if (pidx < 0) {
        pidx = static_cast<int>(places.size());
        places.push_back(place);
      }
      WalkLink w;
      w.place = pidx;
      w.stop = inst.stop_index(jw.at("stop").get<std::string>());
      if (w.stop < 0) throw std::runtime_error(std::string(key) + ": unknown stop");
      w.minutes = require_minute(jw.at("minutes"), key);
      links.push_back(w);
    }
  };
  read_walks("walk_access", inst.origins, inst.walk_access, "origin");
  read_walks("walk_egress", inst.destinations, inst.walk_egress, "destination");

  for (const auto& jd : j.at("demand")) {
    DemandClass d;
    d.origin = inst.origin_index(jd.at("from").get<std::string>());
    d.destination = inst.destination_index(jd.at("to").get<std::string>());
    if (d.origin < 0 || d.destination < 0)
      throw std::runtime_error("demand references unknown origin/destination");
    d.label = jd.value("class", "default");
    d.quantity = jd.at("quantity").get<double>();
    if (jd.contains("window")) {
      d.window_begin = require_minute(jd.at("window").at(0), "window");
      d.window_end = require_minute(jd.at("window").at(1), "window");
    }
    if (jd.contains("tau_free") && !jd.at("tau_free").is_null())
      d.tau_free = require_minute(jd.at("tau_free"), "tau_free");
    inst.demand.push_back(d);
  }

  if (j.contains("cost_params")) {
    const auto& p = j.at("cost_params");
    inst.params.eta1 = p.value("eta1", 1.0);
    inst.params.eta2 = p.value("eta2", 0.0);
    inst.params.eta3 = p.value("eta3", 0.0);
    inst.params.eta4 = p.value("eta4", 0.0);
    inst.params.eta5 = p.value("eta5", 0.0);
    inst.params.rho = p.value("rho", 0.8);
  }

  inst.start_times.assign(inst.origins.size(), {});
  if (!j.contains("start_times") || (j.at("start_times").is_string() &&
                                     j.at("start_times").get<std::string>() == "auto")) {
    inst.auto_start_times = true;
  } else {
    const auto& st = j.at("start_times");
    for (auto it = st.begin(); it != st.end(); ++it) {
      int o = inst.origin_index(it.key());
      if (o < 0) throw std::runtime_error("start_times: unknown origin " + it.key());
      for (const auto& t : it.value())
        inst.start_times[o].push_back(require_minute(t, "start_times"));
      std::sort(inst.start_times[o].begin(), inst.start_times[o].end());
    }
  }
  inst.boarding_runs_limit = j.value("boarding_runs_limit", 0);
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance_json(ss.str());
}

std::string instance_to_json(const Instance& inst) {
  json j;
  j["name"] = inst.name;
  if (!inst.notes.empty()) j["notes"] = inst.notes;
  j["stops"] = inst.stops;
  j["lines"] = json::array();
  for (const auto& line : inst.lines) {
    json jl;
    jl["id"] = line.id;
    json seq = json::array();
    for (int s : line.stops) seq.push_back(inst.stops[s]);
    jl["stop_sequence"] = seq;
    jl["capacity"] = line.capacity;
    jl["fares"] = line.fares;
    jl["runs"] = json::array();
    for (const auto& run : line.runs) {
      json jr;
      jr["arrivals"] = json::array();
      jr["departures"] = json::array();
      for (Minute t : run.arrivals) jr["arrivals"].push_back(minute_to_json(t));
      for (Minute t : run.departures) jr["departures"].push_back(minute_to_json(t));
      jl["runs"].push_back(jr);
    }
    j["lines"].push_back(jl);
  }
  j["walk_access"] = json::array();
  for (const auto& w : inst.walk_access)
    j["walk_access"].push_back({{"origin", inst.origins[w.place]},
                                {"stop", inst.stops[w.stop]},
                                {"minutes", w.minutes}});
  j["walk_egress"] = json::array();
  for (const auto& w : inst.walk_egress)
    j["walk_egress"].push_back({{"destination", inst.destinations[w.place]},
                                {"stop", inst.stops[w.stop]},
                                {"minutes", w.minutes}});
  j["demand"] = json::array();
  for (const auto& d : inst.demand) {
    json jd;
    jd["from"] = inst.origins[d.origin];
    jd["to"] = inst.destinations[d.destination];
    jd["class"] = d.label;
    jd["quantity"] = d.quantity;
    jd["window"] = {minute_to_json(d.window_begin), minute_to_json(d.window_end)};
    if (d.tau_free) jd["tau_free"] = minute_to_json(*d.tau_free);
    j["demand"].push_back(jd);
  }
  const auto& p = inst.params;
  j["cost_params"] = {{"eta1", p.eta1}, {"eta2", p.eta2}, {"eta3", p.eta3},
                      {"eta4", p.eta4}, {"eta5", p.eta5}, {"rho", p.rho}};
  if (inst.auto_start_times) {
    j["start_times"] = "auto";
  } else {
    json st = json::object();
    for (size_t o = 0; o < inst.origins.size(); ++o) {
      json times = json::array();
      for (Minute t : inst.start_times[o]) times.push_back(minute_to_json(t));
      st[inst.origins[o]] = times;
    }
    j["start_times"] = st;
  }
  if (inst.boarding_runs_limit > 0) j["boarding_runs_limit"] = inst.boarding_runs_limit;
  return j.dump(2);
}

ValidationReport validate_instance(const Instance& inst) {
  ValidationReport rep;
  auto fatal = [&](const std::string& m) { rep.issues.push_back({true, m}); };
  auto warn = [&](const std::string& m) { rep.issues.push_back({false, m}); };

  if (inst.stops.empty()) fatal("no stops");
  for (const auto& line : inst.lines) {
    if (line.stops.size() < 2) fatal("line " + line.id + ": needs at least 2 stops");
    if (line.capacity <= 0) fatal("line " + line.id + ": capacity must be positive");
    for (size_t k = 1; k < line.stops.size(); ++k)
      if (line.stops[k] == line.stops[k - 1])
        fatal("line " + line.id + ": repeated consecutive stop");
    for (size_t rj = 0; rj < line.runs.size(); ++rj) {
      const Run& run = line.runs[rj];
      const std::string tag = "line " + line.id + " run " + std::to_string(rj + 1);
      if (run.arrivals.size() != line.stops.size() ||
          run.departures.size() != line.stops.size()) {
        fatal(tag + ": timetable length mismatch");
        continue;
      }
      if (run.arrivals.front() != kNegInf)
        fatal(tag + ": first arrival must be -inf");
      if (run.departures.back() != kPosInf)
        fatal(tag + ": last departure must be inf");
      for (size_t i = 0; i < line.stops.size(); ++i) {
        if (i > 0 && is_finite(run.arrivals[i]) && is_finite(run.departures[i - 1]) &&
            run.arrivals[i] < run.departures[i - 1])
          fatal(tag + ": arrival precedes previous departure at stop index " +
                std::to_string(i + 1));
        if (is_finite(run.arrivals[i]) && is_finite(run.departures[i]) &&
            run.departures[i] < run.arrivals[i])
          fatal(tag + ": departure precedes arrival at stop index " + std::to_string(i + 1));
        if (i > 0 && i + 1 < line.stops.size() &&
            (!is_finite(run.arrivals[i]) || !is_finite(run.departures[i])))
          fatal(tag + ": interior stop with sentinel timestamp");
      }
    }
    if (line.runs.empty()) warn("line " + line.id + ": no runs");
  }

  for (const auto& w : inst.walk_access)
    if (w.minutes < 0) fatal("negative access walk time");
  for (const auto& w : inst.walk_egress)
    if (w.minutes < 0) fatal("negative egress walk time");

  for (const auto& d : inst.demand) {
    if (d.quantity < 0) fatal("negative demand quantity");
    if (is_finite(d.window_begin) && is_finite(d.window_end) &&
        d.window_end < d.window_begin)
      fatal("demand window end precedes its begin");
    bool has_access = false, has_egress = false;
    for (const auto& w : inst.walk_access) has_access |= (w.place == d.origin);
    for (const auto& w : inst.walk_egress) has_egress |= (w.place == d.destination);
    if (!has_access) fatal("origin " + inst.origins[d.origin] + " has no access walk link");
    if (!has_egress)
      fatal("destination " + inst.destinations[d.destination] + " has no egress walk link");
  }

  if (!inst.auto_start_times)
    for (size_t o = 0; o < inst.start_times.size(); ++o)
      if (inst.start_times[o].empty())
        warn("origin " + inst.origins[o] + " has no candidate start times");
  const auto& p = inst.params;
  if (p.eta1 < 0 || p.eta2 < 0 || p.eta3 < 0 || p.eta4 < 0 || p.eta5 < 0 || p.rho < 0)
    fatal("cost parameters must be non-negative");
  return rep;
}

}  // namespace transit
