#include "twistlap/serialize.hpp"

#include <cstdio>

namespace twistlap {

json to_json(const Rational& r) { return r.to_string(); }

json to_json(const BiPoly& p) {
  json arr = json::array();
  for (const auto& [mono, c] : p.terms()) {
    arr.push_back({{"i", mono.z}, {"j", mono.zbar}, {"c", c.to_string()}});
  }
  return arr;
}

json to_json(const MomentResult& m) {
  if (m.is_divergent()) return json{{"divergent", true}};
  return json{{"pi_multiple", m.value().q.to_string()}};
}

json to_json(const OperatorReport& r) {
  json j{{"identity", r.identity}, {"probes", r.probe_count}, {"passed", r.all_passed}};
  if (r.first_failure) {
    j["failure"] = {{"probe", r.first_failure->probe},
                    {"lhs", r.first_failure->lhs},
                    {"rhs", r.first_failure->rhs}};
  } else {
    j["failure"] = nullptr;
  }
  return j;
}

json to_json(const ConvergenceReport& r) {
  json points = json::array();
  for (const auto& pt : r.points)
    points.push_back({{"kappa", pt.kappa.to_string()}, {"diff", pt.diff}});
  return json{{"m", r.m},
              {"n", r.n},
              {"nu", r.nu.to_string()},
              {"points", points},
              {"order", r.fitted_order},
              {"match", r.extrapolated_match}};
}

json to_json(const RouteCrosscheck& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"m", e.m},
                       {"n", e.n},
                       {"routes_equal", e.routes_equal},
                       {"jacobi_ratio", e.jacobi_ratio.to_string()}});
  }
  return json{{"kappa", r.kappa.to_string()}, {"nu", r.nu.to_string()}, {"entries", entries}};
}

json to_json(const WeightedFn& f) {
  json weight;
  if (f.is_power()) {
    weight = {{"family", "power"},
              {"kappa", f.power_weight().kappa.to_string()},
              {"s", f.power_weight().s.to_string()}};
  } else {
    weight = {{"family", "exp"}, {"c", f.exp_weight().c.to_string()}};
  }
  return json{{"weight", weight}, {"poly", to_json(f.poly())}};
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace twistlap
