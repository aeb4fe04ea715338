#include "lpball/json_io.hpp"

#include <cmath>
#include <stdexcept>

namespace lpball {

json exponent_to_json(const Exponent& p) {
  if (p.is_inf()) return json("inf");
  return json(p.value());
}

Exponent exponent_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return Exponent::inf();
    throw std::invalid_argument("exponent string must be \"inf\"");
  }
  if (!j.is_number()) throw std::invalid_argument("exponent must be a number or \"inf\"");
  return Exponent(j.get<double>());
}

json to_json(const PointConfig& config) {
  json points = json::array();
  for (const auto& v : config.points) {
    json row = json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k) row.push_back(v[k]);
    points.push_back(std::move(row));
  }
  return json{{"p", exponent_to_json(config.p)},
              {"radius", config.radius},
              {"points", std::move(points)}};
}

PointConfig point_config_from_json(const json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("radius") || !j.contains("points"))
    throw std::invalid_argument("PointConfig JSON needs p, radius, points");
  PointConfig config{exponent_from_json(j.at("p")), j.at("radius").get<double>(), {}};
  if (!std::isfinite(config.radius) || config.radius < 0.0)
    throw std::invalid_argument("radius must be finite and >= 0");
  for (const auto& row : j.at("points")) {
    Vector v(static_cast<Eigen::Index>(row.size()));
    Eigen::Index k = 0;
    for (const auto& x : row) {
      if (!x.is_number()) throw std::invalid_argument("coordinates must be numbers");
      v[k++] = x.get<double>();
    }
    if (!v.allFinite()) throw std::invalid_argument("coordinates must be finite");
    config.points.push_back(std::move(v));
  }
  return config;
}

json to_json(const ValidationReport& report) {
  json j{{"max_norm", report.max_norm},
         {"min_pairwise_distance", report.min_pairwise_distance},
         {"admissible", report.admissible}};
  if (report.worst_pair)
    j["worst_pair"] = {report.worst_pair->first, report.worst_pair->second};
  else
    j["worst_pair"] = nullptr;
  return j;
}

json to_json(const BoundResult& result) {
  return json{{"n_max", result.n_max},
              {"formula", to_string(result.formula)},
              {"q", exponent_to_json(result.q)},
              {"radius", result.radius},
              {"in_domain", result.in_domain}};
}

json to_json(const Certificate& cert) {
  return json{{"kind", cert.kind == Certificate::Kind::basis ? "basis" : "hadamard"},
              {"p", exponent_to_json(cert.p)},
              {"n", cert.n},
              {"claimed_norm", cert.claimed_norm},
              {"claimed_pairwise_distance", cert.claimed_pairwise_distance},
              {"exact", cert.exact}};
}

json to_json(const PhiNormReport& report) {
  json witness = json::array();
  for (const auto& v : report.witness) {
    json row = json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k) row.push_back(v[k]);
    witness.push_back(std::move(row));
  }
  return json{{"p", exponent_to_json(report.p)},
              {"n", report.n},
              {"exact", report.exact ? json(*report.exact) : json(nullptr)},
              {"upper_bound", report.upper_bound},
              {"numeric_lower_bound", report.numeric_lower_bound},
              {"witness", std::move(witness)},
              {"iterations", report.iterations},
              {"seed", report.seed}};
}

json to_json(const SearchReport& report) {
  return json{{"success", report.success},
              {"config", report.config ? to_json(*report.config) : json(nullptr)},
              {"final_penalty", report.final_penalty},
              {"restarts_used", report.restarts_used},
              {"steps_total", report.steps_total},
              {"seed", report.seed}};
}

}  // namespace lpball
