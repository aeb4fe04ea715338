// Command-line front end: packing bounds tables, certified constructions,
// admissibility checks, operator-norm estimation, and penalty search.
//
// Exit codes: 0 affirmative, 1 negative-but-valid, 2 usage or input error.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

#include "lpball/bounds.hpp"
#include "lpball/config.hpp"
#include "lpball/constructions.hpp"
#include "lpball/json_io.hpp"
#include "lpball/phi.hpp"
#include "lpball/search.hpp"

namespace {

using lpball::Exponent;
using lpball::json;

Exponent parse_exponent(const std::string& s) {
  if (s == "inf") return Exponent::inf();
  try {
    return Exponent(std::stod(s));
  } catch (const std::exception&) {
    throw CLI::ValidationError("exponent must be a decimal >= 1 or 'inf', got '" + s + "'");
  }
}

// Output sink: a file path or stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

int cmd_bounds(const std::string& q_str, double r_min, double r_max, int steps,
               const std::string& format, const std::string& out_path) {
  const Exponent q = parse_exponent(q_str);
  if (!(q.value() > 1.0)) throw CLI::ValidationError("bounds requires q > 1");
  if (r_min > r_max || steps < 1) throw CLI::ValidationError("invalid radius grid");

  Output out(out_path);
  json rows = json::array();
  for (int i = 0; i < steps; ++i) {
    const double r = steps == 1 ? r_min : r_min + (r_max - r_min) * i / (steps - 1);
    try {
      rows.push_back(lpball::to_json(lpball::psi(q, r)));
    } catch (const std::domain_error&) {
      rows.push_back(json{{"q", lpball::exponent_to_json(q)},
                          {"radius", r},
                          {"formula", nullptr},
                          {"n_max", nullptr},
                          {"in_domain", false}});
    }
  }
  if (format == "json") {
    out.stream() << rows.dump(2) << "\n";
  } else {
    out.stream() << "q,R,formula,n_max,in_domain\n";
    for (const auto& row : rows) {
      out.stream() << q_str << "," << fmt(row.at("radius").get<double>()) << ",";
      if (row.at("in_domain").get<bool>())
        out.stream() << row.at("formula").get<std::string>() << ","
                     << row.at("n_max").get<long>() << ",true\n";
      else
        out.stream() << ",,false\n";
    }
  }
  return 0;
}

void write_config(const lpball::PointConfig& config, const std::string& format,
                  Output& out) {
  if (format == "json") {
    out.stream() << lpball::to_json(config).dump(2) << "\n";
    return;
  }
  for (const auto& v : config.points) {
    for (Eigen::Index k = 0; k < v.size(); ++k)
      out.stream() << (k ? "," : "") << fmt(v[k]);
    out.stream() << "\n";
  }
}

int cmd_construct(const std::string& kind, const std::string& p_str, int n, int r,
                  const std::string& format, const std::string& out_path) {
  const Exponent p = parse_exponent(p_str);
  lpball::CertifiedConfig cc = kind == "basis" ? lpball::basis_config(p, n)
                                               : lpball::hadamard_config(p, r);
  Output out(out_path);
  write_config(cc.config, format, out);
  std::cerr << lpball::to_json(cc.certificate).dump() << "\n";
  return 0;
}

int cmd_verify(const std::string& path, const std::string& out_path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return 2;
  }
  json j;
  in >> j;
  const lpball::PointConfig config = lpball::point_config_from_json(j);
  const lpball::ValidationReport report = lpball::validate(config);
  Output out(out_path);
  out.stream() << lpball::to_json(report).dump(2) << "\n";
  return report.admissible ? 0 : 1;
}

int cmd_phinorm(const std::string& q_str, int n, int d, int budget,
                std::uint64_t seed, const std::string& out_path) {
  const Exponent q = parse_exponent(q_str);
  const lpball::PhiNormReport report = lpball::phi_norm_estimate(q, n, d, seed, budget);
  Output out(out_path);
  out.stream() << lpball::to_json(report).dump(2) << "\n";
  return 0;
}

int cmd_search(const lpball::SearchParams& params, const std::string& out_path,
               const std::string& points_csv) {
  const lpball::SearchReport report = lpball::search(params);
  Output out(out_path);
  out.stream() << lpball::to_json(report).dump(2) << "\n";
  if (!points_csv.empty() && report.config) {
    Output csv(points_csv);
    write_config(*report.config, "csv", csv);
  }
  return report.success ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Packing bounds and constructions for unit-separated point sets in l_p balls"};
  app.require_subcommand(1);

  std::string format = "json", out_path, p_str = "2", q_str = "2";

  auto* bounds = app.add_subcommand("bounds", "Tabulate the psi(q, R) packing bound over a radius grid");
  double r_min = 0.0, r_max = 0.0;
  int steps = 1;
  bounds->add_option("--q", q_str, "exponent q (> 1, or 'inf')")->required();
  bounds->add_option("--r-min", r_min)->required();
  bounds->add_option("--r-max", r_max)->required();
  bounds->add_option("--steps", steps)->required();
  bounds->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  bounds->add_option("--out", out_path);

  auto* construct = app.add_subcommand("construct", "Emit a certified extremal configuration");
  std::string kind;
  int cn = 1, cr = 1;
  construct->add_option("--kind", kind)->required()->check(CLI::IsMember({"basis", "hadamard"}));
  construct->add_option("--p", p_str, "finite exponent >= 1")->required();
  construct->add_option("--n", cn, "point count (basis)");
  construct->add_option("--r", cr, "doubling order (hadamard)");
  construct->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  construct->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "Validate a PointConfig JSON file");
  std::string config_path;
  verify->add_option("config", config_path)->required();
  verify->add_option("--out", out_path);

  auto* phinorm = app.add_subcommand("phinorm", "Estimate the pairwise-difference operator norm");
  int pn = 2, pd = 0, budget = 200;
  std::uint64_t seed = 0;
  phinorm->add_option("--q", q_str)->required();
  phinorm->add_option("--n", pn)->required();
  phinorm->add_option("--d", pd, "witness dimension (default n)");
  phinorm->add_option("--budget", budget, "random restarts");
  phinorm->add_option("--seed", seed);
  phinorm->add_option("--out", out_path);

  auto* search = app.add_subcommand("search", "Penalty search for an admissible configuration");
  lpball::SearchParams params{lpball::Exponent(2.0)};
  std::string points_csv;
  search->add_option("--p", p_str)->required();
  search->add_option("--d", params.d)->required();
  search->add_option("--n", params.n)->required();
  search->add_option("--r", params.radius)->required();
  search->add_option("--restarts", params.restarts);
  search->add_option("--max-steps", params.max_steps);
  search->add_option("--seed", params.seed);
  search->add_option("--penalty-tol", params.penalty_tol);
  search->add_option("--out", out_path);
  search->add_option("--points-csv", points_csv, "also write the found points as CSV");

  try {
    app.parse(argc, argv);
    if (bounds->parsed()) return cmd_bounds(q_str, r_min, r_max, steps, format, out_path);
    if (construct->parsed()) return cmd_construct(kind, p_str, cn, cr, format, out_path);
    if (verify->parsed()) return cmd_verify(config_path, out_path);
    if (phinorm->parsed()) {
      if (pd <= 0) pd = pn;
      return cmd_phinorm(q_str, pn, pd, budget, seed, out_path);
    }
    if (search->parsed()) {
      params.p = parse_exponent(p_str);
      return cmd_search(params, out_path, points_csv);
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
