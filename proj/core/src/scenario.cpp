#include "scalartail/scenario.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>

#include <json.hpp>

#include "scalartail/csv.hpp"
#include "scalartail/errors.hpp"

namespace scalartail {

namespace {

using nlohmann::json;

FourVector parse_vec4(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 4)
    throw DomainError(std::string(what) + " must be a 4-element array");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(),
          j[3].get<double>()};
}

std::array<double, 3> parse_vec3(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 3)
    throw DomainError(std::string(what) + " must be a 3-element array");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

ExternalPotential parse_external(const json& j) {
  const std::string kind = j.value("kind", "none");
  if (kind == "none") return ExternalPotential::none();
  if (kind == "uniform_gradient")
    return ExternalPotential::uniform_gradient(
        parse_vec4(j.at("gradient"), "external.gradient"));
  if (kind == "gaussian_pulse")
    return ExternalPotential::gaussian_pulse(
        j.at("amplitude").get<double>(), j.at("t_center").get<double>(),
        j.at("sigma").get<double>(),
        parse_vec3(j.at("direction"), "external.direction"));
  if (kind == "yukawa_well")
    return ExternalPotential::yukawa_well(
        j.at("amplitude").get<double>(), j.at("kappa").get<double>(),
        parse_vec3(j.at("center"), "external.center"));
  throw DomainError("unknown external potential kind: " + kind);
}

Scenario parse_scenario(const json& j) {
  Scenario s;
  const json& charge = j.at("charge");
  s.charge.m0 = charge.at("m0").get<double>();
  s.charge.g = charge.at("g").get<double>();
  s.charge.k0 = charge.at("k0").get<double>();
  s.charge.validate();

  if (j.contains("external")) s.external = parse_external(j.at("external"));

  const json& init = j.at("initial");
  if (init.contains("position"))
    s.initial_position = parse_vec4(init.at("position"), "initial.position");
  if (init.contains("velocity"))
    s.initial_velocity = parse_vec3(init.at("velocity"), "initial.velocity");
  s.tau0 = init.value("tau0", 0.0);

  const double v2 = s.initial_velocity[0] * s.initial_velocity[0] +
                    s.initial_velocity[1] * s.initial_velocity[1] +
                    s.initial_velocity[2] * s.initial_velocity[2];
  if (!(v2 < 1.0)) throw DomainError("initial velocity must satisfy |v| < 1");

  const json& integ = j.at("integration");
  s.integration.tau_end = integ.at("tau_end").get<double>();
  s.integration.dt = integ.at("dt").get<double>();
  if (!(s.integration.dt > 0.0)) throw DomainError("dt must be positive");
  const std::string schott = integ.value("schott_mode", "order_reduced");
  if (schott == "order_reduced")
    s.integration.schott = SchottMode::OrderReduced;
  else if (schott == "explicit_third_order")
    s.integration.schott = SchottMode::ExplicitThirdOrder;
  else
    throw DomainError("unknown schott_mode: " + schott);
  const std::string eom = integ.value("eom_mode", "effective");
  if (eom == "effective")
    s.integration.eom = EomMode::Effective;
  else if (eom == "harish_chandra")
    s.integration.eom = EomMode::HarishChandra;
  else
    throw DomainError("unknown eom_mode: " + eom);

  if (j.contains("output")) {
    const json& out = j.at("output");
    s.trajectory_file = out.value("trajectory", s.trajectory_file);
    s.flows_file = out.value("flows", s.flows_file);
    s.summary_file = out.value("summary", s.summary_file);
  }
  return s;
}

FourVector velocity_from_3v(const std::array<double, 3>& v) {
  const double v2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  const double gamma = 1.0 / std::sqrt(1.0 - v2);
  return {gamma, gamma * v[0], gamma * v[1], gamma * v[2]};
}

}  // namespace

Scenario Scenario::from_json_text(const std::string& text) {
  json j = json::parse(text);
  return parse_scenario(j);
}

Scenario Scenario::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open config: " + path);
  json j;
  in >> j;
  return parse_scenario(j);
}

int run_scenario(const std::string& config_path, const std::string& out_dir) {
  Scenario s;
  try {
    s = Scenario::from_json_file(config_path);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }

  try {
    const FourVector u0 = velocity_from_3v(s.initial_velocity);
    const Trajectory traj =
        integrate(s.charge, s.external, s.initial_position, u0, s.tau0,
                  s.integration);

    std::filesystem::create_directories(out_dir);
    const auto out = [&](const std::string& name) {
      return (std::filesystem::path(out_dir) / name).string();
    };
    write_trajectory_csv(traj.records, out(s.trajectory_file));
    write_flows_csv(traj.records, out(s.flows_file));

    const StepRecord& last = traj.records.back();
    const FourVector radiated = last.p_dir_rad + last.p_tail_rad;
    nlohmann::json summary;
    summary["final_mass"] = traj.final_mass;
    summary["radiated_p"] = {radiated.t, radiated.x, radiated.y, radiated.z};
    summary["max_balance_residual"] = traj.balance.max_rel_p;
    summary["steps"] = traj.balance.steps;
    summary["rejected_steps"] = traj.balance.rejected_steps;
    std::ofstream js(out(s.summary_file));
    js << summary.dump(2) << "\n";
    return kExitOk;
  } catch (const NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumericalFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumericalFailure;
  }
}

int run_fieldmap(const std::string& config_path, const std::string& out_dir,
                 int threads) {
  nlohmann::json j;
  ChargeParams charge;
  std::vector<FourVector> points;
  std::string output = "fieldmap.csv";
  bool advanced = false;
  Worldline line = Worldline::uniform_line({0, 0, 0, 0}, {1, 0, 0, 0}, 0, 1, 2);
  try {
    std::ifstream in(config_path);
    if (!in) throw DomainError("cannot open config: " + config_path);
    in >> j;

    const nlohmann::json& c = j.at("charge");
    charge.m0 = c.value("m0", 1.0);
    charge.g = c.at("g").get<double>();
    charge.k0 = c.at("k0").get<double>();
    charge.validate();

    const nlohmann::json& wj = j.at("worldline");
    const std::string kind = wj.value("kind", "static");
    if (kind == "csv") {
      line = load_worldline_csv(wj.at("path").get<std::string>());
    } else if (kind == "static" || kind == "boosted") {
      std::array<double, 3> v{};
      if (kind == "boosted") v = parse_vec3(wj.at("velocity"), "velocity");
      FourVector origin{};
      if (wj.contains("origin")) origin = parse_vec4(wj.at("origin"), "origin");
      const double tmin = wj.value("tau_min", -50.0);
      const double tmax = wj.value("tau_max", 50.0);
      const int n = wj.value("samples", 501);
      line = Worldline::uniform_line(origin, velocity_from_3v(v), tmin, tmax, n);
    } else {
      throw DomainError("unknown worldline kind: " + kind);
    }

    const nlohmann::json& pj = j.at("points");
    if (pj.contains("list")) {
      for (const auto& row : pj.at("list"))
        points.push_back(parse_vec4(row, "points.list entry"));
    }
    if (pj.contains("axis")) {
      const double t = pj.value("t", 0.0);
      const std::string axis = pj.at("axis").get<std::string>();
      const double lo = pj.at("min").get<double>();
      const double hi = pj.at("max").get<double>();
      const int count = pj.at("count").get<int>();
      if (count < 1) throw DomainError("points.count must be >= 1");
      for (int i = 0; i < count; ++i) {
        const double x = count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
        FourVector pt{t, 0, 0, 0};
        if (axis == "x")
          pt.x = x;
        else if (axis == "y")
          pt.y = x;
        else if (axis == "z")
          pt.z = x;
        else
          throw DomainError("points.axis must be x, y or z");
        points.push_back(pt);
      }
    }
    if (points.empty()) throw DomainError("no field points given");
    advanced = j.value("which", std::string("retarded")) == "advanced";
    if (j.contains("output")) output = j.at("output").get<std::string>();
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }

  try {
    std::vector<FieldMapRow> rows(points.size());
    const int nthreads = std::max(1, threads);
    std::vector<std::future<void>> futures;
    std::atomic<std::size_t> cursor{0};
    for (int t = 0; t < nthreads; ++t)
      futures.push_back(std::async(std::launch::async, [&]() {
        for (std::size_t i = cursor.fetch_add(1); i < points.size();
             i = cursor.fetch_add(1)) {
          const FieldEval ev = advanced
                                   ? eval_field_advanced(line, charge, points[i])
                                   : eval_field_retarded(line, charge, points[i]);
          rows[i] = {points[i], ev.phi, ev.strength};
        }
      }));
    for (auto& f : futures) f.get();

    std::filesystem::create_directories(out_dir);
    write_field_map_csv(rows,
                        (std::filesystem::path(out_dir) / output).string());
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumericalFailure;
  }
}

}  // namespace scalartail
