// Command-line front end: level tables, operating-point searches, parameter
// sweeps, reference-table and figure datasets, fidelity and power budgets.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "iongate/asymptotics.hpp"
#include "iongate/constants.hpp"
#include "iongate/design.hpp"
#include "iongate/dynamics.hpp"
#include "iongate/errors.hpp"
#include "iongate/sweep.hpp"

namespace {

using namespace iongate;

struct GlobalOptions {
  std::string species = "be9";
  std::string species_file;
  double field_tesla = 4.46;
  double theta_r_deg = 20.0;
  double omega_z_mhz = 1.59;
  std::string out;
  std::string format = "csv";
  std::string config_file;
};

IonSpecies resolve_species(const GlobalOptions& g) {
  return g.species_file.empty() ? load_species(g.species)
                                : load_species(g.species, g.species_file);
}

void emit(const ResultTable& table, const GlobalOptions& g) {
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!g.out.empty()) {
    file.open(g.out);
    if (!file) throw std::runtime_error("cannot open output file: " + g.out);
    out = &file;
  }
  if (g.format == "json") {
    table.write_json(*out);
  } else if (g.format == "csv") {
    table.write_csv(*out);
  } else {
    throw CLI::ValidationError("--format must be csv or json");
  }
}

// key=value configuration file applied on top of the defaults before the
// command line is parsed.
void apply_config_file(const std::string& path, GlobalOptions* g) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const char* ws = " \t\r\n";
      s.erase(0, s.find_first_not_of(ws));
      auto e = s.find_last_not_of(ws);
      s.erase(e == std::string::npos ? 0 : e + 1);
      return s;
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "species") g->species = value;
    else if (key == "species_file") g->species_file = value;
    else if (key == "field_tesla") g->field_tesla = std::stod(value);
    else if (key == "theta_r_deg") g->theta_r_deg = std::stod(value);
    else if (key == "omega_z_mhz") g->omega_z_mhz = std::stod(value);
    else if (key == "format") g->format = value;
    else throw std::invalid_argument("unknown config key: " + key);
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Light-shift and Molmer-Sorensen gate design on ground-state "
               "Zeeman qubits at high magnetic field"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--species", g.species, "Ion species (be9, mg24)");
  app.add_option("--species-file", g.species_file,
                 "Constants file for a non-built-in species");
  app.add_option("--field-tesla", g.field_tesla, "Magnetic field in tesla");
  app.add_option("--theta-r-deg", g.theta_r_deg, "Beam crossing angle");
  app.add_option("--omega-z-mhz", g.omega_z_mhz, "COM mode frequency");
  app.add_option("--out", g.out, "Output file (default stdout)");
  app.add_option("--format", g.format, "Output format: csv or json");
  app.add_option("--config", g.config_file, "key=value configuration file");

  // levels
  auto* levels = app.add_subcommand("levels", "Level energies at a field");

  // opsearch
  auto* opsearch =
      app.add_subcommand("opsearch", "Operating-point searches");
  std::string op_kind = "joint";
  double op_lo = -15.0, op_hi = 0.0, op_ratio = std::sqrt(2.0);
  opsearch->add_option("--kind", op_kind,
                       "joint | ms1-nulls | ms2-angles");
  opsearch->add_option("--lo", op_lo, "Window start (GHz)");
  opsearch->add_option("--hi", op_hi, "Window end (GHz)");
  opsearch->add_option("--ratio", op_ratio, "MS1 b_sigma/b_pi");
  double op_detuning = -142.6;
  opsearch->add_option("--detuning-ghz", op_detuning,
                       "Detuning for ms2-angles");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Parameter sweep");
  std::string sw_gate = "ls", sw_quantity = "zeta_l", sw_axis = "detuning";
  std::string sw_pol = "acss-null";
  double sw_start = -210.0, sw_stop = 210.0, sw_step = 0.5;
  double sw_angle = 0.0, sw_ratio = 1.0, sw_intensity = 1.0, sw_tau = 1.0;
  double sw_waist = 1.0, sw_detuning = 0.0;
  bool sw_negative_c = false;
  sweep->add_option("--gate", sw_gate, "ls | ms1 | ms2");
  sweep->add_option("--quantity", sw_quantity,
                    "zeta_l | zeta_q_norm | acss | force | rabi | rates | power");
  sweep->add_option("--axis", sw_axis, "detuning | field");
  sweep->add_option("--start", sw_start, "Axis start (GHz or T)");
  sweep->add_option("--stop", sw_stop, "Axis stop (GHz or T)");
  sweep->add_option("--step", sw_step, "Axis step (GHz or T)");
  sweep->add_option("--pol", sw_pol,
                    "fixed-angle | acss-null | vertical | horizontal | "
                    "per-beam-null");
  sweep->add_option("--angle-deg", sw_angle, "Fixed polarization angle");
  sweep->add_option("--b-ratio", sw_ratio, "MS1 b_sigma/b_pi");
  sweep->add_option("--intensity", sw_intensity, "Intensity (W/m^2) for rates");
  sweep->add_option("--tau-ms", sw_tau, "Cat-state time for power/acss");
  sweep->add_option("--waist-mm", sw_waist, "Beam waist for power/acss");
  sweep->add_option("--detuning-ghz", sw_detuning,
                    "Fixed detuning for field sweeps");
  sweep->add_flag("--negative-phi-c", sw_negative_c, "MS2 phi_c < 0 branch");

  // table2
  app.add_subcommand("table2", "Reference operating points, recomputed");

  // figure
  auto* figure = app.add_subcommand("figure", "Figure dataset");
  std::string fig_id = "fig3";
  figure->add_option("id", fig_id, "fig2 .. fig12")->required();

  // fidelity
  auto* fidelity = app.add_subcommand(
      "fidelity", "Closed-form two-qubit fidelity versus time");
  std::string fid_gate = "ls";
  double fid_gud = 0.0, fid_gdu = 0.0, fid_gel = 0.0, fid_tmax = kPi;
  int fid_steps = 200;
  fidelity->add_option("--gate", fid_gate, "ls | ms");
  fidelity->add_option("--gamma-ud", fid_gud, "Raman up->down rate over J");
  fidelity->add_option("--gamma-du", fid_gdu, "Raman down->up rate over J");
  fidelity->add_option("--gamma-el", fid_gel, "Rayleigh rate over J");
  fidelity->add_option("--t-max", fid_tmax, "Maximum t*J");
  fidelity->add_option("--steps", fid_steps, "Number of samples");

  // power
  auto* power = app.add_subcommand(
      "power", "Gate requirements for a target cat-state time");
  std::string pw_gate = "ls";
  double pw_detuning = -5.29, pw_angle = 65.25, pw_ratio = std::sqrt(2.0);
  double pw_phi_sb = 39.3, pw_phi_c = -41.5, pw_tau = 1.0, pw_waist = 1.0;
  power->add_option("--gate", pw_gate, "ls | ms1 | ms2");
  power->add_option("--detuning-ghz", pw_detuning, "Here and below: point");
  power->add_option("--angle-deg", pw_angle, "LS polarization angle");
  power->add_option("--b-ratio", pw_ratio, "MS1 b_sigma/b_pi");
  power->add_option("--phi-sb-deg", pw_phi_sb, "MS2 sideband angle");
  power->add_option("--phi-c-deg", pw_phi_c, "MS2 carrier angle");
  power->add_option("--tau-ms", pw_tau, "Cat-state time");
  power->add_option("--waist-mm", pw_waist, "Beam waist");

  // error
  auto* error_cmd = app.add_subcommand(
      "error", "Spontaneous-emission two-qubit gate error at a point");
  std::string er_gate = "ls";
  double er_detuning = -5.29, er_angle = 65.25, er_ratio = std::sqrt(2.0);
  double er_phi_sb = 39.3, er_phi_c = -41.5, er_tau = 1.0;
  error_cmd->add_option("--gate", er_gate, "ls | ms1 | ms2");
  error_cmd->add_option("--detuning-ghz", er_detuning, "Detuning");
  error_cmd->add_option("--angle-deg", er_angle, "LS polarization angle");
  error_cmd->add_option("--b-ratio", er_ratio, "MS1 b_sigma/b_pi");
  error_cmd->add_option("--phi-sb-deg", er_phi_sb, "MS2 sideband angle");
  error_cmd->add_option("--phi-c-deg", er_phi_c, "MS2 carrier angle");
  error_cmd->add_option("--tau-ms", er_tau, "Cat-state time");

  // Pre-scan for --config so file values act as defaults.
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--config") {
      apply_config_file(argv[i + 1], &g);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto make_config = [&](const std::string& gate, double detuning_ghz,
                         double angle_deg, double ratio, double phi_sb,
                         double phi_c) {
    const double d = from_ghz(detuning_ghz);
    if (gate == "ls") return ls_config(d, deg_to_rad(angle_deg));
    if (gate == "ms1") {
      const double b_pi = std::sqrt(2.0 / (1.0 + ratio * ratio));
      return ms1_config(d, ratio * b_pi, b_pi);
    }
    if (gate == "ms2")
      return ms2_config(d, deg_to_rad(phi_sb), deg_to_rad(phi_c));
    throw CLI::ValidationError("--gate must be ls, ms1 or ms2");
  };

  const auto species = resolve_species(g);

  if (levels->parsed()) {
    const auto scheme = level_energies(species, g.field_tesla);
    ResultTable t;
    t.add_column("manifold"); // 0 S1/2, 1 P1/2, 2 P3/2
    t.add_column("two_mj");
    t.add_column("offset", "GHz");
    t.set_metadata("species", species.name);
    t.set_metadata("field_tesla", std::to_string(g.field_tesla));
    t.set_metadata("qubit_splitting_ghz",
                   std::to_string(to_ghz(scheme.qubit_splitting)));
    t.set_metadata("version", kVersion);
    for (const auto& level : scheme.levels) {
      t.add_row({static_cast<double>(level.manifold == Manifold::S12   ? 0
                                     : level.manifold == Manifold::P12 ? 1
                                                                       : 2),
                 static_cast<double>(level.two_mj), to_ghz(level.omega)});
    }
    emit(t, g);
    return 0;
  }

  if (opsearch->parsed()) {
    const auto scheme = level_energies(species, g.field_tesla);
    ResultTable t;
    t.set_metadata("species", species.name);
    t.set_metadata("field_tesla", std::to_string(g.field_tesla));
    t.set_metadata("version", kVersion);
    if (op_kind == "joint") {
      const auto point = joint_operating_point(scheme, species,
                                               from_ghz(op_lo), from_ghz(op_hi));
      t.add_column("detuning", "GHz");
      t.add_column("phi_p", "deg");
      t.add_column("zeta_l");
      t.add_column("zeta_q_norm");
      t.add_column("residual_acss", "rad/s");
      t.add_row({to_ghz(point.config.detuning), rad_to_deg(point.config.phi_p),
                 point.merit.zeta_l, point.merit.zeta_q_normalized,
                 point.residual_acss});
    } else if (op_kind == "ms1-nulls") {
      t.add_column("detuning", "GHz");
      t.add_column("zeta_l");
      for (double root : ms_null_detunings(scheme, species, op_ratio,
                                           from_ghz(op_lo), from_ghz(op_hi))) {
        const double b_pi = std::sqrt(2.0 / (1.0 + op_ratio * op_ratio));
        const auto p = evaluate_point(
            scheme, species, ms1_config(root, op_ratio * b_pi, b_pi));
        t.add_row({to_ghz(root), p.merit.zeta_l});
      }
    } else if (op_kind == "ms2-angles") {
      const auto angles =
          ms_null_angles(scheme, species, from_ghz(op_detuning));
      t.add_column("detuning", "GHz");
      t.add_column("phi_sb", "deg");
      t.add_column("phi_c", "deg");
      if (angles) {
        t.add_row({op_detuning, rad_to_deg(angles->phi_sb),
                   rad_to_deg(angles->phi_c)});
      }
    } else {
      throw CLI::ValidationError("--kind must be joint, ms1-nulls or ms2-angles");
    }
    emit(t, g);
    return 0;
  }

  if (sweep->parsed()) {
    SweepRequest req;
    req.gate = parse_gate(sw_gate);
    req.quantity = parse_quantity(sw_quantity);
    req.axis = (sw_axis == "field") ? SweepAxis::Field : SweepAxis::Detuning;
    req.start = sw_start;
    req.stop = sw_stop;
    req.step = sw_step;
    req.pol_mode = parse_pol_mode(sw_pol);
    req.fixed_angle_deg = sw_angle;
    req.b_sigma_over_b_pi = sw_ratio;
    req.phi_c_positive = !sw_negative_c;
    req.species = g.species;
    req.species_file = g.species_file;
    req.field_tesla = g.field_tesla;
    req.detuning_ghz = sw_detuning;
    req.theta_r_deg = g.theta_r_deg;
    req.omega_z_mhz = g.omega_z_mhz;
    req.waist_mm = sw_waist;
    req.tau_ms = sw_tau;
    req.intensity = sw_intensity;
    emit(run_sweep(req), g);
    return 0;
  }

  if (app.get_subcommand("table2")->parsed()) {
    emit(table2(), g);
    return 0;
  }

  if (figure->parsed()) {
    emit(figure_data(fig_id), g);
    return 0;
  }

  if (fidelity->parsed()) {
    ResultTable t;
    t.add_column("t_times_j");
    t.add_column("fidelity");
    t.add_column("bell_approx");
    t.set_metadata("gate", fid_gate);
    t.set_metadata("version", kVersion);
    DecoherenceChannel ch;
    ch.gamma_ud = fid_gud;
    ch.gamma_du = fid_gdu;
    ch.gamma_el = fid_gel;
    const auto params = make_fidelity_params(1.0, ch);
    const GateType gate = (fid_gate == "ms") ? GateType::MS1 : GateType::LS;
    for (int i = 0; i <= fid_steps; ++i) {
      const double tj = fid_tmax * i / fid_steps;
      const double f = (gate == GateType::LS) ? fidelity_ls_exact(params, tj)
                                              : fidelity_ms_exact(params, tj);
      t.add_row({tj, f, fidelity_bell_approx(ch, tj, gate)});
    }
    emit(t, g);
    return 0;
  }

  if (power->parsed() || error_cmd->parsed()) {
    const bool is_power = power->parsed();
    const std::string gate_name = is_power ? pw_gate : er_gate;
    const auto config = make_config(
        gate_name, is_power ? pw_detuning : er_detuning,
        is_power ? pw_angle : er_angle, is_power ? pw_ratio : er_ratio,
        is_power ? pw_phi_sb : er_phi_sb, is_power ? pw_phi_c : er_phi_c);
    const auto scheme = level_energies(species, g.field_tesla);
    auto point = evaluate_point(scheme, species, config);
    const auto geometry = make_geometry(species, deg_to_rad(g.theta_r_deg),
                                        (is_power ? pw_waist : 1.0) * 1e-3);
    const double tau = (is_power ? pw_tau : er_tau) * 1e-3;
    const auto reqs = gate_requirements(point, species, geometry,
                                        from_mhz(g.omega_z_mhz), tau);
    ResultTable t;
    t.set_metadata("species", species.name);
    t.set_metadata("field_tesla", std::to_string(g.field_tesla));
    t.set_metadata("version", kVersion);
    if (is_power) {
      t.add_column("j", "rad/s");
      t.add_column("tau_g", "ms");
      t.add_column("g0_required", "rad/s");
      t.add_column("intensity", "W/m^2");
      t.add_column("total_power", "mW");
      t.add_column("eta");
      t.add_column("acss_at_point", "kHz");
      // Elliptical beams with a reduced vertical waist can cut the power by
      // roughly the waist ratio; only circular beams are modeled here.
      t.set_metadata("beam_model", "circular gaussian");
      t.add_row({reqs.j, reqs.tau_g * 1e3, reqs.g0_required, reqs.intensity,
                 reqs.total_power * 1e3, reqs.eta,
                 to_ghz(reqs.acss_at_point) * 1e6});
    } else {
      const double g0 = single_photon_rabi(reqs.intensity, species);
      const auto rates = scattering_rates(scheme, species, config, g0);
      const GateType gate = (gate_name == "ls") ? GateType::LS : GateType::MS1;
      t.add_column("gate_error");
      t.add_column("tau_g", "ms");
      t.add_column("eta");
      t.add_row({gate_error(rates, tau, gate), tau * 1e3, reqs.eta});
    }
    emit(t, g);
    return 0;
  }

  return 0;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError&) {
    return 2;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResonanceError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const SearchError& e) {
    std::cerr << "search error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
