#include "iongate/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "iongate/constants.hpp"
#include "iongate/dynamics.hpp"
#include "iongate/errors.hpp"

namespace iongate {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct PointResult {
  std::vector<double> values;
  std::vector<std::string> flags;
};

std::string species_fingerprint(const IonSpecies& s) {
  std::ostringstream os;
  os.precision(17);
  os << s.name << "|" << s.mass << "|" << s.omega0 << "|" << s.omega_fs << "|"
     << s.gamma;
  return os.str();
}

// Resolves the configuration at one grid point, or reports why none exists.
std::optional<GateConfiguration> resolve_config(const SweepRequest& req,
                                                const LevelScheme& scheme,
                                                const IonSpecies& species,
                                                double detuning,
                                                std::vector<std::string>* flags) {
  switch (req.gate) {
    case GateType::LS: {
      double phi = 0.0;
      switch (req.pol_mode) {
        case PolarizationMode::FixedAngle:
          phi = deg_to_rad(req.fixed_angle_deg);
          break;
        case PolarizationMode::Vertical:
          phi = 0.0;
          break;
        case PolarizationMode::Horizontal:
          phi = 0.5 * kPi;
          break;
        case PolarizationMode::AcssNull: {
          const auto null = acss_null_angle(scheme, species, detuning);
          if (!null) {
            flags->push_back("no_null");
            return std::nullopt;
          }
          phi = *null;
          break;
        }
        case PolarizationMode::PerBeamNull:
          throw std::invalid_argument("per-beam-null applies to the MS gate");
      }
      return ls_config(detuning, phi);
    }
    case GateType::MS1: {
      const double r = req.b_sigma_over_b_pi;
      const double b_pi = std::sqrt(2.0 / (1.0 + r * r));
      return ms1_config(detuning, r * b_pi, b_pi);
    }
    case GateType::MS2: {
      const auto angles = ms_null_angles(scheme, species, detuning);
      if (!angles) {
        flags->push_back("no_null");
        return std::nullopt;
      }
      const double sign = req.phi_c_positive ? 1.0 : -1.0;
      return ms2_config(detuning, angles->phi_sb, sign * angles->phi_c);
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<ResultTable::Column> quantity_columns(const SweepRequest& req) {
  std::vector<ResultTable::Column> cols;
  cols.push_back({req.axis == SweepAxis::Detuning ? "detuning" : "field",
                  req.axis == SweepAxis::Detuning ? "GHz" : "T"});
  cols.push_back({"angle1", "deg"});
  cols.push_back({"angle2", "deg"});
  switch (req.quantity) {
    case SweepQuantity::ZetaL: cols.push_back({"zeta_l", ""}); break;
    case SweepQuantity::ZetaQNorm: cols.push_back({"zeta_q_norm", ""}); break;
    case SweepQuantity::Acss:
      cols.push_back({"acss", "kHz"});
      cols.push_back({"power", "mW"});
      break;
    case SweepQuantity::Force:
      cols.push_back({"f0_over_hdk", "rad/s"});
      cols.push_back({"f_up_over_hdk", "rad/s"});
      cols.push_back({"f_down_over_hdk", "rad/s"});
      break;
    case SweepQuantity::Rabi: cols.push_back({"omega_r", "rad/s"}); break;
    case SweepQuantity::Rates:
      cols.push_back({"gamma_ud", "rad/s"});
      cols.push_back({"gamma_du", "rad/s"});
      cols.push_back({"gamma_r", "rad/s"});
      cols.push_back({"gamma_el", "rad/s"});
      cols.push_back({"gamma_gate", "rad/s"});
      break;
    case SweepQuantity::Power:
      cols.push_back({"zeta_l", ""});
      cols.push_back({"power", "mW"});
      break;
  }
  return cols;
}

PointResult evaluate_grid_point(const SweepRequest& req,
                                const IonSpecies& species, double axis_value) {
  PointResult out;
  const double field =
      (req.axis == SweepAxis::Field) ? axis_value : req.field_tesla;
  const double detuning = (req.axis == SweepAxis::Detuning)
                              ? from_ghz(axis_value)
                              : from_ghz(req.detuning_ghz);
  const size_t width = quantity_columns(req).size();
  auto bail = [&](const char* flag) {
    out.flags.push_back(flag);
    out.values.assign(width, kNaN);
    out.values[0] = axis_value;
    return out;
  };

  LevelScheme scheme;
  try {
    scheme = level_energies(species, field);
  } catch (const std::domain_error&) {
    return bail("field_out_of_range");
  }

  auto config = resolve_config(req, scheme, species, detuning, &out.flags);
  if (!config) {
    out.values.assign(width, kNaN);
    out.values[0] = axis_value;
    return out;
  }
  config->geometry =
      make_geometry(species, deg_to_rad(req.theta_r_deg), req.waist_mm * 1e-3);
  config->motion.omega_z = from_mhz(req.omega_z_mhz);

  out.values.push_back(axis_value);
  if (req.gate == GateType::MS2) {
    out.values.push_back(rad_to_deg(config->phi_sb));
    out.values.push_back(rad_to_deg(config->phi_c));
  } else if (req.gate == GateType::LS) {
    out.values.push_back(rad_to_deg(config->phi_p));
    out.values.push_back(kNaN);
  } else {
    out.values.push_back(kNaN);
    out.values.push_back(kNaN);
  }

  try {
    const auto point = evaluate_point(scheme, species, *config);
    if (point.near_resonance) out.flags.push_back("near_resonance");
    switch (req.quantity) {
      case SweepQuantity::ZetaL:
        out.values.push_back(point.merit.zeta_l);
        break;
      case SweepQuantity::ZetaQNorm:
        out.values.push_back(point.merit.zeta_q_normalized);
        break;
      case SweepQuantity::Acss: {
        const auto req_out =
            gate_requirements(point, species, config->geometry,
                              config->motion.omega_z, req.tau_ms * 1e-3);
        out.values.push_back(to_ghz(req_out.acss_at_point) * 1e6); // kHz
        out.values.push_back(req_out.total_power * 1e3);
        break;
      }
      case SweepQuantity::Force: {
        const double g0 = single_photon_rabi(1.0, species);
        const auto coeffs =
            stark_coefficients(scheme, species, detuning, g0);
        const auto f = spin_forces(coeffs, config->phi_p, config->geometry.dk);
        out.values.push_back(f.f0);
        out.values.push_back(f.f_up);
        out.values.push_back(f.f_down);
        break;
      }
      case SweepQuantity::Rabi: {
        const double g0 = single_photon_rabi(1.0, species);
        out.values.push_back(raman_rabi(scheme, species, *config, g0));
        break;
      }
      case SweepQuantity::Rates: {
        const double g0 = single_photon_rabi(req.intensity, species);
        const auto rates = scattering_rates(scheme, species, *config, g0);
        out.values.push_back(rates.gamma_ud);
        out.values.push_back(rates.gamma_du);
        out.values.push_back(rates.gamma_r);
        out.values.push_back(rates.gamma_el);
        out.values.push_back(req.gate == GateType::LS ? rates.gamma_ls
                                                      : rates.gamma_ms);
        break;
      }
      case SweepQuantity::Power: {
        const auto req_out =
            gate_requirements(point, species, config->geometry,
                              config->motion.omega_z, req.tau_ms * 1e-3);
        out.values.push_back(point.merit.zeta_l);
        out.values.push_back(req_out.total_power * 1e3);
        break;
      }
    }
  } catch (const ResonanceError&) {
    return bail("resonant");
  } catch (const SearchError&) {
    return bail("unattainable");
  }
  while (out.values.size() < width) out.values.push_back(kNaN);
  return out;
}

} // namespace

SweepQuantity parse_quantity(const std::string& name) {
  if (name == "zeta_l") return SweepQuantity::ZetaL;
  if (name == "zeta_q_norm") return SweepQuantity::ZetaQNorm;
  if (name == "acss") return SweepQuantity::Acss;
  if (name == "force") return SweepQuantity::Force;
  if (name == "rabi") return SweepQuantity::Rabi;
  if (name == "rates") return SweepQuantity::Rates;
  if (name == "power") return SweepQuantity::Power;
  throw std::invalid_argument("unknown quantity: " + name);
}

PolarizationMode parse_pol_mode(const std::string& name) {
  if (name == "fixed-angle") return PolarizationMode::FixedAngle;
  if (name == "acss-null") return PolarizationMode::AcssNull;
  if (name == "vertical") return PolarizationMode::Vertical;
  if (name == "horizontal") return PolarizationMode::Horizontal;
  if (name == "per-beam-null") return PolarizationMode::PerBeamNull;
  throw std::invalid_argument("unknown polarization mode: " + name);
}

GateType parse_gate(const std::string& name) {
  if (name == "ls") return GateType::LS;
  if (name == "ms1") return GateType::MS1;
  if (name == "ms2") return GateType::MS2;
  throw std::invalid_argument("unknown gate type: " + name);
}

ResultTable run_sweep(const SweepRequest& req) {
  if (req.step <= 0.0) throw std::invalid_argument("step must be positive");
  if (req.start >= req.stop) {
    throw std::invalid_argument("start must be below stop");
  }
  const IonSpecies species =
      req.species_file.empty() ? load_species(req.species)
                               : load_species(req.species, req.species_file);

  std::vector<double> grid;
  for (double v = req.start; v <= req.stop + 1e-12 * req.step; v += req.step) {
    grid.push_back(v);
  }

  // Chunked parallel evaluation; assembly stays in grid order.
  const size_t n_workers =
      std::min<size_t>(std::max(1u, std::thread::hardware_concurrency()),
                       grid.empty() ? 1 : grid.size());
  std::vector<PointResult> results(grid.size());
  std::vector<std::future<void>> futures;
  const size_t chunk = (grid.size() + n_workers - 1) / std::max<size_t>(n_workers, 1);
  for (size_t w = 0; w < n_workers; ++w) {
    const size_t lo = w * chunk;
    const size_t hi = std::min(grid.size(), lo + chunk);
    if (lo >= hi) break;
    futures.push_back(std::async(std::launch::async, [&, lo, hi] {
      for (size_t i = lo; i < hi; ++i) {
        results[i] = evaluate_grid_point(req, species, grid[i]);
      }
    }));
  }
  for (auto& f : futures) f.get();

  ResultTable table;
  for (const auto& col : quantity_columns(req)) {
    table.add_column(col.name, col.unit);
  }
  table.set_metadata("species", species.name);
  table.set_metadata("field_tesla", std::to_string(req.field_tesla));
  table.set_metadata("gate", req.gate == GateType::LS    ? "ls"
                             : req.gate == GateType::MS1 ? "ms1"
                                                         : "ms2");
  table.set_metadata("version", kVersion);
  table.set_metadata("constants_hash",
                     std::to_string(fnv1a(species_fingerprint(species))));
  for (const auto& r : results) table.add_row(r.values, r.flags);
  return table;
}

double rel_dev(double a, double b) { return (a - b) / std::abs(b); }

namespace {

// Golden-section maximization of f on [lo, hi] down to `tol`; f returns
// -inf where undefined.
template <typename F>
double maximize(F&& f, double lo, double hi, double tol) {
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

struct Table2Row {
  int index;
  const char* label;
  double detuning_ref_ghz;
  double angle1_ref_deg; // phi_P or phi_SB; NaN when not applicable
  double angle2_ref_deg; // phi_C
  double zeta_ref;
  double power_ref_mw;
};

constexpr Table2Row kTable2Refs[] = {
    {1, "ls_joint", -5.29, 65.3, kNaN, 1066.9, 13.6},
    {2, "ls_null_peak", 299.3, 70.5, kNaN, 3440.9, 3443.6},
    {3, "ms1_null", -163.2, kNaN, kNaN, 1769.7, 48.9},
    {4, "ms2_peak_pm", -142.6, 39.3, -41.5, 1041.2, 20.1},
    {5, "ms2_peak_pp", 431.4, 83.5, 71.0, 9512.9, 1997.9},
};

} // namespace

ResultTable table2() {
  const auto species = load_species("be9");
  const auto scheme = level_energies(species, 4.46);
  const auto geometry = make_geometry(species, deg_to_rad(20.0), 1e-3);
  const double omega_z = from_mhz(1.59);
  const double tau = 1e-3;

  auto zeta_ls_null = [&](double d_ghz) -> double {
    try {
      const auto phi = acss_null_angle(scheme, species, from_ghz(d_ghz));
      if (!phi) return -std::numeric_limits<double>::infinity();
      return evaluate_point(scheme, species, ls_config(from_ghz(d_ghz), *phi))
          .merit.zeta_l;
    } catch (const std::exception&) {
      return -std::numeric_limits<double>::infinity();
    }
  };
  auto zeta_ms2 = [&](double d_ghz, bool positive_c) -> double {
    try {
      const auto angles = ms_null_angles(scheme, species, from_ghz(d_ghz));
      if (!angles) return -std::numeric_limits<double>::infinity();
      const double sign = positive_c ? 1.0 : -1.0;
      return evaluate_point(scheme, species,
                            ms2_config(from_ghz(d_ghz), angles->phi_sb,
                                       sign * angles->phi_c))
          .merit.zeta_l;
    } catch (const std::exception&) {
      return -std::numeric_limits<double>::infinity();
    }
  };

  // Coarse scan then golden-section refinement of each branch maximum.
  auto refine_max = [&](auto&& f, double lo, double hi) {
    double best = lo, best_val = -std::numeric_limits<double>::infinity();
    for (double d = lo; d <= hi; d += 0.1) {
      const double v = f(d);
      if (v > best_val) {
        best_val = v;
        best = d;
      }
    }
    return maximize(f, std::max(lo, best - 0.2), std::min(hi, best + 0.2),
                    0.01);
  };

  ResultTable t;
  t.add_column("point");
  t.add_column("detuning", "GHz");
  t.add_column("detuning_ref", "GHz");
  t.add_column("angle1", "deg");
  t.add_column("angle1_ref", "deg");
  t.add_column("angle2", "deg");
  t.add_column("angle2_ref", "deg");
  t.add_column("zeta_l");
  t.add_column("zeta_l_ref");
  t.add_column("zeta_l_dev");
  t.add_column("power", "mW");
  t.add_column("power_ref", "mW");
  t.add_column("power_dev");
  t.set_metadata("version", kVersion);
  t.set_metadata("tau_ms", "1");
  t.set_metadata("waist_mm", "1");

  for (const auto& ref : kTable2Refs) {
    OperatingPoint point;
    double angle1 = kNaN, angle2 = kNaN;
    switch (ref.index) {
      case 1: {
        point = joint_operating_point(scheme, species, from_ghz(-15.0),
                                      from_ghz(0.0));
        angle1 = rad_to_deg(point.config.phi_p);
        break;
      }
      case 2: {
        const double d = refine_max(zeta_ls_null, 230.0, 380.0);
        const auto phi = acss_null_angle(scheme, species, from_ghz(d));
        point = evaluate_point(scheme, species, ls_config(from_ghz(d), *phi));
        angle1 = rad_to_deg(*phi);
        break;
      }
      case 3: {
        const auto roots = ms_null_detunings(scheme, species, std::sqrt(2.0),
                                             from_ghz(-200.0), from_ghz(-100.0));
        if (roots.empty()) throw SearchError("no MS1 null in [-200, -100] GHz");
        double best = roots.front(), best_val = -1.0;
        for (double root : roots) {
          const double b_pi = std::sqrt(2.0 / 3.0);
          const auto p = evaluate_point(
              scheme, species,
              ms1_config(root, std::sqrt(2.0) * b_pi, b_pi));
          if (p.merit.zeta_l > best_val) {
            best_val = p.merit.zeta_l;
            best = root;
          }
        }
        const double b_pi = std::sqrt(2.0 / 3.0);
        point = evaluate_point(
            scheme, species, ms1_config(best, std::sqrt(2.0) * b_pi, b_pi));
        break;
      }
      case 4: {
        const double d =
            refine_max([&](double x) { return zeta_ms2(x, false); }, -200.0,
                       -100.0);
        const auto angles = ms_null_angles(scheme, species, from_ghz(d));
        point = evaluate_point(scheme, species,
                               ms2_config(from_ghz(d), angles->phi_sb,
                                          -angles->phi_c));
        angle1 = rad_to_deg(angles->phi_sb);
        angle2 = -rad_to_deg(angles->phi_c);
        break;
      }
      case 5: {
        const double d = refine_max(
            [&](double x) { return zeta_ms2(x, true); }, 350.0, 500.0);
        const auto angles = ms_null_angles(scheme, species, from_ghz(d));
        point = evaluate_point(scheme, species,
                               ms2_config(from_ghz(d), angles->phi_sb,
                                          angles->phi_c));
        angle1 = rad_to_deg(angles->phi_sb);
        angle2 = rad_to_deg(angles->phi_c);
        break;
      }
    }
    const auto reqs = gate_requirements(point, species, geometry, omega_z, tau);
    t.add_row({static_cast<double>(ref.index), to_ghz(point.config.detuning),
               ref.detuning_ref_ghz, angle1, ref.angle1_ref_deg, angle2,
               ref.angle2_ref_deg, point.merit.zeta_l, ref.zeta_ref,
               rel_dev(point.merit.zeta_l, ref.zeta_ref),
               reqs.total_power * 1e3, ref.power_ref_mw,
               rel_dev(reqs.total_power * 1e3, ref.power_ref_mw)},
              {ref.label});
  }
  return t;
}

namespace {

SweepRequest base_request(GateType gate, SweepQuantity quantity, double lo,
                          double hi, double step) {
  SweepRequest r;
  r.gate = gate;
  r.quantity = quantity;
  r.start = lo;
  r.stop = hi;
  r.step = step;
  return r;
}

} // namespace

ResultTable figure_data(const std::string& id) {
  const auto species = load_species("be9");

  if (id == "fig2") {
    // Polarization angle difference phi_acss - phi_f versus detuning.
    const auto scheme = level_energies(species, 4.46);
    ResultTable t;
    t.add_column("detuning", "GHz");
    t.add_column("phi_acss", "deg");
    t.add_column("phi_f", "deg");
    t.add_column("difference", "deg");
    t.set_metadata("version", kVersion);
    for (double d = -210.0; d <= 210.0 + 1e-9; d += 0.5) {
      std::vector<std::string> flags;
      double pa = kNaN, pf = kNaN, diff = kNaN;
      try {
        const auto a = acss_null_angle(scheme, species, from_ghz(d));
        const auto f = balanced_force_angle(scheme, species, from_ghz(d));
        if (a) pa = rad_to_deg(*a);
        if (f) pf = rad_to_deg(*f);
        if (a && f) {
          diff = pa - pf;
        } else {
          flags.push_back("no_null");
        }
      } catch (const ResonanceError&) {
        flags.push_back("resonant");
      }
      t.add_row({d, pa, pf, diff}, flags);
    }
    return t;
  }

  if (id == "fig3") {
    auto req = base_request(GateType::LS, SweepQuantity::ZetaL, -210, 210, 0.5);
    req.pol_mode = PolarizationMode::AcssNull;
    auto zl = run_sweep(req);
    req.quantity = SweepQuantity::ZetaQNorm;
    auto zq = run_sweep(req);
    ResultTable t;
    t.add_column("detuning", "GHz");
    t.add_column("angle1", "deg");
    t.add_column("zeta_q_norm");
    t.add_column("zeta_l");
    t.set_metadata("version", kVersion);
    for (size_t i = 0; i < zl.n_rows(); ++i) {
      t.add_row({zl.row(i)[0], zl.row(i)[1], zq.row(i)[3], zl.row(i)[3]},
                zl.row_flags(i));
    }
    // Reference point: the joint ACSS-null / balanced-force solution.
    const auto scheme = level_energies(species, 4.46);
    const auto joint =
        joint_operating_point(scheme, species, from_ghz(-15.0), from_ghz(0.0));
    t.add_row({to_ghz(joint.config.detuning), rad_to_deg(joint.config.phi_p),
               joint.merit.zeta_q_normalized, joint.merit.zeta_l},
              {"reference"});
    return t;
  }

  if (id == "fig4") {
    ResultTable t;
    bool first = true;
    for (auto [mode, series] :
         {std::pair{PolarizationMode::Vertical, 0.0},
          std::pair{PolarizationMode::Horizontal, 1.0}}) {
      auto req = base_request(GateType::LS, SweepQuantity::ZetaL, -210, 210, 0.5);
      req.pol_mode = mode;
      auto zl = run_sweep(req);
      req.quantity = SweepQuantity::ZetaQNorm;
      auto zq = run_sweep(req);
      if (first) {
        t.add_column("series"); // 0 vertical, 1 horizontal
        t.add_column("detuning", "GHz");
        t.add_column("zeta_q_norm");
        t.add_column("zeta_l");
        t.set_metadata("series_0", "vertical");
        t.set_metadata("series_1", "horizontal");
        t.set_metadata("version", kVersion);
        first = false;
      }
      for (size_t i = 0; i < zl.n_rows(); ++i) {
        t.add_row({series, zl.row(i)[0], zq.row(i)[3], zl.row(i)[3]},
                  zl.row_flags(i));
      }
    }
    return t;
  }

  if (id == "fig5" || id == "fig11") {
    // MS1 figures of merit for the three amplitude splits (fig5: be9 with
    // null markers; fig11: mg24 across fields).
    ResultTable t;
    t.add_column("series");
    t.add_column("field", "T");
    t.add_column("detuning", "GHz");
    t.add_column("zeta_q_norm");
    t.add_column("zeta_l");
    t.set_metadata("version", kVersion);
    const bool be = (id == "fig5");
    const std::vector<double> fields = be ? std::vector<double>{4.46}
                                          : std::vector<double>{0.5, 2.5, 4.5};
    const std::vector<double> ratios =
        be ? std::vector<double>{1.0, std::sqrt(2.0), 1.0 / std::sqrt(2.0)}
           : std::vector<double>{1.0};
    const double lo = be ? -210.0 : -3300.0;
    const double hi = be ? 210.0 : 400.0;
    const double step = be ? 0.5 : 4.0;
    const std::string name = be ? "be9" : "mg24";
    const auto sp = load_species(name);
    double series = 0.0;
    for (double field : fields) {
      for (double ratio : ratios) {
        auto req = base_request(GateType::MS1, SweepQuantity::ZetaL, lo, hi, step);
        req.species = name;
        req.field_tesla = field;
        req.b_sigma_over_b_pi = ratio;
        auto zl = run_sweep(req);
        req.quantity = SweepQuantity::ZetaQNorm;
        auto zq = run_sweep(req);
        for (size_t i = 0; i < zl.n_rows(); ++i) {
          t.add_row({series, field, zl.row(i)[0], zq.row(i)[3], zl.row(i)[3]},
                    zl.row_flags(i));
        }
        if (be) {
          const auto scheme = level_energies(sp, field);
          for (double root : ms_null_detunings(scheme, sp, ratio, from_ghz(lo),
                                               from_ghz(hi))) {
            const double r2 = ratio * ratio;
            const double b_pi = std::sqrt(2.0 / (1.0 + r2));
            const auto p = evaluate_point(
                scheme, sp, ms1_config(root, ratio * b_pi, b_pi));
            t.add_row({series, field, to_ghz(root), p.merit.zeta_q_normalized,
                       p.merit.zeta_l},
                      {"acss_null"});
          }
        }
        series += 1.0;
      }
    }
    return t;
  }

  if (id == "fig6") {
    ResultTable t;
    bool first = true;
    for (auto [positive, series] : {std::pair{true, 0.0}, std::pair{false, 1.0}}) {
      auto req = base_request(GateType::MS2, SweepQuantity::ZetaL, -210, 210, 0.5);
      req.pol_mode = PolarizationMode::PerBeamNull;
      req.phi_c_positive = positive;
      auto zl = run_sweep(req);
      req.quantity = SweepQuantity::ZetaQNorm;
      auto zq = run_sweep(req);
      if (first) {
        t.add_column("series"); // 0: phi_c > 0, 1: phi_c < 0
        t.add_column("detuning", "GHz");
        t.add_column("phi_sb", "deg");
        t.add_column("phi_c", "deg");
        t.add_column("zeta_q_norm");
        t.add_column("zeta_l");
        t.set_metadata("series_0", "phi_c_positive");
        t.set_metadata("series_1", "phi_c_negative");
        t.set_metadata("version", kVersion);
        first = false;
      }
      for (size_t i = 0; i < zl.n_rows(); ++i) {
        t.add_row({series, zl.row(i)[0], zl.row(i)[1], zl.row(i)[2],
                   zq.row(i)[3], zl.row(i)[3]},
                  zl.row_flags(i));
      }
    }
    return t;
  }

  if (id == "fig7" || id == "fig8") {
    // LS figures of merit across magnetic fields: ACSS-null and vertical
    // branches; fig8 adds the far-detuned vertical panel.
    const bool quad = (id == "fig7");
    ResultTable t;
    t.add_column("mode"); // 0 acss-null, 1 vertical, 2 vertical far-detuned
    t.add_column("field", "T");
    t.add_column("detuning", "GHz");
    t.add_column(quad ? "zeta_q_norm" : "zeta_l");
    t.set_metadata("version", kVersion);
    for (double field : {0.5, 2.5, 4.5}) {
      for (auto [mode, series] :
           {std::pair{PolarizationMode::AcssNull, 0.0},
            std::pair{PolarizationMode::Vertical, 1.0}}) {
        auto req = base_request(
            GateType::LS,
            quad ? SweepQuantity::ZetaQNorm : SweepQuantity::ZetaL, -210, 210,
            0.5);
        req.pol_mode = mode;
        req.field_tesla = field;
        auto s = run_sweep(req);
        for (size_t i = 0; i < s.n_rows(); ++i) {
          t.add_row({series, field, s.row(i)[0], s.row(i)[3]}, s.row_flags(i));
        }
      }
      if (!quad) {
        auto req = base_request(GateType::LS, SweepQuantity::ZetaL, 2000.0,
                                100000.0, 1000.0);
        req.pol_mode = PolarizationMode::Vertical;
        req.field_tesla = field;
        auto s = run_sweep(req);
        for (size_t i = 0; i < s.n_rows(); ++i) {
          t.add_row({2.0, field, s.row(i)[0], s.row(i)[3]}, s.row_flags(i));
        }
      }
    }
    return t;
  }

  if (id == "fig9") {
    // Far-detuned linear figure of merit, required power, and residual ACSS
    // for the LS (vertical) and MS1 (equal-amplitude) configurations.
    ResultTable t;
    t.add_column("series"); // 0 LS, 1 MS
    t.add_column("detuning", "GHz");
    t.add_column("zeta_l");
    t.add_column("power", "mW");
    t.add_column("acss", "kHz");
    t.set_metadata("series_0", "ls_vertical");
    t.set_metadata("series_1", "ms1_equal");
    t.set_metadata("version", kVersion);
    for (auto [gate, series] :
         {std::pair{GateType::LS, 0.0}, std::pair{GateType::MS1, 1.0}}) {
      auto req = base_request(gate, SweepQuantity::Power, 2000.0, 100000.0,
                              1000.0);
      req.pol_mode = PolarizationMode::Vertical;
      auto power = run_sweep(req);
      req.quantity = SweepQuantity::Acss;
      auto acss = run_sweep(req);
      for (size_t i = 0; i < power.n_rows(); ++i) {
        t.add_row({series, power.row(i)[0], power.row(i)[3], power.row(i)[4],
                   acss.row(i)[3]},
                  power.row_flags(i));
      }
    }
    return t;
  }

  if (id == "fig10") {
    ResultTable t;
    t.add_column("panel"); // 0 near manifolds, 1 far detuned
    t.add_column("field", "T");
    t.add_column("detuning", "GHz");
    t.add_column("zeta_l");
    t.set_metadata("version", kVersion);
    for (double field : {0.5, 2.5, 4.5}) {
      for (auto [lo, hi, step, panel] :
           {std::tuple{-3300.0, 400.0, 4.0, 0.0},
            std::tuple{5000.0, 100000.0, 1000.0, 1.0}}) {
        auto req = base_request(GateType::LS, SweepQuantity::ZetaL, lo, hi, step);
        req.species = "mg24";
        req.pol_mode = PolarizationMode::Vertical;
        req.field_tesla = field;
        auto s = run_sweep(req);
        for (size_t i = 0; i < s.n_rows(); ++i) {
          t.add_row({panel, field, s.row(i)[0], s.row(i)[3]}, s.row_flags(i));
        }
      }
    }
    return t;
  }

  if (id == "fig12") {
    // Two-qubit fidelity dynamics for sample decoherence channels.
    ResultTable t;
    t.add_column("series");
    t.add_column("t_times_j");
    t.add_column("fidelity_ls");
    t.add_column("fidelity_ms");
    t.set_metadata("series_0", "gp=0.05J gm=0");
    t.set_metadata("series_1", "gp=0.25J gm=0");
    t.set_metadata("series_2", "gp=0.05J gm=gp");
    t.set_metadata("series_3", "gp=0.25J gm=gp");
    t.set_metadata("series_4", "gel=0.05J");
    t.set_metadata("series_5", "gel=0.25J");
    t.set_metadata("version", kVersion);
    const double j = 1.0;
    struct Case {
      double gp, gm, gel;
    };
    const Case cases[] = {{0.05, 0.0, 0.0}, {0.25, 0.0, 0.0},
                          {0.05, 0.05, 0.0}, {0.25, 0.25, 0.0},
                          {0.0, 0.0, 0.05},  {0.0, 0.0, 0.25}};
    double series = 0.0;
    for (const auto& c : cases) {
      DecoherenceChannel ch;
      ch.gamma_ud = (c.gp + c.gm) * j;
      ch.gamma_du = (c.gp - c.gm) * j;
      ch.gamma_el = c.gel * j;
      const auto params = make_fidelity_params(j, ch);
      for (double tj = 0.0; tj <= kPi + 1e-9; tj += kPi / 200.0) {
        t.add_row({series, tj, fidelity_ls_exact(params, tj / j),
                   fidelity_ms_exact(params, tj / j)});
      }
      series += 1.0;
    }
    return t;
  }

  throw std::invalid_argument(
      "unknown figure id: " + id +
      " (data figures are fig2..fig12; fig1 is a level diagram)");
}

} // namespace iongate
