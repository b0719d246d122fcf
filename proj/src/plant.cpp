#include "aus/plant.hpp"

#include <algorithm>
#include <string>

#include "aus/errors.hpp"

namespace aus::plant {

void EssConfig::validate() const {
  if (!(capacity_kwh > min_energy_kwh) || min_energy_kwh < 0) {
    throw ConfigError("ess: require E_max > E_min >= 0");
  }
  if (!(charge_efficiency > 0 && charge_efficiency <= 1) ||
      !(discharge_efficiency > 0 && discharge_efficiency <= 1)) {
    throw ConfigError("ess: efficiencies must lie in (0, 1]");
  }
  if (!(max_charge_kw > 0) || !(max_discharge_kw > 0)) {
    throw ConfigError("ess: power limits must be positive");
  }
}

void PvConfig::validate() const {
  if (!(installed_kw > 0)) throw ConfigError("pv: installed capacity must be positive");
  if (!(correction_factor > 0 && correction_factor <= 1)) {
    throw ConfigError("pv: correction factor must lie in (0, 1]");
  }
}

void CompressorConfig::validate() const {
  if (count < 1) throw ConfigError("compressors: need at least one");
  if (!(rated_power_kw > 0) || !(rated_airflow_m3h > 0)) {
    throw ConfigError("compressors: ratings must be positive");
  }
}

double injection_power(int compressors_on, const CompressorConfig& cfg) {
  if (compressors_on < 0 || compressors_on > cfg.count) {
    throw ContractViolation("injection_power: compressor count out of range: " +
                            std::to_string(compressors_on));
  }
  return compressors_on * cfg.rated_power_kw;
}

double injection_airflow(int compressors_on, const CompressorConfig& cfg) {
  if (compressors_on < 0 || compressors_on > cfg.count) {
    throw ContractViolation("injection_airflow: compressor count out of range: " +
                            std::to_string(compressors_on));
  }
  return compressors_on * cfg.rated_airflow_m3h;
}

double pv_power(double irradiance_wm2, double dt_hours, const PvConfig& cfg) {
  if (irradiance_wm2 < 0) throw ContractViolation("pv_power: negative irradiance");
  (void)dt_hours;  // hourly grid: irradiance is already the period mean
  return irradiance_wm2 * cfg.installed_kw * cfg.correction_factor / 1000.0;
}

double ess_step(double energy_kwh, double charge_kw, double discharge_kw, const EssConfig& cfg,
                double dt_hours) {
  if (charge_kw != 0.0 && discharge_kw != 0.0) {
    throw ContractViolation("ess_step: simultaneous charge and discharge");
  }
  return energy_kwh + cfg.charge_efficiency * charge_kw * dt_hours -
         discharge_kw * dt_hours / cfg.discharge_efficiency;
}

DispatchResult dispatch(double generation_kw, double essential_kw, double injection_kw,
                        double energy_kwh, const EssConfig& cfg, double dt_hours) {
  DispatchResult r;
  const double net = generation_kw - essential_kw - injection_kw;
  if (net >= 0.0) {
    // Surplus: charge up to the power limit and the headroom that the
    // charge efficiency allows without overshooting E_max.
    const double headroom_kw =
        (cfg.capacity_kwh - energy_kwh) / (cfg.charge_efficiency * dt_hours);
    r.charge_kw = std::min({net, cfg.max_charge_kw, std::max(headroom_kw, 0.0)});
    r.wastage_kwh = (net - r.charge_kw) * dt_hours;
    r.feasible = true;
  } else {
    // Deficit: discharge within the power limit and the energy above the
    // floor, valuing the discharge efficiency so E never crosses E_min.
    const double required_kw = -net;
    const double available_kw =
        std::max(energy_kwh - cfg.min_energy_kwh, 0.0) * cfg.discharge_efficiency / dt_hours;
    r.discharge_kw = std::min({required_kw, cfg.max_discharge_kw, available_kw});
    r.feasible = r.discharge_kw == required_kw;
    r.wastage_kwh = 0.0;
  }
  r.next_energy_kwh = ess_step(energy_kwh, r.charge_kw, r.discharge_kw, cfg, dt_hours);
  return r;
}

}  // namespace aus::plant
