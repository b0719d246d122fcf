#pragma once

namespace aus::plant {

struct EssConfig {
  double capacity_kwh = 86.4;       // E_max
  double min_energy_kwh = 4.0;      // E_min
  double charge_efficiency = 0.95;
  double discharge_efficiency = 0.95;
  double max_charge_kw = 40.0;
  double max_discharge_kw = 40.0;

  void validate() const;
};

struct PvConfig {
  double installed_kw = 48.0;
  double correction_factor = 0.75;  // line loss, soiling, panel angle

  void validate() const;
};

struct CompressorConfig {
  int count = 16;
  double rated_power_kw = 1.0;
  double rated_airflow_m3h = 6.0;

  void validate() const;
};

struct DispatchResult {
  double charge_kw = 0.0;
  double discharge_kw = 0.0;
  double wastage_kwh = 0.0;   // curtailed PV energy this period
  double next_energy_kwh = 0.0;
  bool feasible = true;       // demand fully met
};

// q = m * p0. m must lie in [0, count].
double injection_power(int compressors_on, const CompressorConfig& cfg);

// Q = m * Q0 in m^3/h.
double injection_airflow(int compressors_on, const CompressorConfig& cfg);

// PV output for a mean irradiance over the period. With dt = 1 h the
// energy (kWh) and mean power (kW) coincide numerically.
double pv_power(double irradiance_wm2, double dt_hours, const PvConfig& cfg);

// Battery update E' = E + eta_c*c - d/eta_d. Simultaneous charge and
// discharge is a contract violation.
double ess_step(double energy_kwh, double charge_kw, double discharge_kw, const EssConfig& cfg,
                double dt_hours);

// Balances generation against load for one period. Surplus charges the
// battery up to its power and headroom limits, the remainder is curtailed;
// deficit discharges within the power and floor limits. `feasible` is false
// when the deficit cannot be covered. The balance
// g + d = b + q + c + wastage/dt holds exactly whenever feasible.
DispatchResult dispatch(double generation_kw, double essential_kw, double injection_kw,
                        double energy_kwh, const EssConfig& cfg, double dt_hours);

}  // namespace aus::plant
