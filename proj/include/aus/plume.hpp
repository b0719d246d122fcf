#pragma once

#include <limits>
#include <vector>

namespace aus::plume {

struct PlumeConstants {
  double head_height_m = 10.4;      // head height at standard atmospheric pressure
  double slip_velocity_ms = 0.3;    // bubble slip velocity
  double gravity = 9.81;            // m/s^2
  double nozzle_diameter_m = 0.025;
  double density_difference = 0.6;  // kg/m^3 between bottom and surface layers
  double surface_layer_m = 2.0;     // thickness of the surface mixing layer
  double rise_speed_ms = 0.3;       // characteristic plume rise speed for drift
  double slack_speed_ms = 1e-3;     // below this the crossflow counts as slack

  void validate() const;
};

struct NozzleLayout {
  int n_nozzles = 16;
  double spacing_m = 4.0;
  double farm_length_m = 120.0;  // along the current axis
  double farm_width_m = 70.0;
  std::vector<double> positions_m;  // along the current axis, strictly increasing

  // Equal-interval line of nozzles centered on the farm axis.
  static NozzleLayout centered(int n = 16, double spacing = 4.0, double farm_length = 120.0,
                               double farm_width = 70.0);
  void validate() const;
};

// Sentinel meaning the plume reaches the surface regardless of depth.
inline constexpr double kReachesSurface = std::numeric_limits<double>::infinity();

// Entrainment coefficient for an air rate Q in m^3/s; 0 at Q = 0 and
// saturating below 0.082.
double entrainment_coefficient(double air_rate_m3s, const PlumeConstants& k);

// Virtual source displacement of the nozzle. alpha must be positive.
double virtual_displacement(double nozzle_diameter_m, double alpha);

// Volume flow rate of the bubble-entrained plume at the nozzle outlet,
// air rate in m^3/s.
double plume_flow_rate(double air_rate_m3s, double virtual_displacement_m,
                       const PlumeConstants& k);

// Maximum rise height of the plume. The air rate enters in m^3/h. Returns
// kReachesSurface for crossflow at or below the slack threshold.
double max_plume_height(double alpha, double air_rate_m3h, double density_difference,
                        double crossflow_ms, const PlumeConstants& k);

// Lateral drift of the plume while it rises to the surface layer.
double lateral_displacement(double crossflow_ms, double rise_height_m, const PlumeConstants& k);

// Per-period inputs to the crossflow retention factor and transport volume.
struct PlumeStep {
  double air_rate_m3s = 0.0;      // per active nozzle
  double air_rate_m3h = 0.0;      // same rate in m^3/h
  double crossflow_ms = 0.0;      // |u_c| for the current period
  double prev_crossflow_ms = 0.0; // |u_c| for the previous period
  int dir_change = 0;             // 1 if the current reverses in the next period
  int flow_sign = 1;              // direction of the current along the farm axis
  double water_depth_m = 0.0;     // tide height above the nozzles
  double lateral_m = 0.0;         // plume drift during this period's rise
  std::vector<double> prev_lateral_m;  // per-nozzle drift from the previous period
};

// Distance from nozzle i to the downstream farm boundary under the active
// flow direction.
double downstream_distance(const NozzleLayout& layout, int nozzle, int flow_sign);

// Crossflow retention factor, clamped to [0, 1]. Slack current or a vanishing
// denominator yields 1.
double crossflow_factor(const PlumeStep& step, const NozzleLayout& layout, int nozzle,
                        double dt_seconds);

struct TransportResult {
  double total_m3 = 0.0;
  std::vector<double> per_nozzle_m3;
  std::vector<double> retention;       // f1 per active nozzle entry
  double lateral_displacement_m = 0.0; // drift common to all plumes this period
  double max_height_m = 0.0;           // rise height (kReachesSurface at slack)
};

// Volume of bottom water delivered to the surface layer over one period by
// the given active nozzles. A nozzle contributes nothing when the plume tops
// out below the surface layer or its drift overshoots the downstream
// boundary.
TransportResult transport_volume(const PlumeStep& step, const NozzleLayout& layout,
                                 const PlumeConstants& k, const std::vector<int>& active_nozzles,
                                 double dt_seconds);

}  // namespace aus::plume
