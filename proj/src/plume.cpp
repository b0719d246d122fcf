#include "aus/plume.hpp"

#include <algorithm>
#include <cmath>

#include "aus/errors.hpp"

namespace aus::plume {

void PlumeConstants::validate() const {
  if (!(head_height_m > 0) || !(slip_velocity_ms > 0) || !(gravity > 0) ||
      !(nozzle_diameter_m > 0) || !(density_difference > 0) || !(surface_layer_m > 0) ||
      !(rise_speed_ms > 0) || !(slack_speed_ms > 0)) {
    throw ConfigError("plume constants must all be strictly positive");
  }
}

NozzleLayout NozzleLayout::centered(int n, double spacing, double farm_length, double farm_width) {
  NozzleLayout layout;
  layout.n_nozzles = n;
  layout.spacing_m = spacing;
  layout.farm_length_m = farm_length;
  layout.farm_width_m = farm_width;
  const double span = spacing * (n - 1);
  const double first = 0.5 * (farm_length - span);
  layout.positions_m.resize(n);
  for (int i = 0; i < n; ++i) layout.positions_m[i] = first + spacing * i;
  layout.validate();
  return layout;
}

void NozzleLayout::validate() const {
  if (n_nozzles < 1) throw ConfigError("layout: need at least one nozzle");
  if (static_cast<int>(positions_m.size()) != n_nozzles) {
    throw ConfigError("layout: positions must match nozzle count");
  }
  for (int i = 0; i < n_nozzles; ++i) {
    if (positions_m[i] < 0 || positions_m[i] > farm_length_m) {
      throw ConfigError("layout: nozzle position outside the farm");
    }
    if (i > 0 && !(positions_m[i] > positions_m[i - 1])) {
      throw ConfigError("layout: positions must be strictly increasing");
    }
  }
}

double entrainment_coefficient(double air_rate_m3s, const PlumeConstants& k) {
  if (air_rate_m3s <= 0.0) return 0.0;
  const double buoyancy_scale =
      std::cbrt(k.gravity * air_rate_m3s / k.head_height_m) / k.slip_velocity_ms;
  return 0.082 * std::pow(std::tanh(buoyancy_scale), 3.0 / 8.0);
}

double virtual_displacement(double nozzle_diameter_m, double alpha) {
  if (!(alpha > 0.0)) {
    throw ContractViolation("virtual_displacement: alpha must be positive (compressor off?)");
  }
  return nozzle_diameter_m / (1.2 * alpha);
}

double plume_flow_rate(double air_rate_m3s, double virtual_displacement_m,
                       const PlumeConstants& k) {
  if (air_rate_m3s <= 0.0 || virtual_displacement_m <= 0.0) return 0.0;
  const double momentum_term =
      std::tanh(std::cbrt(k.gravity * air_rate_m3s) / (k.head_height_m * 0.25));
  return 0.06 * std::cbrt(air_rate_m3s) * std::pow(virtual_displacement_m, 5.0 / 3.0) *
         std::pow(momentum_term, 3.0 / 8.0);
}

double max_plume_height(double alpha, double air_rate_m3h, double density_difference,
                        double crossflow_ms, const PlumeConstants& k) {
  if (crossflow_ms <= k.slack_speed_ms) return kReachesSurface;
  const double source_strength = std::pow(alpha, -2.0 / 3.0) * std::cbrt(air_rate_m3h);
  return 0.0006 * std::pow(source_strength, 1.9) /
             (std::pow(density_difference, 0.4) * std::pow(crossflow_ms, 1.1)) -
         0.4446;
}

double lateral_displacement(double crossflow_ms, double rise_height_m, const PlumeConstants& k) {
  return crossflow_ms * rise_height_m / k.rise_speed_ms;
}

double downstream_distance(const NozzleLayout& layout, int nozzle, int flow_sign) {
  const double pos = layout.positions_m[nozzle];
  return flow_sign >= 0 ? layout.farm_length_m - pos : pos;
}

double crossflow_factor(const PlumeStep& step, const NozzleLayout& layout, int nozzle,
                        double dt_seconds) {
  const double u = step.crossflow_ms;
  if (u <= 0.0) return 1.0;

  const double xd = downstream_distance(layout, nozzle, step.flow_sign);
  const double xs = step.lateral_m;
  const double xs_prev =
      nozzle < static_cast<int>(step.prev_lateral_m.size()) ? step.prev_lateral_m[nozzle] : 0.0;

  const double drift = u * dt_seconds;
  if (drift == 0.0 || xd - xs == 0.0 || xd - xs_prev == 0.0) return 1.0;

  const double ratio = (xd - xs) / drift;
  const double spread = (drift - xd) / (xd - xs);
  const double persistence =
      (step.prev_crossflow_ms / u) *
      (step.dir_change * (layout.farm_length_m - xd) / (xd - xs_prev) + 0.5);
  const double raw = ratio * ratio * (spread + persistence + 0.5);
  return std::clamp(raw, 0.0, 1.0);
}

TransportResult transport_volume(const PlumeStep& step, const NozzleLayout& layout,
                                 const PlumeConstants& k, const std::vector<int>& active_nozzles,
                                 double dt_seconds) {
  TransportResult result;
  result.per_nozzle_m3.assign(layout.n_nozzles, 0.0);
  if (active_nozzles.empty() || step.air_rate_m3s <= 0.0) {
    result.max_height_m = 0.0;
    return result;
  }
  if (!(step.water_depth_m > k.surface_layer_m)) {
    throw ContractViolation("transport_volume: water depth must exceed the surface layer");
  }

  const double alpha = entrainment_coefficient(step.air_rate_m3s, k);
  const double dz = virtual_displacement(k.nozzle_diameter_m, alpha);
  const double qw = plume_flow_rate(step.air_rate_m3s, dz, k);
  const double zm = max_plume_height(alpha, step.air_rate_m3h, k.density_difference,
                                     step.crossflow_ms, k);
  const double zs = step.water_depth_m - k.surface_layer_m;  // height the plume must climb
  const double xs = lateral_displacement(step.crossflow_ms, zs, k);

  result.max_height_m = zm;
  result.lateral_displacement_m = xs;

  if (zm < zs) return result;  // plume tops out below the surface layer

  for (int nozzle : active_nozzles) {
    const double xd = downstream_distance(layout, nozzle, step.flow_sign);
    if (xs > xd) {
      result.retention.push_back(0.0);
      continue;  // drifts past the downstream boundary before surfacing
    }
    PlumeStep local = step;
    local.lateral_m = xs;
    const double f1 = crossflow_factor(local, layout, nozzle, dt_seconds);
    const double v = f1 * qw * dt_seconds;
    result.retention.push_back(f1);
    result.per_nozzle_m3[nozzle] = v;
    result.total_m3 += v;
  }
  return result;
}

}  // namespace aus::plume
