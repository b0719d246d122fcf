#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace aus::forcing {

// Seconds since the Unix epoch, UTC. All series live on an exact hourly grid.
using UnixTime = std::int64_t;

constexpr std::int64_t kSecondsPerHour = 3600;

UnixTime parse_iso8601_utc(const std::string& text);
std::string format_iso8601_utc(UnixTime t);

struct ForcingRecord {
  UnixTime timestamp = 0;
  double irradiance = 0.0;     // W/m^2, >= 0
  double temperature = 0.0;    // degC
  double tide_height = 0.0;    // m above datum (water depth at the nozzle site), > 0
  double current_speed = 0.0;  // m/s, >= 0
  int current_dir = 1;         // flow direction sign, -1 or +1

  double signed_current() const { return current_speed * current_dir; }
  bool operator==(const ForcingRecord&) const = default;
};

enum class ForcingSource { kSyntheticTide, kCsv };

struct ForcingSeries {
  std::vector<ForcingRecord> records;
  ForcingSource source = ForcingSource::kCsv;

  std::size_t size() const { return records.size(); }
  const ForcingRecord& at(std::size_t i) const { return records[i]; }
};

// Exact header required of forcing CSV files.
extern const char* const kCsvHeader;

// Parses the forcing CSV format. Throws SchemaError / GapError / RangeError /
// DataError with the offending column name or 1-based data-row index.
ForcingSeries parse_forcing_csv(const std::string& text);

// Inverse of parse_forcing_csv; values are printed so that the round trip is
// exact.
std::string serialize_forcing_csv(const ForcingSeries& series);

struct TideModelConfig {
  double height_min = 7.1;   // m
  double height_max = 9.5;   // m
  double speed_max = 0.25;   // m/s
  double period_hours = 12.42;  // semi-diurnal (M2)

  void validate() const;
};

struct TideSample {
  double height = 0.0;  // m
  double speed = 0.0;   // m/s
  int dir = 1;          // sign of the current
};

// Sinusoidal semi-diurnal tide: height is a cosine (high water at t = 0),
// speed is |sin| with slack at high/low water, dir is the sign of sin
// (+1 where sin is exactly 0).
TideSample simplified_tide(double t_hours, const TideModelConfig& cfg);

// Deterministic synthetic forcing: simplified tide plus diurnal irradiance
// and temperature shapes. Timestamps start at `start` on the hourly grid.
struct SyntheticForcingConfig {
  TideModelConfig tide;
  double peak_irradiance = 1000.0;  // W/m^2 at solar noon
  double sunrise_hour = 5.0;        // local hour of day
  double sunset_hour = 19.0;
  double temperature_mean = 10.0;   // degC
  double temperature_amplitude = 3.0;
  double temperature_peak_hour = 15.0;
  UnixTime start = 1548979200;      // 2019-02-01T00:00:00Z
};

ForcingSeries synthesize_forcing(std::size_t hours, const SyntheticForcingConfig& cfg);

// Z-score statistics for the six state features, in state order
// (E, T, I, Z, u, t).
struct NormStats {
  static constexpr int kFeatures = 6;
  double mean[kFeatures] = {0, 0, 0, 0, 0, 0};
  double stddev[kFeatures] = {0, 0, 0, 0, 0, 0};
  std::size_t count = 0;
};

// Fits per-feature moments over a training series. The stored-energy feature
// uses the analytic moments of a uniform distribution over
// [ess_min_kwh, ess_max_kwh]; the time feature is scaled by the episode
// length (mean 0, stddev T) so it normalizes to t/T. The four environmental
// features use population moments of the series.
NormStats fit_normalizer(const ForcingSeries& series, double ess_min_kwh,
                         double ess_max_kwh, double episode_hours);

// Applies the Z-score transform to a raw feature vector; features whose
// stddev is 0 map to 0.
void normalize_features(const double raw[NormStats::kFeatures], const NormStats& stats,
                        double out[NormStats::kFeatures]);

}  // namespace aus::forcing
