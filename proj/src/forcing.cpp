#include "aus/forcing.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "aus/errors.hpp"

namespace aus::forcing {

const char* const kCsvHeader =
    "timestamp,irradiance_wm2,temperature_c,tide_height_m,current_speed_ms,current_dir";

namespace {

// Days from 1970-01-01 for a proleptic Gregorian date (Hinnant's algorithm).
std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
  m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
  y = static_cast<int>(yy + (m <= 2));
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

double parse_double_field(const std::string& s, const char* column, std::size_t row) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') {
    throw RangeError("row " + std::to_string(row) + ": column '" + column +
                         "' is not a number: '" + s + "'",
                     row);
  }
  return v;
}

}  // namespace

UnixTime parse_iso8601_utc(const std::string& text) {
  int y, mo, d, h, mi, s;
  char zone = '\0';
  if (std::sscanf(text.c_str(), "%d-%d-%dT%d:%d:%d%c", &y, &mo, &d, &h, &mi, &s, &zone) != 7 ||
      zone != 'Z') {
    throw DataError("timestamp is not ISO-8601 UTC (YYYY-MM-DDThh:mm:ssZ): '" + text + "'");
  }
  if (mo < 1 || mo > 12 || d < 1 || d > 31 || h < 0 || h > 23 || mi < 0 || mi > 59 || s < 0 ||
      s > 60) {
    throw DataError("timestamp field out of range: '" + text + "'");
  }
  return days_from_civil(y, mo, d) * 86400 + h * 3600 + mi * 60 + s;
}

std::string format_iso8601_utc(UnixTime t) {
  std::int64_t days = t / 86400;
  std::int64_t rem = t % 86400;
  if (rem < 0) {
    rem += 86400;
    days -= 1;
  }
  int y, mo, d;
  civil_from_days(days, y, mo, d);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ", y, mo, d,
                static_cast<int>(rem / 3600), static_cast<int>(rem / 60 % 60),
                static_cast<int>(rem % 60));
  return buf;
}

ForcingSeries parse_forcing_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw SchemaError("empty input: missing header");
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();

  const std::vector<std::string> expected = split_csv_line(kCsvHeader);
  const std::vector<std::string> got = split_csv_line(line);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i >= got.size()) throw SchemaError("missing column '" + expected[i] + "'");
    if (got[i] != expected[i]) {
      throw SchemaError("unknown column '" + got[i] + "' where '" + expected[i] +
                        "' was expected");
    }
  }
  if (got.size() > expected.size()) throw SchemaError("unknown column '" + got[expected.size()] + "'");

  ForcingSeries series;
  series.source = ForcingSource::kCsv;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ++row;
    const auto fields = split_csv_line(line);
    if (fields.size() != expected.size()) {
      throw SchemaError("row " + std::to_string(row) + ": expected " +
                        std::to_string(expected.size()) + " fields, got " +
                        std::to_string(fields.size()));
    }
    ForcingRecord rec;
    rec.timestamp = parse_iso8601_utc(fields[0]);
    rec.irradiance = parse_double_field(fields[1], "irradiance_wm2", row);
    rec.temperature = parse_double_field(fields[2], "temperature_c", row);
    rec.tide_height = parse_double_field(fields[3], "tide_height_m", row);
    rec.current_speed = parse_double_field(fields[4], "current_speed_ms", row);
    const double dir = parse_double_field(fields[5], "current_dir", row);
    if (dir != 1.0 && dir != -1.0) {
      throw RangeError("row " + std::to_string(row) + ": current_dir must be -1 or 1", row);
    }
    rec.current_dir = static_cast<int>(dir);
    if (rec.irradiance < 0) {
      throw RangeError("row " + std::to_string(row) + ": negative irradiance", row);
    }
    if (rec.current_speed < 0) {
      throw RangeError("row " + std::to_string(row) + ": negative current_speed", row);
    }
    if (!(rec.tide_height > 0)) {
      throw RangeError("row " + std::to_string(row) + ": tide_height must be > 0", row);
    }
    if (!series.records.empty()) {
      const UnixTime prev = series.records.back().timestamp;
      if (rec.timestamp - prev != kSecondsPerHour) {
        throw GapError("row " + std::to_string(row) + ": timestamps must advance by exactly 1 hour",
                       row);
      }
    }
    series.records.push_back(rec);
  }
  if (series.records.empty()) throw DataError("empty series");
  return series;
}

std::string serialize_forcing_csv(const ForcingSeries& series) {
  std::string out(kCsvHeader);
  out.push_back('\n');
  char buf[256];
  for (const auto& r : series.records) {
    // %.17g keeps the values bit-exact through a parse round trip.
    std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%.17g,%.17g,%d\n",
                  format_iso8601_utc(r.timestamp).c_str(), r.irradiance, r.temperature,
                  r.tide_height, r.current_speed, r.current_dir);
    out += buf;
  }
  return out;
}

void TideModelConfig::validate() const {
  if (!(height_max > height_min) || !(height_min > 0)) {
    throw ConfigError("tide: require height_max > height_min > 0");
  }
  if (!(speed_max > 0)) throw ConfigError("tide: require speed_max > 0");
  if (!(period_hours > 0)) throw ConfigError("tide: require period > 0");
}

TideSample simplified_tide(double t_hours, const TideModelConfig& cfg) {
  const double mid = 0.5 * (cfg.height_min + cfg.height_max);
  const double amp = 0.5 * (cfg.height_max - cfg.height_min);
  const double phase = 2.0 * std::numbers::pi * t_hours / cfg.period_hours;
  const double s = std::sin(phase);
  TideSample out;
  out.height = mid + amp * std::cos(phase);
  out.speed = cfg.speed_max * std::abs(s);
  out.dir = s < 0.0 ? -1 : 1;
  return out;
}

ForcingSeries synthesize_forcing(std::size_t hours, const SyntheticForcingConfig& cfg) {
  cfg.tide.validate();
  if (hours == 0) throw ConfigError("synthetic forcing: hours must be > 0");
  ForcingSeries series;
  series.source = ForcingSource::kSyntheticTide;
  series.records.reserve(hours);
  const double pi = std::numbers::pi;
  for (std::size_t i = 0; i < hours; ++i) {
    const double t = static_cast<double>(i);
    const TideSample tide = simplified_tide(t, cfg.tide);
    ForcingRecord rec;
    rec.timestamp = cfg.start + static_cast<UnixTime>(i) * kSecondsPerHour;
    const double hod = std::fmod(static_cast<double>(cfg.start / kSecondsPerHour % 24) + t, 24.0);
    const double daylen = cfg.sunset_hour - cfg.sunrise_hour;
    rec.irradiance = 0.0;
    if (hod > cfg.sunrise_hour && hod < cfg.sunset_hour && daylen > 0) {
      rec.irradiance = cfg.peak_irradiance * std::sin(pi * (hod - cfg.sunrise_hour) / daylen);
    }
    rec.temperature = cfg.temperature_mean +
                      cfg.temperature_amplitude *
                          std::cos(2.0 * pi * (hod - cfg.temperature_peak_hour) / 24.0);
    rec.tide_height = tide.height;
    rec.current_speed = tide.speed;
    rec.current_dir = tide.dir;
    series.records.push_back(rec);
  }
  return series;
}

NormStats fit_normalizer(const ForcingSeries& series, double ess_min_kwh, double ess_max_kwh,
                         double episode_hours) {
  const std::size_t n = series.size();
  if (n < 2) throw DataError("fit_normalizer: series too short (need length > 1)");
  if (!(ess_max_kwh > ess_min_kwh)) throw ConfigError("fit_normalizer: E_max must exceed E_min");
  if (!(episode_hours > 0)) throw ConfigError("fit_normalizer: episode length must be > 0");

  NormStats stats;
  stats.count = n;

  // Stored energy is uniform over [E_min, E_max] by assumption: analytic moments.
  stats.mean[0] = 0.5 * (ess_min_kwh + ess_max_kwh);
  stats.stddev[0] = (ess_max_kwh - ess_min_kwh) / std::sqrt(12.0);

  // Environmental features: population moments over the series.
  auto fit = [&](int feature, auto&& get) {
    double sum = 0.0;
    for (const auto& r : series.records) sum += get(r);
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (const auto& r : series.records) {
      const double d = get(r) - mean;
      ss += d * d;
    }
    stats.mean[feature] = mean;
    stats.stddev[feature] = std::sqrt(ss / static_cast<double>(n));
  };
  fit(1, [](const ForcingRecord& r) { return r.temperature; });
  fit(2, [](const ForcingRecord& r) { return r.irradiance; });
  fit(3, [](const ForcingRecord& r) { return r.tide_height; });
  fit(4, [](const ForcingRecord& r) { return r.signed_current(); });

  // Time within the episode is uniform by construction: scale to t/T.
  stats.mean[5] = 0.0;
  stats.stddev[5] = episode_hours;
  return stats;
}

void normalize_features(const double raw[NormStats::kFeatures], const NormStats& stats,
                        double out[NormStats::kFeatures]) {
  for (int i = 0; i < NormStats::kFeatures; ++i) {
    out[i] = stats.stddev[i] > 0.0 ? (raw[i] - stats.mean[i]) / stats.stddev[i] : 0.0;
  }
}

}  // namespace aus::forcing
