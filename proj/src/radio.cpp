#include "hetnet/radio.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>

namespace hetnet::radio {

namespace {

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

double distance(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  return std::hypot(a[0] - b[0], a[1] - b[1]);
}

}  // namespace

int Scenario::num_macros() const {
  int n1 = 0;
  for (const auto& s : stations)
    if (s.cls == StationClass::Macro) ++n1;
  return n1;
}

void Scenario::validate() const {
  const int n = num_stations();
  const int k = num_groups();
  if (total_bandwidth_hz <= 0) throw Error("scenario: total_bandwidth_hz must be positive");
  if (mean_packet_bits <= 0) throw Error("scenario: mean_packet_bits must be positive");
  bool seen_pico = false;
  for (int i = 0; i < n; ++i) {
    if (stations[i].id != i) throw Error("scenario: station ids must be 0..n-1 in order");
    if (stations[i].cls == StationClass::Pico) {
      seen_pico = true;
    } else if (seen_pico) {
      throw Error("scenario: all macros must precede all picos");
    }
  }
  for (int j = 0; j < k; ++j)
    if (groups[j].id != j) throw Error("scenario: group ids must be 0..k-1 in order");
  if (link_gain.size() != static_cast<std::size_t>(n) * k)
    throw Error("scenario: link_gain has wrong dimensions");
  for (double g : link_gain)
    if (!(g > 0.0) || !std::isfinite(g)) throw Error("scenario: link gains must be positive and finite");
}

std::string pattern_hex(Pattern a) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "0x%x", a.bits);
  return buf;
}

Pattern pattern_from_hex(const std::string& s) {
  return Pattern{static_cast<std::uint32_t>(std::stoul(s, nullptr, 16))};
}

std::string PatternPolicy::describe() const {
  switch (kind) {
    case Kind::Full:
      return "full";
    case Kind::MaxCardinality:
      return "maxcard(" + std::to_string(max_size) + ")";
    case Kind::DistancePruned: {
      char buf[48];
      std::snprintf(buf, sizeof(buf), "distance(%g)", radius_m);
      return buf;
    }
  }
  return "?";
}

int PatternSet::index_of(Pattern a) const {
  for (int p = 0; p < size(); ++p)
    if (patterns[p] == a) return p;
  return -1;
}

double pathloss_db(StationClass cls, double distance_m, double min_distance_m) {
  const double d = std::max(distance_m, min_distance_m);
  const double r_km = d / 1000.0;
  if (cls == StationClass::Macro) return 128.1 + 37.6 * std::log10(r_km);
  return 140.7 + 36.7 * std::log10(r_km);
}

Scenario build_hex_scenario(const HexGridConfig& config) {
  if (config.hex_cols <= 0 || config.hex_rows <= 0)
    throw Error("build_hex_scenario: grid dimensions must be positive");
  if (config.pico_count < 0) throw Error("build_hex_scenario: pico count must be >= 0");
  for (const auto& mp : config.macro_positions) {
    if (mp[0] < 0 || mp[0] > config.area_width_m || mp[1] < 0 || mp[1] > config.area_height_m)
      throw Error("build_hex_scenario: macro position outside area");
  }

  // Pointy-top hexagons on an odd-row-offset grid, sized to fit the area.
  const double sqrt3 = std::sqrt(3.0);
  const double s_w = config.area_width_m / (sqrt3 * (config.hex_cols + 0.5));
  const double s_h = config.area_height_m / (1.5 * (config.hex_rows - 1) + 2.0);
  const double s = std::min(s_w, s_h);
  const double hex_w = sqrt3 * s;

  const double grid_w = hex_w * config.hex_cols + (config.hex_rows > 1 ? hex_w / 2 : 0.0);
  const double grid_h = 1.5 * s * (config.hex_rows - 1) + 2.0 * s;
  const double x0 = (config.area_width_m - grid_w) / 2 + hex_w / 2;
  const double y0 = (config.area_height_m - grid_h) / 2 + s;

  Scenario sc;
  sc.area_width_m = config.area_width_m;
  sc.area_height_m = config.area_height_m;
  sc.total_bandwidth_hz = config.total_bandwidth_hz;
  sc.mean_packet_bits = config.mean_packet_bits;
  sc.sinr_cap_db = config.sinr_cap_db;

  std::vector<std::array<double, 2>> centers;
  for (int row = 0; row < config.hex_rows; ++row) {
    for (int col = 0; col < config.hex_cols; ++col) {
      const double cx = x0 + hex_w * col + (row % 2 ? hex_w / 2 : 0.0);
      const double cy = y0 + 1.5 * s * row;
      centers.push_back({cx, cy});
    }
  }
  for (int j = 0; j < static_cast<int>(centers.size()); ++j)
    sc.groups.push_back({j, centers[j], config.noise_psd_dbm_per_hz});

  // Deduplicated hexagon vertices, in a deterministic order.
  std::map<std::pair<long long, long long>, std::array<double, 2>> vertex_map;
  for (const auto& c : centers) {
    for (int v = 0; v < 6; ++v) {
      const double ang = (90.0 + 60.0 * v) * M_PI / 180.0;
      const std::array<double, 2> pt{c[0] + s * std::cos(ang), c[1] + s * std::sin(ang)};
      const auto key = std::make_pair(static_cast<long long>(std::llround(pt[0] * 1e6)),
                                      static_cast<long long>(std::llround(pt[1] * 1e6)));
      vertex_map.emplace(key, pt);
    }
  }
  std::vector<std::array<double, 2>> vertices;
  vertices.reserve(vertex_map.size());
  for (const auto& [key, pt] : vertex_map) vertices.push_back(pt);

  // Exclude vertices coinciding with a macro.
  std::vector<std::array<double, 2>> candidates;
  for (const auto& v : vertices) {
    bool taken = false;
    for (const auto& mp : config.macro_positions)
      if (distance(v, mp) < 1e-6) taken = true;
    if (!taken) candidates.push_back(v);
  }
  if (config.pico_count > static_cast<int>(candidates.size()))
    throw Error("build_hex_scenario: pico count exceeds available hexagon vertices");

  const double w = config.total_bandwidth_hz;
  const double macro_psd = config.macro_tx_power_dbm - 10.0 * std::log10(w);
  const double pico_psd = config.pico_tx_power_dbm - 10.0 * std::log10(w);

  int id = 0;
  for (const auto& mp : config.macro_positions)
    sc.stations.push_back({id++, StationClass::Macro, mp, macro_psd});

  // Partial Fisher-Yates draw of pico vertices.
  Rng rng(config.seed);
  std::vector<int> order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  for (int t = 0; t < config.pico_count; ++t) {
    const auto pick = t + static_cast<int>(rng.below(order.size() - t));
    std::swap(order[t], order[pick]);
    sc.stations.push_back({id++, StationClass::Pico, candidates[order[t]], pico_psd});
  }

  const int n = sc.num_stations();
  const int k = sc.num_groups();
  sc.link_gain.resize(static_cast<std::size_t>(n) * k);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) {
      const double d = distance(sc.stations[i].position, sc.groups[j].position);
      const double pl = pathloss_db(sc.stations[i].cls, d, config.min_distance_m);
      sc.link_gain[static_cast<std::size_t>(i) * k + j] = std::pow(10.0, -pl / 10.0);
    }
  }
  sc.validate();
  return sc;
}

namespace {

// All subsets of the compatibility graph's cliques, grown station by station.
void grow_cliques(std::uint32_t base, int next, int n,
                  const std::vector<std::uint32_t>& compatible,
                  std::vector<Pattern>& out) {
  for (int i = next; i < n; ++i) {
    const std::uint32_t bit = 1u << i;
    if ((compatible[i] & base) == base) {
      out.push_back(Pattern{base | bit});
      grow_cliques(base | bit, i + 1, n, compatible, out);
    }
  }
}

}  // namespace

PatternSet enumerate_patterns(const Scenario& scenario, const PatternPolicy& policy) {
  const int n = scenario.num_stations();
  PatternSet set;
  set.policy = policy.describe();

  switch (policy.kind) {
    case PatternPolicy::Kind::Full: {
      if (n > 30) throw Error("enumerate_patterns: full policy refused for n > 30");
      set.patterns.reserve(std::size_t{1} << n);
      for (std::uint32_t m = 0; m < (1u << n); ++m) set.patterns.push_back(Pattern{m});
      break;
    }
    case PatternPolicy::Kind::MaxCardinality: {
      if (n > 30) throw Error("enumerate_patterns: n > 30 unsupported");
      if (policy.max_size < 1) throw Error("enumerate_patterns: max cardinality must be >= 1");
      for (std::uint32_t m = 0; m < (1u << n); ++m)
        if (__builtin_popcount(m) <= policy.max_size) set.patterns.push_back(Pattern{m});
      const Pattern full{(n == 32) ? ~0u : ((1u << n) - 1)};
      if (full.size() > policy.max_size) set.patterns.push_back(full);
      break;
    }
    case PatternPolicy::Kind::DistancePruned: {
      if (n > 30) throw Error("enumerate_patterns: n > 30 unsupported");
      const int k = scenario.num_groups();
      // Two stations are compatible when some group lies within the radius
      // of both; singleton coverage is not required.
      std::vector<std::uint32_t> compatible(n, 0);
      for (int i = 0; i < n; ++i) {
        for (int i2 = 0; i2 < n; ++i2) {
          if (i2 == i) continue;
          bool ok = false;
          for (int j = 0; j < k && !ok; ++j) {
            const double di = distance(scenario.stations[i].position, scenario.groups[j].position);
            const double di2 = distance(scenario.stations[i2].position, scenario.groups[j].position);
            ok = di <= policy.radius_m && di2 <= policy.radius_m;
          }
          if (ok) compatible[i] |= 1u << i2;
        }
      }
      for (int i = 0; i < n; ++i) compatible[i] |= 1u << i;
      set.patterns.push_back(Pattern{0});
      grow_cliques(0, 0, n, compatible, set.patterns);
      std::sort(set.patterns.begin(), set.patterns.end());
      set.patterns.erase(std::unique(set.patterns.begin(), set.patterns.end()), set.patterns.end());
      break;
    }
  }
  return set;
}

double spectral_efficiency(const Scenario& scenario, int i, int j, Pattern a) {
  if (!a.contains(i)) return 0.0;
  const int n = scenario.num_stations();
  const double noise = dbm_to_mw(scenario.groups[j].noise_psd_dbm_per_hz);
  double interference = 0.0;
  for (int i2 = 0; i2 < n; ++i2) {
    if (i2 == i || !a.contains(i2)) continue;
    interference += dbm_to_mw(scenario.stations[i2].tx_psd_dbm_per_hz) * scenario.gain(i2, j);
  }
  const double signal = dbm_to_mw(scenario.stations[i].tx_psd_dbm_per_hz) * scenario.gain(i, j);
  double sinr = signal / (interference + noise);
  const double cap = std::pow(10.0, scenario.sinr_cap_db / 10.0);
  sinr = std::min(sinr, cap);
  return scenario.total_bandwidth_hz / scenario.mean_packet_bits * std::log2(1.0 + sinr);
}

EfficiencyTable build_efficiency_table(const Scenario& scenario, const PatternSet& patterns) {
  scenario.validate();
  const int n = scenario.num_stations();
  const int k = scenario.num_groups();
  std::vector<double> values(static_cast<std::size_t>(patterns.size()) * n * k, 0.0);
  for (int p = 0; p < patterns.size(); ++p) {
    for (int i = 0; i < n; ++i) {
      if (!patterns[p].contains(i)) continue;
      for (int j = 0; j < k; ++j)
        values[(static_cast<std::size_t>(p) * n + i) * k + j] =
            spectral_efficiency(scenario, i, j, patterns[p]);
    }
  }
  return EfficiencyTable(n, k, patterns, std::move(values));
}

EfficiencyTable restrict_table(const EfficiencyTable& table, const std::vector<Pattern>& keep) {
  const int n = table.num_stations();
  const int k = table.num_groups();
  PatternSet sub;
  sub.policy = table.patterns().policy + "+restricted";
  std::vector<double> values(static_cast<std::size_t>(keep.size()) * n * k, 0.0);
  for (int p = 0; p < static_cast<int>(keep.size()); ++p) {
    const int src = table.patterns().index_of(keep[p]);
    if (src < 0) throw Error("restrict_table: pattern " + pattern_hex(keep[p]) + " not in source table");
    sub.patterns.push_back(keep[p]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < k; ++j)
        values[(static_cast<std::size_t>(p) * n + i) * k + j] = table.value(i, j, src);
  }
  return EfficiencyTable(n, k, std::move(sub), std::move(values));
}

}  // namespace hetnet::radio
