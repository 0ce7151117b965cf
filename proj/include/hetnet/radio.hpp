#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hetnet/common.hpp"

namespace hetnet::radio {

enum class StationClass { Macro, Pico };

struct Station {
  int id = 0;
  StationClass cls = StationClass::Macro;
  std::array<double, 2> position{0.0, 0.0};  // meters
  double tx_psd_dbm_per_hz = 0.0;            // flat transmit PSD
};

struct UserGroup {
  int id = 0;
  std::array<double, 2> position{0.0, 0.0};   // meters
  double noise_psd_dbm_per_hz = -174.0;       // thermal noise default
};

// Immutable network description. Station ids are 0..n-1 with all macros
// preceding all picos. link_gain is a dense n x k matrix of linear power
// gains, row-major by station.
struct Scenario {
  double area_width_m = 0.0;
  double area_height_m = 0.0;
  std::vector<Station> stations;
  std::vector<UserGroup> groups;
  double total_bandwidth_hz = 10e6;   // W
  double mean_packet_bits = 0.5e6;    // L
  double sinr_cap_db = 30.0;
  std::vector<double> link_gain;      // size n*k, entry [i*k + j]

  int num_stations() const { return static_cast<int>(stations.size()); }
  int num_groups() const { return static_cast<int>(groups.size()); }
  int num_macros() const;
  int num_picos() const { return num_stations() - num_macros(); }
  double gain(int i, int j) const { return link_gain[static_cast<std::size_t>(i) * groups.size() + j]; }

  // Throws Error if any invariant is violated (ordering, gains, W, L).
  void validate() const;
};

// A subset of stations sharing spectrum, as a bitmask over station indices
// (bit i = station i).
struct Pattern {
  std::uint32_t bits = 0;

  bool contains(int i) const { return (bits >> i) & 1u; }
  int size() const { return __builtin_popcount(bits); }
  bool empty() const { return bits == 0; }
  Pattern without(int i) const { return Pattern{bits & ~(1u << i)}; }
  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern&, const Pattern&) = default;
};

std::string pattern_hex(Pattern a);
Pattern pattern_from_hex(const std::string& s);

struct PatternPolicy {
  enum class Kind { Full, MaxCardinality, DistancePruned };
  Kind kind = Kind::Full;
  int max_size = 3;       // MaxCardinality only
  double radius_m = 0.0;  // DistancePruned only

  static PatternPolicy full() { return {Kind::Full, 0, 0.0}; }
  static PatternPolicy max_cardinality(int m) { return {Kind::MaxCardinality, m, 0.0}; }
  static PatternPolicy distance_pruned(double r) { return {Kind::DistancePruned, 0, r}; }
  std::string describe() const;
};

// Ordered, duplicate-free list of patterns. Always contains the empty
// pattern and every singleton.
struct PatternSet {
  std::vector<Pattern> patterns;
  std::string policy;

  int size() const { return static_cast<int>(patterns.size()); }
  const Pattern& operator[](int p) const { return patterns[p]; }
  // Index of a pattern, or -1 when absent.
  int index_of(Pattern a) const;
};

// Map (station i, group j, pattern A) -> spectral efficiency in packets/s.
// Entries with i not in A are zero by construction.
class EfficiencyTable {
 public:
  EfficiencyTable() = default;
  EfficiencyTable(int n, int k, PatternSet patterns, std::vector<double> values)
      : n_(n), k_(k), patterns_(std::move(patterns)), values_(std::move(values)) {}

  int num_stations() const { return n_; }
  int num_groups() const { return k_; }
  const PatternSet& patterns() const { return patterns_; }
  double value(int i, int j, int p) const {
    return values_[(static_cast<std::size_t>(p) * n_ + i) * k_ + j];
  }

 private:
  int n_ = 0, k_ = 0;
  PatternSet patterns_;
  std::vector<double> values_;
};

// One bandwidth share of link station -> group under a pattern.
struct LinkShare {
  int station = 0;
  int group = 0;
  Pattern pattern;
  double value = 0.0;
};

struct HexGridConfig {
  double area_width_m = 500.0;
  double area_height_m = 1000.0;
  int hex_cols = 6;
  int hex_rows = 11;
  std::vector<std::array<double, 2>> macro_positions;
  int pico_count = 0;
  std::uint64_t seed = 0;

  double macro_tx_power_dbm = 46.0;  // total power, flat PSD over W
  double pico_tx_power_dbm = 30.0;
  double total_bandwidth_hz = 10e6;
  double mean_packet_bits = 0.5e6;
  double sinr_cap_db = 30.0;
  double noise_psd_dbm_per_hz = -174.0;
  double min_distance_m = 10.0;
};

// 3GPP urban pathloss with distance in kilometers; distances are clamped
// below at 10 m.
double pathloss_db(StationClass cls, double distance_m, double min_distance_m = 10.0);

// Builds a hexagonal-grid scenario: one user group per hexagon center,
// macros at the configured positions, picos drawn uniformly without
// replacement from the hexagon vertices. Pure function of the config.
Scenario build_hex_scenario(const HexGridConfig& config);

// Enumerates interference patterns under the given policy. Full refuses
// n > 30 as a memory guard.
PatternSet enumerate_patterns(const Scenario& scenario, const PatternPolicy& policy);

// Shannon spectral efficiency of link i -> j under pattern A, in packets/s
// (zero when i is not a member of A). The linear SINR is capped before the
// log per the scenario's sinr_cap_db.
double spectral_efficiency(const Scenario& scenario, int i, int j, Pattern a);

EfficiencyTable build_efficiency_table(const Scenario& scenario, const PatternSet& patterns);

// Table over a subset of the source table's patterns (given as masks, in
// the order provided). Throws if a mask is not present in the source.
EfficiencyTable restrict_table(const EfficiencyTable& table, const std::vector<Pattern>& keep);

}  // namespace hetnet::radio
