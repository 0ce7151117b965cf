#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hetnet/common.hpp"
#include "hetnet/radio.hpp"

namespace hetnet::queueing {

// Per-group Poisson arrival rates (packets/s) and delay caps (seconds).
struct TrafficProfile {
  std::vector<double> arrival_rates;
  std::vector<double> delay_caps;

  int num_groups() const { return static_cast<int>(arrival_rates.size()); }
  double total_arrival() const;
  void validate() const;  // throws Error on negative rates / non-positive caps
};

// i.i.d. scaling factors a_j, uniform on [0.5, 1.5] so E[a_j] = 1.
std::vector<double> generate_scaling(int k, std::uint64_t seed);

// arrival_rates = mean_rate * a_j with the scaling above; all delay caps
// equal delay_cap_s. Deterministic under the seed.
TrafficProfile generate_traffic(int k, double mean_rate, std::uint64_t seed,
                                double delay_cap_s = 0.5);

// r_j = sum_i sum_A s(i,j,A) * x(i,j,A) over the given shares.
double service_rate(std::span<const radio::LinkShare> x, const radio::EfficiencyTable& table, int j);

// M/M/1 mean sojourn time 1/(r - lambda); +infinity when r <= lambda.
double sojourn_time(double service_rate, double arrival_rate);

// Per-group delay-cap check: r_j - lambda_j >= 1/tau_j - tol.
std::vector<bool> qos_satisfied(std::span<const double> rates, const TrafficProfile& profile,
                                double tol = 1e-7);

// Arrival-weighted mean sojourn time over the network; groups with zero
// arrivals contribute nothing. Throws InfeasibleRatesError when a group
// with positive arrivals has r_j <= lambda_j, and Error when total
// arrivals are zero.
double average_sojourn(std::span<const double> rates, const TrafficProfile& profile);

}  // namespace hetnet::queueing
