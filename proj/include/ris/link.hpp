#pragma once

#include "ris/array.hpp"

namespace ris {

/// Deterministic LoS link budget. Gains of the transmitter and user
/// antennas are absorbed into the path-loss intercept (0 dBi).
struct LinkBudget {
    double tx_power_dbm = 47.0;
    double noise_dbm = -90.0;
    double tx_ris_distance_m = 50.0;
    double pathloss_intercept_db = -37.5;
    double pathloss_slope = 22.0;  // dB per decade of distance
};

struct UserSample {
    double distance_m;  // surface-to-user distance
    double departure;   // departure angle towards the user, radians
};

/// intercept - slope * log10(distance / 1 m). Throws std::invalid_argument
/// for non-positive distances.
double pathloss_db(const LinkBudget& budget, double distance_m);

/// End-to-end linear SNR through the surface: transmit power, both path
/// losses, both element gains and the pdaf, accumulated in dB and
/// converted once. Combining over the two polarizations is already part
/// of the pdaf.
double snr_linear(const LinkBudget& budget, const ArrayGeometry& geom,
                  const ElementPattern& pattern, const DualPolConfig& config,
                  const UserSample& user);

/// log2(1 + SNR), bps/Hz.
double spectral_efficiency(const LinkBudget& budget, const ArrayGeometry& geom,
                           const ElementPattern& pattern, const DualPolConfig& config,
                           const UserSample& user);

}  // namespace ris
