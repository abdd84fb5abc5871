#include "ris/link.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ris {

double pathloss_db(const LinkBudget& budget, double distance_m) {
    if (!(distance_m > 0.0)) {
        throw std::invalid_argument("pathloss_db: distance must be positive, got " +
                                    std::to_string(distance_m));
    }
    return budget.pathloss_intercept_db - budget.pathloss_slope * std::log10(distance_m);
}

double snr_linear(const LinkBudget& budget, const ArrayGeometry& geom,
                  const ElementPattern& pattern, const DualPolConfig& config,
                  const UserSample& user) {
    const double factor = pdaf(config, geom, user.departure);
    if (factor <= 0.0) {
        return 0.0;
    }
    const double snr_db = budget.tx_power_dbm - budget.noise_dbm +
                          pathloss_db(budget, budget.tx_ris_distance_m) +
                          pathloss_db(budget, user.distance_m) +
                          element_gain_db(pattern, geom.incident_angle) +
                          element_gain_db(pattern, user.departure) + 10.0 * std::log10(factor);
    return std::pow(10.0, snr_db / 10.0);
}

double spectral_efficiency(const LinkBudget& budget, const ArrayGeometry& geom,
                           const ElementPattern& pattern, const DualPolConfig& config,
                           const UserSample& user) {
    return std::log2(1.0 + snr_linear(budget, geom, pattern, config, user));
}

}  // namespace ris
