#include "ris/array.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "ris/rng.hpp"

namespace ris {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

DualPolConfig::DualPolConfig(PhaseVector phi_h, PhaseVector phi_v)
    : phi_h_(std::move(phi_h)), phi_v_(std::move(phi_v)) {
    if (phi_h_.size() != phi_v_.size()) {
        throw std::invalid_argument("DualPolConfig: polarization lengths differ (" +
                                    std::to_string(phi_h_.size()) + " vs " +
                                    std::to_string(phi_v_.size()) + ")");
    }
}

double relative_phase(const ArrayGeometry& geom, double departure) {
    return kTwoPi * geom.spacing_wl * (std::sin(geom.incident_angle) + std::sin(departure));
}

std::vector<cplx> equiv_response(const ArrayGeometry& geom, double departure, Polarization pol) {
    const double psi = relative_phase(geom, departure);
    std::vector<cplx> response(static_cast<std::size_t>(geom.m_per_pol));
    for (std::size_t m = 0; m < response.size(); ++m) {
        response[m] = std::polar(1.0, -2.0 * static_cast<double>(m) * psi);
    }
    if (pol == Polarization::V) {
        const cplx offset = std::polar(1.0, -psi);
        for (cplx& z : response) {
            z *= offset;
        }
    }
    return response;
}

double pdaf(const DualPolConfig& config, const ArrayGeometry& geom, double departure) {
    if (config.m_per_pol() != static_cast<std::size_t>(geom.m_per_pol)) {
        throw std::invalid_argument("pdaf: config has " + std::to_string(config.m_per_pol()) +
                                    " elements per polarization, geometry expects " +
                                    std::to_string(geom.m_per_pol));
    }
    const std::vector<cplx> a_h = equiv_response(geom, departure, Polarization::H);
    const std::vector<cplx> a_v = equiv_response(geom, departure, Polarization::V);
    cplx sum_h(0.0, 0.0);
    cplx sum_v(0.0, 0.0);
    for (std::size_t m = 0; m < a_h.size(); ++m) {
        sum_h += config.phi_h()[m] * a_h[m];
        sum_v += config.phi_v()[m] * a_v[m];
    }
    return std::norm(sum_h) + std::norm(sum_v);
}

double element_gain_db(const ElementPattern& pattern, double departure) {
    const double ratio = (departure - pattern.boresight) / pattern.width;
    return pattern.peak_gain_dbi - std::min(12.0 * ratio * ratio, pattern.floor_db);
}

double radiation_pattern_db(const DualPolConfig& config, const ArrayGeometry& geom,
                            const ElementPattern& pattern, double departure) {
    const double factor = pdaf(config, geom, departure);
    if (factor <= 0.0) {
        return -std::numeric_limits<double>::infinity();
    }
    return 10.0 * std::log10(factor) + element_gain_db(pattern, geom.incident_angle) +
           element_gain_db(pattern, departure);
}

DualPolConfig config_broad(const GolayPair& pair) {
    return DualPolConfig(pair.u(), pair.v());
}

DualPolConfig config_steered(const ArrayGeometry& geom, double target) {
    const double psi = relative_phase(geom, target);
    std::vector<double> phases_h(static_cast<std::size_t>(geom.m_per_pol));
    std::vector<double> phases_v(static_cast<std::size_t>(geom.m_per_pol));
    for (std::size_t m = 0; m < phases_h.size(); ++m) {
        phases_h[m] = 2.0 * static_cast<double>(m) * psi;
        phases_v[m] = (2.0 * static_cast<double>(m) + 1.0) * psi;
    }
    return DualPolConfig(PhaseVector::from_phases(phases_h), PhaseVector::from_phases(phases_v));
}

DualPolConfig config_random(const ArrayGeometry& geom, std::uint64_t rng_seed) {
    SplitMix64 stream = make_stream(rng_seed, 0x636F'6E66'6967ull);
    std::vector<double> phases_h(static_cast<std::size_t>(geom.m_per_pol));
    std::vector<double> phases_v(static_cast<std::size_t>(geom.m_per_pol));
    for (double& p : phases_h) {
        p = kTwoPi * stream.next_double();
    }
    for (double& p : phases_v) {
        p = kTwoPi * stream.next_double();
    }
    return DualPolConfig(PhaseVector::from_phases(phases_h), PhaseVector::from_phases(phases_v));
}

}  // namespace ris
