#pragma once

#include <cstdint>
#include <numbers>
#include <vector>

#include "ris/sequences.hpp"

namespace ris {

enum class Polarization { H, V };

/// Dual-polarized horizontal ULA: m_per_pol elements in each polarization
/// (2 * m_per_pol in total), interleaved at spacing_wl wavelengths.
struct ArrayGeometry {
    int m_per_pol = 1;
    double spacing_wl = 0.5;        // inter-element spacing / wavelength
    double incident_angle = 0.0;    // angle of arrival at the surface, radians
};

/// Per-element radiation pattern: peak gain minus a quadratic rolloff,
/// clamped floor_db below the peak.
struct ElementPattern {
    double peak_gain_dbi = 8.0;
    double boresight = 0.0;                      // radians
    double width = std::numbers::pi / 2.0;       // radians
    double floor_db = 30.0;
};

/// The pair of phase configurations applied by the surface (H and V).
class DualPolConfig {
public:
    DualPolConfig(PhaseVector phi_h, PhaseVector phi_v);

    const PhaseVector& phi_h() const { return phi_h_; }
    const PhaseVector& phi_v() const { return phi_v_; }
    std::size_t m_per_pol() const { return phi_h_.size(); }

private:
    PhaseVector phi_h_;
    PhaseVector phi_v_;
};

/// Per-element relative phase shift between incidence and departure:
/// 2*pi * spacing_wl * (sin(incident) + sin(departure)).
double relative_phase(const ArrayGeometry& geom, double departure);

/// Equivalent array response of one polarization at the given departure
/// angle. H steps by e^{-j2 psi}; V is the H vector scaled by e^{-j psi}.
std::vector<cplx> equiv_response(const ArrayGeometry& geom, double departure, Polarization pol);

/// Power-domain array factor |phi_H^T a_H|^2 + |phi_V^T a_V|^2.
double pdaf(const DualPolConfig& config, const ArrayGeometry& geom, double departure);

/// Element gain in dBi at the given departure angle.
double element_gain_db(const ElementPattern& pattern, double departure);

/// Total radiation pattern in dB: 10log10(pdaf) plus the element gains on
/// both sides of the reflection. Returns -infinity when the pdaf is zero
/// (a legitimate pattern null).
double radiation_pattern_db(const DualPolConfig& config, const ArrayGeometry& geom,
                            const ElementPattern& pattern, double departure);

/// Broad-beam configuration: the two polarizations take the two halves of
/// a complementary pair, which makes the pdaf spatially flat at 2M.
DualPolConfig config_broad(const GolayPair& pair);

/// Narrow-beam configuration phase-matched to one target angle; the pdaf
/// at the target is 2 M^2.
DualPolConfig config_steered(const ArrayGeometry& geom, double target);

/// Diffuse-scatter configuration: 2M i.i.d. phases uniform on [0, 2*pi),
/// drawn from a deterministic stream seeded by rng_seed.
DualPolConfig config_random(const ArrayGeometry& geom, std::uint64_t rng_seed);

}  // namespace ris
