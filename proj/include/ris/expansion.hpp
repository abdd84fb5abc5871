#pragma once

#include <cstddef>
#include <vector>

#include "ris/array.hpp"
#include "ris/sequences.hpp"

namespace ris {

/// A 2MN-per-polarization configuration produced by expanding an
/// M-per-polarization primary with a length-N complementary pair. The
/// expanded surface radiates the primary's pattern scaled by 2N.
struct ExpandedConfig {
    DualPolConfig config;
    std::size_t primary_len;  // M
    std::size_t golay_len;    // N
};

/// Pattern-preserving expansion:
///   phi~_H = [ u (x) phi_H ; -v (x) reverse(conj(phi_V)) ]
///   phi~_V = [ u (x) phi_V ;  v (x) reverse(conj(phi_H)) ]
/// where u (x) phi stacks N blocks, block n being u_n * phi, and the
/// expanded surface is one contiguous ULA at the primary's spacing.
ExpandedConfig expand(const DualPolConfig& primary, const GolayPair& pair);

struct ExpansionReport {
    double max_rel_deviation;  // worst |ratio/2N - 1| over the grid
    double worst_angle;        // departure angle of the worst deviation, radians
    double max_cross_term;     // worst sub-surface cross term, scaled by 2MN
    double tolerance;
    bool ok;
};

/// Grid check that the expanded pdaf is 2N times the primary's at every
/// angle, plus the cross-term cancellation between the two sub-surfaces.
/// The geometry supplies spacing and incidence; its element count is taken
/// from each configuration.
ExpansionReport verify_expansion(const DualPolConfig& primary, const GolayPair& pair,
                                 const ExpandedConfig& expanded, const ArrayGeometry& geom,
                                 int grid_size = 2048, double tol = 1e-9);

/// Composition of two complementary pairs into one of length 2*M*N, built
/// by expanding the first pair (read as a configuration) with the second.
/// The result is re-verified before being returned.
GolayPair golay_product(const GolayPair& p, const GolayPair& q);

/// Builds a complementary pair of the requested length from the seed
/// library via concatenation and products. Throws std::invalid_argument
/// listing the constructible sizes when the length is not reachable.
GolayPair golay_for_length(std::size_t length);

/// All lengths golay_for_length can build, up to and including max_len.
std::vector<std::size_t> constructible_lengths(std::size_t max_len);

}  // namespace ris
