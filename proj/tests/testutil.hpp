#pragma once

#include <numbers>
#include <vector>

#include "ris/rng.hpp"
#include "ris/sequences.hpp"

namespace testutil {

inline ris::PhaseVector random_unimodular(ris::SplitMix64& rng, std::size_t length) {
    std::vector<double> phases(length);
    for (double& p : phases) {
        p = 2.0 * std::numbers::pi * rng.next_double();
    }
    return ris::PhaseVector::from_phases(phases);
}

inline double uniform(ris::SplitMix64& rng, double lo, double hi) {
    return lo + (hi - lo) * rng.next_double();
}

}  // namespace testutil
