#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ris/expansion.hpp"
#include "ris/link.hpp"

namespace ris {

enum class Scheme { Broad, Closest, Random };

std::string scheme_name(Scheme scheme);
Scheme scheme_from_name(const std::string& name);

/// One Monte Carlo experiment: K user positions drawn uniformly in
/// distance and departure angle, served through a surface configured by
/// the selected scheme.
struct Scenario {
    ArrayGeometry geom{60, 0.5, std::numbers::pi / 3.0};
    ElementPattern pattern{};
    LinkBudget budget{};
    int k_users = 1000;
    std::array<double, 2> dist_range_m{50.0, 100.0};
    std::array<double, 2> angle_range{-std::numbers::pi / 2.0, std::numbers::pi / 6.0};
    Scheme scheme = Scheme::Broad;
    std::uint64_t seed = 1;
};

/// Empirical CDF: spectral efficiencies sorted ascending, paired with
/// fractions (i+1)/K.
struct CdfCurve {
    std::vector<double> sorted_values;
    std::vector<double> fractions;

    double fraction_above(double threshold) const;
    double fraction_below(double threshold) const;

    /// Linear interpolation of the value at a given CDF fraction.
    double value_at_fraction(double p) const;
    double median() const { return value_at_fraction(0.5); }
    double max() const { return sorted_values.back(); }
};

/// K independent draws; user k's stream is derived from (seed, k), so the
/// sample is independent of evaluation order and parallelism. Per user the
/// distance is drawn first, then the departure angle.
std::vector<UserSample> sample_users(const Scenario& scenario);

/// Steering target for the narrow-beam baseline: the sampled user with the
/// largest pathloss + element-gain sum, ties broken towards broadside.
double closest_user_target(std::span<const UserSample> users, const LinkBudget& budget,
                           const ElementPattern& pattern);

/// The configuration a scheme applies for the sampled user set.
DualPolConfig scheme_config(const Scenario& scenario, std::span<const UserSample> users);

/// Full experiment: build the scheme's configuration, evaluate every
/// user's spectral efficiency and return the empirical CDF. threads = 0
/// picks a worker count automatically (RIS_THREADS caps it); the output is
/// bit-identical for every worker count.
CdfCurve run(const Scenario& scenario, unsigned threads = 0);

}  // namespace ris
