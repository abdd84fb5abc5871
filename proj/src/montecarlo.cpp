#include "ris/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>

#include "ris/rng.hpp"

namespace ris {

std::string scheme_name(Scheme scheme) {
    switch (scheme) {
        case Scheme::Broad: return "broad";
        case Scheme::Closest: return "closest";
        case Scheme::Random: return "random";
    }
    throw std::logic_error("scheme_name: unknown scheme");
}

Scheme scheme_from_name(const std::string& name) {
    if (name == "broad") return Scheme::Broad;
    if (name == "closest") return Scheme::Closest;
    if (name == "random") return Scheme::Random;
    throw std::invalid_argument("unknown scheme '" + name + "'; expected broad, closest or random");
}

double CdfCurve::fraction_above(double threshold) const {
    const auto it = std::upper_bound(sorted_values.begin(), sorted_values.end(), threshold);
    return static_cast<double>(sorted_values.end() - it) /
           static_cast<double>(sorted_values.size());
}

double CdfCurve::fraction_below(double threshold) const {
    const auto it = std::lower_bound(sorted_values.begin(), sorted_values.end(), threshold);
    return static_cast<double>(it - sorted_values.begin()) /
           static_cast<double>(sorted_values.size());
}

double CdfCurve::value_at_fraction(double p) const {
    if (sorted_values.empty()) {
        throw std::logic_error("CdfCurve: empty curve");
    }
    if (p <= fractions.front()) {
        return sorted_values.front();
    }
    if (p >= fractions.back()) {
        return sorted_values.back();
    }
    const auto it = std::lower_bound(fractions.begin(), fractions.end(), p);
    const std::size_t hi = static_cast<std::size_t>(it - fractions.begin());
    const std::size_t lo = hi - 1;
    const double t = (p - fractions[lo]) / (fractions[hi] - fractions[lo]);
    return sorted_values[lo] + t * (sorted_values[hi] - sorted_values[lo]);
}

namespace {

void validate(const Scenario& s) {
    if (s.k_users < 1) {
        throw std::invalid_argument("scenario: k_users must be at least 1");
    }
    if (!(s.dist_range_m[0] > 0.0) || s.dist_range_m[0] > s.dist_range_m[1]) {
        throw std::invalid_argument("scenario: distance range must be positive and ordered");
    }
    constexpr double half_pi = std::numbers::pi / 2.0;
    if (s.angle_range[0] > s.angle_range[1] || s.angle_range[0] < -half_pi ||
        s.angle_range[1] > half_pi) {
        throw std::invalid_argument("scenario: angle range must be ordered within [-pi/2, pi/2]");
    }
    if (s.geom.m_per_pol < 1 || !(s.geom.spacing_wl > 0.0)) {
        throw std::invalid_argument("scenario: geometry needs m_per_pol >= 1 and spacing > 0");
    }
}

UserSample draw_user(const Scenario& s, std::uint64_t k) {
    SplitMix64 stream = make_stream(s.seed, k);
    const double d =
        s.dist_range_m[0] + (s.dist_range_m[1] - s.dist_range_m[0]) * stream.next_double();
    const double a =
        s.angle_range[0] + (s.angle_range[1] - s.angle_range[0]) * stream.next_double();
    return UserSample{d, a};
}

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) {
        return requested;
    }
    unsigned hw = std::thread::hardware_concurrency();
    unsigned threads = hw > 0 ? std::min(hw, 8u) : 1u;
    if (const char* env = std::getenv("RIS_THREADS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end != env && parsed > 0) {
            threads = std::min<unsigned>(threads, static_cast<unsigned>(parsed));
        }
    }
    return threads;
}

}  // namespace

std::vector<UserSample> sample_users(const Scenario& scenario) {
    validate(scenario);
    std::vector<UserSample> users(static_cast<std::size_t>(scenario.k_users));
    for (std::size_t k = 0; k < users.size(); ++k) {
        users[k] = draw_user(scenario, k);
    }
    return users;
}

double closest_user_target(std::span<const UserSample> users, const LinkBudget& budget,
                           const ElementPattern& pattern) {
    if (users.empty()) {
        throw std::invalid_argument("closest_user_target: no users");
    }
    double best_metric = -std::numeric_limits<double>::infinity();
    double best_angle = 0.0;
    for (const UserSample& user : users) {
        const double metric =
            pathloss_db(budget, user.distance_m) + element_gain_db(pattern, user.departure);
        const bool better =
            metric > best_metric ||
            (metric == best_metric && std::abs(user.departure) < std::abs(best_angle));
        if (better) {
            best_metric = metric;
            best_angle = user.departure;
        }
    }
    return best_angle;
}

DualPolConfig scheme_config(const Scenario& scenario, std::span<const UserSample> users) {
    switch (scenario.scheme) {
        case Scheme::Broad:
            return config_broad(golay_for_length(static_cast<std::size_t>(scenario.geom.m_per_pol)));
        case Scheme::Closest:
            return config_steered(scenario.geom,
                                  closest_user_target(users, scenario.budget, scenario.pattern));
        case Scheme::Random:
            return config_random(scenario.geom, scenario.seed);
    }
    throw std::logic_error("scheme_config: unknown scheme");
}

CdfCurve run(const Scenario& scenario, unsigned threads) {
    validate(scenario);
    const std::vector<UserSample> users = sample_users(scenario);
    const DualPolConfig config = scheme_config(scenario, users);

    std::vector<double> se(users.size());
    const unsigned workers =
        std::max(1u, std::min<unsigned>(resolve_threads(threads),
                                        static_cast<unsigned>(users.size())));
    auto evaluate = [&](unsigned worker) {
        for (std::size_t k = worker; k < users.size(); k += workers) {
            se[k] = spectral_efficiency(scenario.budget, scenario.geom, scenario.pattern, config,
                                        users[k]);
        }
    };
    if (workers == 1) {
        evaluate(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(evaluate, w);
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }

    std::sort(se.begin(), se.end());
    CdfCurve curve;
    curve.sorted_values = std::move(se);
    curve.fractions.resize(curve.sorted_values.size());
    for (std::size_t i = 0; i < curve.fractions.size(); ++i) {
        curve.fractions[i] =
            static_cast<double>(i + 1) / static_cast<double>(curve.fractions.size());
    }
    return curve;
}

}  // namespace ris
