#include "ris/sequences.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace ris {

namespace {

std::vector<cplx> exponentiate(std::span<const double> radians) {
    std::vector<cplx> out;
    out.reserve(radians.size());
    for (double p : radians) {
        out.push_back(std::polar(1.0, p));
    }
    return out;
}

}  // namespace

PhaseVector::PhaseVector(std::vector<double> phases, std::vector<cplx> values)
    : phases_(std::move(phases)), values_(std::move(values)) {}

PhaseVector PhaseVector::from_phases(std::span<const double> radians) {
    if (radians.empty()) {
        throw std::invalid_argument("PhaseVector: empty phase list");
    }
    std::vector<double> phases(radians.begin(), radians.end());
    return PhaseVector(std::move(phases), exponentiate(radians));
}

PhaseVector PhaseVector::from_values(std::span<const cplx> values) {
    if (values.empty()) {
        throw std::invalid_argument("PhaseVector: empty value list");
    }
    std::vector<double> phases;
    phases.reserve(values.size());
    for (const cplx& z : values) {
        if (std::abs(std::abs(z) - 1.0) > kUnimodularTol) {
            throw std::invalid_argument("PhaseVector: entry with |z| = " +
                                        std::to_string(std::abs(z)) + " is not unimodular");
        }
        phases.push_back(std::arg(z));
    }
    return PhaseVector(std::move(phases), std::vector<cplx>(values.begin(), values.end()));
}

AcfTable::AcfTable(std::vector<cplx> values, int max_lag)
    : values_(std::move(values)), max_lag_(max_lag) {
    if (max_lag_ < 0 || values_.size() != static_cast<std::size_t>(2 * max_lag_ + 1)) {
        throw std::invalid_argument("AcfTable: values must cover lags -max_lag..max_lag");
    }
}

cplx AcfTable::at(int lag) const {
    if (lag < -max_lag_ || lag > max_lag_) {
        return cplx(0.0, 0.0);
    }
    return values_[static_cast<std::size_t>(lag + max_lag_)];
}

AcfTable acf(const PhaseVector& v) {
    const int m = static_cast<int>(v.size());
    std::vector<cplx> table(static_cast<std::size_t>(2 * m - 1), cplx(0.0, 0.0));
    for (int lag = 0; lag < m; ++lag) {
        cplx sum(0.0, 0.0);
        for (int i = 0; i + lag < m; ++i) {
            sum += v[i] * std::conj(v[i + lag]);
        }
        table[static_cast<std::size_t>(m - 1 + lag)] = sum;
        table[static_cast<std::size_t>(m - 1 - lag)] = std::conj(sum);
    }
    return AcfTable(std::move(table), m - 1);
}

AcfTable sum_acf(const PhaseVector& u, const PhaseVector& v) {
    if (u.size() != v.size()) {
        throw std::invalid_argument("sum_acf: length mismatch (" + std::to_string(u.size()) +
                                    " vs " + std::to_string(v.size()) + ")");
    }
    AcfTable ru = acf(u);
    AcfTable rv = acf(v);
    const int max_lag = ru.max_lag();
    std::vector<cplx> table;
    table.reserve(static_cast<std::size_t>(2 * max_lag + 1));
    for (int lag = -max_lag; lag <= max_lag; ++lag) {
        table.push_back(ru.at(lag) + rv.at(lag));
    }
    return AcfTable(std::move(table), max_lag);
}

GolayPair::GolayPair(PhaseVector u, PhaseVector v, double residual)
    : u_(std::move(u)), v_(std::move(v)), residual_(residual) {}

GolayCheck golay_check(const PhaseVector& u, const PhaseVector& v) {
    AcfTable sum = sum_acf(u, v);
    double residual = 0.0;
    for (int lag = 1; lag <= sum.max_lag(); ++lag) {
        residual = std::max(residual, std::abs(sum.at(lag)));
    }
    const double peak_error = std::abs(sum.at(0) - cplx(2.0 * static_cast<double>(u.size()), 0.0));
    return GolayCheck{residual, peak_error};
}

std::optional<GolayPair> is_golay(const PhaseVector& u, const PhaseVector& v, double tol) {
    if (tol <= 0.0) {
        throw std::invalid_argument("is_golay: tolerance must be positive");
    }
    const GolayCheck check = golay_check(u, v);
    if (!check.within(tol)) {
        return std::nullopt;
    }
    return GolayPair(u, v, check.offpeak_residual);
}

double psd(const PhaseVector& v, double rel_phase) {
    cplx sum(0.0, 0.0);
    for (std::size_t m = 0; m < v.size(); ++m) {
        sum += v[m] * std::polar(1.0, -2.0 * static_cast<double>(m) * rel_phase);
    }
    return std::norm(sum);
}

namespace {

constexpr std::size_t kSeedLengths[] = {1, 2, 3, 10};
constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;

GolayPair make_verified(const PhaseVector& u, const PhaseVector& v, const char* what) {
    std::optional<GolayPair> pair = is_golay(u, v);
    if (!pair) {
        throw std::logic_error(std::string(what) + ": constructed pair failed verification");
    }
    return *std::move(pair);
}

}  // namespace

std::span<const std::size_t> golay_seed_lengths() { return kSeedLengths; }

GolayPair golay_seed(std::size_t length) {
    switch (length) {
        case 1: {
            const double u[] = {0.0};
            const double v[] = {0.0};
            return make_verified(PhaseVector::from_phases(u), PhaseVector::from_phases(v),
                                 "golay_seed(1)");
        }
        case 2: {
            const double u[] = {0.0, 0.0};
            const double v[] = {0.0, kPi};
            return make_verified(PhaseVector::from_phases(u), PhaseVector::from_phases(v),
                                 "golay_seed(2)");
        }
        case 3: {
            const double u[] = {0.0, kHalfPi, 0.0};
            const double v[] = {0.0, 0.0, kPi};
            return make_verified(PhaseVector::from_phases(u), PhaseVector::from_phases(v),
                                 "golay_seed(3)");
        }
        case 10: {
            const double u[] = {0.0, 0.0, kPi, kHalfPi, 0.0, kPi, -kHalfPi, kPi, -kHalfPi, kHalfPi};
            const double v[] = {0.0, 0.0, -kHalfPi, 0.0, -kHalfPi, -kHalfPi, 0.0, kHalfPi, kHalfPi,
                                -kHalfPi};
            return make_verified(PhaseVector::from_phases(u), PhaseVector::from_phases(v),
                                 "golay_seed(10)");
        }
        default:
            throw std::invalid_argument("golay_seed: no built-in pair of length " +
                                        std::to_string(length) + "; supported lengths: 1, 2, 3, 10");
    }
}

GolayPair golay_concat(const GolayPair& p) {
    std::vector<cplx> top(p.u().values());
    std::vector<cplx> bottom(p.v().values());

    std::vector<cplx> new_u = top;
    new_u.insert(new_u.end(), bottom.begin(), bottom.end());
    std::vector<cplx> new_v = top;
    for (const cplx& z : bottom) {
        new_v.push_back(-z);
    }
    return make_verified(PhaseVector::from_values(new_u), PhaseVector::from_values(new_v),
                         "golay_concat");
}

}  // namespace ris
