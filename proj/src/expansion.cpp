#include "ris/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ris {

namespace {

std::vector<cplx> reversed_conj(const PhaseVector& v) {
    std::vector<cplx> out(v.values().rbegin(), v.values().rend());
    for (cplx& z : out) {
        z = std::conj(z);
    }
    return out;
}

// N blocks, block n = u_n * block (optionally negated).
void append_kron(std::vector<cplx>& dest, const PhaseVector& u, const std::vector<cplx>& block,
                 double sign) {
    for (std::size_t n = 0; n < u.size(); ++n) {
        for (const cplx& z : block) {
            dest.push_back(sign * u[n] * z);
        }
    }
}

}  // namespace

ExpandedConfig expand(const DualPolConfig& primary, const GolayPair& pair) {
    const std::size_t m = primary.m_per_pol();
    const std::size_t n = pair.length();

    const std::vector<cplx> rev_v = reversed_conj(primary.phi_v());
    const std::vector<cplx> rev_h = reversed_conj(primary.phi_h());

    std::vector<cplx> tilde_h;
    tilde_h.reserve(2 * m * n);
    append_kron(tilde_h, pair.u(), primary.phi_h().values(), 1.0);
    append_kron(tilde_h, pair.v(), rev_v, -1.0);

    std::vector<cplx> tilde_v;
    tilde_v.reserve(2 * m * n);
    append_kron(tilde_v, pair.u(), primary.phi_v().values(), 1.0);
    append_kron(tilde_v, pair.v(), rev_h, 1.0);

    return ExpandedConfig{
        DualPolConfig(PhaseVector::from_values(tilde_h), PhaseVector::from_values(tilde_v)), m, n};
}

ExpansionReport verify_expansion(const DualPolConfig& primary, const GolayPair& pair,
                                 const ExpandedConfig& expanded, const ArrayGeometry& geom,
                                 int grid_size, double tol) {
    const std::size_t m = primary.m_per_pol();
    const std::size_t n = pair.length();
    const std::size_t half = m * n;
    if (expanded.config.m_per_pol() != 2 * half) {
        throw std::invalid_argument("verify_expansion: expanded length does not match 2*M*N");
    }
    if (grid_size < 2) {
        throw std::invalid_argument("verify_expansion: grid_size must be at least 2");
    }

    ArrayGeometry primary_geom = geom;
    primary_geom.m_per_pol = static_cast<int>(m);
    ArrayGeometry expanded_geom = geom;
    expanded_geom.m_per_pol = static_cast<int>(2 * half);

    const double scale = 2.0 * static_cast<double>(n);
    const double cross_scale = 2.0 * static_cast<double>(half);
    const PhaseVector& th = expanded.config.phi_h();
    const PhaseVector& tv = expanded.config.phi_v();

    ExpansionReport report{0.0, 0.0, 0.0, tol, true};
    for (int i = 0; i < grid_size; ++i) {
        const double angle = -std::numbers::pi / 2.0 +
                             std::numbers::pi * static_cast<double>(i) /
                                 static_cast<double>(grid_size - 1);
        const double base = pdaf(primary, primary_geom, angle);
        const double grown = pdaf(expanded.config, expanded_geom, angle);
        // Relative away from nulls, absolute at them; a pointwise ratio is
        // float noise where both patterns vanish.
        const double deviation = std::abs(grown - scale * base) / (scale * (1.0 + base));
        if (deviation > report.max_rel_deviation) {
            report.max_rel_deviation = deviation;
            report.worst_angle = angle;
        }

        // Cross term between the two halves, evaluated against the
        // H-polarization response of the full expanded aperture.
        const std::vector<cplx> a =
            equiv_response(expanded_geom, angle, Polarization::H);
        cplx sh1(0.0, 0.0), sh2(0.0, 0.0), sv1(0.0, 0.0), sv2(0.0, 0.0);
        for (std::size_t k = 0; k < half; ++k) {
            sh1 += th[k] * a[k];
            sv1 += tv[k] * a[k];
            sh2 += th[half + k] * a[half + k];
            sv2 += tv[half + k] * a[half + k];
        }
        const double cross = std::abs(std::conj(sh1) * sh2 + std::conj(sv1) * sv2) / cross_scale;
        report.max_cross_term = std::max(report.max_cross_term, cross);
    }
    report.ok = report.max_rel_deviation <= tol && report.max_cross_term <= tol;
    return report;
}

GolayPair golay_product(const GolayPair& p, const GolayPair& q) {
    const ExpandedConfig grown = expand(DualPolConfig(p.u(), p.v()), q);
    std::optional<GolayPair> pair = is_golay(grown.config.phi_h(), grown.config.phi_v());
    if (!pair) {
        throw std::logic_error("golay_product: expanded pair failed verification");
    }
    return *std::move(pair);
}

namespace {

bool length_constructible(std::size_t length, std::map<std::size_t, bool>& memo) {
    if (length == 0) {
        return false;
    }
    for (std::size_t s : golay_seed_lengths()) {
        if (length == s) {
            return true;
        }
    }
    auto it = memo.find(length);
    if (it != memo.end()) {
        return it->second;
    }
    memo[length] = false;  // guard against re-entry
    bool ok = false;
    if (length % 2 == 0) {
        ok = length_constructible(length / 2, memo);
        if (!ok) {
            const std::size_t target = length / 2;  // a*b with pair lengths a, b
            for (std::size_t a = 2; a * a <= target && !ok; ++a) {
                if (target % a == 0) {
                    ok = length_constructible(a, memo) && length_constructible(target / a, memo);
                }
            }
        }
    }
    memo[length] = ok;
    return ok;
}

GolayPair build_length(std::size_t length, std::map<std::size_t, bool>& memo) {
    for (std::size_t s : golay_seed_lengths()) {
        if (length == s) {
            return golay_seed(length);
        }
    }
    if (length % 2 == 0 && length_constructible(length / 2, memo)) {
        return golay_concat(build_length(length / 2, memo));
    }
    if (length % 2 == 0) {
        const std::size_t target = length / 2;
        for (std::size_t a = 2; a * a <= target; ++a) {
            if (target % a == 0 && length_constructible(a, memo) &&
                length_constructible(target / a, memo)) {
                return golay_product(build_length(a, memo), build_length(target / a, memo));
            }
        }
    }
    std::ostringstream msg;
    msg << "no complementary pair of length " << length
        << " is constructible from the seed library; constructible sizes up to "
        << std::max<std::size_t>(2 * length, 128) << ":";
    for (std::size_t l : constructible_lengths(std::max<std::size_t>(2 * length, 128))) {
        msg << ' ' << l;
    }
    throw std::invalid_argument(msg.str());
}

}  // namespace

GolayPair golay_for_length(std::size_t length) {
    std::map<std::size_t, bool> memo;
    return build_length(length, memo);
}

std::vector<std::size_t> constructible_lengths(std::size_t max_len) {
    std::map<std::size_t, bool> memo;
    std::vector<std::size_t> out;
    for (std::size_t l = 1; l <= max_len; ++l) {
        if (length_constructible(l, memo)) {
            out.push_back(l);
        }
    }
    return out;
}

}  // namespace ris
