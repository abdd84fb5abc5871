#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace ris {

using cplx = std::complex<double>;

/// Modulus tolerance for admitting externally supplied complex values.
inline constexpr double kUnimodularTol = 1e-12;

/// Default absolute tolerance on the off-peak sum-ACF residual.
inline constexpr double kGolayTol = 1e-9;

/// Unit-modulus complex sequence (one polarization's phase configuration).
/// The generating phases are kept alongside the exponentiated values so
/// that serialization round-trips bit-exactly.
class PhaseVector {
public:
    static PhaseVector from_phases(std::span<const double> radians);

    /// Validates |value| == 1 within kUnimodularTol; phases are recovered
    /// with arg().
    static PhaseVector from_values(std::span<const cplx> values);

    std::size_t size() const { return values_.size(); }
    const cplx& operator[](std::size_t m) const { return values_[m]; }
    const std::vector<cplx>& values() const { return values_; }
    const std::vector<double>& phases() const { return phases_; }

    bool operator==(const PhaseVector& other) const = default;

private:
    PhaseVector(std::vector<double> phases, std::vector<cplx> values);

    std::vector<double> phases_;
    std::vector<cplx> values_;
};

/// Aperiodic autocorrelation over lags -max_lag .. max_lag, stored densely.
/// Lags outside that range are implicitly zero.
class AcfTable {
public:
    AcfTable(std::vector<cplx> values, int max_lag);

    int max_lag() const { return max_lag_; }
    cplx at(int lag) const;

private:
    std::vector<cplx> values_;  // index lag + max_lag_
    int max_lag_;
};

/// Two equal-length unimodular sequences whose ACFs sum to 2M at lag zero
/// and vanish elsewhere (within the admission tolerance). Construct via
/// is_golay() or the factory functions below.
class GolayPair {
public:
    const PhaseVector& u() const { return u_; }
    const PhaseVector& v() const { return v_; }
    std::size_t length() const { return u_.size(); }

    /// Largest |R_u + R_v| observed over nonzero lags at admission time.
    double residual() const { return residual_; }

private:
    friend std::optional<GolayPair> is_golay(const PhaseVector&, const PhaseVector&, double);

    GolayPair(PhaseVector u, PhaseVector v, double residual);

    PhaseVector u_;
    PhaseVector v_;
    double residual_;
};

/// Aperiodic ACF of a unimodular sequence, computed by the direct O(M^2) sum.
AcfTable acf(const PhaseVector& v);

/// Elementwise R_u + R_v. Throws std::invalid_argument on length mismatch.
AcfTable sum_acf(const PhaseVector& u, const PhaseVector& v);

/// Raw complementarity measurements, independent of any tolerance.
struct GolayCheck {
    double offpeak_residual;  // max |R_u + R_v| over nonzero lags
    double peak_error;        // | (R_u + R_v)[0] - 2M |

    bool within(double tol) const { return offpeak_residual <= tol && peak_error <= tol; }
};

GolayCheck golay_check(const PhaseVector& u, const PhaseVector& v);

/// Admission check for a complementary pair: accepts iff the off-peak
/// sum-ACF magnitudes stay within tol and the lag-0 sum equals 2M within
/// tol. Returns the admitted pair with its residual, or nullopt.
std::optional<GolayPair> is_golay(const PhaseVector& u, const PhaseVector& v,
                                  double tol = kGolayTol);

/// |sum_m v_m e^{-j 2 (m-1) psi}|^2 : squared spatial DTFT at relative
/// phase psi. Serves as the spectral-side oracle for the ACF identities.
double psd(const PhaseVector& v, double rel_phase);

/// Built-in complementary pairs of length 1, 2, 3 and 10. Throws
/// std::invalid_argument for other lengths, listing the supported set.
GolayPair golay_seed(std::size_t length);

std::span<const std::size_t> golay_seed_lengths();

/// Doubling construction ([u|v], [u|-v]); the result is re-verified before
/// being returned.
GolayPair golay_concat(const GolayPair& p);

}  // namespace ris
