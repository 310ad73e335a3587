#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace diracspec {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
/// (2 pi)^{-1/2}, the normalisation of the orthonormal basis e_n.
inline constexpr double kInvSqrtTwoPi = 0.39894228040143267794;
inline constexpr double kSqrtTwoPi = 2.50662827463100050242;

/// Coefficients f^(n) = <e_n, f>, n in [-N, N], of a function on the unit
/// circle with respect to e_n(theta) = (2 pi)^{-1/2} e^{i n theta}.
/// Reads outside the band return zero.
class FourierVector {
public:
    FourierVector() = default;
    explicit FourierVector(int bandwidth);
    FourierVector(int bandwidth, std::vector<cplx> coeffs);

    /// e_n embedded in bandwidth max(|n|, bandwidth).
    static FourierVector basis(int n, int bandwidth);

    int bandwidth() const { return bandwidth_; }
    std::size_t size() const { return coeffs_.size(); }

    cplx operator[](int n) const {
        return (n < -bandwidth_ || n > bandwidth_) ? cplx{} : coeffs_[static_cast<std::size_t>(n + bandwidth_)];
    }
    cplx& at(int n);

    std::span<const cplx> coeffs() const { return coeffs_; }
    std::span<cplx> coeffs() { return coeffs_; }

    /// Truncate or zero-pad to a new bandwidth.
    FourierVector resized(int bandwidth) const;

    FourierVector& operator+=(const FourierVector& o);
    FourierVector& operator-=(const FourierVector& o);
    FourierVector& operator*=(cplx a);

    friend FourierVector operator+(FourierVector a, const FourierVector& b) { return a += b; }
    friend FourierVector operator-(FourierVector a, const FourierVector& b) { return a -= b; }
    friend FourierVector operator*(cplx a, FourierVector f) { return f *= a; }

    /// max_n |a(n) - b(n)| over the union of both bands.
    friend double max_abs_diff(const FourierVector& a, const FourierVector& b);

private:
    int bandwidth_ = 0;
    std::vector<cplx> coeffs_ = std::vector<cplx>(1);
};

/// Boundary spinor: both components share one bandwidth.
struct SpinorTrace {
    FourierVector first;
    FourierVector second;

    SpinorTrace() = default;
    SpinorTrace(FourierVector a, FourierVector b);
    int bandwidth() const { return first.bandwidth(); }
};

/// theta_j = 2 pi j / count.
std::vector<double> uniform_angles(std::size_t count);

/// Coefficients n in [-bandwidth, bandwidth] from samples at uniform angles.
/// Requires samples.size() >= 2 * bandwidth + 2; exact for band-limited input
/// whose bandwidth stays below samples.size() / 2.
FourierVector analyze(std::span<const cplx> samples, int bandwidth);

/// Values at count uniform angles; count must exceed 2 * bandwidth.
std::vector<cplx> synthesize(const FourierVector& f, std::size_t count);

/// Point value sum_n f^(n) e_n(theta).
cplx evaluate(const FourierVector& f, double theta);

/// ||f||_{H^s} with weights (|n| + 1)^{2s}.
double hs_norm(const FourierVector& f, double s);

/// Pointwise product as a coefficient convolution; bandwidth N_g + N_f.
FourierVector multiply(const FourierVector& g, const FourierVector& f);

/// Multiplication by e^{i k theta}: coefficients move from n to n + k.
/// Bandwidth grows by |k|.
FourierVector shift(const FourierVector& f, int k);

/// Spectral derivative d/dtheta (multiplier i n).
FourierVector derivative(const FourierVector& f);

}  // namespace diracspec
