#include "diracspec/circle_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>

#include <fftw3.h>

namespace diracspec {

namespace {

// The FFTW planner is not re-entrant; execution of a finished plan is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

class Dft {
public:
    Dft(std::size_t n, int direction) : n_(n) {
        in_ = fftw_alloc_complex(n);
        out_ = fftw_alloc_complex(n);
        std::lock_guard lock(planner_mutex());
        plan_ = fftw_plan_dft_1d(static_cast<int>(n), in_, out_, direction, FFTW_ESTIMATE);
    }
    ~Dft() {
        {
            std::lock_guard lock(planner_mutex());
            fftw_destroy_plan(plan_);
        }
        fftw_free(in_);
        fftw_free(out_);
    }
    Dft(const Dft&) = delete;
    Dft& operator=(const Dft&) = delete;

    cplx* input() { return reinterpret_cast<cplx*>(in_); }
    const cplx* output() const { return reinterpret_cast<const cplx*>(out_); }
    void run() { fftw_execute(plan_); }
    std::size_t size() const { return n_; }

private:
    std::size_t n_;
    fftw_complex* in_ = nullptr;
    fftw_complex* out_ = nullptr;
    fftw_plan plan_ = nullptr;
};

std::size_t wrap(int n, std::size_t len) {
    const auto l = static_cast<long long>(len);
    return static_cast<std::size_t>(((static_cast<long long>(n) % l) + l) % l);
}

}  // namespace

FourierVector::FourierVector(int bandwidth)
    : bandwidth_(bandwidth), coeffs_(static_cast<std::size_t>(2 * bandwidth + 1)) {
    if (bandwidth < 0) throw std::invalid_argument("FourierVector: negative bandwidth");
}

FourierVector::FourierVector(int bandwidth, std::vector<cplx> coeffs)
    : bandwidth_(bandwidth), coeffs_(std::move(coeffs)) {
    if (bandwidth < 0 || coeffs_.size() != static_cast<std::size_t>(2 * bandwidth + 1))
        throw std::invalid_argument("FourierVector: coefficient count does not match bandwidth");
}

FourierVector FourierVector::basis(int n, int bandwidth) {
    FourierVector f(std::max(std::abs(n), bandwidth));
    f.at(n) = 1.0;
    return f;
}

cplx& FourierVector::at(int n) {
    if (n < -bandwidth_ || n > bandwidth_)
        throw std::out_of_range("FourierVector: index " + std::to_string(n) + " outside band " +
                                std::to_string(bandwidth_));
    return coeffs_[static_cast<std::size_t>(n + bandwidth_)];
}

FourierVector FourierVector::resized(int bandwidth) const {
    FourierVector out(bandwidth);
    const int m = std::min(bandwidth, bandwidth_);
    for (int n = -m; n <= m; ++n) out.at(n) = (*this)[n];
    return out;
}

FourierVector& FourierVector::operator+=(const FourierVector& o) {
    if (o.bandwidth_ > bandwidth_) *this = resized(o.bandwidth_);
    for (int n = -o.bandwidth_; n <= o.bandwidth_; ++n) at(n) += o[n];
    return *this;
}

FourierVector& FourierVector::operator-=(const FourierVector& o) {
    if (o.bandwidth_ > bandwidth_) *this = resized(o.bandwidth_);
    for (int n = -o.bandwidth_; n <= o.bandwidth_; ++n) at(n) -= o[n];
    return *this;
}

FourierVector& FourierVector::operator*=(cplx a) {
    for (auto& c : coeffs_) c *= a;
    return *this;
}

double max_abs_diff(const FourierVector& a, const FourierVector& b) {
    const int m = std::max(a.bandwidth(), b.bandwidth());
    double d = 0.0;
    for (int n = -m; n <= m; ++n) d = std::max(d, std::abs(a[n] - b[n]));
    return d;
}

SpinorTrace::SpinorTrace(FourierVector a, FourierVector b) : first(std::move(a)), second(std::move(b)) {
    const int m = std::max(first.bandwidth(), second.bandwidth());
    if (first.bandwidth() != m) first = first.resized(m);
    if (second.bandwidth() != m) second = second.resized(m);
}

std::vector<double> uniform_angles(std::size_t count) {
    std::vector<double> t(count);
    for (std::size_t j = 0; j < count; ++j) t[j] = kTwoPi * static_cast<double>(j) / static_cast<double>(count);
    return t;
}

FourierVector analyze(std::span<const cplx> samples, int bandwidth) {
    const std::size_t len = samples.size();
    if (bandwidth < 0 || len < static_cast<std::size_t>(2 * bandwidth + 2))
        throw std::invalid_argument("analyze: " + std::to_string(len) + " samples cannot resolve bandwidth " +
                                    std::to_string(bandwidth));
    Dft dft(len, FFTW_FORWARD);
    std::copy(samples.begin(), samples.end(), dft.input());
    dft.run();
    const double scale = kTwoPi / static_cast<double>(len) * kInvSqrtTwoPi;
    FourierVector f(bandwidth);
    for (int n = -bandwidth; n <= bandwidth; ++n) f.at(n) = scale * dft.output()[wrap(n, len)];
    return f;
}

std::vector<cplx> synthesize(const FourierVector& f, std::size_t count) {
    const int bw = f.bandwidth();
    if (count <= static_cast<std::size_t>(2 * bw))
        throw std::invalid_argument("synthesize: sample count must exceed twice the bandwidth");
    Dft dft(count, FFTW_BACKWARD);
    std::fill(dft.input(), dft.input() + count, cplx{});
    for (int n = -bw; n <= bw; ++n) dft.input()[wrap(n, count)] = f[n];
    dft.run();
    std::vector<cplx> out(dft.output(), dft.output() + count);
    for (auto& v : out) v *= kInvSqrtTwoPi;
    return out;
}

cplx evaluate(const FourierVector& f, double theta) {
    cplx acc{};
    for (int n = -f.bandwidth(); n <= f.bandwidth(); ++n) acc += f[n] * std::polar(1.0, n * theta);
    return kInvSqrtTwoPi * acc;
}

double hs_norm(const FourierVector& f, double s) {
    double acc = 0.0;
    for (int n = -f.bandwidth(); n <= f.bandwidth(); ++n)
        acc += std::pow(std::abs(n) + 1.0, 2.0 * s) * std::norm(f[n]);
    return std::sqrt(acc);
}

FourierVector multiply(const FourierVector& g, const FourierVector& f) {
    const int ng = g.bandwidth();
    const int nf = f.bandwidth();
    FourierVector out(ng + nf);
    for (int k = -nf; k <= nf; ++k) {
        const cplx fk = f[k];
        if (fk == cplx{}) continue;
        for (int j = -ng; j <= ng; ++j) out.at(j + k) += g[j] * fk;
    }
    out *= kInvSqrtTwoPi;
    return out;
}

FourierVector shift(const FourierVector& f, int k) {
    FourierVector out(f.bandwidth() + std::abs(k));
    for (int n = -f.bandwidth(); n <= f.bandwidth(); ++n) out.at(n + k) = f[n];
    return out;
}

FourierVector derivative(const FourierVector& f) {
    FourierVector out(f.bandwidth());
    for (int n = -f.bandwidth(); n <= f.bandwidth(); ++n) out.at(n) = cplx(0.0, n) * f[n];
    return out;
}

}  // namespace diracspec
