#include "eulerdisc/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eulerdisc {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void check_samples(const CircleSamples& f) {
    if (f.size() < 4 || !is_pow2(f.size()))
        throw std::invalid_argument("circle samples: length must be a power of two >= 4");
    for (const cplx& v : f)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("circle samples: non-finite value");
}

// In-place radix-2 FFT, sign = -1 forward. No scaling.
void fft(std::vector<cplx>& a, int sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * two_pi / static_cast<double>(len);
        const cplx wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                cplx u = a[i + k];
                cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

} // namespace

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

FourierCoeffs::FourierCoeffs(std::size_t n) : c_(n) {
    if (n < 4 || !is_pow2(n))
        throw std::invalid_argument("fourier coeffs: length must be a power of two >= 4");
}

std::size_t FourierCoeffs::idx(int n) const {
    const int N = static_cast<int>(c_.size());
    if (n < -N / 2 || n > N / 2 - 1) throw std::out_of_range("fourier mode out of range");
    return static_cast<std::size_t>(n >= 0 ? n : n + N);
}

FourierCoeffs analyze(const CircleSamples& f) {
    check_samples(f);
    std::vector<cplx> a = f;
    fft(a, -1);
    FourierCoeffs out(f.size());
    const double scale = 1.0 / static_cast<double>(f.size());
    const int N = static_cast<int>(f.size());
    for (int n = -N / 2; n <= N / 2 - 1; ++n)
        out.at(n) = a[static_cast<std::size_t>(n >= 0 ? n : n + N)] * scale;
    return out;
}

CircleSamples synthesize(const FourierCoeffs& c) {
    const int N = static_cast<int>(c.size());
    std::vector<cplx> a(c.size());
    for (int n = -N / 2; n <= N / 2 - 1; ++n)
        a[static_cast<std::size_t>(n >= 0 ? n : n + N)] = c.at(n);
    fft(a, +1);
    return a;
}

CircleSamples hilbert(const CircleSamples& f) {
    FourierCoeffs c = analyze(f);
    for (int n = c.n_min(); n <= c.n_max(); ++n) {
        if (n > 0)
            c.at(n) *= cplx(0.0, -1.0);
        else if (n < 0)
            c.at(n) *= cplx(0.0, 1.0);
        else
            c.at(n) = 0.0;
    }
    return synthesize(c);
}

CircleSamples frac_deriv(const CircleSamples& f, double s) {
    if (!(s > 0.0))
        throw std::invalid_argument("frac_deriv: order s must be > 0");
    FourierCoeffs c = analyze(f);
    for (int n = c.n_min(); n <= c.n_max(); ++n)
        c.at(n) *= std::pow(std::abs(static_cast<double>(n)), s);
    return synthesize(c);
}

double hhalf_fourier(const CircleSamples& f) {
    FourierCoeffs c = analyze(f);
    double acc = 0.0;
    for (int n = c.n_min(); n <= c.n_max(); ++n)
        acc += std::abs(static_cast<double>(n)) * std::norm(c.at(n));
    return std::sqrt(two_pi * acc);
}

double hhalf_integral(const CircleSamples& f) {
    check_samples(f);
    const std::size_t N = f.size();
    for (const cplx& v : f)
        if (std::abs(v.imag()) > 1e-12 * (1.0 + std::abs(v.real())))
            throw std::invalid_argument("hhalf_integral: samples must be real-valued");
    const double h = two_pi / static_cast<double>(N);
    // sin^2((a_j - a_k)/2) depends only on j-k; tabulate once.
    std::vector<double> inv_sin2(N, 0.0);
    for (std::size_t d = 1; d < N; ++d) {
        const double s = std::sin(0.5 * h * static_cast<double>(d));
        inv_sin2[d] = 1.0 / (s * s);
    }
    double acc = 0.0;
    for (std::size_t j = 0; j < N; ++j) {
        const double fj = f[j].real();
        double row = 0.0;
        for (std::size_t k = 0; k < N; ++k) {
            if (k == j) continue;
            const double df = fj - f[k].real();
            row += df * df * inv_sin2[j >= k ? j - k : k - j];
        }
        acc += row;
    }
    return std::sqrt(acc * h * h / (8.0 * std::numbers::pi));
}

CircleSamples poisson_extend(const CircleSamples& boundary, double r) {
    if (!(r >= 0.0 && r < 1.0))
        throw std::invalid_argument("poisson_extend: radius must lie in [0,1)");
    FourierCoeffs c = analyze(boundary);
    for (int n = c.n_min(); n <= c.n_max(); ++n)
        c.at(n) *= std::pow(r, std::abs(n));
    return synthesize(c);
}

cplx average(const CircleSamples& f) {
    check_samples(f);
    cplx acc = 0.0;
    for (const cplx& v : f) acc += v;
    return acc / static_cast<double>(f.size());
}

double l2_norm(const CircleSamples& f) {
    check_samples(f);
    double acc = 0.0;
    for (const cplx& v : f) acc += std::norm(v);
    return std::sqrt(acc * two_pi / static_cast<double>(f.size()));
}

} // namespace eulerdisc
