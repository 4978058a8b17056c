#pragma once

// Circle transforms on uniform grids: FFT analysis/synthesis, Hilbert
// transform, fractional derivatives |d/da|^s, H^{1/2} seminorms and the
// Poisson extension. All operators use the hat(f)(n) = (1/2pi) int f e^{-ina}
// normalization, so Parseval reads ||f||_2^2 = 2pi * sum |hat(f)(n)|^2.

#include <complex>
#include <vector>

namespace eulerdisc {

using cplx = std::complex<double>;

// Samples f(theta_j), theta_j = 2*pi*j/N, N a power of two >= 4.
using CircleSamples = std::vector<cplx>;

bool is_pow2(std::size_t n);

// Coefficients indexed n in [-N/2, N/2-1].
class FourierCoeffs {
public:
    explicit FourierCoeffs(std::size_t n);
    std::size_t size() const { return c_.size(); }
    int n_min() const { return -static_cast<int>(c_.size()) / 2; }
    int n_max() const { return static_cast<int>(c_.size()) / 2 - 1; }
    cplx& at(int n) { return c_[idx(n)]; }
    const cplx& at(int n) const { return c_[idx(n)]; }

private:
    std::size_t idx(int n) const;
    std::vector<cplx> c_;
};

FourierCoeffs analyze(const CircleSamples& f);
CircleSamples synthesize(const FourierCoeffs& c);

// Multiplier -i*sgn(n). Output has zero mean; applied twice gives -(f - Av f).
CircleSamples hilbert(const CircleSamples& f);

// Multiplier |n|^s, s > 0 (the n = 0 symbol is 0).
CircleSamples frac_deriv(const CircleSamples& f, double s);

// Homogeneous H^{1/2} seminorm, spectral route: sqrt(2pi sum |n| |hat(f)|^2).
double hhalf_fourier(const CircleSamples& f);

// Same seminorm via the double integral with kernel 1/sin^2((a-b)/2),
// trapezoid on the N x N grid with the diagonal cells dropped. Requires
// real-valued samples.
double hhalf_integral(const CircleSamples& f);

// Harmonic extension to radius r in [0,1): multiplier r^{|n|}.
CircleSamples poisson_extend(const CircleSamples& boundary, double r);

cplx average(const CircleSamples& f);
double l2_norm(const CircleSamples& f);

} // namespace eulerdisc
