#pragma once

// Riemann maps Psi: D -> Omega represented as finite power series, the
// built-in domain families, and the measured constants (c0..c3) of the
// regularity conditions on Psi_z.

#include <optional>
#include <string>
#include <vector>

#include "eulerdisc/spectral.hpp"

namespace eulerdisc {

class ConformalMap {
public:
    // psi[k] is the coefficient of z^k. Univalence is verified numerically
    // (nonvanishing derivative + simple boundary curve); violations throw.
    explicit ConformalMap(std::vector<cplx> psi);

    static ConformalMap identity();
    static ConformalMap polynomial(double eps, int k);      // z + eps z^k
    // log Psi_z = sigma * sum_{j=1..J} 2^{-alpha j} z^{2^j}, truncated.
    static ConformalMap lacunary(double alpha, double sigma, int J);
    static ConformalMap convex_smooth();                    // convex preset

    cplx psi(cplx z) const;     // |z| <= 1
    cplx psi_z(cplx z) const;
    int degree() const { return static_cast<int>(psi_.size()) - 1; }
    const std::vector<cplx>& coeffs() const { return psi_; }
    bool is_identity() const;

    // Newton inversion of Psi from a coarse-grid seed; empty on
    // non-convergence or when x lies outside the sampled image.
    std::optional<cplx> invert(cplx x) const;

private:
    std::vector<cplx> psi_;
    std::vector<cplx> dpsi_;
};

// Samples of a = Re(Psi_z), b = Im(Psi_z) on the circle of radius r.
struct BoundaryTrace {
    double r = 0.0;
    std::vector<double> a;
    std::vector<double> b;
    CircleSamples complex_samples() const;
};

BoundaryTrace boundary_trace(const ConformalMap& map, double r, int n);

// max over theta of |a_r - b_theta/r| + |b_r + a_theta/r|, radial
// derivatives by central differences with step h, angular ones spectral.
double cauchy_riemann_residual(const ConformalMap& map, double r, int n, double h = 1e-5);

struct AssumptionReport {
    std::vector<double> radii;
    int samples = 0;
    double c0 = 0.0, c1 = 0.0, c2 = 0.0, c3 = 0.0;
    bool finite = true;
    double failed_radius = -1.0;    // radius of the first non-finite trace, if any
    bool cond1() const { return finite && c0 > 0.0; }
};

// c0/c1 = min/max of |Psi_z| over the grid, c2 = max over radii of the
// H^{1/2} seminorm of the Psi_z trace, c3 = max over radii of
// ||H(|Psi_z|^2)||_inf. Radii should refine geometrically toward 1.
AssumptionReport check_assumption(const ConformalMap& map, const std::vector<double>& radii,
                                  int n);

std::vector<double> geometric_radii(int m_max);   // 1 - 2^{-m}, m = 1..m_max

// Trend of the measured constants over a ladder of grid depths. Divergence
// of c2 along the ladder is the computational shadow of a map whose
// boundary fails the H^{3/2} condition.
struct AssumptionTrend {
    std::vector<int> levels;                 // grid depth m per level
    std::vector<AssumptionReport> reports;   // one per level
    std::vector<double> c2_ratio;            // consecutive c2 ratios
    std::vector<double> c3_ratio;
    bool c2_stable = false;      // last ratio <= 1.10
    bool c2_divergent = false;   // every ratio >= 1.5
    bool pass() const;
};

AssumptionTrend assumption_trend(const ConformalMap& map, const std::vector<int>& levels,
                                 int n);

} // namespace eulerdisc
