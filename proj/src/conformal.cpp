#include "eulerdisc/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eulerdisc {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

cplx horner(const std::vector<cplx>& c, cplx z) {
    cplx acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 4;
    while (p < n) p <<= 1;
    return p;
}

int orient(cplx a, cplx b, cplx c) {
    const double v = (b.real() - a.real()) * (c.imag() - a.imag()) -
                     (b.imag() - a.imag()) * (c.real() - a.real());
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

bool segments_cross(cplx a, cplx b, cplx c, cplx d) {
    return orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0;
}

// Nonvanishing derivative in D (argument principle on the boundary samples)
// and a simple sampled boundary polygon.
void verify_univalent(const std::vector<cplx>& psi, const std::vector<cplx>& dpsi) {
    const std::size_t n = next_pow2(std::max<std::size_t>(256, 4 * psi.size()));
    std::vector<cplx> bnd(n), dz(n);
    double min_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
        const double th = two_pi * static_cast<double>(j) / static_cast<double>(n);
        const cplx z(std::cos(th), std::sin(th));
        bnd[j] = horner(psi, z);
        dz[j] = horner(dpsi, z);
        min_d = std::min(min_d, std::abs(dz[j]));
    }
    if (!(min_d > 1e-9))
        throw std::invalid_argument("conformal map: Psi_z vanishes on the boundary grid");
    double wind = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        wind += std::arg(dz[(j + 1) % n] / dz[j]);
    if (std::abs(wind) > std::numbers::pi)
        throw std::invalid_argument("conformal map: Psi_z has zeros inside the disc");
    // Moderate resolution is enough for the polygon proxy and keeps this O(n^2) test cheap.
    const std::size_t np = std::min<std::size_t>(n, 2048);
    const std::size_t stride = n / np;
    for (std::size_t i = 0; i < np; ++i) {
        const cplx a = bnd[i * stride], b = bnd[((i + 1) % np) * stride];
        for (std::size_t j = i + 2; j < np; ++j) {
            if (i == 0 && j == np - 1) continue;
            const cplx c = bnd[j * stride], d = bnd[((j + 1) % np) * stride];
            if (segments_cross(a, b, c, d))
                throw std::invalid_argument("conformal map: boundary curve self-intersects");
        }
    }
}

} // namespace

ConformalMap::ConformalMap(std::vector<cplx> psi) : psi_(std::move(psi)) {
    if (psi_.size() < 2) throw std::invalid_argument("conformal map: need degree >= 1");
    dpsi_.resize(psi_.size() - 1);
    for (std::size_t k = 1; k < psi_.size(); ++k)
        dpsi_[k - 1] = static_cast<double>(k) * psi_[k];
    verify_univalent(psi_, dpsi_);
}

ConformalMap ConformalMap::identity() { return ConformalMap({cplx(0.0), cplx(1.0)}); }

ConformalMap ConformalMap::polynomial(double eps, int k) {
    if (k < 1) throw std::invalid_argument("polynomial family: power k must be >= 1");
    std::vector<cplx> c(static_cast<std::size_t>(k) + 1, 0.0);
    c[1] = 1.0;
    c[static_cast<std::size_t>(k)] += eps;
    return ConformalMap(std::move(c));
}

ConformalMap ConformalMap::lacunary(double alpha, double sigma, int J) {
    if (J < 1 || J > 12) throw std::invalid_argument("lacunary family: J must be in [1,12]");
    // Power series of Psi_z = exp(A), A = sigma sum 2^{-alpha j} z^{2^j},
    // via the exp recurrence b_n = (1/n) sum_j j a_j b_{n-j}.
    const std::size_t top = std::size_t{1} << J;
    const std::size_t K = 4 * top;
    std::vector<double> a(top + 1, 0.0);
    for (int j = 1; j <= J; ++j)
        a[std::size_t{1} << j] = sigma * std::pow(2.0, -alpha * j);
    std::vector<cplx> b(K + 1, 0.0);
    b[0] = 1.0;
    for (std::size_t n = 1; n <= K; ++n) {
        cplx s = 0.0;
        for (int j = 1; j <= J; ++j) {
            const std::size_t m = std::size_t{1} << j;
            if (m > n) break;
            if (a[m] != 0.0) s += static_cast<double>(m) * a[m] * b[n - m];
        }
        b[n] = s / static_cast<double>(n);
    }
    // Trim negligible tail, then integrate to get Psi (Psi(0) = 0).
    std::size_t deg = K;
    while (deg > top && std::abs(b[deg]) < 1e-18) --deg;
    std::vector<cplx> psi(deg + 2, 0.0);
    for (std::size_t n = 0; n <= deg; ++n)
        psi[n + 1] = b[n] / static_cast<double>(n + 1);
    return ConformalMap(std::move(psi));
}

ConformalMap ConformalMap::convex_smooth() { return polynomial(0.2, 2); }

cplx ConformalMap::psi(cplx z) const {
    if (std::abs(z) > 1.0 + 1e-12)
        throw std::domain_error("psi: point outside the closed unit disc");
    return horner(psi_, z);
}

cplx ConformalMap::psi_z(cplx z) const {
    if (std::abs(z) > 1.0 + 1e-12)
        throw std::domain_error("psi_z: point outside the closed unit disc");
    return horner(dpsi_, z);
}

bool ConformalMap::is_identity() const {
    if (psi_.size() != 2) return false;
    return psi_[0] == cplx(0.0) && psi_[1] == cplx(1.0);
}

std::optional<cplx> ConformalMap::invert(cplx x) const {
    // Coarse polar seed.
    cplx best = 0.0;
    double best_d = std::abs(horner(psi_, cplx(0.0)) - x);
    for (int ir = 1; ir <= 12; ++ir) {
        const double r = 0.98 * static_cast<double>(ir) / 12.0;
        for (int it = 0; it < 48; ++it) {
            const double th = two_pi * static_cast<double>(it) / 48.0;
            const cplx y(r * std::cos(th), r * std::sin(th));
            const double d = std::abs(horner(psi_, y) - x);
            if (d < best_d) {
                best_d = d;
                best = y;
            }
        }
    }
    cplx y = best;
    for (int iter = 0; iter < 80; ++iter) {
        const cplx res = horner(psi_, y) - x;
        if (std::abs(res) < 1e-10) {
            if (std::abs(y) > 1.0 + 1e-9) return std::nullopt;
            return y;
        }
        const cplx dz = horner(dpsi_, y);
        if (std::abs(dz) < 1e-14) return std::nullopt;
        cplx step = res / dz;
        // Keep iterates inside the closed disc; a diverging iterate means x
        // is outside the image.
        cplx ynew = y - step;
        int halvings = 0;
        while (std::abs(ynew) > 1.0 && halvings < 40) {
            step *= 0.5;
            ynew = y - step;
            ++halvings;
        }
        if (std::abs(ynew - y) < 1e-17 && std::abs(res) > 1e-10) return std::nullopt;
        y = ynew;
    }
    return std::nullopt;
}

CircleSamples BoundaryTrace::complex_samples() const {
    CircleSamples f(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) f[j] = cplx(a[j], b[j]);
    return f;
}

BoundaryTrace boundary_trace(const ConformalMap& map, double r, int n) {
    if (!(r >= 0.0 && r < 1.0))
        throw std::invalid_argument("boundary_trace: radius must lie in [0,1)");
    if (n < 4 || !is_pow2(static_cast<std::size_t>(n)))
        throw std::invalid_argument("boundary_trace: n must be a power of two >= 4");
    BoundaryTrace out;
    out.r = r;
    out.a.resize(static_cast<std::size_t>(n));
    out.b.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const double th = two_pi * static_cast<double>(j) / static_cast<double>(n);
        const cplx v = map.psi_z(cplx(r * std::cos(th), r * std::sin(th)));
        out.a[static_cast<std::size_t>(j)] = v.real();
        out.b[static_cast<std::size_t>(j)] = v.imag();
    }
    return out;
}

namespace {

std::vector<double> spectral_deriv_real(const std::vector<double>& f) {
    CircleSamples s(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) s[j] = f[j];
    FourierCoeffs c = analyze(s);
    for (int n = c.n_min(); n <= c.n_max(); ++n) c.at(n) *= cplx(0.0, static_cast<double>(n));
    CircleSamples d = synthesize(c);
    std::vector<double> out(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) out[j] = d[j].real();
    return out;
}

} // namespace

double cauchy_riemann_residual(const ConformalMap& map, double r, int n, double h) {
    if (!(r > 0.0 && r < 1.0))
        throw std::invalid_argument("cauchy_riemann_residual: need 0 < r < 1");
    const double hh = std::min(h, 0.5 * std::min(r, 1.0 - r));
    const BoundaryTrace mid = boundary_trace(map, r, n);
    const BoundaryTrace lo = boundary_trace(map, r - hh, n);
    const BoundaryTrace hi = boundary_trace(map, r + hh, n);
    const std::vector<double> a_t = spectral_deriv_real(mid.a);
    const std::vector<double> b_t = spectral_deriv_real(mid.b);
    double worst = 0.0;
    for (std::size_t j = 0; j < mid.a.size(); ++j) {
        const double a_r = (hi.a[j] - lo.a[j]) / (2.0 * hh);
        const double b_r = (hi.b[j] - lo.b[j]) / (2.0 * hh);
        worst = std::max(worst, std::abs(a_r - b_t[j] / r) + std::abs(b_r + a_t[j] / r));
    }
    return worst;
}

namespace {

struct RadiusStats {
    double min_abs, max_abs, hhalf, hil_sup;
    bool finite;
};

RadiusStats radius_stats(const ConformalMap& map, double r, int n) {
    RadiusStats st{};
    st.finite = true;
    const BoundaryTrace tr = boundary_trace(map, r, n);
    const CircleSamples f = tr.complex_samples();
    st.min_abs = std::numeric_limits<double>::infinity();
    st.max_abs = 0.0;
    CircleSamples sq(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) {
        const double m = std::abs(f[j]);
        if (!std::isfinite(m)) {
            st.finite = false;
            return st;
        }
        st.min_abs = std::min(st.min_abs, m);
        st.max_abs = std::max(st.max_abs, m);
        sq[j] = m * m;
    }
    st.hhalf = hhalf_fourier(f);
    const CircleSamples hs = hilbert(sq);
    st.hil_sup = 0.0;
    for (const cplx& v : hs) st.hil_sup = std::max(st.hil_sup, std::abs(v.real()));
    if (!std::isfinite(st.hhalf) || !std::isfinite(st.hil_sup)) st.finite = false;
    return st;
}

} // namespace

AssumptionReport check_assumption(const ConformalMap& map, const std::vector<double>& radii,
                                  int n) {
    if (radii.empty()) throw std::invalid_argument("check_assumption: empty radii grid");
    AssumptionReport rep;
    rep.radii = radii;
    rep.samples = n;
    rep.c0 = std::numeric_limits<double>::infinity();
    for (double r : radii) {
        const RadiusStats st = radius_stats(map, r, n);
        if (!st.finite) {
            rep.finite = false;
            rep.failed_radius = r;
            return rep;
        }
        rep.c0 = std::min(rep.c0, st.min_abs);
        rep.c1 = std::max(rep.c1, st.max_abs);
        rep.c2 = std::max(rep.c2, st.hhalf);
        rep.c3 = std::max(rep.c3, st.hil_sup);
    }
    return rep;
}

std::vector<double> geometric_radii(int m_max) {
    std::vector<double> out;
    for (int m = 1; m <= m_max; ++m) out.push_back(1.0 - std::pow(2.0, -m));
    return out;
}

bool AssumptionTrend::pass() const {
    if (reports.empty() || !reports.back().finite || !reports.back().cond1()) return false;
    return c2_stable && !c2_divergent;
}

AssumptionTrend assumption_trend(const ConformalMap& map, const std::vector<int>& levels,
                                 int n) {
    if (levels.size() < 2) throw std::invalid_argument("assumption_trend: need >= 2 levels");
    for (std::size_t i = 1; i < levels.size(); ++i)
        if (levels[i] <= levels[i - 1])
            throw std::invalid_argument("assumption_trend: levels must increase");
    AssumptionTrend tr;
    tr.levels = levels;
    // Stats per radius 1..m_max computed once; level reports are prefix maxima.
    const int m_max = levels.back();
    std::vector<RadiusStats> stats;
    for (int m = 1; m <= m_max; ++m)
        stats.push_back(radius_stats(map, 1.0 - std::pow(2.0, -m), n));
    for (int level : levels) {
        AssumptionReport rep;
        rep.radii = geometric_radii(level);
        rep.samples = n;
        rep.c0 = std::numeric_limits<double>::infinity();
        for (int m = 1; m <= level; ++m) {
            const RadiusStats& st = stats[static_cast<std::size_t>(m - 1)];
            if (!st.finite) {
                rep.finite = false;
                rep.failed_radius = 1.0 - std::pow(2.0, -m);
                break;
            }
            rep.c0 = std::min(rep.c0, st.min_abs);
            rep.c1 = std::max(rep.c1, st.max_abs);
            rep.c2 = std::max(rep.c2, st.hhalf);
            rep.c3 = std::max(rep.c3, st.hil_sup);
        }
        tr.reports.push_back(rep);
    }
    for (std::size_t i = 1; i < tr.reports.size(); ++i) {
        const double prev = tr.reports[i - 1].c2;
        tr.c2_ratio.push_back(prev > 0.0 ? tr.reports[i].c2 / prev : 1.0);
        const double prev3 = tr.reports[i - 1].c3;
        tr.c3_ratio.push_back(prev3 > 0.0 ? tr.reports[i].c3 / prev3 : 1.0);
    }
    tr.c2_stable = !tr.c2_ratio.empty() && tr.c2_ratio.back() <= 1.10;
    tr.c2_divergent =
        std::all_of(tr.c2_ratio.begin(), tr.c2_ratio.end(), [](double x) { return x >= 1.5; });
    return tr;
}

} // namespace eulerdisc
