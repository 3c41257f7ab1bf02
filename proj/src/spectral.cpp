#include "bicsim/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace bicsim {

namespace {

constexpr double pi = std::numbers::pi;

// Accumulates the discrete sum in real/imaginary parts so that lamb_shift
// and self_energy agree bit-for-bit.
struct SigmaSum {
    double re = 0.0;
    double im_over_eta = 0.0;  // sum of f / ((E-omega_k)^2 + eta^2)
};

SigmaSum sigma_sum(double E, Channel ch, const ModelParams& p, const Geometry& geom,
                   const MomentumGrid& grid) {
    const double eta = p.broadening();
    SigmaSum acc;
    for (double k : grid.k) {
        const double f = interference_factor(k, ch, geom);
        const double x = E - dispersion(k, p);
        const double d = x * x + eta * eta;
        acc.re += f * x / d;
        acc.im_over_eta += f / d;
    }
    return acc;
}

} // namespace

ChannelSelfEnergy self_energy(double E, Channel ch, const ModelParams& p, const Geometry& geom,
                              const MomentumGrid& grid) {
    p.validate();
    geom.validate();
    const double eta = p.broadening();
    const double pref = 2.0 * p.g * p.g / static_cast<double>(grid.size());
    const SigmaSum acc = sigma_sum(E, ch, p, geom, grid);

    ChannelSelfEnergy out;
    out.E = E;
    out.channel = ch;
    out.delta = pref * acc.re;
    out.gamma = 2.0 * pref * eta * acc.im_over_eta;  // -2 Im Sigma
    out.sigma = cplx(out.delta, -0.5 * out.gamma);
    return out;
}

double lamb_shift(double E, Channel ch, const ModelParams& p, const Geometry& geom,
                  const MomentumGrid& grid) {
    return self_energy(E, ch, p, geom, grid).delta;
}

double resonant_wavevector(double probe, const ModelParams& p) {
    const double c = (p.omega_c - probe) / (2.0 * p.xi);
    if (!(std::abs(c) < 1.0))
        throw RegimeError("probe energy lies outside the propagating band: no resonant wave vector");
    return std::acos(c);
}

double decay_rate_continuum(double probe, Channel ch, const ModelParams& p, const Geometry& geom) {
    const double k = resonant_wavevector(probe, p);
    const double f = interference_factor(k, ch, geom);
    return 2.0 * p.g * p.g / (p.xi * std::abs(std::sin(k))) * f;
}

RobustCheck robust_bic_check(double k_star, double n, double tol) {
    RobustCheck out;
    const double r = k_star * n / pi;
    // nearest odd integer to r
    const double odd = 2.0 * std::floor(0.5 * (r - 1.0) + 0.5) + 1.0;
    if (odd >= 1.0 && std::abs(r - odd) <= tol * std::max(1.0, std::abs(r))) {
        out.ok = true;
        out.ell = static_cast<long>(std::lround(0.5 * (odd - 1.0)));
    }
    return out;
}

namespace {

// Dark-state amplitudes for a root at energy E with resonant wave vector ks.
// When both separations satisfy the robust condition the couplings vanish at
// +-ks to first order for c2 = -c1 (n1/n2) e^{-i ks dx}; otherwise the
// cancellation c1 g1* + c2 g2* = 0 at +ks fixes the ratio directly.
void dark_amplitudes(double ks, const ModelParams& p, const Geometry& geom, BicSolution& sol) {
    const bool robust_both =
        robust_bic_check(ks, geom.n1).ok && robust_bic_check(ks, geom.n2).ok;
    const double coupling_scale = 2.0 * p.g / std::sqrt(static_cast<double>(p.n_modes));
    const cplx g1 = coupling_amplitude(1, ks, p, geom);
    const cplx g2 = coupling_amplitude(2, ks, p, geom);
    const double tiny = 1e-10 * coupling_scale;

    if (robust_both || (std::abs(g1) <= tiny && std::abs(g2) <= tiny)) {
        const double lam = geom.lambda();
        const double norm = std::sqrt(1.0 + lam * lam);
        sol.c1 = cplx(1.0 / norm, 0.0);
        sol.c2 = -lam / norm * std::polar(1.0, -ks * geom.dx());
    } else if (std::abs(g2) > tiny) {
        const cplx ratio = -std::conj(g1) / std::conj(g2);
        const double norm = std::sqrt(1.0 + std::norm(ratio));
        sol.c1 = cplx(1.0 / norm, 0.0);
        sol.c2 = ratio / norm;
    } else {
        sol.c1 = cplx(0.0, 0.0);
        sol.c2 = cplx(1.0, 0.0);
    }
}

} // namespace

std::vector<BicSolution> scan_bound_state_roots(Channel ch, const ModelParams& p,
                                                const Geometry& geom, const MomentumGrid& grid) {
    p.validate();
    geom.validate();

    const double lo = p.band_bottom();
    const double hi = p.band_top();
    const auto objective = [&](double E) {
        return E - p.Omega - lamb_shift(E, ch, p, geom, grid);
    };

    constexpr int mesh_points = 2001;
    const double step = (hi - lo) / static_cast<double>(mesh_points - 1);

    std::vector<BicSolution> roots;
    const auto record = [&](double energy) {
        BicSolution sol;
        sol.channel = ch;
        sol.energy = energy;
        sol.near_band_edge =
            std::min(sol.energy - lo, hi - sol.energy) < band_edge_margin_scale * p.xi;
        const double c = (p.omega_c - sol.energy) / (2.0 * p.xi);
        if (std::abs(c) < 1.0) {
            sol.k_star = std::acos(c);
            sol.residual_gamma = decay_rate_continuum(sol.energy, ch, p, geom);
        } else {
            sol.k_star = c >= 1.0 ? 0.0 : pi;
            sol.residual_gamma = std::numeric_limits<double>::infinity();
            sol.near_band_edge = true;
        }
        sol.gamma_discrete = self_energy(sol.energy, ch, p, geom, grid).gamma;
        dark_amplitudes(sol.k_star, p, geom, sol);
        roots.push_back(sol);
    };

    double e_prev = lo;
    double f_prev = objective(e_prev);
    if (f_prev == 0.0) record(e_prev);
    for (int i = 1; i < mesh_points; ++i) {
        const double e_cur = lo + step * i;
        const double f_cur = objective(e_cur);
        if (f_cur == 0.0) {
            // the node itself is a root; neighbouring intervals skip it
            record(e_cur);
        } else if (f_prev != 0.0 && (f_prev < 0.0) != (f_cur < 0.0)) {
            double a = e_prev, b = e_cur, fa = f_prev;
            for (int it = 0; it < 200 && (b - a) > 1e-12 * p.xi; ++it) {
                const double m = 0.5 * (a + b);
                const double fm = objective(m);
                if (fm == 0.0) {
                    a = b = m;
                } else if ((fa < 0.0) == (fm < 0.0)) {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
            }
            record(0.5 * (a + b));
        }
        e_prev = e_cur;
        f_prev = f_cur;
    }

    // a root sitting exactly on a mesh node brackets twice; keep one copy
    std::sort(roots.begin(), roots.end(),
              [](const BicSolution& a, const BicSolution& b) { return a.energy < b.energy; });
    const auto duplicate = [&](const BicSolution& a, const BicSolution& b) {
        return std::abs(a.energy - b.energy) < 1e-9 * p.xi;
    };
    roots.erase(std::unique(roots.begin(), roots.end(), duplicate), roots.end());

    std::sort(roots.begin(), roots.end(), [](const BicSolution& a, const BicSolution& b) {
        return a.residual_gamma < b.residual_gamma;
    });
    return roots;
}

std::vector<BicSolution> find_bic(Channel ch, const ModelParams& p, const Geometry& geom,
                                  const MomentumGrid& grid) {
    std::vector<BicSolution> roots = scan_bound_state_roots(ch, p, geom, grid);
    std::erase_if(roots, [&](const BicSolution& s) {
        return !(s.residual_gamma < bic_residual_threshold_scale * p.xi);
    });
    return roots;
}

} // namespace bicsim
