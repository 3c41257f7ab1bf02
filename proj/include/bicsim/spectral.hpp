#pragma once

#include <vector>

#include "bicsim/model.hpp"

namespace bicsim {

/// Channel self-energy Sigma_{+-}(E) = (2g^2/N_c) sum_k f_k^{+-} / (E - omega_k + i eta),
/// decomposed as Sigma = delta - (i/2) gamma with delta the Lamb shift and
/// gamma = -2 Im Sigma >= 0 the decay rate.
struct ChannelSelfEnergy {
    double E = 0.0;
    Channel channel = Channel::plus;
    cplx sigma{0.0, 0.0};
    double delta = 0.0;
    double gamma = 0.0;
};

ChannelSelfEnergy self_energy(double E, Channel ch, const ModelParams& p, const Geometry& geom,
                              const MomentumGrid& grid);

// Lamb shift Delta^{+-}(E) = Re Sigma_{+-}(E), the principal-value-regularized sum.
double lamb_shift(double E, Channel ch, const ModelParams& p, const Geometry& geom,
                  const MomentumGrid& grid);

// k(E) = acos((omega_c - E)/(2 xi)); throws RegimeError when E is not strictly in band.
double resonant_wavevector(double probe, const ModelParams& p);

// Continuum decay rate Gamma^{+-}(probe) = [2 g^2 / (xi |sin k(probe)|)] f^{+-}_{k(probe)}.
double decay_rate_continuum(double probe, Channel ch, const ModelParams& p, const Geometry& geom);

/// Outcome of the robust separation test k*·n = (2 ell + 1) pi.
struct RobustCheck {
    bool ok = false;
    long ell = -1;
};

// True iff k_star * n is an odd multiple of pi within tol (relative on k n / pi).
RobustCheck robust_bic_check(double k_star, double n, double tol = 1e-9);

inline constexpr double bic_residual_threshold_scale = 1e-8;  // accepted when gamma < 1e-8 * xi
inline constexpr double band_edge_margin_scale = 1e-3;        // roots this close to an edge are flagged

/// An in-band root of E - Omega - Delta^{+-}(E) = 0 together with its
/// radiative residual and the dark atomic amplitudes.
struct BicSolution {
    Channel channel = Channel::plus;
    double energy = 0.0;
    double residual_gamma = 0.0;  // continuum decay rate at the root energy
    double gamma_discrete = 0.0;  // eta-broadened discrete rate, diagnostic
    cplx c1{1.0, 0.0};
    cplx c2{0.0, 0.0};
    double k_star = 0.0;          // resonant wave vector at the root energy
    bool near_band_edge = false;
};

// All in-band roots of E - Omega - Delta^{+-}(E) = 0 (2001-point scan +
// bisection to 1e-12 xi), sorted by residual. Absence of roots is an empty list.
std::vector<BicSolution> scan_bound_state_roots(Channel ch, const ModelParams& p,
                                                const Geometry& geom, const MomentumGrid& grid);

// The roots whose residual passes the acceptance threshold, sorted by residual.
std::vector<BicSolution> find_bic(Channel ch, const ModelParams& p, const Geometry& geom,
                                  const MomentumGrid& grid);

} // namespace bicsim
