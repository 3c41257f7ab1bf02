#include "bicsim/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace bicsim {

namespace {
constexpr double pi = std::numbers::pi;
}

void ModelParams::validate() const {
    if (!(xi > 0.0)) throw ConfigError("model.xi must be > 0");
    if (!(g >= 0.0)) throw ConfigError("model.g must be >= 0");
    if (n_modes < 2) throw ConfigError("model.Nc must be >= 2");
    if (n_modes % 2 != 0)
        throw ConfigError("model.Nc must be even: odd counts cannot resolve the zone symmetrically");
    if (!std::isfinite(omega_c) || !std::isfinite(Omega) || !std::isfinite(g) ||
        !std::isfinite(xi) || !std::isfinite(eta))
        throw ConfigError("model parameters must be finite");
    if (!(broadening() > 0.0)) throw ConfigError("model.eta must resolve to a positive broadening");
}

void Geometry::validate() const {
    if (!(n1 > 0.0) || !(n2 > 0.0)) throw ConfigError("geometry.n1 and geometry.n2 must be > 0");
    if (!std::isfinite(x1) || !std::isfinite(x2) || !std::isfinite(n1) || !std::isfinite(n2))
        throw ConfigError("geometry parameters must be finite");
}

bool MomentumGrid::contains(double k0, double tol) const {
    for (double km : k)
        if (std::abs(km - k0) <= tol) return true;
    return false;
}

MomentumGrid build_momentum_grid(int n_modes) {
    if (n_modes < 2 || n_modes % 2 != 0)
        throw ConfigError("momentum grid requires an even mode count, got " +
                          std::to_string(n_modes));
    MomentumGrid grid;
    grid.k.resize(static_cast<std::size_t>(n_modes));
    // pi (2m - N_c) / N_c keeps the special points 0, +-pi/2, pi exact in
    // floating point whenever they are multiples of the spacing.
    for (int m = 1; m <= n_modes; ++m)
        grid.k[static_cast<std::size_t>(m - 1)] =
            pi * static_cast<double>(2 * m - n_modes) / static_cast<double>(n_modes);
    return grid;
}

double dispersion(double k, const ModelParams& p) {
    return p.omega_c - 2.0 * p.xi * std::cos(k);
}

double form_factor(double k, double n) {
    return std::cos(0.5 * k * n);
}

cplx coupling_amplitude(int atom, double k, const ModelParams& p, const Geometry& geom) {
    if (atom != 1 && atom != 2) throw ConfigError("atom index must be 1 or 2");
    const double x = atom == 1 ? geom.x1 : geom.x2;
    const double n = atom == 1 ? geom.n1 : geom.n2;
    const double amp = 2.0 * p.g / std::sqrt(static_cast<double>(p.n_modes)) * form_factor(k, n);
    return amp * std::polar(1.0, -k * (x + 0.5 * n));
}

double propagation_phase(double k, const Geometry& geom) {
    return k * (geom.dx() + 0.5 * geom.dn());
}

double interference_factor(double k, Channel ch, const Geometry& geom) {
    const double a1 = form_factor(k, geom.n1);
    const double a2 = form_factor(k, geom.n2);
    const double phi = propagation_phase(k, geom);
    // |a1 +- a2 e^{i phi}|^2 expanded in real arithmetic; even in k because
    // every trigonometric argument is even or enters through cos.
    return a1 * a1 + a2 * a2 + channel_sign(ch) * 2.0 * a1 * a2 * std::cos(phi);
}

cplx effective_bell_coupling(double k, Channel ch, const ModelParams& p, const Geometry& geom) {
    const cplx g1 = coupling_amplitude(1, k, p, geom);
    const cplx g2 = coupling_amplitude(2, k, p, geom);
    return (g1 + channel_sign(ch) * g2) / std::sqrt(2.0);
}

} // namespace bicsim
