#include "bicsim/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace bicsim {

TwoQubitPure bic_state(double lambda, double phi_kstar) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda))
        throw ConfigError("bic_state requires a finite lambda >= 0");
    TwoQubitPure psi = TwoQubitPure::Zero();
    const double norm = std::sqrt(1.0 + lambda * lambda);
    psi(idx_eg) = cplx(1.0 / norm, 0.0);
    psi(idx_ge) = -lambda / norm * std::polar(1.0, -phi_kstar);
    return psi;
}

double concurrence_closed_form(double lambda) {
    return 2.0 * std::abs(lambda) / (1.0 + lambda * lambda);
}

TwoQubitDensity projector(const TwoQubitPure& psi) {
    return psi * psi.adjoint();
}

namespace {

// rho~ = (sigma_y x sigma_y) rho* (sigma_y x sigma_y): the double spin flip.
// In the {ee,eg,ge,gg} ordering sigma_y x sigma_y is antidiagonal with signs
// (-1, 1, 1, -1), so rho~_{ij} = s_i s_j conj(rho_{(3-i)(3-j)}).
TwoQubitDensity spin_flipped(const TwoQubitDensity& rho) {
    constexpr std::array<double, 4> s{-1.0, 1.0, 1.0, -1.0};
    TwoQubitDensity out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            out(i, j) = s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j)] *
                        std::conj(rho(3 - i, 3 - j));
    return out;
}

void validate_density(const TwoQubitDensity& rho) {
    const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (herm > 1e-12) throw ConfigError("density matrix is not Hermitian within tolerance");
    if (std::abs(rho.trace() - cplx(1.0, 0.0)) > 1e-12)
        throw ConfigError("density matrix trace differs from 1 beyond tolerance");
    Eigen::SelfAdjointEigenSolver<TwoQubitDensity> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10)
        throw ConfigError("density matrix has a negative eigenvalue beyond tolerance");
}

} // namespace

double wootters_concurrence(const TwoQubitDensity& rho) {
    validate_density(rho);
    // Eigenvalues of the non-Hermitian product rho rho~ are real and
    // non-negative; their square roots are the Wootters lambdas. This avoids
    // the two matrix square roots of the textbook R-matrix form.
    const TwoQubitDensity m = rho * spin_flipped(rho);
    Eigen::ComplexEigenSolver<TwoQubitDensity> es(m, false);
    if (es.info() != Eigen::Success) throw NumericalError("4x4 eigensolver failed");
    std::array<double, 4> lam{};
    for (int i = 0; i < 4; ++i) {
        double v = es.eigenvalues()(i).real();
        if (v < 1e-14) v = 0.0;
        lam[static_cast<std::size_t>(i)] = std::sqrt(v);
    }
    std::sort(lam.begin(), lam.end(), std::greater<>());
    return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

TwoQubitDensity reduced_atomic_density(cplx c1, cplx c2) {
    const double occupied = std::norm(c1) + std::norm(c2);
    if (occupied > 1.0 + 1e-10)
        throw ConfigError("amplitude norm exceeds unity beyond tolerance");
    TwoQubitDensity rho = TwoQubitDensity::Zero();
    rho(idx_eg, idx_eg) = std::norm(c1);
    rho(idx_eg, idx_ge) = c1 * std::conj(c2);
    rho(idx_ge, idx_eg) = c2 * std::conj(c1);
    rho(idx_ge, idx_ge) = std::norm(c2);
    rho(idx_gg, idx_gg) = std::max(0.0, 1.0 - occupied);
    return rho;
}

double fidelity_to_phi(const TwoQubitPure& state, double varphi) {
    const cplx overlap =
        (state(idx_eg) + std::polar(1.0, -varphi) * state(idx_ge)) / std::sqrt(2.0);
    return std::norm(overlap);
}

double fidelity_closed_form(double lambda, double phi_kstar, double varphi) {
    return 0.5 * (1.0 - concurrence_closed_form(lambda) * std::cos(phi_kstar + varphi));
}

BellAmplitudes bell_transform(cplx c1, cplx c2) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    return BellAmplitudes{(c1 + c2) * inv_sqrt2, (c1 - c2) * inv_sqrt2};
}

std::pair<cplx, cplx> bell_inverse(const BellAmplitudes& bell) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    return {(bell.c_plus + bell.c_minus) * inv_sqrt2, (bell.c_plus - bell.c_minus) * inv_sqrt2};
}

double concurrence_from_bell(cplx c_plus, cplx c_minus) {
    if (std::norm(c_plus) + std::norm(c_minus) > 1.0 + 1e-10)
        throw ConfigError("Bell amplitude norm exceeds unity beyond tolerance");
    const double re = std::norm(c_plus) - std::norm(c_minus);
    const double im = 2.0 * std::imag(c_minus * std::conj(c_plus));
    return std::hypot(re, im);
}

} // namespace bicsim
