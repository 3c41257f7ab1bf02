#pragma once

#include <Eigen/Dense>
#include <utility>

#include "bicsim/model.hpp"

namespace bicsim {

// Two-qubit objects use the fixed basis ordering {|ee>, |eg>, |ge>, |gg>}
// throughout; sigma_y (x) sigma_y is written in that order.
using TwoQubitPure = Eigen::Vector4cd;
using TwoQubitDensity = Eigen::Matrix4cd;

inline constexpr int idx_ee = 0;
inline constexpr int idx_eg = 1;
inline constexpr int idx_ge = 2;
inline constexpr int idx_gg = 3;

/// Amplitudes on the Bell pair |Psi+>, |Psi-> = (|eg> +- |ge>)/sqrt(2).
struct BellAmplitudes {
    cplx c_plus{0.0, 0.0};
    cplx c_minus{0.0, 0.0};
};

// (|e,g> - lambda e^{-i phi_kstar} |g,e>) / sqrt(1 + lambda^2)
TwoQubitPure bic_state(double lambda, double phi_kstar);

// C(lambda) = 2 |lambda| / (1 + lambda^2)
double concurrence_closed_form(double lambda);

// Projector |psi><psi| of a pure state.
TwoQubitDensity projector(const TwoQubitPure& psi);

/// Wootters concurrence C = max{0, l1 - l2 - l3 - l4}, with l_i the square
/// roots of the eigenvalues of rho (sigma_y x sigma_y) rho* (sigma_y x sigma_y),
/// in decreasing order. Throws ConfigError for inputs violating the density
/// matrix tolerances (Hermitian 1e-12, trace 1e-12, eigenvalues >= -1e-10).
double wootters_concurrence(const TwoQubitDensity& rho);

/// Photon-traced atomic state of a leaked single-excitation amplitude pair:
/// the population missing from |c1|^2 + |c2|^2 is placed on |g,g><g,g|.
TwoQubitDensity reduced_atomic_density(cplx c1, cplx c2);

// |<Phi(varphi)|state>|^2 against |Phi(varphi)> = (|e,g> + e^{i varphi} |g,e>)/sqrt(2).
double fidelity_to_phi(const TwoQubitPure& state, double varphi);

// Closed-form companion F = [1 - C(lambda) cos(phi_kstar + varphi)] / 2,
// the sign convention that matches the direct overlap of bic_state.
double fidelity_closed_form(double lambda, double phi_kstar, double varphi);

// c_{+-} = (c1 +- c2)/sqrt(2) and its inverse.
BellAmplitudes bell_transform(cplx c1, cplx c2);
std::pair<cplx, cplx> bell_inverse(const BellAmplitudes& bell);

// C = | |c+|^2 - |c-|^2 + 2i Im[c- c+*] |; equals 2 |c1 c2*| identically.
double concurrence_from_bell(cplx c_plus, cplx c_minus);

} // namespace bicsim
