#pragma once

#include <Eigen/Dense>
#include <vector>

#include "bicsim/eigensolve.hpp"
#include "bicsim/entanglement.hpp"
#include "bicsim/model.hpp"

namespace bicsim {

/// State of the single-excitation manifold: atomic amplitudes c1, c2 and one
/// field amplitude per grid momentum, ordered as the grid.
struct SingleExcitationState {
    cplx c1{0.0, 0.0};
    cplx c2{0.0, 0.0};
    Eigen::VectorXcd field;

    double norm() const;
};

// Atomic pure state (c1, c2) over an empty waveguide.
SingleExcitationState atomic_initial_state(cplx c1, cplx c2, int n_modes);

/// Time series of Bell-channel amplitudes with derived concurrence and the
/// atomic norm leak 1 - |c1|^2 - |c2|^2.
struct Trajectory {
    std::vector<double> times;
    std::vector<cplx> c_plus;
    std::vector<cplx> c_minus;
    std::vector<double> concurrence;
    std::vector<double> norm_leak;

    std::size_t size() const { return times.size(); }
};

// Single-excitation Hamiltonian, basis {|e,g,0>, |g,e,0>, |g,g,1_k>...}:
// diagonal (Omega, Omega, omega_k...), atom-row i / mode-column k entry g_ik.
Eigen::MatrixXcd build_hamiltonian(const ModelParams& p, const Geometry& geom,
                                   const MomentumGrid& grid);

/// One eigendecomposition, evaluated at many times:
/// |psi(t)> = sum_j v_j e^{-i E_j t} <v_j|psi(0)>.
/// The decomposition is immutable and shareable across threads.
class EdPropagator {
public:
    EdPropagator(const ModelParams& p, const Geometry& geom, const MomentumGrid& grid);

    Trajectory evolve(const SingleExcitationState& initial,
                      const std::vector<double>& times) const;

    // Full state at one time; O(N^2), for diagnostics and field inspection.
    SingleExcitationState state_at(const SingleExcitationState& initial, double t) const;

    const Eigen::VectorXd& eigenvalues() const { return eig_.values; }
    const Eigen::MatrixXcd& eigenvectors() const { return eig_.vectors; }

    // |1 - ||V^dag psi0||^2| of the last projected initial state: the norm
    // defect introduced by the decomposition itself.
    double norm_defect(const SingleExcitationState& initial) const;

private:
    Eigen::VectorXcd project(const SingleExcitationState& initial) const;

    int n_modes_;
    HermitianEigen eig_;
};

Trajectory evolve_ed(const ModelParams& p, const Geometry& geom, const MomentumGrid& grid,
                     const SingleExcitationState& initial, const std::vector<double>& times);

// Multiplies the atomic amplitudes by e^{+i Omega t}: the frame in which the
// memory-kernel amplitudes are defined. Concurrence and leak are unchanged.
Trajectory to_interaction_picture(Trajectory traj, double Omega);

// K_{+-}(tau) = sum_k |W_k^{+-}|^2 e^{i(Omega - omega_k) tau}
cplx memory_kernel(double tau, Channel ch, const ModelParams& p, const Geometry& geom,
                   const MomentumGrid& grid);

// Cross kernel K_x(tau) = (2 g^2/N_c) sum_k (A_{k,n1}^2 - A_{k,n2}^2)
// e^{i(Omega-omega_k) tau}; identically zero for n1 = n2, where the Bell
// channels decouple exactly.
cplx memory_kernel_cross(double tau, const ModelParams& p, const Geometry& geom,
                         const MomentumGrid& grid);

/// Kernel samples on the uniform tau grid j*dt, j = 0..steps.
struct KernelTable {
    double dt = 0.0;
    std::vector<cplx> values;
};

KernelTable build_kernel_table(Channel ch, double dt, int steps, const ModelParams& p,
                               const Geometry& geom, const MomentumGrid& grid);
KernelTable build_kernel_table_cross(double dt, int steps, const ModelParams& p,
                                     const Geometry& geom, const MomentumGrid& grid);

// Integrator core: c'(t) = -int_0^t K(tau) c(t-tau) dtau for an arbitrary
// kernel table with kernel.values.size() >= steps + 1. Returns c at every
// grid time 0..steps. The trajectory engines wrap this with model kernels.
std::vector<cplx> volterra_solve(const KernelTable& kernel, cplx c0, int steps);

/// One-channel memory-kernel evolution
///   c'(t) = -int_0^t K(tau) c(t - tau) dtau
/// for an initially empty waveguide: trapezoidal convolution with a Heun
/// predictor-corrector step, global order dt^2. The unused channel stays 0.
Trajectory evolve_volterra(Channel ch, cplx c0, double t_max, double dt, const ModelParams& p,
                           const Geometry& geom, const MomentumGrid& grid);

/// Two-channel evolution with the cross kernel included; reduces to two
/// independent copies of the one-channel equation when n1 = n2.
Trajectory evolve_volterra_coupled(cplx c0_plus, cplx c0_minus, double t_max, double dt,
                                   const ModelParams& p, const Geometry& geom,
                                   const MomentumGrid& grid);

// Markov approximation: c(t) = c0 e^{-Gamma^{+-}(Omega) t / 2}, the modulus
// law matching C_{+-}(t) = C_{+-}(0) e^{-Gamma t}. Lamb-shift phase omitted.
cplx markov_amplitude(double t, Channel ch, cplx c0, const ModelParams& p, const Geometry& geom);

Trajectory evolve_markov(cplx c0_plus, cplx c0_minus, const std::vector<double>& times,
                         const ModelParams& p, const Geometry& geom);

// Pointwise concurrence from the + channel of one trajectory and the -
// channel of another; throws ConfigError when the time grids differ.
std::vector<double> concurrence_trajectory(const Trajectory& traj_plus,
                                           const Trajectory& traj_minus);

// Uniform output grid 0, dt, ..., ~t_max (inclusive of the final point).
std::vector<double> uniform_times(double t_max, double dt);

} // namespace bicsim
