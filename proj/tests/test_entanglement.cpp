#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bicsim/entanglement.hpp"

using namespace bicsim;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("bic_state limiting cases") {
    SUBCASE("lambda = 0 is the bare product state") {
        const TwoQubitPure psi = bic_state(0.0, 2.3);
        CHECK(psi(idx_eg) == cplx(1.0, 0.0));
        CHECK(std::abs(psi(idx_ge)) == 0.0);
        CHECK(std::abs(psi(idx_ee)) == 0.0);
        CHECK(std::abs(psi(idx_gg)) == 0.0);
    }
    SUBCASE("lambda = 1 with phase pi is the symmetric Bell state") {
        const TwoQubitPure psi = bic_state(1.0, pi);
        CHECK(psi(idx_eg).real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
        CHECK(psi(idx_ge).real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
        CHECK(std::abs(psi(idx_ge).imag()) < 1e-15);
    }
    SUBCASE("lambda = 1 with zero phase is the antisymmetric Bell state") {
        const TwoQubitPure psi = bic_state(1.0, 0.0);
        CHECK(psi(idx_eg).real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
        CHECK(psi(idx_ge).real() == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-15));
    }
    SUBCASE("normalized for any lambda") {
        std::mt19937 rng(3);
        std::uniform_real_distribution<double> u(0.0, 50.0);
        for (int i = 0; i < 100; ++i)
            CHECK(bic_state(u(rng), u(rng)).norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("rejects negative or non-finite ratios") {
        CHECK_THROWS_AS(bic_state(-0.5, 0.0), ConfigError);
        CHECK_THROWS_AS(bic_state(std::nan(""), 0.0), ConfigError);
    }
}

TEST_CASE("closed-form concurrence") {
    CHECK(concurrence_closed_form(1.0) == 1.0);
    CHECK(concurrence_closed_form(0.0) == 0.0);
    CHECK(concurrence_closed_form(1.0 / 3.0) == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(concurrence_closed_form(10.0) == doctest::Approx(20.0 / 101.0).epsilon(1e-15));
}

TEST_CASE("Wootters concurrence on canonical states") {
    CHECK(wootters_concurrence(projector(bic_state(1.0, pi))) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(wootters_concurrence(projector(bic_state(0.0, 0.0))) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(wootters_concurrence(projector(bic_state(0.5, 1.2))) ==
          doctest::Approx(0.8).epsilon(1e-10));
}

TEST_CASE("Wootters concurrence validates its input") {
    TwoQubitDensity rho = TwoQubitDensity::Zero();
    rho(0, 0) = 1.0;
    rho(0, 1) = cplx(0.1, 0.0);  // not Hermitian
    CHECK_THROWS_AS(wootters_concurrence(rho), ConfigError);

    TwoQubitDensity neg = TwoQubitDensity::Zero();
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;  // trace 1 but not positive
    CHECK_THROWS_AS(wootters_concurrence(neg), ConfigError);

    TwoQubitDensity notrace = TwoQubitDensity::Identity();
    CHECK_THROWS_AS(wootters_concurrence(notrace), ConfigError);
}

TEST_CASE("closed form agrees with Wootters over the full ratio range") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ul(0.0, 50.0);
    std::uniform_real_distribution<double> up(0.0, 2.0 * pi);
    for (int i = 0; i < 1000; ++i) {
        const double lambda = ul(rng);
        const double phi = up(rng);
        CHECK(wootters_concurrence(projector(bic_state(lambda, phi))) ==
              doctest::Approx(concurrence_closed_form(lambda)).epsilon(1e-10));
    }
}

TEST_CASE("concurrence is symmetric under lambda -> 1/lambda") {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> ul(0.02, 50.0);
    for (int i = 0; i < 500; ++i) {
        const double lambda = ul(rng);
        CHECK(concurrence_closed_form(lambda) ==
              doctest::Approx(concurrence_closed_form(1.0 / lambda)).epsilon(1e-12));
    }
}

TEST_CASE("concurrence of the dark state is phase independent") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> up(0.0, 2.0 * pi);
    const double lambda = 0.73;
    const double ref = wootters_concurrence(projector(bic_state(lambda, 0.0)));
    for (int i = 0; i < 50; ++i)
        CHECK(wootters_concurrence(projector(bic_state(lambda, up(rng)))) ==
              doctest::Approx(ref).epsilon(1e-12));
}

TEST_CASE("photon-traced atomic state") {
    SUBCASE("pure limits") {
        const TwoQubitDensity full = reduced_atomic_density(cplx(1, 0), cplx(0, 0));
        CHECK(full(idx_eg, idx_eg) == cplx(1.0, 0.0));
        const TwoQubitDensity empty = reduced_atomic_density(cplx(0, 0), cplx(0, 0));
        CHECK(empty(idx_gg, idx_gg) == cplx(1.0, 0.0));
    }
    SUBCASE("coherences survive the trace") {
        const TwoQubitDensity rho = reduced_atomic_density(cplx(0.6, 0), cplx(0, 0.6));
        CHECK(wootters_concurrence(rho) == doctest::Approx(0.72).epsilon(1e-10));
        CHECK(std::abs(rho.trace() - cplx(1, 0)) < 1e-15);
    }
    SUBCASE("rejects super-normalized amplitudes") {
        CHECK_THROWS_AS(reduced_atomic_density(cplx(1.0, 0), cplx(0.1, 0)), ConfigError);
    }
}

TEST_CASE("fidelity to the Bell-like family") {
    SUBCASE("a family member has unit self-fidelity") {
        for (double phi : {0.0, 0.9, 2.0, 5.5}) {
            TwoQubitPure psi = TwoQubitPure::Zero();
            psi(idx_eg) = 1.0 / std::sqrt(2.0);
            psi(idx_ge) = std::polar(1.0 / std::sqrt(2.0), phi);
            CHECK(fidelity_to_phi(psi, phi) == doctest::Approx(1.0).epsilon(1e-14));
        }
    }
    SUBCASE("bounds (1 -+ C)/2 are attained at the analytic extrema") {
        std::mt19937 rng(19);
        std::uniform_real_distribution<double> up(0.0, 2.0 * pi);
        for (double lambda : {0.1, 0.5, 1.0, 2.0, 10.0}) {
            const double phi_k = up(rng);
            const TwoQubitPure psi = bic_state(lambda, phi_k);
            const double c = concurrence_closed_form(lambda);
            const double fmin = fidelity_to_phi(psi, -phi_k);
            const double fmax = fidelity_to_phi(psi, pi - phi_k);
            CHECK(fmin == doctest::Approx(0.5 * (1.0 - c)).epsilon(1e-10));
            CHECK(fmax == doctest::Approx(0.5 * (1.0 + c)).epsilon(1e-10));
            for (int i = 0; i < 64; ++i) {
                const double f = fidelity_to_phi(psi, up(rng));
                CHECK(f >= fmin - 1e-12);
                CHECK(f <= fmax + 1e-12);
            }
        }
    }
    SUBCASE("lambda = 0.5 spans exactly [0.1, 0.9]") {
        const TwoQubitPure psi = bic_state(0.5, 0.4);
        CHECK(fidelity_to_phi(psi, -0.4) == doctest::Approx(0.1).epsilon(1e-10));
        CHECK(fidelity_to_phi(psi, pi - 0.4) == doctest::Approx(0.9).epsilon(1e-10));
    }
    SUBCASE("the maximally entangled state with matched phase reaches fidelity one") {
        CHECK(fidelity_to_phi(bic_state(1.0, pi), 0.0) == doctest::Approx(1.0).epsilon(1e-12));
        const double phi0 = 1.23;
        CHECK(fidelity_to_phi(bic_state(1.0, phi0), pi - phi0) ==
              doctest::Approx(1.0).epsilon(1e-12));
        CHECK(wootters_concurrence(projector(bic_state(1.0, phi0))) ==
              doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("closed-form companion matches the direct overlap") {
        std::mt19937 rng(21);
        std::uniform_real_distribution<double> ul(0.0, 8.0);
        std::uniform_real_distribution<double> up(0.0, 2.0 * pi);
        for (int i = 0; i < 300; ++i) {
            const double lambda = ul(rng), phi_k = up(rng), varphi = up(rng);
            CHECK(fidelity_to_phi(bic_state(lambda, phi_k), varphi) ==
                  doctest::Approx(fidelity_closed_form(lambda, phi_k, varphi)).epsilon(1e-12));
        }
    }
}

TEST_CASE("Bell transform") {
    SUBCASE("worked pairs") {
        const BellAmplitudes b = bell_transform(cplx(1, 0), cplx(0, 0));
        CHECK(b.c_plus.real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
        CHECK(b.c_minus.real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
        const double s = 1.0 / std::sqrt(2.0);
        const BellAmplitudes plus = bell_transform(cplx(s, 0), cplx(s, 0));
        CHECK(std::abs(plus.c_plus - cplx(1, 0)) < 1e-15);
        CHECK(std::abs(plus.c_minus) < 1e-15);
    }
    SUBCASE("unitary: round trips and preserves norm") {
        std::mt19937 rng(31);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int i = 0; i < 1000; ++i) {
            const cplx c1(u(rng), u(rng)), c2(u(rng), u(rng));
            const BellAmplitudes b = bell_transform(c1, c2);
            const auto [r1, r2] = bell_inverse(b);
            CHECK(std::abs(r1 - c1) < 1e-15);
            CHECK(std::abs(r2 - c2) < 1e-15);
            CHECK(std::norm(b.c_plus) + std::norm(b.c_minus) ==
                  doctest::Approx(std::norm(c1) + std::norm(c2)).epsilon(1e-14));
        }
    }
}

TEST_CASE("concurrence from Bell amplitudes") {
    SUBCASE("worked values") {
        CHECK(concurrence_from_bell(cplx(1, 0), cplx(0, 0)) == doctest::Approx(1.0).epsilon(1e-15));
        const double s = 1.0 / std::sqrt(2.0);
        CHECK(concurrence_from_bell(cplx(s, 0), cplx(s, 0)) < 1e-15);
        CHECK(concurrence_from_bell(cplx(0.6, 0), cplx(0, 0.3)) ==
              doctest::Approx(0.45).epsilon(1e-14));
    }
    SUBCASE("identity with 2 |c1 c2*| under the inverse transform") {
        std::mt19937 rng(33);
        std::uniform_real_distribution<double> u(-0.7, 0.7);
        for (int i = 0; i < 1000; ++i) {
            const cplx cp(u(rng) * 0.7, u(rng) * 0.7), cm(u(rng) * 0.7, u(rng) * 0.7);
            const auto [c1, c2] = bell_inverse({cp, cm});
            CHECK(concurrence_from_bell(cp, cm) ==
                  doctest::Approx(2.0 * std::abs(c1 * std::conj(c2))).epsilon(1e-12));
        }
    }
    SUBCASE("rejects super-normalized amplitudes") {
        CHECK_THROWS_AS(concurrence_from_bell(cplx(1, 0), cplx(0.2, 0)), ConfigError);
    }
}
