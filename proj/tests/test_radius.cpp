#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "numrad/ensembles.hpp"
#include "numrad/radius.hpp"
#include "numrad/rng.hpp"
#include "oracles.hpp"

using namespace numrad;

namespace {

ComplexMatrix example_matrix() {
    ComplexMatrix t(3, 3);
    t(0, 1) = 1.0;
    t(1, 2) = 2.0;
    return t;
}

ComplexMatrix shift2() {
    ComplexMatrix t(2, 2);
    t(0, 1) = 1.0;
    return t;
}

} // namespace

TEST_CASE("rotated real part") {
    const ComplexMatrix t = shift2();
    const ComplexMatrix at0 = rotated_real_part(t, 0.0);
    CHECK(std::abs(at0(0, 1) - cplx(0.5, 0.0)) <= 1e-15);
    CHECK(std::abs(at0(1, 0) - cplx(0.5, 0.0)) <= 1e-15);
    CHECK(std::abs(at0(0, 0)) == 0.0);

    // theta = pi flips the sign of the real part
    const ComplexMatrix at_pi = rotated_real_part(t, std::acos(-1.0));
    CHECK(max_abs_entry(at_pi + at0) <= 1e-15);

    Rng rng(21);
    const ComplexMatrix h = random_matrix(rng, 4, Ensemble::hermitian);
    CHECK(max_abs_entry(rotated_real_part(h, 0.0) - h) <= 1e-14);
    CHECK(hermitian_defect(rotated_real_part(random_matrix(rng, 4, Ensemble::ginibre), 1.3)) <=
          1e-14);

    CHECK_THROWS_AS(rotated_real_part(ComplexMatrix(2, 3), 0.0), std::invalid_argument);
}

TEST_CASE("numerical radius on fixed matrices") {
    CHECK(numerical_radius(shift2()).value == doctest::Approx(0.5).epsilon(1e-10));

    const RadiusResult r = numerical_radius(example_matrix());
    CHECK(r.value == doctest::Approx(std::sqrt(5.0) / 2.0).epsilon(1e-10));
    CHECK(r.theta_star == doctest::Approx(0.0));

    // the attaining vector, up to one global phase
    const cvec ref = {1.0 / std::sqrt(10.0), 1.0 / std::sqrt(2.0),
                      std::sqrt(2.0) / std::sqrt(5.0)};
    CHECK(oracles::phase_aligned_distance(r.maximizer, ref) <= 1e-8);

    // Hermitian: w equals the spectral radius
    ComplexMatrix h(2, 2);
    h(0, 0) = 1.0;
    h(1, 1) = -3.0;
    CHECK(numerical_radius(h).value == doctest::Approx(3.0).epsilon(1e-10));

    CHECK_THROWS_AS(numerical_radius(example_matrix(), 0.0), std::domain_error);
}

TEST_CASE("radius result invariants on random matrices") {
    Rng rng(22);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 5);
        const ComplexMatrix t = random_matrix(rng, n, Ensemble::ginibre);
        const RadiusResult r = numerical_radius(t);
        const double nrm = operator_norm(t);

        CHECK(std::abs(norm(r.maximizer) - 1.0) <= 1e-12);
        CHECK(std::abs(std::abs(inner(t * r.maximizer, r.maximizer)) - r.value) <= 1e-8);
        CHECK(r.value >= 0.5 * nrm - 1e-8);
        CHECK(r.value <= nrm + 1e-8);
        CHECK(r.theta_star >= 0.0);
        CHECK(r.theta_star < 2.0 * std::acos(-1.0));
    }
}

TEST_CASE("radius agrees with the dense grid oracle") {
    Rng rng(23);
    for (int trial = 0; trial < 8; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 4);
        const ComplexMatrix t = random_matrix(rng, n, Ensemble::ginibre);
        const double w = numerical_radius(t).value;
        CHECK(std::abs(w - oracles::radius_grid(t, 100000)) <= 1e-6);
    }
}

TEST_CASE("radius invariances") {
    Rng rng(24);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix t = random_matrix(rng, 4, Ensemble::ginibre);
        const double w = numerical_radius(t).value;

        const double phi = 2.0 * std::acos(-1.0) * rng.uniform();
        const double w_rot = numerical_radius(std::polar(1.0, phi) * t).value;
        CHECK(std::abs(w_rot - w) <= 1e-9);

        // conjugating by a unitary leaves the radius alone
        const SingularValueDecomposition f = svd(random_matrix(rng, 4, Ensemble::ginibre));
        const ComplexMatrix v = f.left * f.right.adjoint();
        const double w_conj = numerical_radius(v.adjoint() * t * v).value;
        CHECK(std::abs(w_conj - w) <= 1e-8);
    }
}

TEST_CASE("p-numerical radius") {
    // eigenvalues of the rotated half-shift are +-1/2 for every angle
    CHECK(p_numerical_radius(shift2(), 2.0) ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));

    const ComplexMatrix ex = example_matrix();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(p_numerical_radius(ex, inf) ==
          doctest::Approx(numerical_radius(ex).value).epsilon(1e-10));

    // frozen references for the running example
    CHECK(p_numerical_radius(ex, 1.5) == doctest::Approx(1.7747683298777868).epsilon(1e-9));
    CHECK(p_numerical_radius(ex, 3.0) == doctest::Approx(1.4086345569239216).epsilon(1e-9));

    // Hermitian T: the maximum sits at theta = 0 with value ||T||_p
    Rng rng(25);
    const ComplexMatrix h = random_matrix(rng, 4, Ensemble::hermitian);
    for (double p : {1.0, 2.0, 3.5})
        CHECK(p_numerical_radius(h, p) == doctest::Approx(schatten_norm(h, p)).epsilon(1e-9));

    CHECK_THROWS_AS(p_numerical_radius(ex, 0.0), std::domain_error);
    CHECK_THROWS_AS(p_numerical_radius(ex, -2.0), std::domain_error);

    // shared-grid batch equals one-at-a-time evaluation
    const std::vector<double> ps = {0.5, 1.0, 2.0, inf};
    const ComplexMatrix t = random_matrix(rng, 3, Ensemble::ginibre);
    const std::vector<double> multi = p_numerical_radius_multi(t, ps);
    for (std::size_t i = 0; i < ps.size(); ++i)
        CHECK(multi[i] == doctest::Approx(p_numerical_radius(t, ps[i])).epsilon(1e-12));

    // monotone non-increasing in p >= 1
    for (int trial = 0; trial < 8; ++trial) {
        const ComplexMatrix g = random_matrix(rng, 4, Ensemble::ginibre);
        const std::vector<double> grid = {1.0, 1.5, 2.0, 3.0, 5.0, inf};
        const std::vector<double> w = p_numerical_radius_multi(g, grid);
        for (std::size_t i = 0; i + 1 < w.size(); ++i) CHECK(w[i] + 1e-9 >= w[i + 1]);
    }
}

TEST_CASE("parallel and serial grid kernels agree bit for bit") {
    Rng rng(26);
    const ComplexMatrix t = random_matrix(rng, 5, Ensemble::ginibre);
    const auto par = rotated_spectrum_grid(t, 257);
    const auto ser = rotated_spectrum_grid_serial(t, 257);
    REQUIRE(par.size() == ser.size());
    CHECK(par == ser);
}
