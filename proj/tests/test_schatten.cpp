#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "numrad/ensembles.hpp"
#include "numrad/radius.hpp"
#include "numrad/schatten_bounds.hpp"

using namespace numrad;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ComplexMatrix example_matrix() {
    ComplexMatrix t(3, 3);
    t(0, 1) = 1.0;
    t(1, 2) = 2.0;
    return t;
}

} // namespace

TEST_CASE("singular values of a sum against the weighted modulus bound") {
    const ComplexMatrix t = example_matrix();
    const ComplexMatrix s = t.adjoint();
    const PowerExponents half{0.5, 0.5};

    SUBCASE("worked example, all indices") {
        // T+T* has eigenvalues {sqrt(5), 0, -sqrt(5)}; the bound evaluates to
        // sqrt(3) * sqrt(s_j(diag(1,3,2))).
        const double lhs[] = {std::sqrt(5.0), std::sqrt(5.0), 0.0};
        const double rhs[] = {3.0, 2.4494897427831783, 1.7320508075688772};
        for (std::size_t j = 1; j <= 3; ++j) {
            const auto pair = singular_value_sum_bound(t, s, half, j);
            CHECK(std::abs(pair.lhs - lhs[j - 1]) < 1e-10);
            CHECK(std::abs(pair.rhs - rhs[j - 1]) < 1e-10);
            CHECK(pair.slack() >= 0.0);
        }
    }

    SUBCASE("index is 1-based and bounded by the dimension") {
        CHECK_THROWS_AS(singular_value_sum_bound(t, s, half, 0), std::out_of_range);
        CHECK_THROWS_AS(singular_value_sum_bound(t, s, half, 4), std::out_of_range);
    }

    SUBCASE("holds for every index across random pairs and exponents") {
        Rng rng(31);
        const double grid[] = {0.0, 0.25, 0.5, 0.75, 1.0};
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t n = 2 + trial % 5;
            const ComplexMatrix a = random_matrix(rng, n, Ensemble::ginibre);
            const ComplexMatrix b = random_matrix(rng, n, Ensemble::ginibre);
            for (double al : grid)
                for (double be : grid)
                    for (std::size_t j = 1; j <= n; ++j)
                        CHECK(singular_value_sum_bound(a, b, {al, be}, j).slack() >= -1e-9);
        }
    }

    SUBCASE("exponents and shapes are validated") {
        CHECK_THROWS_AS(singular_value_sum_bound(t, s, {1.5, 0.5}, 1), std::domain_error);
        CHECK_THROWS_AS(singular_value_sum_bound(t, s, {0.5, -0.1}, 1), std::domain_error);
        CHECK_THROWS_AS(singular_value_sum_bound(t, ComplexMatrix::identity(2), half, 1),
                        std::invalid_argument);
    }
}

TEST_CASE("Schatten norm of a sum") {
    const ComplexMatrix t = example_matrix();
    const ComplexMatrix s = t.adjoint();

    SUBCASE("worked example at p = 3") {
        const auto pair = schatten_sum_bound(t, s, {0.5, 0.5}, 3.0);
        CHECK(std::abs(pair.lhs - 2.8172691138478405) < 1e-10);
        CHECK(std::abs(pair.rhs - 3.606087716118512) < 1e-10);
    }

    SUBCASE("holds across the p range, quasi-norms and infinity included") {
        Rng rng(32);
        for (int trial = 0; trial < 25; ++trial) {
            const std::size_t n = 2 + trial % 4;
            const ComplexMatrix a = random_matrix(rng, n, Ensemble::ginibre);
            const ComplexMatrix b = random_matrix(rng, n, Ensemble::ginibre);
            for (double p : {0.5, 1.0, 2.0, 3.5, kInf})
                for (double al : {0.0, 0.5, 1.0})
                    CHECK(schatten_sum_bound(a, b, {al, 1.0 - al}, p).slack() >= -1e-9);
        }
    }

    SUBCASE("non-positive p is rejected") {
        CHECK_THROWS_AS(schatten_sum_bound(t, s, {0.5, 0.5}, 0.0), std::domain_error);
        CHECK_THROWS_AS(schatten_sum_bound(t, s, {0.5, 0.5}, -2.0), std::domain_error);
    }
}

TEST_CASE("norm of a sum of normal operators") {
    Rng rng(33);

    SUBCASE("normal pairs produce a valid bound") {
        for (int trial = 0; trial < 15; ++trial) {
            const std::size_t n = 2 + trial % 4;
            const ComplexMatrix a = random_matrix(rng, n, Ensemble::normal);
            const ComplexMatrix b = random_matrix(rng, n, Ensemble::normal);
            const auto pair = normal_sum_norm_bound(a, b);
            REQUIRE(pair.has_value());
            CHECK(pair->slack() >= -1e-9);
        }
    }

    SUBCASE("hermitian pairs count as normal") {
        const ComplexMatrix a = random_matrix(rng, 3, Ensemble::hermitian);
        const ComplexMatrix b = random_matrix(rng, 3, Ensemble::hermitian);
        CHECK(normal_sum_norm_bound(a, b).has_value());
    }

    SUBCASE("a non-normal input disables the bound") {
        const ComplexMatrix nrm = random_matrix(rng, 3, Ensemble::normal);
        CHECK_FALSE(normal_sum_norm_bound(example_matrix(), nrm).has_value());
        CHECK_FALSE(normal_sum_norm_bound(nrm, example_matrix()).has_value());
    }
}

TEST_CASE("p-numerical radius power bounds") {
    const ComplexMatrix ex = example_matrix();
    const double wp3 = 1.4086345569239216; // w_3 of the example, frozen

    SUBCASE("all variants dominate the radius on the worked example") {
        for (auto v : {PRadiusVariant::symmetric, PRadiusVariant::mixed, PRadiusVariant::half}) {
            const auto b = p_radius_power_bound(ex, 0.25, 3.0, v);
            CHECK(std::abs(b.reference - wp3) < 1e-8);
            CHECK(b.value >= b.reference - 1e-9);
            CHECK(b.satisfied);
        }
    }

    SUBCASE("precomputed reference short-circuits the radius search") {
        const auto fresh = p_radius_power_bound(ex, 0.5, 3.0, PRadiusVariant::mixed);
        const auto reused = p_radius_power_bound(ex, 0.5, 3.0, PRadiusVariant::mixed, wp3);
        CHECK(std::abs(fresh.value - reused.value) < 1e-12);
        CHECK(reused.reference == doctest::Approx(wp3).epsilon(1e-12));
    }

    SUBCASE("half variant ignores t and matches the symmetric bound at t = 1/2") {
        const auto half_a = p_radius_power_bound(ex, 0.1, 2.0, PRadiusVariant::half, wp3);
        const auto half_b = p_radius_power_bound(ex, 0.9, 2.0, PRadiusVariant::half, wp3);
        CHECK(std::abs(half_a.value - half_b.value) < 1e-12);
    }

    SUBCASE("holds on random operators across p and t") {
        Rng rng(34);
        for (int trial = 0; trial < 10; ++trial) {
            const std::size_t n = 2 + trial % 3;
            const ComplexMatrix t = random_matrix(rng, n, Ensemble::ginibre);
            for (double p : {1.0, 2.0, kInf}) {
                const double wp = p_numerical_radius(t, p);
                for (double tp : {0.0, 0.5, 1.0}) {
                    CHECK(p_radius_power_bound(t, tp, p, PRadiusVariant::symmetric, wp).slack >=
                          -1e-9);
                    CHECK(p_radius_power_bound(t, tp, p, PRadiusVariant::mixed, wp).slack >=
                          -1e-9);
                }
            }
        }
    }

    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(p_radius_power_bound(ex, 1.5, 2.0, PRadiusVariant::mixed),
                        std::domain_error);
        CHECK_THROWS_AS(p_radius_power_bound(ex, 0.5, 0.0, PRadiusVariant::mixed),
                        std::domain_error);
    }
}

TEST_CASE("norm interpolation across Schatten exponents") {
    const ComplexMatrix ex = example_matrix();

    SUBCASE("worked example at p = 2, t = 1/2") {
        const auto pair = schatten_interpolation(ex, 2.0, 0.5);
        CHECK(std::abs(pair.lhs - std::sqrt(5.0)) < 1e-10);
        CHECK(std::abs(pair.rhs - std::sqrt(6.0)) < 1e-10);
    }

    SUBCASE("holds on random operators, quasi-norm targets included") {
        Rng rng(35);
        for (int trial = 0; trial < 20; ++trial) {
            const ComplexMatrix t = random_matrix(rng, 2 + trial % 4, Ensemble::ginibre);
            for (double p : {0.8, 1.0, 2.0, 4.0})
                for (double tp : {0.25, 0.5, 0.75})
                    CHECK(schatten_interpolation(t, p, tp).slack() >= -1e-9);
        }
    }

    SUBCASE("the interpolation parameter must be interior") {
        CHECK_THROWS_AS(schatten_interpolation(ex, 2.0, 0.0), std::domain_error);
        CHECK_THROWS_AS(schatten_interpolation(ex, 2.0, 1.0), std::domain_error);
        CHECK_THROWS_AS(schatten_interpolation(ex, -1.0, 0.5), std::domain_error);
    }
}

TEST_CASE("quadratic modulus sum dominates the split power-mean product") {
    // (1/2) || |T|^2 + |T*|^2 ||  >=  (1/4) || |T|^(2(1-t)) + |T*|^(2(1-t)) ||
    //                                      * || |T|^(2t) + |T*|^(2t) ||
    SUBCASE("worked example at t = 1/2") {
        const auto f = svd(example_matrix());
        const double big = 0.5 * operator_norm(modulus_power(f, 2.0) + comodulus_power(f, 2.0));
        const double m = operator_norm(modulus_power(f, 1.0) + comodulus_power(f, 1.0));
        CHECK(big == doctest::Approx(2.5).epsilon(1e-12));
        CHECK(m == doctest::Approx(3.0).epsilon(1e-12));
        CHECK(big - 0.25 * m * m == doctest::Approx(0.25).epsilon(1e-9));
    }

    SUBCASE("holds on random operators") {
        Rng rng(36);
        for (int trial = 0; trial < 20; ++trial) {
            const ComplexMatrix t = random_matrix(rng, 2 + trial % 4, Ensemble::ginibre);
            const auto f = svd(t);
            const double big =
                0.5 * operator_norm(modulus_power(f, 2.0) + comodulus_power(f, 2.0));
            for (double tp : {0.0, 0.25, 0.5, 0.75, 1.0}) {
                const double m1 = operator_norm(modulus_power(f, 2.0 * (1.0 - tp)) +
                                                comodulus_power(f, 2.0 * (1.0 - tp)));
                const double m2 = operator_norm(modulus_power(f, 2.0 * tp) +
                                                comodulus_power(f, 2.0 * tp));
                CHECK(big >= 0.25 * m1 * m2 - 1e-9);
            }
        }
    }
}
