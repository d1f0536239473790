#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "numrad/ensembles.hpp"
#include "numrad/linalg.hpp"
#include "numrad/refined_bounds.hpp"

using namespace numrad;

namespace {

ComplexMatrix example_matrix() {
    ComplexMatrix t(3, 3);
    t(0, 1) = 1.0;
    t(1, 2) = 2.0;
    return t;
}

cvec basis(std::size_t n, std::size_t k) {
    cvec e(n, 0.0);
    e[k] = 1.0;
    return e;
}

} // namespace

TEST_CASE("kato pointwise: chain and hand-checked equality cases") {
    ComplexMatrix shift(2, 2);
    shift(0, 1) = 2.0;

    SUBCASE("rank-one shift hits the classical bound at aligned vectors") {
        // x = y = (e1+e2)/sqrt(2): |<Tx,y>| = 1 and both sides collapse to 1.
        const cplx h = 1.0 / std::sqrt(2.0);
        const cvec x = {h, h};
        const auto c = kato_pointwise_refined(shift, x, x, 0.5);
        CHECK(c.lhs == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(c.rhs_refined == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(c.rhs_classical == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("basis pair where the correction vanishes by collinearity") {
        const auto c = kato_pointwise_refined(shift, basis(2, 1), basis(2, 0), 0.5);
        CHECK(c.lhs == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(c.rhs_refined == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(c.rhs_classical == doctest::Approx(2.0).epsilon(1e-12));
    }

    SUBCASE("chain lhs <= refined <= classical on random inputs") {
        Rng rng(11);
        const double ts[] = {0.0, 0.3, 0.5, 0.7, 1.0};
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t n = 2 + trial % 5;
            const ComplexMatrix t = random_matrix(rng, n, Ensemble::ginibre);
            const cvec x = random_unit_vector(rng, n);
            const cvec y = random_unit_vector(rng, n);
            for (double tp : ts) {
                const auto c = kato_pointwise_refined(t, x, y, tp);
                CHECK(c.lhs <= c.rhs_refined + 1e-9);
                CHECK(c.rhs_refined <= c.rhs_classical + 1e-9);
            }
        }
    }

    SUBCASE("exponent outside the unit interval is rejected") {
        CHECK_THROWS_AS(kato_pointwise_refined(shift, basis(2, 0), basis(2, 1), -0.1),
                        std::domain_error);
        CHECK_THROWS_AS(kato_pointwise_refined(shift, basis(2, 0), basis(2, 1), 1.1),
                        std::domain_error);
    }
}

TEST_CASE("kato pointwise: equality at PSD top eigenvectors") {
    // For T PSD and x = y the top unit eigenvector, |<Tx,x>| = ||T|| and the
    // classical bound is tight, so the refinement has no room to improve.
    Rng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + trial % 5;
        const ComplexMatrix t = random_matrix(rng, n, Ensemble::psd);
        const auto eig = hermitian_eig(t);
        cvec top(n);
        for (std::size_t i = 0; i < n; ++i) top[i] = eig.eigenvectors(i, n - 1);
        for (double tp : {0.25, 0.5, 0.75}) {
            const auto c = kato_pointwise_refined(t, top, top, tp);
            CHECK(std::abs(c.lhs - c.rhs_classical) < 1e-8);
            CHECK(std::abs(c.rhs_refined - c.rhs_classical) < 1e-6);
        }
    }
}

TEST_CASE("single operator bounds on the worked 3x3 example") {
    const ComplexMatrix ex = example_matrix();

    SUBCASE("operator norm refinement at small, quarter, half exponents") {
        const struct {
            double t;
            double refined;
        } rows[] = {
            {0.01, 1.939033624738235},
            {0.25, 1.945337476458536},
            {0.50, 1.9514786916766347},
        };
        for (const auto& r : rows) {
            const auto rep = single_operator_bounds(ex, r.t, 0.5);
            CHECK(rep.at("operator_norm").value == doctest::Approx(2.0).epsilon(1e-12));
            CHECK(std::abs(rep.at("operator_norm_refined").value - r.refined) < 1e-8);
            CHECK(rep.all_satisfied());
        }
    }

    SUBCASE("half power sum at t = 1/2 matches the symmetric modulus sum") {
        const auto rep = single_operator_bounds(ex, 0.5, 0.5);
        CHECK(rep.at("half_power_sum").value == doctest::Approx(1.5).epsilon(1e-12));
        CHECK(std::abs(rep.at("half_power_sum_refined").value - 1.4247382190993618) < 1e-8);
        CHECK(rep.at("kittaneh").value == doctest::Approx(1.5).epsilon(1e-12));
    }

    SUBCASE("split and symmetric power sums coincide at t = 1/2") {
        const auto rep = single_operator_bounds(ex, 0.5, 0.5);
        const double unref = 0.5 * (std::sqrt(2.0) + 2.0);
        CHECK(std::abs(rep.at("split_power_sum").value - unref) < 1e-12);
        CHECK(std::abs(rep.at("symmetric_power_sum").value - unref) < 1e-12);
        CHECK(std::abs(rep.at("split_power_sum_refined").value - 1.6585854728631824) < 1e-8);
        CHECK(std::abs(rep.at("symmetric_power_sum_refined").value - 1.6585854728631824) < 1e-8);
    }

    SUBCASE("weighted quadratic mean across alpha") {
        CHECK(std::abs(single_operator_bounds(ex, 0.5, 0.25).at("weighted_quadratic").value -
                       1.8027756377319946) < 1e-10);
        CHECK(std::abs(single_operator_bounds(ex, 0.5, 0.5).at("weighted_quadratic").value -
                       std::sqrt(2.5)) < 1e-12);
    }

    SUBCASE("every refined entry improves on its parent") {
        for (double tp : {0.1, 0.4, 0.8}) {
            const auto rep = single_operator_bounds(ex, tp, 0.3);
            for (const char* fam : {"half_power_sum", "kittaneh", "operator_norm",
                                    "split_power_sum", "symmetric_power_sum"}) {
                const double gain =
                    rep.at(fam).value - rep.at(std::string(fam) + "_refined").value;
                CHECK(gain >= -1e-12);
            }
        }
    }
}

TEST_CASE("single operator bounds: identity, zero, and bad parameters") {
    const ComplexMatrix id = ComplexMatrix::identity(3);

    SUBCASE("all unrefined bounds equal one for the identity") {
        const auto rep = single_operator_bounds(id, 0.3, 0.7);
        for (const char* fam : {"half_power_sum", "kittaneh", "operator_norm", "split_power_sum",
                                "symmetric_power_sum", "weighted_quadratic"}) {
            CHECK(rep.at(fam).value == doctest::Approx(1.0).epsilon(1e-10));
            CHECK(rep.at(fam).reference == doctest::Approx(1.0).epsilon(1e-10));
            CHECK(rep.at(fam).satisfied);
        }
    }

    SUBCASE("zero operator and out-of-range parameters throw") {
        CHECK_THROWS_AS(single_operator_bounds(ComplexMatrix(2, 2), 0.5, 0.5),
                        std::domain_error);
        CHECK_THROWS_AS(single_operator_bounds(id, -0.01, 0.5), std::domain_error);
        CHECK_THROWS_AS(single_operator_bounds(id, 0.5, 1.5), std::domain_error);
    }
}

TEST_CASE("kittaneh entry is the t = 1/2 half power sum on random operators") {
    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix t = random_matrix(rng, 3 + trial % 3, Ensemble::ginibre);
        const auto rep = single_operator_bounds(t, 0.5, 0.5);
        CHECK(std::abs(rep.at("kittaneh").value - rep.at("half_power_sum").value) < 1e-12);
        CHECK(std::abs(rep.at("kittaneh_refined").value -
                       rep.at("half_power_sum_refined").value) < 1e-12);
    }
}

TEST_CASE("three-factor product bound") {
    const ComplexMatrix ex = example_matrix();
    const ComplexMatrix id = ComplexMatrix::identity(3);

    SUBCASE("worked example with identity middle and right factors") {
        const auto rep = bound_product_axb(ex, id, id);
        CHECK(rep.at("product_unrefined").value == doctest::Approx(2.5).epsilon(1e-12));
        CHECK(std::abs(rep.at("product_refined").value - 2.35336106863975) < 1e-8);
        CHECK(std::abs(rep.at("product_refined").params.at("correction") -
                       0.29327786272050055) < 1e-8);
        CHECK(std::abs(rep.at("product_refined").reference - std::sqrt(5.0) / 2.0) < 1e-8);
        CHECK(rep.all_satisfied());
    }

    SUBCASE("refined stays an upper bound on random triples") {
        Rng rng(14);
        for (int trial = 0; trial < 12; ++trial) {
            const std::size_t n = 2 + trial % 4;
            const ComplexMatrix a = random_matrix(rng, n, Ensemble::ginibre);
            const ComplexMatrix x = random_matrix(rng, n, Ensemble::psd);
            const ComplexMatrix b = random_matrix(rng, n, Ensemble::ginibre);
            const auto rep = bound_product_axb(a, x, b);
            CHECK(rep.all_satisfied());
            CHECK(rep.at("product_refined").value <=
                  rep.at("product_unrefined").value + 1e-9);
        }
    }

    SUBCASE("non-PSD middle factor is rejected") {
        ComplexMatrix bad = ComplexMatrix::identity(3);
        bad(1, 1) = -1.0;
        CHECK_THROWS_AS(bound_product_axb(ex, bad, id), std::domain_error);
        ComplexMatrix skew(3, 3);
        skew(0, 1) = 1.0;
        CHECK_THROWS_AS(bound_product_axb(ex, skew, id), std::domain_error);
    }
}

TEST_CASE("two-factor product bound") {
    const ComplexMatrix ex = example_matrix();
    const ComplexMatrix id = ComplexMatrix::identity(3);

    SUBCASE("identity left factor reduces to the three-factor example") {
        const auto rep = bound_product_st(id, ex);
        CHECK(rep.at("pair_unrefined").value == doctest::Approx(2.5).epsilon(1e-12));
        CHECK(std::abs(rep.at("pair_refined").value - 2.3533610686397495) < 1e-8);
        CHECK(rep.all_satisfied());
    }

    SUBCASE("holds on random pairs and zero factors throw") {
        Rng rng(15);
        for (int trial = 0; trial < 12; ++trial) {
            const std::size_t n = 2 + trial % 4;
            const ComplexMatrix s = random_matrix(rng, n, Ensemble::ginibre);
            const ComplexMatrix t = random_matrix(rng, n, Ensemble::ginibre);
            const auto rep = bound_product_st(s, t);
            CHECK(rep.all_satisfied());
            CHECK(rep.at("pair_refined").value <= rep.at("pair_unrefined").value + 1e-9);
        }
        CHECK_THROWS_AS(bound_product_st(ComplexMatrix(2, 2), ComplexMatrix::identity(2)),
                        std::domain_error);
    }
}

TEST_CASE("Buzano product bound at fixed vectors") {
    Rng rng(16);

    SUBCASE("identity factors collapse to the Cauchy-Schwarz corner") {
        const ComplexMatrix id = ComplexMatrix::identity(3);
        const cvec x = random_unit_vector(rng, 3);
        const auto c = buzano_product_pointwise(id, id, id, x, x);
        CHECK(c.lhs == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(c.rhs_refined == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(c.rhs_classical == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("chain holds on random factor triples") {
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t n = 2 + trial % 4;
            const ComplexMatrix a = random_matrix(rng, n, Ensemble::ginibre);
            const ComplexMatrix x = random_matrix(rng, n, Ensemble::psd);
            const ComplexMatrix b = random_matrix(rng, n, Ensemble::ginibre);
            const cvec xv = random_unit_vector(rng, n);
            const cvec yv = random_unit_vector(rng, n);
            const auto c = buzano_product_pointwise(a, x, b, xv, yv);
            CHECK(c.lhs <= c.rhs_refined + 1e-9);
            CHECK(c.rhs_refined <= c.rhs_classical + 1e-9);
        }
    }

    SUBCASE("non-PSD middle factor is rejected") {
        const ComplexMatrix id = ComplexMatrix::identity(2);
        ComplexMatrix bad(2, 2);
        bad(0, 1) = 1.0;
        bad(1, 0) = 1.0;
        bad(0, 0) = -2.0;
        CHECK_THROWS_AS(
            buzano_product_pointwise(id, bad, id, basis(2, 0), basis(2, 1)),
            std::domain_error);
    }
}

TEST_CASE("polar factorizations of the Buzano bound") {
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + trial % 4;
        const ComplexMatrix t = random_matrix(rng, n, Ensemble::ginibre);
        const cvec x = random_unit_vector(rng, n);
        const cvec y = random_unit_vector(rng, n);
        const double lhs_direct = std::abs(inner(t * x, y));
        for (double tp : {0.3, 0.5, 0.9}) {
            for (auto mode : {PolarProductMode::split, PolarProductMode::symmetric}) {
                const auto c = buzano_polar_pointwise(t, tp, mode, x, y);
                // the three factors multiply back to T, so the left side must
                // agree with the direct sesquilinear form
                CHECK(std::abs(c.lhs - lhs_direct) < 1e-9);
                CHECK(c.lhs <= c.rhs_refined + 1e-9);
                CHECK(c.rhs_refined <= c.rhs_classical + 1e-9);
            }
        }
    }
}
