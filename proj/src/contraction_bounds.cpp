#include "numrad/contraction_bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace numrad {

namespace {

void check_psd_input(const ComplexMatrix& m, const char* what) {
    if (!m.is_square()) throw std::invalid_argument(std::string(what) + " must be square");
    if (hermitian_defect(m) > 1e-8 * std::max(1.0, frobenius_norm(m)))
        throw std::domain_error(std::string(what) + " must be Hermitian");
    if (min_eigenvalue(m) < -1e-8 * std::max(1.0, operator_norm(m)))
        throw std::domain_error(std::string(what) + " must be positive semidefinite");
}

ComplexMatrix assemble_block(const ComplexMatrix& a, const ComplexMatrix& b,
                             const ComplexMatrix& c) {
    const std::size_t n = a.rows();
    if (b.rows() != n || c.rows() != n || c.cols() != n)
        throw std::invalid_argument("block parts must share one square dimension");
    ComplexMatrix block(2 * n, 2 * n);
    const ComplexMatrix cs = c.adjoint();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            block(i, j) = a(i, j);
            block(i, n + j) = cs(i, j);
            block(n + i, j) = c(i, j);
            block(n + i, n + j) = b(i, j);
        }
    }
    return block;
}

// pinv(M^(1/2)) for Hermitian PSD M: eigenvalues above the cut contribute
// lam^(-1/2), the rest are dropped.
ComplexMatrix psd_half_pinv(const ComplexMatrix& m, double rank_tol) {
    const HermitianEigen eig = hermitian_eig(m);
    const std::size_t n = m.rows();
    const double top = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.back();
    const double cut = rank_tol * std::max(top, 0.0);
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lam = eig.eigenvalues[k];
        if (lam <= cut || lam <= 0.0) continue;
        const double coeff = 1.0 / std::sqrt(lam);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) += coeff * eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k));
    }
    return out;
}

} // namespace

bool block_positive(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                    double tol) {
    check_psd_input(a, "upper-left part");
    check_psd_input(b, "lower-right part");
    const ComplexMatrix block = assemble_block(a, b, c);
    const std::vector<double> evals = hermitian_eigenvalues(block);
    const double scale = std::max(std::abs(evals.front()), std::abs(evals.back()));
    if (tol < 0.0) tol = 1e-9 * scale;
    return evals.front() >= -tol;
}

ContractionFactorization contraction_factor(const ComplexMatrix& a, const ComplexMatrix& b,
                                            const ComplexMatrix& c, double rank_tol) {
    check_psd_input(a, "upper-left part");
    check_psd_input(b, "lower-right part");
    if (rank_tol < 0.0) rank_tol = 1e-10;

    const ComplexMatrix a_half = psd_function_apply(a, 0.5);
    const ComplexMatrix b_half = psd_function_apply(b, 0.5);
    ContractionFactorization out;
    out.factor = psd_half_pinv(b, rank_tol) * c * psd_half_pinv(a, rank_tol);
    out.residual = frobenius_norm(b_half * out.factor * a_half - c);
    out.norm_factor = operator_norm(out.factor);
    return out;
}

PointwiseCheck contraction_pointwise_bound(const ComplexMatrix& t, double alpha, const cvec& x,
                                           const cvec& y) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::domain_error("alpha must lie in [0,1]");

    const SingularValueDecomposition f = svd(t);
    const ComplexMatrix f_one = modulus_power(f, alpha);
    const ComplexMatrix g_one = comodulus_power(f, 1.0 - alpha);
    const ComplexMatrix f_two = modulus_power(f, 2.0 * alpha);
    const ComplexMatrix g_two = comodulus_power(f, 2.0 * (1.0 - alpha));

    const ContractionFactorization fact = contraction_factor(f_two, g_two, t);
    const SingularValueDecomposition fk = svd(fact.factor);
    const ComplexMatrix mod_k = modulus_power(fk, 1.0);
    const ComplexMatrix comod_k = comodulus_power(fk, 1.0);

    // quadratic forms of PSD congruences; tiny negative roundoff is clamped
    auto form = [](const ComplexMatrix& mid, const ComplexMatrix& side, const cvec& v) {
        const cvec sv = side * v;
        return std::max(std::real(inner(mid * sv, sv)), 0.0);
    };
    PointwiseCheck out;
    out.lhs = std::abs(inner(t * x, y));
    out.rhs_refined = std::sqrt(form(mod_k, f_one, x) * form(comod_k, g_one, y));
    out.rhs_classical = std::sqrt(std::max(std::real(inner(f_two * x, x)), 0.0) *
                                  std::max(std::real(inner(g_two * y, y)), 0.0));
    return out;
}

BoundReport contraction_radius_bound(const ComplexMatrix& t, double alpha) {
    return contraction_radius_bound(t, alpha, numerical_radius(t));
}

BoundReport contraction_radius_bound(const ComplexMatrix& t, double alpha,
                                     const RadiusResult& radius) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::domain_error("alpha must lie in [0,1]");

    const SingularValueDecomposition f = svd(t);
    const ComplexMatrix f_one = modulus_power(f, alpha);
    const ComplexMatrix g_one = comodulus_power(f, 1.0 - alpha);
    const ComplexMatrix f_two = modulus_power(f, 2.0 * alpha);
    const ComplexMatrix g_two = comodulus_power(f, 2.0 * (1.0 - alpha));

    const ContractionFactorization fact = contraction_factor(f_two, g_two, t);
    const SingularValueDecomposition fk = svd(fact.factor);

    auto sandwich = [&](double power) {
        return 0.5 * operator_norm(f_one * modulus_power(fk, power) * f_one +
                                   g_one * comodulus_power(fk, power) * g_one);
    };
    const double w = radius.value;
    const std::map<std::string, double> pa{{"alpha", alpha}};

    BoundReport rep;
    rep.entries.push_back(upper_bound("radius_refined", sandwich(1.0), w, pa));
    rep.entries.push_back(upper_bound("radius_intermediate", sandwich(0.5), w, pa));
    rep.entries.push_back(
        upper_bound("radius_coarse", 0.5 * operator_norm(f_two + g_two), w, pa));
    return rep;
}

BoundReport bound_adjoint_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    return bound_adjoint_product(a, b, numerical_radius(a.adjoint() * b));
}

BoundReport bound_adjoint_product(const ComplexMatrix& a, const ComplexMatrix& b,
                                  const RadiusResult& radius) {
    const ComplexMatrix prod = a.adjoint() * b;
    const ComplexMatrix mod_a2 = a.adjoint() * a;
    const ComplexMatrix mod_b2 = b.adjoint() * b;

    const ContractionFactorization fact = contraction_factor(mod_b2, mod_a2, prod);
    const SingularValueDecomposition fk = svd(fact.factor);
    const ComplexMatrix mod_a = psd_function_apply(mod_a2, 0.5);
    const ComplexMatrix mod_b = psd_function_apply(mod_b2, 0.5);

    const double middle = 0.5 * operator_norm(mod_a * comodulus_power(fk, 1.0) * mod_a +
                                              mod_b * modulus_power(fk, 1.0) * mod_b);
    const double right = 0.5 * operator_norm(mod_a2 + mod_b2);

    BoundReport rep;
    rep.entries.push_back(upper_bound("adjoint_product_middle", middle, radius.value));
    rep.entries.push_back(upper_bound("adjoint_product_right", right, radius.value));
    return rep;
}

} // namespace numrad
