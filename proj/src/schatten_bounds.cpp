#include "numrad/schatten_bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "numrad/radius.hpp"

namespace numrad {

namespace {

void check_exponents(const PowerExponents& pe) {
    if (!(pe.alpha >= 0.0 && pe.alpha <= 1.0) || !(pe.beta >= 0.0 && pe.beta <= 1.0))
        throw std::domain_error("power exponents must lie in [0,1]");
}

void check_same_square(const ComplexMatrix& t, const ComplexMatrix& s) {
    if (!t.is_square() || t.rows() != s.rows() || t.cols() != s.cols())
        throw std::invalid_argument("operators must be square and of equal dimension");
}

struct SumParts {
    ComplexMatrix left;  // g^2(|T*|) + h^2(|S*|)
    ComplexMatrix right; // f^2(|T|) + e^2(|S|)
};

SumParts sum_parts(const ComplexMatrix& t, const ComplexMatrix& s, const PowerExponents& pe) {
    const SingularValueDecomposition ft = svd(t);
    const SingularValueDecomposition fs = svd(s);
    SumParts out;
    out.left = comodulus_power(ft, 2.0 * (1.0 - pe.alpha)) +
               comodulus_power(fs, 2.0 * (1.0 - pe.beta));
    out.right = modulus_power(ft, 2.0 * pe.alpha) + modulus_power(fs, 2.0 * pe.beta);
    return out;
}

} // namespace

InequalityPair singular_value_sum_bound(const ComplexMatrix& t, const ComplexMatrix& s,
                                        const PowerExponents& pe, std::size_t j) {
    check_exponents(pe);
    check_same_square(t, s);
    const std::size_t n = t.rows();
    if (j < 1 || j > n) throw std::out_of_range("singular value index out of range");

    const SumParts parts = sum_parts(t, s, pe);
    const std::vector<double> evals = hermitian_eigenvalues(parts.right); // ascending
    const double sj_right = std::max(evals[n - j], 0.0);

    InequalityPair out;
    out.lhs = svd(t + s).singulars[j - 1];
    out.rhs = std::sqrt(operator_norm(parts.left)) * std::sqrt(sj_right);
    return out;
}

InequalityPair schatten_sum_bound(const ComplexMatrix& t, const ComplexMatrix& s,
                                  const PowerExponents& pe, double p) {
    check_exponents(pe);
    check_same_square(t, s);
    if (!(p > 0.0)) throw std::domain_error("Schatten exponent must be positive");

    const SumParts parts = sum_parts(t, s, pe);
    InequalityPair out;
    out.lhs = schatten_norm(t + s, p);
    out.rhs = std::sqrt(operator_norm(parts.left)) * std::sqrt(schatten_norm(parts.right, p / 2.0));
    return out;
}

std::optional<InequalityPair> normal_sum_norm_bound(const ComplexMatrix& t,
                                                    const ComplexMatrix& s) {
    check_same_square(t, s);
    auto commutant_defect = [](const ComplexMatrix& m) {
        return frobenius_norm(m * m.adjoint() - m.adjoint() * m);
    };
    if (commutant_defect(t) >= 1e-8 || commutant_defect(s) >= 1e-8) return std::nullopt;

    InequalityPair out;
    out.lhs = operator_norm(t + s);
    out.rhs = operator_norm(modulus_power(svd(t), 1.0) + modulus_power(svd(s), 1.0));
    return out;
}

BoundResult p_radius_power_bound(const ComplexMatrix& t, double tparam, double p,
                                 PRadiusVariant variant, double wp) {
    if (!(tparam >= 0.0 && tparam <= 1.0)) throw std::domain_error("exponent t must lie in [0,1]");
    if (!(p > 0.0)) throw std::domain_error("Schatten exponent must be positive");
    if (wp < 0.0) wp = p_numerical_radius(t, p);

    const SingularValueDecomposition f = svd(t);
    ComplexMatrix m1, m2;
    const char* name = nullptr;
    switch (variant) {
    case PRadiusVariant::symmetric:
        m1 = modulus_power(f, 2.0 * (1.0 - tparam)) + comodulus_power(f, 2.0 * (1.0 - tparam));
        m2 = modulus_power(f, 2.0 * tparam) + comodulus_power(f, 2.0 * tparam);
        name = "p_radius_symmetric";
        break;
    case PRadiusVariant::mixed:
        m1 = modulus_power(f, 2.0 * tparam) + comodulus_power(f, 2.0 * (1.0 - tparam));
        m2 = m1;
        name = "p_radius_mixed";
        break;
    case PRadiusVariant::half:
        m1 = modulus_power(f, 1.0) + comodulus_power(f, 1.0);
        m2 = m1;
        name = "p_radius_half";
        break;
    }
    const double value =
        0.5 * std::sqrt(operator_norm(m1)) * std::sqrt(schatten_norm(m2, p / 2.0));
    return upper_bound(name, value, wp, {{"t", tparam}, {"p", p}});
}

InequalityPair schatten_interpolation(const ComplexMatrix& t, double p, double tparam) {
    if (!(p > 0.0)) throw std::domain_error("Schatten exponent must be positive");
    if (!(tparam > 0.0 && tparam < 1.0))
        throw std::domain_error("interpolation parameter must lie strictly inside (0,1)");

    const std::vector<double> sv = svd(t).singulars;
    InequalityPair out;
    out.lhs = schatten_from_singulars(sv, p);
    out.rhs = std::pow(schatten_from_singulars(sv, std::numeric_limits<double>::infinity()),
                       tparam) *
              std::pow(schatten_from_singulars(sv, p * (1.0 - tparam)), 1.0 - tparam);
    return out;
}

} // namespace numrad
