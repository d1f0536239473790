#include "numrad/refined_bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace numrad {

namespace {

constexpr double kDegenerateEps = 1e-14;

void check_unit_interval(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) throw std::domain_error(std::string(what) + " must lie in [0,1]");
}

void check_nonzero(const ComplexMatrix& t, const char* what) {
    if (max_abs_entry(t) == 0.0) throw std::domain_error(std::string(what) + " must be nonzero");
}

// Correction term of the refined Schwarz-type bounds:
//   (||num_vec|| / (den_scale * ||den_vec||)) * inf_l ||u - l v||^2
// Zero with the degenerate flag when a norm in the ratio collapses.
struct Correction {
    double value = 0.0;
    bool degenerate = false;
};

Correction correction_term(const cvec& u, const cvec& v, double num_norm, double den_norm,
                           double den_scale) {
    Correction c;
    if (num_norm <= kDegenerateEps || den_norm <= kDegenerateEps) {
        c.degenerate = true;
        return c;
    }
    c.value = (num_norm / (den_scale * den_norm)) * inf_lambda_distance(u, v);
    return c;
}

} // namespace

PointwiseCheck kato_pointwise_refined(const ComplexMatrix& t, const cvec& x, const cvec& y,
                                      double tparam) {
    check_unit_interval(tparam, "exponent t");
    if (!t.is_square()) throw std::invalid_argument("square matrix required");

    const SingularValueDecomposition f = svd(t);
    const ComplexMatrix u_iso = polar_isometry(f);
    const ComplexMatrix mod_t = modulus_power(f, tparam);
    const ComplexMatrix mod_1mt = modulus_power(f, 1.0 - tparam);
    const ComplexMatrix comod_1mt = comodulus_power(f, 1.0 - tparam);

    const cvec tx = t * x;
    const cvec tsy = t.adjoint() * y;
    const cvec u = mod_t * x;
    const cvec v = mod_1mt * (u_iso.adjoint() * y);

    PointwiseCheck out;
    out.lhs = std::abs(inner(tx, y));
    const double nu = norm(u);
    const double nc = norm(comod_1mt * y);
    out.rhs_classical = nu * nc;

    // correction defined only when ||Tx|| ||T* y|| != 0
    if (norm(tx) <= kDegenerateEps || norm(tsy) <= kDegenerateEps || nu <= kDegenerateEps) {
        out.degenerate = true;
        out.rhs_refined = out.rhs_classical;
        return out;
    }
    out.rhs_refined = (nu - inf_lambda_distance(u, v) / (2.0 * nu)) * nc;
    return out;
}

BoundReport single_operator_bounds(const ComplexMatrix& t, double tparam, double alpha) {
    check_nonzero(t, "operator");
    return single_operator_bounds(t, tparam, alpha, numerical_radius(t));
}

BoundReport single_operator_bounds(const ComplexMatrix& t, double tparam, double alpha,
                                   const RadiusResult& radius) {
    check_unit_interval(tparam, "exponent t");
    check_unit_interval(alpha, "weight alpha");
    check_nonzero(t, "operator");
    if (!t.is_square()) throw std::invalid_argument("square matrix required");

    const SingularValueDecomposition f = svd(t);
    const ComplexMatrix u_iso = polar_isometry(f);
    const cvec ustar_x0 = u_iso.adjoint() * radius.maximizer;
    const double w = radius.value;
    const double nrm = f.singulars.empty() ? 0.0 : f.singulars.front();

    auto mod = [&](double s) { return modulus_power(f, s); };
    auto comod = [&](double s) { return comodulus_power(f, s); };
    auto vnorm = [&](const ComplexMatrix& m, const cvec& v) { return norm(m * v); };

    BoundReport rep;
    const std::map<std::string, double> pt{{"t", tparam}};
    auto refined_params = [&pt](const Correction& c) {
        std::map<std::string, double> m = pt;
        m["degenerate"] = c.degenerate ? 1.0 : 0.0;
        return m;
    };

    // (a) half power sum and (b) its refinement
    {
        const double unref = 0.5 * operator_norm(mod(2.0 * tparam) + comod(2.0 * (1.0 - tparam)));
        const cvec u = mod(tparam) * radius.maximizer;
        const cvec v = mod(1.0 - tparam) * ustar_x0;
        const Correction c = correction_term(u, v, vnorm(comod(1.0 - tparam), radius.maximizer),
                                             norm(u), 2.0);
        rep.entries.push_back(upper_bound("half_power_sum", unref, w, pt));
        rep.entries.push_back(
            upper_bound("half_power_sum_refined", unref - c.value, w, refined_params(c)));
    }
    // (c) the t = 1/2 instance, stated separately
    {
        const double unref = 0.5 * operator_norm(mod(1.0) + comod(1.0));
        const cvec u = mod(0.5) * radius.maximizer;
        const cvec v = mod(0.5) * ustar_x0;
        const Correction c =
            correction_term(u, v, vnorm(comod(0.5), radius.maximizer), norm(u), 2.0);
        rep.entries.push_back(upper_bound("kittaneh", unref, w));
        rep.entries.push_back(upper_bound("kittaneh_refined", unref - c.value, w,
                                          {{"degenerate", c.degenerate ? 1.0 : 0.0}}));
    }
    // (d) operator norm with the maximizer correction
    {
        const cvec u = mod(tparam / 2.0) * radius.maximizer;
        const cvec v = mod(tparam / 2.0) * ustar_x0;
        const Correction c = correction_term(u, v, vnorm(comod(tparam / 2.0), radius.maximizer),
                                             norm(u), 4.0);
        rep.entries.push_back(upper_bound("operator_norm", nrm, w, pt));
        rep.entries.push_back(upper_bound("operator_norm_refined",
                                          nrm - std::pow(nrm, 1.0 - tparam) * c.value, w,
                                          refined_params(c)));
    }
    // (e) split power sum
    {
        const double base = operator_norm(mod(tparam) + comod(1.0 - tparam));
        const cvec u = mod(tparam / 2.0) * radius.maximizer;
        const cvec v = mod((1.0 - tparam) / 2.0) * ustar_x0;
        const Correction c = correction_term(
            u, v, vnorm(comod((1.0 - tparam) / 2.0), radius.maximizer), norm(u), 2.0);
        const double half_sqrt = 0.5 * std::sqrt(nrm);
        rep.entries.push_back(upper_bound("split_power_sum", half_sqrt * base, w, pt));
        rep.entries.push_back(upper_bound("split_power_sum_refined", half_sqrt * (base - c.value),
                                          w, refined_params(c)));
    }
    // (f) symmetric power sum
    {
        const double base = operator_norm(mod(tparam) + comod(tparam));
        const cvec u = mod(tparam / 2.0) * radius.maximizer;
        const cvec v = mod(tparam / 2.0) * ustar_x0;
        const Correction c = correction_term(u, v, vnorm(comod(tparam / 2.0), radius.maximizer),
                                             norm(u), 2.0);
        const double half_pow = 0.5 * std::pow(nrm, 1.0 - tparam);
        rep.entries.push_back(upper_bound("symmetric_power_sum", half_pow * base, w, pt));
        rep.entries.push_back(upper_bound("symmetric_power_sum_refined",
                                          half_pow * (base - c.value), w, refined_params(c)));
    }
    // (g) weighted quadratic mean
    {
        const double val =
            std::sqrt(operator_norm(alpha * mod(2.0) + (1.0 - alpha) * comod(2.0)));
        rep.entries.push_back(
            upper_bound("weighted_quadratic", val, w, {{"alpha", alpha}}));
    }
    return rep;
}

PointwiseCheck buzano_product_pointwise(const ComplexMatrix& a, const ComplexMatrix& x,
                                        const ComplexMatrix& b, const cvec& xv, const cvec& yv) {
    if (hermitian_defect(x) > 1e-8 * std::max(1.0, frobenius_norm(x)))
        throw std::domain_error("middle factor must be Hermitian PSD");
    const double min_eig = min_eigenvalue(x);
    if (min_eig < -1e-8 * std::max(1.0, operator_norm(x)))
        throw std::domain_error("middle factor must be PSD");

    const double nx = operator_norm(x);
    const cvec bx = b * xv;
    const cvec ay = a.adjoint() * yv;

    PointwiseCheck out;
    out.lhs = std::abs(inner(a * (x * bx), yv));
    const double nb = norm(bx), na = norm(ay);
    out.rhs_classical = nx * nb * na;
    if (nb <= kDegenerateEps || na <= kDegenerateEps) {
        out.degenerate = true;
        out.rhs_refined = out.rhs_classical;
        return out;
    }
    out.rhs_refined =
        (nx / 2.0) * (2.0 * nb * na - (inf_lambda_distance(bx, ay) / (2.0 * nb)) * na);
    return out;
}

PointwiseCheck buzano_polar_pointwise(const ComplexMatrix& t, double tparam, PolarProductMode mode,
                                      const cvec& x, const cvec& y) {
    check_unit_interval(tparam, "exponent t");
    const SingularValueDecomposition f = svd(t);
    const ComplexMatrix u_iso = polar_isometry(f);
    ComplexMatrix a, mid, b;
    if (mode == PolarProductMode::split) {
        a = u_iso * modulus_power(f, (1.0 - tparam) / 2.0);
        mid = modulus_power(f, 0.5);
        b = modulus_power(f, tparam / 2.0);
    } else {
        a = u_iso * modulus_power(f, tparam / 2.0);
        mid = modulus_power(f, 1.0 - tparam);
        b = modulus_power(f, tparam / 2.0);
    }
    return buzano_product_pointwise(a, mid, b, x, y);
}

BoundReport bound_product_axb(const ComplexMatrix& a, const ComplexMatrix& x,
                              const ComplexMatrix& b) {
    if (hermitian_defect(x) > 1e-8 * std::max(1.0, frobenius_norm(x)))
        throw std::domain_error("middle factor must be Hermitian PSD");
    if (min_eigenvalue(x) < -1e-8 * std::max(1.0, operator_norm(x)))
        throw std::domain_error("middle factor must be PSD");
    check_nonzero(b, "right factor");

    const ComplexMatrix axb = a * (x * b);
    const RadiusResult radius = numerical_radius(axb);
    const double nx = operator_norm(x);
    const double base = operator_norm(a * a.adjoint() + b.adjoint() * b);

    const cvec bx0 = b * radius.maximizer;
    const cvec ax0 = a.adjoint() * radius.maximizer;
    const double nb = norm(bx0), na = norm(ax0);
    const bool degenerate = nb <= kDegenerateEps || na <= kDegenerateEps;

    BoundReport rep;
    const double unref = (nx / 2.0) * base;
    const double corr = degenerate ? 0.0 : (na / (2.0 * nb)) * inf_lambda_distance(bx0, ax0);
    rep.entries.push_back(upper_bound("product_unrefined", unref, radius.value));
    rep.entries.push_back(
        upper_bound("product_refined", (nx / 2.0) * (base - corr), radius.value,
                    {{"correction", corr}, {"degenerate", degenerate ? 1.0 : 0.0}}));
    return rep;
}

BoundReport bound_product_st(const ComplexMatrix& s, const ComplexMatrix& t) {
    check_nonzero(s, "left factor");
    check_nonzero(t, "right factor");

    const ComplexMatrix st = s * t;
    const RadiusResult radius = numerical_radius(st);
    const SingularValueDecomposition fs = svd(s);
    const ComplexMatrix u_iso = polar_isometry(fs);
    const double ns = fs.singulars.empty() ? 0.0 : fs.singulars.front();

    const double base = operator_norm(comodulus_power(fs, 1.0) + t.adjoint() * t);
    // Writing S = V|S| and ST = (V|S|^(1/2)) |S|^(1/2) T, the left factor has
    // adjoint |S|^(1/2) V*, whose action on x0 has the same norm as
    // |S*|^(1/2) x0 since V is isometric on the relevant range.
    const ComplexMatrix astar = modulus_power(fs, 0.5) * u_iso.adjoint();
    const cvec tx0 = t * radius.maximizer;
    const cvec ax0 = astar * radius.maximizer;
    const double nt = norm(tx0), na = norm(ax0);
    const bool degenerate = nt <= kDegenerateEps || na <= kDegenerateEps;

    const double corr = degenerate ? 0.0 : (na / (2.0 * nt)) * inf_lambda_distance(tx0, ax0);

    BoundReport rep;
    const double half_sqrt = 0.5 * std::sqrt(ns);
    rep.entries.push_back(upper_bound("pair_unrefined", half_sqrt * base, radius.value));
    rep.entries.push_back(upper_bound("pair_refined", half_sqrt * (base - corr), radius.value,
                                      {{"correction", corr}, {"degenerate", degenerate ? 1.0 : 0.0}}));
    return rep;
}

} // namespace numrad
