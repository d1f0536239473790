#include "numrad/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace numrad {

namespace {

constexpr double kOffDiagStop = 1e-13;  // stop when off(A) < 1e-13 * ||A||_F
constexpr int kMaxSweeps = 100;
constexpr double kPhaseEps = 1e-12;

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

void check_square(const ComplexMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("square matrix required");
}

void check_hermitian(const ComplexMatrix& a) {
    check_square(a);
    if (hermitian_defect(a) > 1e-8 * std::max(1.0, frobenius_norm(a)))
        throw std::domain_error("matrix is not Hermitian within tolerance");
}

// One complex Jacobi rotation annihilating A[p][q].  The unitary is
// J = I except J[p][p] = c, J[p][q] = s, J[q][p] = -s*conj(w), J[q][q] = c*conj(w)
// with w the phase of A[p][q]; A <- J* A J and V <- V J.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix* v, std::size_t p, std::size_t q) {
    const std::size_t n = a.rows();
    const cplx apq = a(p, q);
    const double r = std::abs(apq);
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    if (r <= 1e-18 * (std::abs(app) + std::abs(aqq))) {
        a(p, q) = a(q, p) = 0.0;
        return;
    }
    const cplx w = apq / r;
    const double tau = (aqq - app) / (2.0 * r);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const cplx jqp = -s * std::conj(w);
    const cplx jqq = c * std::conj(w);

    // column pass: A <- A J
    for (std::size_t k = 0; k < n; ++k) {
        const cplx akp = a(k, p), akq = a(k, q);
        a(k, p) = akp * c + akq * jqp;
        a(k, q) = akp * s + akq * jqq;
    }
    // row pass: A <- J* A
    for (std::size_t k = 0; k < n; ++k) {
        const cplx apk = a(p, k), aqk = a(q, k);
        a(p, k) = c * apk - s * w * aqk;
        a(q, k) = s * apk + c * w * aqk;
    }
    // pin the analytically known entries to kill roundoff drift
    a(p, p) = app - t * r;
    a(q, q) = aqq + t * r;
    a(p, q) = a(q, p) = 0.0;

    if (v) {
        for (std::size_t k = 0; k < n; ++k) {
            const cplx vkp = (*v)(k, p), vkq = (*v)(k, q);
            (*v)(k, p) = vkp * c + vkq * jqp;
            (*v)(k, q) = vkp * s + vkq * jqq;
        }
    }
}

// Core sweep loop on an exactly Hermitian matrix.  Returns the diagonal
// (unsorted); fills *v with the accumulated rotations when non-null.
std::vector<double> jacobi_diagonalize(ComplexMatrix a, ComplexMatrix* v) {
    const std::size_t n = a.rows();
    if (v) *v = ComplexMatrix::identity(n);
    const double stop = kOffDiagStop * std::max(frobenius_norm(a), 1e-300);
    for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) >= stop; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    }
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i).real();
    return d;
}

void phase_normalize(ComplexMatrix& v, std::size_t col) {
    for (std::size_t i = 0; i < v.rows(); ++i) {
        const cplx c = v(i, col);
        if (std::abs(c) > kPhaseEps) {
            const cplx phase = std::conj(c) / std::abs(c);
            for (std::size_t k = 0; k < v.rows(); ++k) v(k, col) *= phase;
            return;
        }
    }
}

ComplexMatrix symmetrized(const ComplexMatrix& a) {
    ComplexMatrix b(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        b(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < a.cols(); ++j) {
            const cplx m = 0.5 * (a(i, j) + std::conj(a(j, i)));
            b(i, j) = m;
            b(j, i) = std::conj(m);
        }
    }
    return b;
}


} // namespace

HermitianEigen hermitian_eig(const ComplexMatrix& a) {
    check_hermitian(a);
    ComplexMatrix v;
    std::vector<double> d = jacobi_diagonalize(symmetrized(a), &v);

    const std::size_t n = d.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return d[i] < d[j]; });

    HermitianEigen out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.eigenvalues[j] = d[order[j]];
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
        phase_normalize(out.eigenvectors, j);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
    check_hermitian(a);
    std::vector<double> d = jacobi_diagonalize(symmetrized(a), nullptr);
    std::sort(d.begin(), d.end());
    return d;
}

double min_eigenvalue(const ComplexMatrix& a) {
    return hermitian_eigenvalues(a).front();
}

namespace {

// Gram matrix m* m, built exactly Hermitian.
ComplexMatrix gram(const ComplexMatrix& m) {
    ComplexMatrix g(m.cols(), m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < m.rows(); ++k) s += std::conj(m(k, i)) * m(k, j);
            if (i == j) {
                g(i, i) = s.real();
            } else {
                g(i, j) = s;
                g(j, i) = std::conj(s);
            }
        }
    return g;
}

cvec column(const ComplexMatrix& m, std::size_t j) {
    cvec c(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) c[i] = m(i, j);
    return c;
}

void set_column(ComplexMatrix& m, std::size_t j, const cvec& c) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = c[i];
}

void orthogonalize_against(cvec& x, const std::vector<cvec>& basis) {
    for (const cvec& b : basis) {
        const cplx proj = inner(x, b);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] -= proj * b[i];
    }
}

} // namespace

SingularValueDecomposition svd(const ComplexMatrix& t) {
    if (t.rows() == 0 || t.cols() == 0) throw std::invalid_argument("empty matrix");
    const std::size_t n = t.rows(), m = t.cols();

    HermitianEigen right_eig = hermitian_eig(gram(t));

    // Right vectors in descending singular-value order.  Singular values are
    // taken as ||T v_i|| rather than sqrt of the Jacobi eigenvalue: the pair
    // (sigma_i, w_i = T v_i / sigma_i) then reconstructs T v_i exactly.
    const std::size_t k = std::min(n, m);
    SingularValueDecomposition out;
    out.right = ComplexMatrix(m, m);
    std::vector<cvec> right_cols(m);
    std::vector<double> sig(m);
    for (std::size_t j = 0; j < m; ++j) {
        right_cols[j] = column(right_eig.eigenvectors, m - 1 - j);
        sig[j] = norm(t * right_cols[j]);
    }
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return sig[i] > sig[j]; });
    out.singulars.resize(k);
    for (std::size_t j = 0; j < m; ++j) set_column(out.right, j, right_cols[order[j]]);
    for (std::size_t j = 0; j < k; ++j) out.singulars[j] = sig[order[j]];

    const double smax = out.singulars.empty() ? 0.0 : out.singulars.front();
    const double match_tol = 1e-12 * std::max(smax, 1e-300);

    out.left = ComplexMatrix(n, n);
    std::vector<cvec> left_cols;
    left_cols.reserve(n);
    std::size_t matched = 0;
    for (std::size_t j = 0; j < k && out.singulars[j] > match_tol; ++j, ++matched) {
        cvec w = t * column(out.right, j);
        const double nw = norm(w);
        out.singulars[j] = nw;
        for (cplx& c : w) c /= nw;
        // light re-orthogonalization; a no-op up to roundoff
        orthogonalize_against(w, left_cols);
        const double nw2 = norm(w);
        for (cplx& c : w) c /= nw2;
        left_cols.push_back(std::move(w));
    }
    for (std::size_t j = matched; j < k; ++j) out.singulars[j] = 0.0;

    // Complete the left basis from the null directions of T T*, then standard
    // basis vectors as a fallback.  Ascending eigenvalues put kernel first.
    if (left_cols.size() < n) {
        HermitianEigen left_eig = hermitian_eig(gram(t.adjoint()));
        std::vector<cvec> candidates;
        for (std::size_t j = 0; j < n; ++j) candidates.push_back(column(left_eig.eigenvectors, j));
        for (std::size_t j = 0; j < n; ++j) {
            cvec e(n, cplx{0.0});
            e[j] = 1.0;
            candidates.push_back(std::move(e));
        }
        for (cvec& cand : candidates) {
            if (left_cols.size() == n) break;
            orthogonalize_against(cand, left_cols);
            const double r = norm(cand);
            if (r > 1e-6) {
                for (cplx& c : cand) c /= r;
                left_cols.push_back(std::move(cand));
            }
        }
    }
    for (std::size_t j = 0; j < n; ++j) set_column(out.left, j, left_cols[j]);
    return out;
}

ComplexMatrix polar_isometry(const SingularValueDecomposition& f, double rank_tol) {
    const double smax = f.singulars.empty() ? 0.0 : f.singulars.front();
    if (rank_tol <= 0.0) rank_tol = 1e-10 * smax;
    const std::size_t n = f.left.rows(), m = f.right.rows();
    ComplexMatrix u(n, m);
    for (std::size_t r = 0; r < f.singulars.size(); ++r) {
        if (f.singulars[r] <= rank_tol) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j)
                u(i, j) += f.left(i, r) * std::conj(f.right(j, r));
    }
    return u;
}

ComplexMatrix modulus_power(const SingularValueDecomposition& f, double s) {
    if (s < 0.0) throw std::domain_error("negative power of a modulus");
    const std::size_t m = f.right.rows();
    ComplexMatrix out(m, m);
    for (std::size_t r = 0; r < m; ++r) {
        const double sr = r < f.singulars.size() ? f.singulars[r] : 0.0;
        const double pr = (sr == 0.0 && s == 0.0) ? 1.0 : std::pow(sr, s);
        if (pr == 0.0) continue;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                out(i, j) += pr * f.right(i, r) * std::conj(f.right(j, r));
    }
    return symmetrized(out);
}

ComplexMatrix comodulus_power(const SingularValueDecomposition& f, double s) {
    if (s < 0.0) throw std::domain_error("negative power of a modulus");
    const std::size_t n = f.left.rows();
    ComplexMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const double sr = r < f.singulars.size() ? f.singulars[r] : 0.0;
        const double pr = (sr == 0.0 && s == 0.0) ? 1.0 : std::pow(sr, s);
        if (pr == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) += pr * f.left(i, r) * std::conj(f.left(j, r));
    }
    return symmetrized(out);
}

PolarDecomposition polar_decompose(const ComplexMatrix& t, double rank_tol) {
    check_square(t);
    SingularValueDecomposition f = svd(t);
    PolarDecomposition out;
    out.isometry = polar_isometry(f, rank_tol);
    out.modulus = modulus_power(f, 1.0);
    return out;
}

ComplexMatrix psd_function_apply(const ComplexMatrix& a, double s) {
    if (s < 0.0) throw std::domain_error("negative power of a PSD matrix");
    HermitianEigen eig = hermitian_eig(a);
    const std::size_t n = a.rows();
    if (s == 0.0) return ComplexMatrix::identity(n);
    const double scale =
        std::max(std::abs(eig.eigenvalues.front()), std::abs(eig.eigenvalues.back()));
    ComplexMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        double lam = eig.eigenvalues[r];
        if (lam < 0.0) {
            if (lam < -1e-8 * scale) throw std::domain_error("matrix is not PSD within tolerance");
            lam = 0.0;
        }
        const double pr = std::pow(lam, s);
        if (pr == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) += pr * eig.eigenvectors(i, r) * std::conj(eig.eigenvectors(j, r));
    }
    return symmetrized(out);
}

double schatten_from_singulars(const std::vector<double>& singulars, double p) {
    if (!(p > 0.0)) throw std::domain_error("Schatten exponent must be positive");
    double smax = 0.0;
    for (double s : singulars) smax = std::max(smax, s);
    if (std::isinf(p) || smax == 0.0) return smax;
    double acc = 0.0;
    for (double s : singulars) acc += std::pow(s / smax, p);
    return smax * std::pow(acc, 1.0 / p);
}

double schatten_norm(const ComplexMatrix& t, double p) {
    if (!(p > 0.0)) throw std::domain_error("Schatten exponent must be positive");
    std::vector<double> lam = hermitian_eigenvalues(gram(t));
    std::vector<double> sig(lam.size());
    for (std::size_t i = 0; i < lam.size(); ++i) sig[i] = std::sqrt(std::max(lam[i], 0.0));
    return schatten_from_singulars(sig, p);
}

double operator_norm(const ComplexMatrix& t) {
    return schatten_norm(t, std::numeric_limits<double>::infinity());
}

double inf_lambda_distance(const cvec& u, const cvec& v) {
    if (u.size() != v.size()) throw std::invalid_argument("vector lengths do not match");
    double nu2 = 0.0, nv2 = 0.0;
    for (const cplx& c : u) nu2 += std::norm(c);
    for (const cplx& c : v) nv2 += std::norm(c);
    if (nv2 == 0.0) return nu2;
    const double cross = std::norm(inner(u, v));
    // exact cancellation when u is a multiple of v leaves tiny negatives
    return std::max(nu2 - cross / nv2, 0.0);
}

} // namespace numrad
