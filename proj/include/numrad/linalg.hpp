#pragma once

#include "numrad/matrix.hpp"

namespace numrad {

// Eigenvalues ascending; eigenvectors are the matching columns, each phase
// normalized so its first component of modulus > 1e-12 is real and positive.
struct HermitianEigen {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

// T = left * diag(singulars) * right*,  singulars sorted descending.
// left is rows x rows unitary, right is cols x cols unitary.
struct SingularValueDecomposition {
    ComplexMatrix left;
    std::vector<double> singulars;
    ComplexMatrix right;
};

// T = isometry * modulus with modulus = (T* T)^(1/2) PSD and isometry the
// partial isometry vanishing on ker(modulus).
struct PolarDecomposition {
    ComplexMatrix isometry;
    ComplexMatrix modulus;
};

// Cyclic Jacobi.  Input must be Hermitian within 1e-8 * max(1, ||A||_F);
// A is symmetrized internally before iterating.  Throws std::domain_error
// otherwise, std::invalid_argument on a non-square input.
HermitianEigen hermitian_eig(const ComplexMatrix& a);
// Same iteration without accumulating eigenvectors (hot path).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);
double min_eigenvalue(const ComplexMatrix& a);

SingularValueDecomposition svd(const ComplexMatrix& t);
// rank_tol <= 0 selects the default 1e-10 * sigma_max.
PolarDecomposition polar_decompose(const ComplexMatrix& t, double rank_tol = -1.0);

// A^s for PSD A via the spectral decomposition; 0^0 := 1 so A^0 = I.
// Eigenvalues in [-1e-8 * ||A||, 0) are clamped to 0; anything lower throws.
ComplexMatrix psd_function_apply(const ComplexMatrix& a, double s);

// Schatten p-norm of the singular values, p in (0, inf]; a quasi-norm for
// p < 1.  p = inf gives the operator norm.
double schatten_norm(const ComplexMatrix& t, double p);
double operator_norm(const ComplexMatrix& t);

// inf over complex lambda of ||u - lambda v||^2, by the closed form
// ||u||^2 - |<u,v>|^2 / ||v||^2 (just ||u||^2 when v = 0), clamped to >= 0.
double inf_lambda_distance(const cvec& u, const cvec& v);

// Powers of |T| = V diag(s) V* and |T*| = W diag(s) W* reusing one SVD, so
// both share the same singular values exactly.
ComplexMatrix modulus_power(const SingularValueDecomposition& f, double s);
ComplexMatrix comodulus_power(const SingularValueDecomposition& f, double s);
// Partial isometry of the polar decomposition from an existing SVD.
ComplexMatrix polar_isometry(const SingularValueDecomposition& f, double rank_tol = -1.0);

double schatten_from_singulars(const std::vector<double>& singulars, double p);

} // namespace numrad
