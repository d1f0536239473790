#pragma once

#include "numrad/radius.hpp"
#include "numrad/report.hpp"

namespace numrad {

// Result of factoring C = B^(1/2) K A^(1/2) out of a 2x2 operator block.
// residual is || B^(1/2) K A^(1/2) - C ||_F; when the block [A C*; C B] is
// positive the factor is a contraction (norm_factor <= 1) and the residual
// is tiny.  A large residual means the block was not positive or the ranges
// are incompatible; callers get the numbers, nothing is thrown.
struct ContractionFactorization {
    ComplexMatrix factor;
    double residual = 0.0;
    double norm_factor = 0.0;
};

// True iff the Hermitian block [A C*; C B] has min eigenvalue >= -tol.
// tol < 0 selects the default 1e-9 * ||block||.  A and B must be Hermitian
// PSD within 1e-8 (throws std::domain_error otherwise).
bool block_positive(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                    double tol = -1.0);

// K = pinv(B^(1/2)) C pinv(A^(1/2)) via spectral pseudo-inverses; eigenvalues
// below rank_tol * (largest eigenvalue) are dropped.  rank_tol < 0 selects
// the default 1e-10.
ContractionFactorization contraction_factor(const ComplexMatrix& a, const ComplexMatrix& b,
                                            const ComplexMatrix& c, double rank_tol = -1.0);

// Pointwise form of the contraction refinement with f = s^alpha, g = s^(1-alpha):
//   |<Tx,y>| <= sqrt(<f(|T|)|K|f(|T|)x,x> <g(|T*|)|K*|g(|T*|)y,y>)
//            <= sqrt(<f^2(|T|)x,x> <g^2(|T*|)y,y>)
// where K is extracted from the block [f^2(|T|) T*; T g^2(|T*|)].
PointwiseCheck contraction_pointwise_bound(const ComplexMatrix& t, double alpha, const cvec& x,
                                           const cvec& y);

// Numerical radius bounds built from the same extracted contraction:
//   radius_refined       (1/2) || f(|T|)|K|f(|T|) + g(|T*|)|K*|g(|T*|) ||
//   radius_intermediate  same with |K|^(1/2), |K*|^(1/2)
//   radius_coarse        (1/2) || f^2(|T|) + g^2(|T*|) ||
// Reference is w(T); refined <= intermediate <= coarse since |K| <= |K|^(1/2) <= I.
BoundReport contraction_radius_bound(const ComplexMatrix& t, double alpha);
BoundReport contraction_radius_bound(const ComplexMatrix& t, double alpha,
                                     const RadiusResult& radius);

// For a product of adjoints: w(A*B) <= (1/2) || |A||K*||A| + |B||K||B| ||
// <= (1/2) || A*A + B*B ||, K extracted from the block [|B|^2 B*A; A*B |A|^2].
// Entries: "adjoint_product_middle", "adjoint_product_right"; reference w(A*B).
BoundReport bound_adjoint_product(const ComplexMatrix& a, const ComplexMatrix& b);
BoundReport bound_adjoint_product(const ComplexMatrix& a, const ComplexMatrix& b,
                                  const RadiusResult& radius);

} // namespace numrad
