#pragma once

#include "numrad/linalg.hpp"
#include "numrad/matrix.hpp"

namespace numrad {

// w(T) together with an attaining angle and unit maximizer:
// value = lambda_max(Re(e^{i theta*} T)) and |<T x0, x0>| = value.
struct RadiusResult {
    double value = 0.0;
    double theta_star = 0.0;  // in [0, 2*pi)
    cvec maximizer;
};

// (e^{i theta} T + e^{-i theta} T*) / 2, assembled exactly Hermitian.
ComplexMatrix rotated_real_part(const ComplexMatrix& t, double theta);

// Scan a uniform theta grid, then refine the best few local maxima by
// golden-section search.  Ties within tol resolve to the smallest angle so
// the maximizer is deterministic.
RadiusResult numerical_radius(const ComplexMatrix& t, double tol = 1e-10);

// max over theta of the Schatten p-norm of the rotated real part.
double p_numerical_radius(const ComplexMatrix& t, double p, double tol = 1e-10);
// Shared grid pass for several exponents at once (one eigensolve per angle).
std::vector<double> p_numerical_radius_multi(const ComplexMatrix& t, const std::vector<double>& ps,
                                             double tol = 1e-10);

// Grid kernels: eigenvalues of the rotated real part at theta_k = 2 pi k / points.
// The parallel variant is the production path; the serial twin exists for
// agreement tests and the benchmark.  Outputs are identical bit for bit.
std::vector<std::vector<double>> rotated_spectrum_grid(const ComplexMatrix& t, std::size_t points);
std::vector<std::vector<double>> rotated_spectrum_grid_serial(const ComplexMatrix& t,
                                                              std::size_t points);

} // namespace numrad
