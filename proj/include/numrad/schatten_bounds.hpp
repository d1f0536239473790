#pragma once

#include <optional>

#include "numrad/linalg.hpp"
#include "numrad/report.hpp"

namespace numrad {

// Exponents of the power family used throughout: f(s) = s^alpha and
// g(s) = s^(1-alpha) act on the first operator, e(s) = s^beta and
// h(s) = s^(1-beta) on the second.  f*g and e*h both recover the identity
// function, which is what the sum bounds below need.
struct PowerExponents {
    double alpha = 0.5;
    double beta = 0.5;
};

// One evaluated inequality lhs <= rhs.
struct InequalityPair {
    double lhs = 0.0;
    double rhs = 0.0;
    double slack() const { return rhs - lhs; }
};

// j-th largest singular value of a sum:
//   s_j(T+S) <= || g^2(|T*|) + h^2(|S*|) ||^(1/2) * s_j(f^2(|T|) + e^2(|S|))^(1/2)
// j is 1-based; out-of-range j throws std::out_of_range.
InequalityPair singular_value_sum_bound(const ComplexMatrix& t, const ComplexMatrix& s,
                                        const PowerExponents& pe, std::size_t j);

// Schatten p-norm of a sum (p > 0 or infinity):
//   ||T+S||_p <= || g^2(|T*|) + h^2(|S*|) ||^(1/2) * || f^2(|T|) + e^2(|S|) ||_(p/2)^(1/2)
// The right factor uses the p/2 quasi-norm verbatim, including p < 2.
InequalityPair schatten_sum_bound(const ComplexMatrix& t, const ComplexMatrix& s,
                                  const PowerExponents& pe, double p);

// For a pair of normal operators, ||T+S|| <= || |T|+|S| ||.  Returns nothing
// when either commutant defect ||TT*-T*T||_F, ||SS*-S*S||_F reaches 1e-8.
std::optional<InequalityPair> normal_sum_norm_bound(const ComplexMatrix& t,
                                                    const ComplexMatrix& s);

// Upper bounds on the p-numerical radius w_p(T), all of the shape
// (1/2) ||M1||^(1/2) ||M2||_(p/2)^(1/2):
//   symmetric  M1 = |T|^(2(1-t)) + |T*|^(2(1-t)),  M2 = |T|^(2t) + |T*|^(2t)
//   mixed      M1 = M2 = |T|^(2t) + |T*|^(2(1-t))
//   half       M1 = M2 = |T| + |T*|   (the t = 1/2 case, t is ignored)
// Pass the reference w_p(T) in wp to skip recomputing it; wp < 0 computes it.
enum class PRadiusVariant { symmetric, mixed, half };
BoundResult p_radius_power_bound(const ComplexMatrix& t, double tparam, double p,
                                 PRadiusVariant variant, double wp = -1.0);

// Norm interpolation ||T||_p <= ||T||^t * ||T||_(p(1-t))^(1-t) for t in the
// open interval (0,1).  t = 1/2 gives ||T||_p <= sqrt(||T|| ||T||_(p/2)).
InequalityPair schatten_interpolation(const ComplexMatrix& t, double p, double tparam);

} // namespace numrad
