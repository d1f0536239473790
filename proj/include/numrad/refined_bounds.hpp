#pragma once

#include "numrad/radius.hpp"
#include "numrad/report.hpp"

namespace numrad {

// Refined Kato inequality at one pair of vectors:
//   |<Tx,y>| <= (|| |T|^t x || - inf_l || |T|^t x - l |T|^(1-t) U* y ||^2
//                               / (2 || |T|^t x ||)) * || |T*|^(1-t) y ||
// with U the polar isometry of T.  The classical right side drops the
// correction.  t in [0,1]; degenerate when ||Tx|| ||T* y|| vanishes.
PointwiseCheck kato_pointwise_refined(const ComplexMatrix& t, const cvec& x, const cvec& y,
                                      double tparam);

// Upper bounds on w(T) for one exponent t and one weight alpha, each refined
// entry paired with its unrefined parent:
//   half_power_sum        (1/2) || |T|^(2t) + |T*|^(2(1-t)) ||
//   kittaneh              (1/2) || |T| + |T*| ||   (t = 1/2 of the above)
//   operator_norm         ||T||, refined by a maximizer correction
//   split_power_sum       (||T||^(1/2)/2) || |T|^t + |T*|^(1-t) ||
//   symmetric_power_sum   (||T||^(1-t)/2) || |T|^t + |T*|^t ||
//   weighted_quadratic    sqrt(|| alpha |T|^2 + (1-alpha) |T*|^2 ||)
// Throws std::domain_error for T = 0 or t, alpha outside [0,1].
BoundReport single_operator_bounds(const ComplexMatrix& t, double tparam, double alpha);
// Same, reusing an already computed radius (the expensive part).
BoundReport single_operator_bounds(const ComplexMatrix& t, double tparam, double alpha,
                                   const RadiusResult& radius);

// Buzano-type product bound at one pair of vectors:
//   |<A X B x, y>| <= (||X||/2) (2 ||Bx|| ||A* y||
//                     - inf_l ||Bx - l A* y||^2 / (2||Bx||) * ||A* y||)
// classical right side = ||X|| ||Bx|| ||A* y||.  X must be PSD.
PointwiseCheck buzano_product_pointwise(const ComplexMatrix& a, const ComplexMatrix& x,
                                        const ComplexMatrix& b, const cvec& xv, const cvec& yv);

// Polar specializations of the product bound applied to a single operator T:
// split     A = U |T|^((1-t)/2), X = |T|^(1/2),  B = |T|^(t/2)
// symmetric A = U |T|^(t/2),     X = |T|^(1-t),  B = |T|^(t/2)
// Both satisfy A X B = T, so the left side is |<Tx,y>|.
enum class PolarProductMode { split, symmetric };
PointwiseCheck buzano_polar_pointwise(const ComplexMatrix& t, double tparam, PolarProductMode mode,
                                      const cvec& x, const cvec& y);

// w(AXB) <= (||X||/2) (|| |A*|^2 + |B|^2 || - (||A* x0|| / (2||B x0||))
//            * inf_l ||(B - l A*) x0||^2) at the maximizer x0 of w(AXB).
// Entries: "product_refined", "product_unrefined"; reference is w(AXB).
BoundReport bound_product_axb(const ComplexMatrix& a, const ComplexMatrix& x,
                              const ComplexMatrix& b);

// w(ST) <= (||S||^(1/2)/2) (|| |S*| + |T|^2 || - (|| |S*|^(1/2) x0 || / (2||T x0||))
//           * inf_l ||(T - l |S|^(1/2) U*) x0||^2), U the polar isometry of S.
// Entries: "pair_refined", "pair_unrefined"; reference is w(ST).
BoundReport bound_product_st(const ComplexMatrix& s, const ComplexMatrix& t);

} // namespace numrad
