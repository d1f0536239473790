#include "numrad/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace numrad {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m(j, i) = std::conj((*this)(i, j));
    return m;
}

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix shapes do not match");
}

} // namespace

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b);
    ComplexMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < r.data().size(); ++i) r.data()[i] = a.data()[i] + b.data()[i];
    return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b);
    ComplexMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < r.data().size(); ++i) r.data()[i] = a.data()[i] - b.data()[i];
    return r;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    ComplexMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

ComplexMatrix operator*(cplx scale, const ComplexMatrix& a) {
    ComplexMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < r.data().size(); ++i) r.data()[i] = scale * a.data()[i];
    return r;
}

cvec operator*(const ComplexMatrix& a, const cvec& x) {
    if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    cvec y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        cplx s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

cplx inner(const cvec& x, const cvec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("vector lengths do not match");
    cplx s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * std::conj(y[i]);
    return s;
}

double norm(const cvec& x) {
    double s = 0.0;
    for (const cplx& c : x) s += std::norm(c);
    return std::sqrt(s);
}

cvec operator+(const cvec& x, const cvec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("vector lengths do not match");
    cvec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}

cvec operator-(const cvec& x, const cvec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("vector lengths do not match");
    cvec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
}

cvec operator*(cplx scale, const cvec& x) {
    cvec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = scale * x[i];
    return r;
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const cplx& c : a.data()) s += std::norm(c);
    return std::sqrt(s);
}

double hermitian_defect(const ComplexMatrix& a) {
    if (!a.is_square()) return std::numeric_limits<double>::infinity();
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            s += std::norm(a(i, j) - std::conj(a(j, i)));
    return std::sqrt(s);
}

double max_abs_entry(const ComplexMatrix& a) {
    double m = 0.0;
    for (const cplx& c : a.data()) m = std::max(m, std::abs(c));
    return m;
}

bool all_finite(const ComplexMatrix& a) {
    for (const cplx& c : a.data())
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
}

} // namespace numrad
