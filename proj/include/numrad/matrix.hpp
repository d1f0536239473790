#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace numrad {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

// Dense complex matrix, row-major.  Small dimensions throughout (n <= a few
// dozen), so everything is plain O(n^3) with no blocking.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_ && rows_ > 0; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    ComplexMatrix adjoint() const;

    const std::vector<cplx>& data() const { return data_; }
    std::vector<cplx>& data() { return data_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> data_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx scale, const ComplexMatrix& a);
cvec operator*(const ComplexMatrix& a, const cvec& x);

// <x,y> = sum_i x_i * conj(y_i); linear in the first argument.
cplx inner(const cvec& x, const cvec& y);
double norm(const cvec& x);
cvec operator+(const cvec& x, const cvec& y);
cvec operator-(const cvec& x, const cvec& y);
cvec operator*(cplx scale, const cvec& x);

double frobenius_norm(const ComplexMatrix& a);
// ||A - A*||_F; 0 for exactly Hermitian input.
double hermitian_defect(const ComplexMatrix& a);
double max_abs_entry(const ComplexMatrix& a);
bool all_finite(const ComplexMatrix& a);

} // namespace numrad
