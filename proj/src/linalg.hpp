#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "error.hpp"

namespace qst {

using Complex = std::complex<double>;

// Dense complex matrix sized for the reduced subspaces (at most 8x8 here);
// row-major storage.
class CMat {
public:
    CMat() = default;
    CMat(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static CMat identity(int d) {
        CMat out(d, d);
        for (int i = 0; i < d; ++i) out(i, i) = 1.0;
        return out;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Complex& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Complex& operator()(int i, int j) const {
        return a_[static_cast<size_t>(i) * cols_ + j];
    }

    CMat operator+(const CMat& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            fail(Status::DimensionMismatch, "matrix sum shape mismatch");
        CMat out = *this;
        for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += rhs.a_[i];
        return out;
    }

    CMat operator*(const CMat& rhs) const {
        if (cols_ != rhs.rows_) fail(Status::DimensionMismatch, "matrix product shape mismatch");
        CMat out(rows_, rhs.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Complex aik = (*this)(i, k);
                if (aik == Complex{}) continue;
                for (int j = 0; j < rhs.cols_; ++j) out(i, j) += aik * rhs(k, j);
            }
        return out;
    }

    std::vector<Complex> apply(const std::vector<Complex>& v) const {
        if (static_cast<int>(v.size()) != cols_)
            fail(Status::DimensionMismatch, "matrix-vector shape mismatch");
        std::vector<Complex> out(rows_);
        for (int i = 0; i < rows_; ++i) {
            Complex sum = 0.0;
            for (int j = 0; j < cols_; ++j) sum += (*this)(i, j) * v[j];
            out[i] = sum;
        }
        return out;
    }

    CMat adjoint() const {
        CMat out(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
        return out;
    }

    CMat scaled(Complex f) const {
        CMat out = *this;
        for (Complex& c : out.a_) c *= f;
        return out;
    }

    double max_abs_diff(const CMat& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            fail(Status::DimensionMismatch, "matrix difference shape mismatch");
        double worst = 0.0;
        for (size_t i = 0; i < a_.size(); ++i) worst = std::max(worst, std::abs(a_[i] - rhs.a_[i]));
        return worst;
    }

    double unitarity_residual() const {
        return (*this * adjoint()).max_abs_diff(identity(rows_));
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Complex> a_;
};

inline Complex vdot(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    if (a.size() != b.size()) fail(Status::DimensionMismatch, "dot-product length mismatch");
    Complex sum = 0.0;
    for (size_t i = 0; i < a.size(); ++i) sum += std::conj(a[i]) * b[i];
    return sum;
}

inline double vec_norm_sq(const std::vector<Complex>& a) {
    double sum = 0.0;
    for (const Complex& c : a) sum += std::norm(c);
    return sum;
}

}  // namespace qst
