// Dense complex matrices and vectors, row-major, double precision.
// Small-dimension kernel: everything the simulator touches is <= 256x256.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace catclone {

using cxd = std::complex<double>;

class CVector {
  public:
    CVector() = default;
    explicit CVector(std::size_t dim) : entries_(dim) {}
    explicit CVector(std::vector<cxd> entries) : entries_(std::move(entries)) {}
    CVector(std::initializer_list<cxd> entries) : entries_(entries) {}

    std::size_t dim() const { return entries_.size(); }
    const cxd& operator[](std::size_t i) const { return entries_[i]; }
    cxd& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<cxd>& entries() const { return entries_; }

    double norm() const {
        double s = 0.0;
        for (const auto& z : entries_) s += std::norm(z);
        return std::sqrt(s);
    }

  private:
    std::vector<cxd> entries_;
};

inline cxd dot(const CVector& a, const CVector& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("dot: dimension mismatch");
    cxd r{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) r += std::conj(a[i]) * b[i];
    return r;
}

class CMatrix {
  public:
    CMatrix() : rows_(0), cols_(0) {}
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    CMatrix(std::size_t rows, std::size_t cols, std::vector<cxd> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != rows_ * cols_)
            throw DimensionMismatch("CMatrix: rows*cols must equal entry count");
    }
    CMatrix(std::initializer_list<std::initializer_list<cxd>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw DimensionMismatch("CMatrix: ragged initializer");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }

    static CMatrix zero(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }

    static CMatrix identity(std::size_t n) {
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    // Checked constructor for unitaries: verifies U†U = I entrywise within tol.
    static CMatrix unitary(std::size_t n, std::vector<cxd> entries, double tol = 1e-12) {
        CMatrix m(n, n, std::move(entries));
        if (!m.is_unitary(tol)) throw NotUnitary("unitary: U†U != I");
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    const cxd& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    cxd& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const std::vector<cxd>& entries() const { return a_; }
    cxd* row_ptr(std::size_t i) { return a_.data() + i * cols_; }
    const cxd* row_ptr(std::size_t i) const { return a_.data() + i * cols_; }

    CMatrix dagger() const {
        CMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
        return r;
    }

    cxd trace() const {
        cxd t{0.0, 0.0};
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
        return t;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto& z : a_) s += std::norm(z);
        return std::sqrt(s);
    }

    // max_{i,j} |a(i,j) - conj(a(j,i))|
    double hermiticity_defect() const {
        double worst = 0.0;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i; j < cols_; ++j)
                worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return worst;
    }

    bool is_hermitian(double tol = 1e-10) const {
        return square() && hermiticity_defect() <= tol;
    }

    bool is_unitary(double tol = 1e-12) const {
        if (!square()) return false;
        for (std::size_t i = 0; i < cols_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                cxd s{0.0, 0.0};
                for (std::size_t k = 0; k < rows_; ++k)
                    s += std::conj((*this)(k, i)) * (*this)(k, j);
                if (std::abs(s - (i == j ? cxd{1.0, 0.0} : cxd{0.0, 0.0})) > tol) return false;
            }
        }
        return true;
    }

    CMatrix operator*(const CMatrix& o) const {
        if (cols_ != o.rows_) throw DimensionMismatch("matmul: inner dimensions differ");
        CMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const cxd aik = (*this)(i, k);
                if (aik == cxd{0.0, 0.0}) continue;
                const cxd* orow = o.row_ptr(k);
                cxd* rrow = r.row_ptr(i);
                for (std::size_t j = 0; j < o.cols_; ++j) rrow[j] += aik * orow[j];
            }
        }
        return r;
    }

    CVector operator*(const CVector& v) const {
        if (cols_ != v.dim()) throw DimensionMismatch("matvec: dimension mismatch");
        CVector r(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            cxd s{0.0, 0.0};
            const cxd* row = row_ptr(i);
            for (std::size_t j = 0; j < cols_; ++j) s += row[j] * v[j];
            r[i] = s;
        }
        return r;
    }

    CMatrix operator+(const CMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatch("add: shape mismatch");
        CMatrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }

    CMatrix operator-(const CMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatch("sub: shape mismatch");
        CMatrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
        return r;
    }

    CMatrix& operator+=(const CMatrix& o) {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatch("add: shape mismatch");
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }

    CMatrix operator*(cxd s) const {
        CMatrix r = *this;
        for (auto& z : r.a_) z *= s;
        return r;
    }

    friend CMatrix operator*(cxd s, const CMatrix& m) { return m * s; }

  private:
    std::size_t rows_, cols_;
    std::vector<cxd> a_;
};

// Kronecker product: entry (i*rb+k, j*cb+l) = a(i,j)*b(k,l).
inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cxd aij = a(i, j);
            if (aij == cxd{0.0, 0.0}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

inline CVector kron(const CVector& a, const CVector& b) {
    CVector r(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a[i] == cxd{0.0, 0.0}) continue;
        for (std::size_t k = 0; k < b.dim(); ++k) r[i * b.dim() + k] = a[i] * b[k];
    }
    return r;
}

// Standard gates.
inline CMatrix pauli_x() { return CMatrix::unitary(2, {0, 1, 1, 0}); }
inline CMatrix pauli_y() { return CMatrix::unitary(2, {0, cxd{0, -1}, cxd{0, 1}, 0}); }
inline CMatrix pauli_z() { return CMatrix::unitary(2, {1, 0, 0, -1}); }

// CNOT on (source, target) with the source as the high bit of the local index.
inline CMatrix cnot_gate() {
    return CMatrix::unitary(4, {1, 0, 0, 0,
                                0, 1, 0, 0,
                                0, 0, 0, 1,
                                0, 0, 1, 0});
}

} // namespace catclone
