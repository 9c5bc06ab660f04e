#pragma once

// Small dense matrices over an exact ring (LaurentA or CycloNum). Products
// skip zero entries, which keeps tensor-power operators cheap.

#include <utility>
#include <vector>

#include "ado/error.hpp"

namespace ado {

template <class T>
class Matrix {
public:
    Matrix(int rows, int cols, const T& zero)
        : rows_(rows), cols_(cols), zero_(zero), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), zero) {}

    static Matrix identity(int n, const T& zero, const T& one) {
        Matrix m(n, n, zero);
        for (int i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    const T& zero() const noexcept { return zero_; }

    T& operator()(int r, int c) { return a_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)]; }
    const T& operator()(int r, int c) const {
        return a_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch in product");
        Matrix r(x.rows_, y.cols_, x.zero_);
        // Row lists of nonzeros in y.
        std::vector<std::vector<int>> nz(static_cast<size_t>(y.rows_));
        for (int k = 0; k < y.rows_; ++k)
            for (int j = 0; j < y.cols_; ++j)
                if (!y(k, j).is_zero()) nz[static_cast<size_t>(k)].push_back(j);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const T& xik = x(i, k);
                if (xik.is_zero()) continue;
                for (int j : nz[static_cast<size_t>(k)]) r(i, j) += xik * y(k, j);
            }
        return r;
    }

    friend Matrix operator+(Matrix x, const Matrix& y) {
        x.check_shape(y);
        for (size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
        return x;
    }

    friend Matrix operator-(Matrix x, const Matrix& y) {
        x.check_shape(y);
        for (size_t i = 0; i < x.a_.size(); ++i) x.a_[i] -= y.a_[i];
        return x;
    }

    template <class S>
    Matrix scaled(const S& s) const {
        Matrix r(*this);
        for (auto& v : r.a_)
            if (!v.is_zero()) v = v * s;
        return r;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
        for (size_t i = 0; i < x.a_.size(); ++i)
            if (x.a_[i] != y.a_[i]) return false;
        return true;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }

    // Kronecker product; the left factor indexes the most significant digit.
    friend Matrix kron(const Matrix& x, const Matrix& y) {
        Matrix r(x.rows_ * y.rows_, x.cols_ * y.cols_, x.zero_);
        for (int i = 0; i < x.rows_; ++i)
            for (int j = 0; j < x.cols_; ++j) {
                const T& xij = x(i, j);
                if (xij.is_zero()) continue;
                for (int k = 0; k < y.rows_; ++k)
                    for (int l = 0; l < y.cols_; ++l) {
                        const T& ykl = y(k, l);
                        if (ykl.is_zero()) continue;
                        r(i * y.rows_ + k, j * y.cols_ + l) = xij * ykl;
                    }
            }
        return r;
    }

    template <class F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        using U = decltype(f(std::declval<const T&>()));
        Matrix<U> r(rows_, cols_, f(zero_));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
        return r;
    }

private:
    void check_shape(const Matrix& y) const {
        if (rows_ != y.rows_ || cols_ != y.cols_) throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch");
    }

    int rows_;
    int cols_;
    T zero_;
    std::vector<T> a_;
};

}  // namespace ado
