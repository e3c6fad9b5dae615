#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gaussian.hpp"

namespace nilcx {

template <class T>
using Vector = std::vector<T>;

/// Dense row-major matrix over an exact field (Rational or GaussianRational).
template <class T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : init) {
            if (r.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    static Matrix from_columns(const std::vector<Vector<T>>& cols, std::size_t rows) {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    static Matrix from_rows(const std::vector<Vector<T>>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    const T& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    Vector<T> row(std::size_t i) const { return Vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
    Vector<T> col(std::size_t j) const {
        Vector<T> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!nilcx::is_zero(x)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Conjugate transpose.
    Matrix adjoint() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = conj((*this)(i, j));
        return t;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    Matrix& operator*=(const T& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (nilcx::is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!nilcx::is_zero(b(k, j))) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Vector<T> operator*(const Matrix& a, const Vector<T>& v) {
        if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
        Vector<T> r(a.rows_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (!nilcx::is_zero(a(i, k)) && !nilcx::is_zero(v[k])) r[i] += a(i, k) * v[k];
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << '[';
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << to_string(m(i, j));
            os << "]\n";
        }
        return os;
    }

private:
    void check_same(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix dimension mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

// ---- vector helpers -------------------------------------------------------

template <class T>
bool is_zero_vector(const Vector<T>& v) {
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

template <class T>
Vector<T> add(Vector<T> a, const Vector<T>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

template <class T>
Vector<T> sub(Vector<T> a, const Vector<T>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

template <class T>
Vector<T> scale(Vector<T> a, const T& s) {
    for (auto& x : a) x *= s;
    return a;
}

/// a += s * b
template <class T>
void axpy(Vector<T>& a, const T& s, const Vector<T>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    if (is_zero(s)) return;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!is_zero(b[i])) a[i] += s * b[i];
}

/// Standard Hermitian form <u, v> = sum u_i conj(v_i); linear in the first slot.
template <class T>
T hermitian(const Vector<T>& u, const Vector<T>& v) {
    if (u.size() != v.size()) throw std::invalid_argument("vector length mismatch");
    T s(0);
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!is_zero(u[i]) && !is_zero(v[i])) s += u[i] * conj(v[i]);
    return s;
}

template <class T>
Vector<T> conj_vector(Vector<T> v) {
    for (auto& x : v) x = conj(x);
    return v;
}

template <class T>
Vector<T> unit_vector(std::size_t n, std::size_t i) {
    Vector<T> v(n, T(0));
    v.at(i) = T(1);
    return v;
}

inline Vector<Complex> complexify(const Vector<Rational>& v) {
    Vector<Complex> out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

inline Matrix<Complex> complexify(const Matrix<Rational>& m) {
    Matrix<Complex> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Complex(m(i, j));
    return out;
}

template <class T>
std::string to_string(const Vector<T>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
    return s + ")";
}

} // namespace nilcx
