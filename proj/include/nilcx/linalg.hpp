#pragma once

// Exact linear algebra over Q or Q(i). Every routine uses the same deterministic
// elimination: scan columns left to right, take the first row at or below the
// current one with a nonzero entry. No magnitudes are compared.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace nilcx {

/// In-place reduction to reduced row echelon form; returns the pivot columns.
/// When `augmented_cols` > 0, the trailing columns are carried along but never
/// chosen as pivots.
template <class T>
std::vector<std::size_t> rref_in_place(Matrix<T>& m, std::size_t augmented_cols = 0) {
    std::vector<std::size_t> pivots;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const std::size_t pivot_cols = cols - augmented_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(m(p, c))) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
        if (m(r, c) != T(1)) {
            const T inv = T(1) / m(r, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!is_zero(m(r, j))) m(r, j) *= inv;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            const T f = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
    return rref_in_place(m).size();
}

/// Basis of ker M: one vector per free column (in increasing order), with a 1
/// in that column and zeros in the other free columns.
template <class T>
std::vector<Vector<T>> kernel_basis(Matrix<T> m) {
    const std::size_t cols = m.cols();
    const auto pivots = rref_in_place(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector<T>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector<T> v(cols, T(0));
        v[f] = T(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (!is_zero(m(r, f))) v[pivots[r]] = -m(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Reduced row echelon basis of span(vectors): the canonical basis of a subspace,
/// independent of which spanning set was supplied.
template <class T>
std::vector<Vector<T>> canonical_basis(const std::vector<Vector<T>>& vectors, std::size_t dim) {
    if (vectors.empty()) return {};
    Matrix<T> m = Matrix<T>::from_rows(vectors, dim);
    const auto pivots = rref_in_place(m);
    std::vector<Vector<T>> out;
    out.reserve(pivots.size());
    for (std::size_t r = 0; r < pivots.size(); ++r) out.push_back(m.row(r));
    return out;
}

template <class T>
std::size_t span_dimension(const std::vector<Vector<T>>& vectors, std::size_t dim) {
    if (vectors.empty()) return 0;
    return rank(Matrix<T>::from_rows(vectors, dim));
}

/// Is v in span(basis)?
template <class T>
bool in_span(const std::vector<Vector<T>>& basis, const Vector<T>& v) {
    if (is_zero_vector(v)) return true;
    std::vector<Vector<T>> all(basis.begin(), basis.end());
    const std::size_t before = span_dimension(all, v.size());
    all.push_back(v);
    return span_dimension(all, v.size()) == before;
}

/// span(a) == span(b)
template <class T>
bool same_span(const std::vector<Vector<T>>& a, const std::vector<Vector<T>>& b, std::size_t dim) {
    return canonical_basis(a, dim) == canonical_basis(b, dim);
}

/// span(a) ⊆ span(b)
template <class T>
bool span_contains(const std::vector<Vector<T>>& outer, const std::vector<Vector<T>>& inner, std::size_t dim) {
    std::vector<Vector<T>> all(outer.begin(), outer.end());
    const std::size_t before = span_dimension(all, dim);
    all.insert(all.end(), inner.begin(), inner.end());
    return span_dimension(all, dim) == before;
}

/// Coordinates of v in an independent family (columns), if v lies in its span.
template <class T>
std::optional<Vector<T>> coordinates(const std::vector<Vector<T>>& basis, const Vector<T>& v) {
    const std::size_t n = v.size();
    const std::size_t k = basis.size();
    Matrix<T> aug(n, k + 1);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i) aug(i, j) = basis[j][i];
    for (std::size_t i = 0; i < n; ++i) aug(i, k) = v[i];
    const auto pivots = rref_in_place(aug, 1);
    if (pivots.size() != k) throw PreconditionError("coordinates: family is not linearly independent");
    for (std::size_t r = pivots.size(); r < n; ++r)
        if (!is_zero(aug(r, k))) return std::nullopt;
    Vector<T> x(k, T(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, k);
    return x;
}

/// Orthogonal projection onto span(basis) under the standard Hermitian form.
template <class T>
Vector<T> project_onto(const std::vector<Vector<T>>& basis, const Vector<T>& v) {
    const std::size_t k = basis.size();
    if (k == 0) return Vector<T>(v.size(), T(0));
    // Gram system G c = b with G_ij = <basis_j, basis_i>, b_i = <v, basis_i>.
    Matrix<T> g(k, k + 1);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) g(i, j) = hermitian(basis[j], basis[i]);
        g(i, k) = hermitian(v, basis[i]);
    }
    const auto pivots = rref_in_place(g, 1);
    if (pivots.size() != k) throw PreconditionError("project_onto: family is not linearly independent");
    Vector<T> out(v.size(), T(0));
    for (std::size_t r = 0; r < k; ++r) axpy(out, g(r, k), basis[pivots[r]]);
    return out;
}

/// Solves M x = b with x orthogonal to ker M; std::nullopt when b is not in im M.
template <class T>
std::optional<Vector<T>> solve_in_image(const Matrix<T>& m, const Vector<T>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve_in_image: rhs length mismatch");
    const std::size_t cols = m.cols();
    Matrix<T> aug(m.rows(), cols + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug(i, j) = m(i, j);
        aug(i, cols) = b[i];
    }
    const auto pivots = rref_in_place(aug, 1);
    for (std::size_t r = pivots.size(); r < m.rows(); ++r)
        if (!is_zero(aug(r, cols))) return std::nullopt;
    Vector<T> x(cols, T(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, cols);
    const auto ker = kernel_basis(m);
    if (!ker.empty()) x = sub(x, project_onto(ker, x));
    return x;
}

/// Basis of {v in span(inside) : <v, s> = 0 for all s in S}. Requires span(S) ⊆ span(inside).
template <class T>
std::vector<Vector<T>> orthogonal_complement(const std::vector<Vector<T>>& s, const std::vector<Vector<T>>& inside) {
    if (inside.empty()) {
        if (!s.empty() && !is_zero_vector(s.front()))
            throw PreconditionError("orthogonal_complement: span(S) is not contained in span(inside)");
        return {};
    }
    const std::size_t dim = inside.front().size();
    if (!s.empty() && !span_contains(inside, s, dim))
        throw PreconditionError("orthogonal_complement: span(S) is not contained in span(inside)");
    const auto t = canonical_basis(inside, dim);
    if (s.empty()) return t;
    // v = sum_j c_j t_j ; constraint <v, s_i> = sum_j c_j <t_j, s_i> = 0.
    Matrix<T> constraints(s.size(), t.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j) constraints(i, j) = hermitian(t[j], s[i]);
    std::vector<Vector<T>> out;
    for (const auto& c : kernel_basis(constraints)) {
        Vector<T> v(dim, T(0));
        for (std::size_t j = 0; j < t.size(); ++j) axpy(v, c[j], t[j]);
        out.push_back(std::move(v));
    }
    return out;
}

/// Inverse of a square matrix; std::nullopt when singular.
template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("inverse: matrix is not square");
    Matrix<T> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = T(1);
    }
    const auto pivots = rref_in_place(aug, n);
    if (pivots.size() != n) return std::nullopt;
    Matrix<T> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

/// Columns e_j (j not a pivot of the canonical basis of `sub`) completing span(sub) to the whole space.
template <class T>
std::vector<std::size_t> complement_coordinates(const std::vector<Vector<T>>& sub, std::size_t dim) {
    std::vector<bool> is_pivot(dim, false);
    if (!sub.empty()) {
        Matrix<T> m = Matrix<T>::from_rows(sub, dim);
        for (auto p : rref_in_place(m)) is_pivot[p] = true;
    }
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < dim; ++j)
        if (!is_pivot[j]) out.push_back(j);
    return out;
}

} // namespace nilcx
