#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "lie.hpp"
#include "linalg.hpp"

namespace nilcx {

/// Rational operator J with J^2 = -I on the real basis e_1..e_m.
/// Column i of matrix() is J e_i.
class AlmostComplexStructure {
public:
    AlmostComplexStructure() = default;

    explicit AlmostComplexStructure(Matrix<Rational> j, std::string name = "J") : j_(std::move(j)), name_(std::move(name)) {
        if (j_.rows() != j_.cols()) throw ValidationError("J must be square");
        if (j_.rows() % 2 != 0) throw ValidationError("J requires an even-dimensional algebra");
        const auto sq = j_ * j_;
        if (sq != Matrix<Rational>::identity(j_.rows()) * Rational(-1)) throw ValidationError("J^2 != -I");
    }

    /// Completes J from the images of some vectors: every given pair (x, Jx) also
    /// yields (Jx, -x). The pairs must determine J uniquely and consistently.
    static AlmostComplexStructure from_images(std::size_t dim, const std::vector<std::pair<Vector<Rational>, Vector<Rational>>>& images,
                                              std::string name = "J") {
        std::vector<Vector<Rational>> domain, image;
        for (const auto& [x, y] : images) {
            if (x.size() != dim || y.size() != dim) throw ValidationError("J image has wrong length");
            domain.push_back(x);
            image.push_back(y);
            domain.push_back(y);
            image.push_back(scale(x, Rational(-1)));
        }
        // Solve X^T J^T = Y^T row-wise.
        Matrix<Rational> aug(domain.size(), 2 * dim);
        for (std::size_t r = 0; r < domain.size(); ++r)
            for (std::size_t c = 0; c < dim; ++c) {
                aug(r, c) = domain[r][c];
                aug(r, dim + c) = image[r][c];
            }
        const auto pivots = rref_in_place(aug, dim);
        for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
            for (std::size_t c = 0; c < dim; ++c)
                if (sgn(aug(r, dim + c)) != 0) throw ValidationError("inconsistent J specification (J^2 != -I)");
        if (pivots.size() != dim) throw ValidationError("incomplete J specification: images do not determine J");
        Matrix<Rational> jt(dim, dim);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) jt(r, c) = aug(r, dim + c);
        return AlmostComplexStructure(jt.transpose(), std::move(name));
    }

    /// J e_i = images[i] for i given as 0-based basis indices.
    static AlmostComplexStructure from_basis_images(std::size_t dim, const std::map<std::size_t, Vector<Rational>>& images,
                                                    std::string name = "J") {
        std::vector<std::pair<Vector<Rational>, Vector<Rational>>> pairs;
        for (const auto& [i, v] : images) pairs.emplace_back(unit_vector<Rational>(dim, i), v);
        return from_images(dim, pairs, std::move(name));
    }

    /// J e_{2k} = e_{2k+1}, pairing consecutive basis vectors.
    static AlmostComplexStructure standard(std::size_t dim) {
        if (dim % 2 != 0) throw ValidationError("J requires an even-dimensional algebra");
        Matrix<Rational> j(dim, dim);
        for (std::size_t k = 0; k + 1 < dim; k += 2) {
            j(k + 1, k) = 1;
            j(k, k + 1) = -1;
        }
        return AlmostComplexStructure(std::move(j), "standard");
    }

    const Matrix<Rational>& matrix() const noexcept { return j_; }
    std::size_t dim() const noexcept { return j_.rows(); }
    const std::string& name() const noexcept { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    Vector<Rational> apply(const Vector<Rational>& v) const { return j_ * v; }
    Vector<Complex> apply(const Vector<Complex>& v) const { return complexify(j_) * v; }

    friend bool operator==(const AlmostComplexStructure& a, const AlmostComplexStructure& b) { return a.j_ == b.j_; }

private:
    Matrix<Rational> j_;
    std::string name_ = "J";
};

/// Basis X_1..X_n of the (1,0)-vectors in complex coordinates over e_1..e_m,
/// with the dual coframe. Generator index convention used everywhere:
/// 0..n-1 are X_a (resp. omega^a), n..2n-1 are conj(X_a) (resp. conj(omega^a)).
class ComplexFrame {
public:
    ComplexFrame() = default;

    /// `levels[a]` records the ascending-series level of X_a (0 when not tracked).
    ComplexFrame(const AlmostComplexStructure& j, std::vector<Vector<Complex>> vectors, std::vector<std::size_t> levels = {})
        : vectors_(std::move(vectors)), levels_(std::move(levels)) {
        const std::size_t m = j.dim();
        n_ = m / 2;
        if (vectors_.size() != n_) throw PreconditionError("a frame needs exactly dim/2 vectors");
        if (levels_.empty()) levels_.assign(n_, 0);
        if (levels_.size() != n_) throw PreconditionError("frame level metadata has wrong length");
        const Complex i = Complex::i();
        for (const auto& x : vectors_) {
            if (x.size() != m) throw PreconditionError("frame vector has wrong length");
            if (j.apply(x) != scale(x, i)) throw PreconditionError("frame vector is not of type (1,0)");
        }
        basis_ = Matrix<Complex>(m, m);
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t r = 0; r < m; ++r) {
                basis_(r, a) = vectors_[a][r];
                basis_(r, n_ + a) = vectors_[a][r].conj();
            }
        auto inv = inverse(basis_);
        if (!inv) throw PreconditionError("frame vectors are not independent over C");
        dual_ = std::move(*inv);
    }

    std::size_t n() const noexcept { return n_; }
    std::size_t real_dim() const noexcept { return 2 * n_; }
    const std::vector<Vector<Complex>>& vectors() const noexcept { return vectors_; }
    const std::vector<std::size_t>& levels() const noexcept { return levels_; }

    /// Columns: X_1..X_n, conj(X_1)..conj(X_n).
    const Matrix<Complex>& basis() const noexcept { return basis_; }
    /// Rows: omega^1..omega^n, conj(omega^1)..conj(omega^n) (the dual coframe).
    const Matrix<Complex>& dual() const noexcept { return dual_; }

    Vector<Complex> generator(std::size_t s) const { return basis_.col(s); }
    Vector<Complex> coform(std::size_t s) const { return dual_.row(s); }

    /// Coordinates of a complex vector in the frame (length 2n).
    Vector<Complex> to_frame(const Vector<Complex>& v) const { return dual_ * v; }
    Vector<Complex> from_frame(const Vector<Complex>& c) const { return basis_ * c; }

private:
    std::size_t n_ = 0;
    std::vector<Vector<Complex>> vectors_;
    std::vector<std::size_t> levels_;
    Matrix<Complex> basis_;
    Matrix<Complex> dual_;
};

/// X = x - i Jx is of type (1,0).
inline Vector<Complex> type_10_part(const AlmostComplexStructure& j, const Vector<Rational>& x) {
    const auto jx = j.apply(x);
    Vector<Complex> out(x.size());
    for (std::size_t r = 0; r < x.size(); ++r) out[r] = Complex(x[r], Rational(-jx[r]));
    return out;
}

namespace detail {

/// Extends the J-invariant real span `span` by vectors x - iJx taken from
/// `candidates` in order, until `span` reaches `target_dim`.
inline void extend_frame(const AlmostComplexStructure& j, const std::vector<Vector<Rational>>& candidates,
                         std::vector<Vector<Rational>>& span, std::size_t target_dim, std::size_t level,
                         std::vector<Vector<Complex>>& frame, std::vector<std::size_t>& levels) {
    for (const auto& x : candidates) {
        if (span.size() >= target_dim) break;
        if (in_span(span, x)) continue;
        span.push_back(x);
        span.push_back(j.apply(x));
        frame.push_back(type_10_part(j, x));
        levels.push_back(level);
    }
    if (span.size() != target_dim) throw PreconditionError("J does not preserve ascending series");
}

} // namespace detail

/// A (1,0)-frame built from e_1, e_2, ... in order: X = e_k - i J e_k whenever
/// e_k is not yet in the real span of the earlier choices.
inline ComplexFrame standard_frame(const AlmostComplexStructure& j) {
    const std::size_t m = j.dim();
    std::vector<Vector<Rational>> candidates, span;
    for (std::size_t k = 0; k < m; ++k) candidates.push_back(unit_vector<Rational>(m, k));
    std::vector<Vector<Complex>> frame;
    std::vector<std::size_t> levels;
    detail::extend_frame(j, candidates, span, m, 0, frame, levels);
    return ComplexFrame(j, std::move(frame), std::move(levels));
}

/// Frame adapted to the ascending series g_1 ⊂ g_2 ⊂ ... ⊂ g_k: the first
/// n_1 vectors span (g_1)^{1,0}, the first n_2 span (g_2)^{1,0}, and so on.
/// Each level is completed with x - iJx for x running over the echelon basis
/// of g_l. Requires J g_l ⊆ g_l for every l (true for abelian J).
inline ComplexFrame adapted_frame(const LieAlgebra& a, const AlmostComplexStructure& j) {
    if (a.dim() != j.dim()) throw PreconditionError("J and algebra dimensions differ");
    const Flag flag = ascending_series(a);
    if (flag.terms.empty() ? a.dim() != 0 : flag.terms.back().dim() != a.dim())
        throw PreconditionError("algebra is not nilpotent");
    for (const auto& t : flag.terms)
        for (const auto& x : t.basis)
            if (!t.contains(j.apply(x))) throw PreconditionError("J does not preserve ascending series");
    std::vector<Vector<Rational>> span;
    std::vector<Vector<Complex>> frame;
    std::vector<std::size_t> levels;
    for (std::size_t l = 0; l < flag.terms.size(); ++l)
        detail::extend_frame(j, flag.terms[l].basis, span, flag.terms[l].dim(), l + 1, frame, levels);
    return ComplexFrame(j, std::move(frame), std::move(levels));
}

/// Complex structure constants of the frame: [Z_s, Z_t] = sum_u C(s,t,u) Z_u,
/// Z_0..Z_{2n-1} = X_1..X_n, conj(X_1)..conj(X_n).
class FrameStructure {
public:
    FrameStructure() = default;
    FrameStructure(const LieAlgebra& a, const ComplexFrame& f) : n_(f.n()) {
        const std::size_t m = f.real_dim();
        if (a.dim() != m) throw PreconditionError("frame and algebra dimensions differ");
        c_.assign(m * m * m, Complex(0));
        for (std::size_t s = 0; s < m; ++s)
            for (std::size_t t = s + 1; t < m; ++t) {
                const auto coords = f.to_frame(a.bracket(f.generator(s), f.generator(t)));
                for (std::size_t u = 0; u < m; ++u) {
                    c_[(s * m + t) * m + u] = coords[u];
                    c_[(t * m + s) * m + u] = -coords[u];
                }
            }
    }

    std::size_t n() const noexcept { return n_; }
    std::size_t rank() const noexcept { return 2 * n_; }
    const Complex& operator()(std::size_t s, std::size_t t, std::size_t u) const {
        const std::size_t m = 2 * n_;
        return c_[(s * m + t) * m + u];
    }

    /// Bracket of two vectors given in frame coordinates.
    Vector<Complex> bracket(const Vector<Complex>& x, const Vector<Complex>& y) const {
        const std::size_t m = 2 * n_;
        Vector<Complex> out(m, Complex(0));
        for (std::size_t s = 0; s < m; ++s) {
            if (x[s].is_zero()) continue;
            for (std::size_t t = 0; t < m; ++t) {
                if (s == t || y[t].is_zero()) continue;
                const Complex xy = x[s] * y[t];
                for (std::size_t u = 0; u < m; ++u)
                    if (!(*this)(s, t, u).is_zero()) out[u] += xy * (*this)(s, t, u);
            }
        }
        return out;
    }

private:
    std::size_t n_ = 0;
    std::vector<Complex> c_;
};

} // namespace nilcx
