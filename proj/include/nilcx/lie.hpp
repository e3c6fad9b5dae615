#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"

namespace nilcx {

/// A subspace kept in canonical (reduced row echelon) form, so equality of
/// subspaces is equality of bases.
struct Subspace {
    std::size_t ambient = 0;
    std::vector<Vector<Rational>> basis;

    Subspace() = default;
    Subspace(std::size_t dim, const std::vector<Vector<Rational>>& spanning)
        : ambient(dim), basis(canonical_basis(spanning, dim)) {}

    static Subspace zero(std::size_t dim) { return Subspace(dim, {}); }
    static Subspace full(std::size_t dim) {
        std::vector<Vector<Rational>> e;
        for (std::size_t i = 0; i < dim; ++i) e.push_back(unit_vector<Rational>(dim, i));
        return Subspace(dim, e);
    }

    std::size_t dim() const { return basis.size(); }
    bool contains(const Vector<Rational>& v) const { return in_span(basis, v); }
    bool contains(const Subspace& other) const { return span_contains(basis, other.basis, ambient); }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient == b.ambient && a.basis == b.basis;
    }

    /// Rows spanning the annihilator: q . v = 0 for all v in the subspace.
    Matrix<Rational> annihilator() const {
        Matrix<Rational> m(basis.size(), ambient);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < ambient; ++j) m(i, j) = basis[i][j];
        const auto ann = kernel_basis(m);
        return Matrix<Rational>::from_rows(ann, ambient);
    }
};

/// Increasing chain of subspaces 0 = V_0 ⊂ V_1 ⊂ ... ⊂ V_k. `terms` holds V_1..V_k.
struct Flag {
    std::vector<Subspace> terms;

    std::vector<std::size_t> dims() const {
        std::vector<std::size_t> d;
        for (const auto& t : terms) d.push_back(t.dim());
        return d;
    }
    std::size_t length() const { return terms.size(); }
};

/// Real Lie algebra with rational structure constants [e_i, e_j] = sum_k c(i,j,k) e_k.
class LieAlgebra {
public:
    struct Bracket {
        std::size_t i, j;                          // 0-based, i < j
        std::map<std::size_t, Rational> value;     // k -> coefficient
    };

    LieAlgebra() = default;
    LieAlgebra(std::string name, std::size_t dim)
        : name_(std::move(name)), dim_(dim), c_(dim * dim * dim, Rational(0)) {}

    /// Builds from the nonzero brackets [e_i, e_j] (0-based, i < j); antisymmetry is implied.
    static LieAlgebra from_brackets(std::string name, std::size_t dim, const std::vector<Bracket>& brackets) {
        LieAlgebra a(std::move(name), dim);
        for (const auto& b : brackets) {
            if (b.i >= dim || b.j >= dim) throw ValidationError("bracket index out of range");
            if (b.i == b.j) throw ValidationError("bracket [e_i, e_i] must vanish");
            for (const auto& [k, v] : b.value) {
                if (k >= dim) throw ValidationError("bracket value index out of range");
                a.add(b.i, b.j, k, v);
            }
        }
        return a;
    }

    const std::string& name() const noexcept { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    std::size_t dim() const noexcept { return dim_; }

    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }

    /// Adds v to c(i,j,k) and subtracts it from c(j,i,k).
    void add(std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
        c_[(i * dim_ + j) * dim_ + k] += v;
        c_[(j * dim_ + i) * dim_ + k] -= v;
    }

    template <class T>
    Vector<T> bracket(const Vector<T>& x, const Vector<T>& y) const {
        Vector<T> out(dim_, T(0));
        for (std::size_t i = 0; i < dim_; ++i) {
            if (is_zero(x[i])) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (i == j || is_zero(y[j])) continue;
                const T xy = x[i] * y[j];
                for (std::size_t k = 0; k < dim_; ++k) {
                    const Rational& ck = c(i, j, k);
                    if (sgn(ck) != 0) out[k] += xy * T(ck);
                }
            }
        }
        return out;
    }

    /// Matrix of ad_x.
    Matrix<Rational> ad(const Vector<Rational>& x) const {
        Matrix<Rational> m(dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            const auto col = bracket(x, unit_vector<Rational>(dim_, j));
            for (std::size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
        }
        return m;
    }

    /// Nonzero brackets [e_i, e_j], i < j, in index order.
    std::vector<Bracket> brackets() const {
        std::vector<Bracket> out;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j) {
                Bracket b{i, j, {}};
                for (std::size_t k = 0; k < dim_; ++k)
                    if (sgn(c(i, j, k)) != 0) b.value[k] = c(i, j, k);
                if (!b.value.empty()) out.push_back(std::move(b));
            }
        return out;
    }

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.dim_ == b.dim_ && a.c_ == b.c_; }

private:
    std::string name_;
    std::size_t dim_ = 0;
    std::vector<Rational> c_;
};

namespace detail {

/// {X : [X, e_j] and [A X, e_j] lie in `lower` for every j}, for each map A in `twists`
/// (identity always included).
inline Subspace next_ascending_term(const LieAlgebra& a, const Subspace& lower,
                                    const std::vector<const Matrix<Rational>*>& twists) {
    const std::size_t m = a.dim();
    const Matrix<Rational> q = lower.annihilator();
    if (q.rows() == 0) return Subspace::full(m);
    // Row block for each j: q * (X -> [X, e_j]).
    std::vector<Vector<Rational>> rows;
    for (std::size_t j = 0; j < m; ++j) {
        Matrix<Rational> adj(m, m);  // column i = [e_i, e_j]
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < m; ++k) adj(k, i) = a.c(i, j, k);
        const Matrix<Rational> block = q * adj;
        for (std::size_t r = 0; r < block.rows(); ++r) rows.push_back(block.row(r));
        for (const auto* t : twists) {
            const Matrix<Rational> tb = block * *t;
            for (std::size_t r = 0; r < tb.rows(); ++r) rows.push_back(tb.row(r));
        }
    }
    return Subspace(m, kernel_basis(Matrix<Rational>::from_rows(rows, m)));
}

inline Flag ascending_chain(const LieAlgebra& a, const std::vector<const Matrix<Rational>*>& twists,
                            bool* reached_full) {
    Flag f;
    Subspace current = Subspace::zero(a.dim());
    while (current.dim() < a.dim()) {
        Subspace next = next_ascending_term(a, current, twists);
        if (next.dim() == current.dim()) break;
        f.terms.push_back(next);
        current = std::move(next);
    }
    *reached_full = current.dim() == a.dim();
    return f;
}

} // namespace detail

/// Outcome of validate_lie.
struct LieReport {
    std::size_t step = 0;
    std::vector<std::size_t> series_dims;
};

/// Ascending series V_l = {X : [X, g] ⊆ V_{l-1}}; stops when it stalls or reaches g.
/// Each quotient V_l / V_{l-1} is central in g / V_{l-1}, which is checked.
inline Flag ascending_series(const LieAlgebra& a) {
    bool full = false;
    Flag f = detail::ascending_chain(a, {}, &full);
    Subspace prev = Subspace::zero(a.dim());
    for (const auto& t : f.terms) {
        for (const auto& x : t.basis)
            for (std::size_t j = 0; j < a.dim(); ++j)
                if (!prev.contains(a.bracket(x, unit_vector<Rational>(a.dim(), j))))
                    throw std::logic_error("ascending series: [V_l, g] not inside V_{l-1}");
        prev = t;
    }
    return f;
}

inline Subspace center(const LieAlgebra& a) {
    return detail::next_ascending_term(a, Subspace::zero(a.dim()), {});
}

/// Antisymmetry and Jacobi on every basis triple.
inline void check_jacobi(const LieAlgebra& a) {
    const std::size_t m = a.dim();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                if (a.c(i, j, k) != -a.c(j, i, k))
                    throw ValidationError("antisymmetry violated at (" + std::to_string(i + 1) + "," +
                                          std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
    std::vector<Vector<Rational>> e;
    for (std::size_t i = 0; i < m; ++i) e.push_back(unit_vector<Rational>(m, i));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k) {
                auto s = a.bracket(e[i], a.bracket(e[j], e[k]));
                s = add(s, a.bracket(e[j], a.bracket(e[k], e[i])));
                s = add(s, a.bracket(e[k], a.bracket(e[i], e[j])));
                if (!is_zero_vector(s))
                    throw ValidationError("jacobi violated at (" + std::to_string(i + 1) + "," +
                                          std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
            }
}

/// Checks antisymmetry, Jacobi on every triple and nilpotency; returns the step.
inline LieReport validate_lie(const LieAlgebra& a) {
    check_jacobi(a);
    bool full = false;
    const Flag f = detail::ascending_chain(a, {}, &full);
    if (!full) throw ValidationError("not nilpotent: ascending series stalls at dimension " +
                                     std::to_string(f.terms.empty() ? 0 : f.terms.back().dim()));
    return {f.length(), f.dims()};
}

/// [V, g] ⊆ V ?
inline bool is_ideal(const LieAlgebra& a, const Subspace& v) {
    for (const auto& x : v.basis)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (!v.contains(a.bracket(x, unit_vector<Rational>(a.dim(), j)))) return false;
    return true;
}

/// Quotient g / V together with the chosen complement: the standard basis
/// vectors e_j whose index is not a pivot of V's echelon basis, in order.
struct Quotient {
    LieAlgebra algebra;
    std::vector<std::size_t> representatives;  // e_j, 0-based, in the ambient algebra
};

inline Quotient quotient(const LieAlgebra& a, const Subspace& v) {
    if (!is_ideal(a, v)) throw PreconditionError("not an ideal");
    const auto reps = complement_coordinates(v.basis, a.dim());
    std::vector<std::size_t> pivot_of_row;
    for (const auto& b : v.basis) {
        std::size_t p = 0;
        while (is_zero(b[p])) ++p;
        pivot_of_row.push_back(p);
    }
    auto reduce = [&](Vector<Rational> w) {
        for (std::size_t r = 0; r < v.basis.size(); ++r) {
            const Rational f = w[pivot_of_row[r]];
            if (sgn(f) != 0) axpy(w, Rational(-f), v.basis[r]);
        }
        return w;
    };
    LieAlgebra q(a.name() + "/V", reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            const auto w = reduce(a.bracket(unit_vector<Rational>(a.dim(), reps[i]),
                                            unit_vector<Rational>(a.dim(), reps[j])));
            for (std::size_t k = 0; k < reps.size(); ++k)
                if (sgn(w[reps[k]]) != 0) q.add(i, j, k, w[reps[k]]);
        }
    check_jacobi(q);
    return {std::move(q), reps};
}

} // namespace nilcx
