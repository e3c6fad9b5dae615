#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "forms.hpp"
#include "frame.hpp"
#include "lie.hpp"

namespace nilcx {

/// Outcome of is_integrable. On failure `witness` names the (1,0)-form omega^{form+1}
/// of the standard frame whose differential has the nonzero (0,2)-part `component`.
struct IntegrabilityReport {
    bool integrable = true;
    std::size_t form = 0;
    InvariantForm component;
    explicit operator bool() const noexcept { return integrable; }
};

/// J is integrable iff d omega has no (0,2)-part for every (1,0)-form omega.
inline IntegrabilityReport is_integrable(const LieAlgebra& a, const AlmostComplexStructure& j) {
    if (a.dim() != j.dim()) throw PreconditionError("J and algebra dimensions differ");
    const ComplexFrame f = standard_frame(j);
    const FrameStructure fs(a, f);
    for (std::size_t u = 0; u < f.n(); ++u) {
        auto part = exterior_derivative_generator(fs, u).component(0, 2);
        if (!part.is_zero()) return {false, u, std::move(part)};
    }
    return {true, 0, InvariantForm(f.n())};
}

/// [J e_i, J e_j] = [e_i, e_j] on every basis pair.
inline bool abelian_by_brackets(const LieAlgebra& a, const AlmostComplexStructure& j) {
    const std::size_t m = a.dim();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = i + 1; k < m; ++k) {
            const auto ei = unit_vector<Rational>(m, i), ek = unit_vector<Rational>(m, k);
            if (a.bracket(j.apply(ei), j.apply(ek)) != a.bracket(ei, ek)) return false;
        }
    return true;
}

/// d omega lies in the (1,1)-forms for every (1,0)-form omega.
inline bool abelian_by_forms(const LieAlgebra& a, const AlmostComplexStructure& j) {
    const ComplexFrame f = standard_frame(j);
    const FrameStructure fs(a, f);
    for (std::size_t u = 0; u < f.n(); ++u) {
        const auto d = exterior_derivative_generator(fs, u);
        if (!d.component(2, 0).is_zero() || !d.component(0, 2).is_zero()) return false;
    }
    return true;
}

/// Both criteria are evaluated; a disagreement is an internal error.
inline bool is_abelian(const LieAlgebra& a, const AlmostComplexStructure& j) {
    if (a.dim() != j.dim()) throw PreconditionError("J and algebra dimensions differ");
    const bool by_brackets = abelian_by_brackets(a, j);
    const bool by_forms = abelian_by_forms(a, j);
    if (by_brackets != by_forms) throw std::logic_error("abelian criteria disagree");
    return by_brackets;
}

struct JSeries {
    Flag flag;
    bool nilpotent = false;
};

/// g_l^J = {X : [X, g] and [JX, g] lie in g_{l-1}^J}; nilpotent iff it reaches g.
inline JSeries j_ascending_series(const LieAlgebra& a, const AlmostComplexStructure& j) {
    if (a.dim() != j.dim()) throw PreconditionError("J and algebra dimensions differ");
    JSeries out;
    out.flag = detail::ascending_chain(a, {&j.matrix()}, &out.nilpotent);
    return out;
}

/// A(i,j,k) with d omega^i = sum_{j,k} A(i,j,k) omega^j ∧ conj(omega^k).
class StructureCoefficients {
public:
    explicit StructureCoefficients(std::size_t n) : n_(n), a_(n * n * n, Complex(0)) {}
    std::size_t n() const noexcept { return n_; }
    Complex& operator()(std::size_t i, std::size_t j, std::size_t k) { return a_[(i * n_ + j) * n_ + k]; }
    const Complex& operator()(std::size_t i, std::size_t j, std::size_t k) const { return a_[(i * n_ + j) * n_ + k]; }
    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    /// sum_{j,k} A(i,j,k) omega^j ∧ conj(omega^k)
    InvariantForm form(std::size_t i) const {
        InvariantForm out(n_);
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k)
                out.add_term((Monomial(1) << j) | (Monomial(1) << (n_ + k)), (*this)(i, j, k));
        return out;
    }

private:
    std::size_t n_;
    std::vector<Complex> a_;
};

inline StructureCoefficients structure_coefficients(const LieAlgebra& a, const AlmostComplexStructure& j, const ComplexFrame& f) {
    if (a.dim() != j.dim() || f.real_dim() != a.dim()) throw PreconditionError("frame, J and algebra dimensions differ");
    const FrameStructure fs(a, f);
    const std::size_t n = f.n();
    StructureCoefficients out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto d = exterior_derivative_generator(fs, i);
        if (!d.component(2, 0).is_zero() || !d.component(0, 2).is_zero())
            throw PreconditionError("nonzero (2,0) or (0,2) part");
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                // d omega^i (X_p, conj X_q) = -omega^i([X_p, conj X_q])
                out(i, p, q) = -fs(p, n + q, i);
            }
        if (out.form(i) != d) throw std::logic_error("structure coefficients do not reconstruct d omega");
    }
    return out;
}

/// d alpha split into its (p,q)-components (only nonzero ones are listed).
inline std::map<Bidegree, InvariantForm> exterior_derivative_by_type(const LieAlgebra& a, const ComplexFrame& f,
                                                                     const InvariantForm& form) {
    const FrameStructure fs(a, f);
    const auto d = exterior_derivative(fs, form);
    std::map<Bidegree, InvariantForm> out;
    for (const auto& b : d.bidegrees()) out.emplace(b, d.component(b.p, b.q));
    return out;
}

/// Every conj(omega^i) has d conj(omega^i) with zero (0,2)-part.
inline bool check_dbar_closed_conjugates(const LieAlgebra& a, const AlmostComplexStructure& j, const ComplexFrame& f) {
    if (a.dim() != j.dim() || f.real_dim() != a.dim()) throw PreconditionError("frame, J and algebra dimensions differ");
    const FrameStructure fs(a, f);
    for (std::size_t i = 0; i < f.n(); ++i)
        if (!exterior_derivative_generator(fs, f.n() + i).component(0, 2).is_zero()) return false;
    return true;
}

/// Coefficients of a p-form on the real coframe: key (i_1 < ... < i_p) -> alpha(e_{i_1}, ..., e_{i_p}).
inline std::map<std::vector<std::size_t>, Complex> real_components(const ComplexFrame& f, const InvariantForm& form) {
    std::size_t p = 0;
    for (const auto& [m, c] : form.terms()) p = static_cast<std::size_t>(std::popcount(m));
    const std::size_t dim = f.real_dim();
    std::map<std::vector<std::size_t>, Complex> out;
    std::vector<std::size_t> idx(p);
    auto rec = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
        if (pos == p) {
            std::vector<Vector<Complex>> args;
            for (auto i : idx) args.push_back(f.to_frame(complexify(unit_vector<Rational>(dim, i))));
            // interior products peel off the first slot each time, so feed arguments in order
            const Complex v = evaluate(form, args);
            if (!v.is_zero()) out.emplace(idx, v);
            return;
        }
        for (std::size_t i = start; i < dim; ++i) {
            idx[pos] = i;
            self(self, pos + 1, i + 1);
        }
    };
    if (!form.is_zero()) rec(rec, 0, 0);
    return out;
}

} // namespace nilcx
