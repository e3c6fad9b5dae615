#pragma once

// Schouten brackets, the Kuranishi recursion
//   phi_1 = sum t_i beta_i,   phi_r = -1/2 sum_{s=1}^{r-1} dbar^* G {phi_s, phi_{r-s}},
// obstruction polynomials and the deformed complex structures they define.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "complex_structure.hpp"
#include "dolbeault.hpp"
#include "errors.hpp"
#include "forms.hpp"
#include "polynomial.hpp"

namespace nilcx {

/// {mu, conj(omega)} = sum_a alpha_a ∧ iota_{X_a} d conj(omega) for mu = sum_a alpha_a ⊗ X_a.
inline InvariantForm schouten_with_coform(const DolbeaultComplex& dc, const VectorForm& mu, const InvariantForm& coform) {
    if (mu.degree() != 1 || mu.n() != dc.n()) throw std::invalid_argument("schouten_with_coform: expected a degree-1 VectorForm");
    const std::size_t n = dc.n();
    const InvariantForm d = exterior_derivative(dc.structure(), coform);
    InvariantForm out(n);
    for (std::size_t a = 0; a < n; ++a) {
        const InvariantForm alpha = mu.form_part(a);
        if (alpha.is_zero()) continue;
        out += wedge(alpha, interior(unit_vector<Complex>(2 * n, a), d));
    }
    return out;
}

/// {alpha ⊗ X_a, beta ⊗ X_b} = beta ∧ iota_{X_b} d alpha ⊗ X_a + alpha ∧ iota_{X_a} d beta ⊗ X_b, extended bilinearly.
inline VectorForm schouten(const DolbeaultComplex& dc, const VectorForm& mu, const VectorForm& nu) {
    if (mu.degree() != 1 || nu.degree() != 1 || mu.n() != dc.n() || nu.n() != dc.n())
        throw std::invalid_argument("schouten: expected degree-1 VectorForms on this frame");
    const std::size_t n = dc.n();
    std::vector<InvariantForm> parts(n, InvariantForm(n));
    for (std::size_t a = 0; a < n; ++a) {
        const InvariantForm alpha = mu.form_part(a);
        if (!alpha.is_zero()) parts[a] += schouten_with_coform(dc, nu, alpha);
        const InvariantForm beta = nu.form_part(a);
        if (!beta.is_zero()) parts[a] += schouten_with_coform(dc, mu, beta);
    }
    return VectorForm::from_parts(n, 2, parts);
}

/// Bilinear table of the Schouten bracket on the basis conj(omega)^l ⊗ X_a of C^1.
class SchoutenTable {
public:
    explicit SchoutenTable(const DolbeaultComplex& dc) : n_(dc.n()), dim1_(dc.chain_dim(1)) {
        table_.reserve(dim1_ * dim1_);
        std::vector<VectorForm> basis;
        for (std::size_t i = 0; i < dim1_; ++i) basis.emplace_back(n_, 1, unit_vector<Complex>(dim1_, i));
        for (std::size_t i = 0; i < dim1_; ++i)
            for (std::size_t j = 0; j < dim1_; ++j)
                table_.push_back(j < i ? table_[j * dim1_ + i] : schouten(dc, basis[i], basis[j]));
    }

    VectorForm operator()(const VectorForm& mu, const VectorForm& nu) const {
        VectorForm out(n_, 2);
        for (std::size_t i = 0; i < dim1_; ++i) {
            const Complex& x = mu.coeffs()[i];
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < dim1_; ++j) {
                const Complex& y = nu.coeffs()[j];
                if (y.is_zero()) continue;
                const auto& t = table_[i * dim1_ + j];
                if (!t.is_zero()) out += t * (x * y);
            }
        }
        return out;
    }

private:
    std::size_t n_, dim1_;
    std::vector<VectorForm> table_;
};

struct DeformationSeries {
    std::size_t params = 0;
    unsigned order = 0;
    std::vector<VectorForm> basis;         // mu(t) = sum t_i basis[i]
    Matrix<Complex> basis_gram;
    Polynomial<VectorForm> phi;            // Phi(t), all coefficients of degree 1..order
    Polynomial<VectorForm> bracket;        // {Phi, Phi} truncated at order

    Polynomial<VectorForm> phi_r(unsigned r) const { return phi.homogeneous(r); }
};

struct ObstructionSet {
    std::vector<VectorForm> gamma;         // harmonic basis of degree 2
    Matrix<Complex> gamma_gram;
    std::vector<Polynomial<Complex>> polys;

    bool identically_zero() const {
        for (const auto& p : polys)
            if (!p.is_zero()) return false;
        return true;
    }
    /// All f_k vanish at the point.
    template <class S>
    bool vanish_at(const std::vector<S>& t) const {
        for (const auto& p : polys)
            if (!p.evaluate(t, Complex(0)).is_zero()) return false;
        return true;
    }
};

/// Harmonic basis of degree 1 unless another basis is supplied (it must lie in ker Laplacian).
inline DeformationSeries kuranishi_series(const DolbeaultComplex& dc, unsigned order,
                                          std::optional<std::vector<VectorForm>> basis = std::nullopt) {
    if (order < 1) throw PreconditionError("kuranishi_series: order must be at least 1");
    DeformationSeries s;
    s.order = order;
    if (basis) {
        for (const auto& b : *basis) {
            if (b.degree() != 1 || b.n() != dc.n()) throw PreconditionError("deformation basis must consist of degree-1 forms");
            if (!dc.laplacian(b).is_zero()) throw PreconditionError("deformation basis element is not harmonic");
        }
        s.basis = std::move(*basis);
    } else {
        s.basis = dc.cohomology(1).harmonic_basis;
    }
    s.params = s.basis.size();
    s.basis_gram = Matrix<Complex>(s.params, s.params);
    for (std::size_t i = 0; i < s.params; ++i)
        for (std::size_t j = 0; j < s.params; ++j) s.basis_gram(i, j) = inner_product(s.basis[i], s.basis[j]);

    const std::size_t n = dc.n();
    s.phi = Polynomial<VectorForm>(s.params);
    s.bracket = Polynomial<VectorForm>(s.params);
    for (std::size_t i = 0; i < s.params; ++i) s.phi += Polynomial<VectorForm>::linear(s.params, i, s.basis[i]);
    if (order == 1 || dc.chain_dim(2) == 0) return s;

    const SchoutenTable br(dc);
    const auto& dstar_green = dc.dbar_adjoint_green_matrix(2);
    std::vector<Polynomial<VectorForm>> phi_by_degree{Polynomial<VectorForm>(s.params), s.phi};
    const Complex minus_half = Complex(Rational(-1, 2));
    for (unsigned r = 2; r <= order; ++r) {
        Polynomial<VectorForm> q(s.params);
        for (unsigned t = 1; t < r; ++t)
            q += bilinear_product<VectorForm>(phi_by_degree[t], phi_by_degree[r - t], br, order);
        s.bracket += q;
        auto phi_r = q.map([&](const VectorForm& v) { return VectorForm(n, 1, dstar_green * v.coeffs()) * minus_half; });
        s.phi += phi_r;
        phi_by_degree.push_back(std::move(phi_r));
    }
    return s;
}

/// f_k(t) = <{Phi, Phi}, gamma_k>, truncated at the series order.
inline ObstructionSet obstructions(const DolbeaultComplex& dc, const DeformationSeries& s) {
    ObstructionSet o;
    if (dc.n() >= 2) {
        const auto h2 = dc.cohomology(2);
        o.gamma = h2.harmonic_basis;
        o.gamma_gram = h2.gram;
    }
    for (const auto& g : o.gamma)
        o.polys.push_back(s.bracket.map([&](const VectorForm& v) { return inner_product(v, g); }));
    return o;
}

/// dbar Phi + 1/2 {Phi, Phi}, truncated at the series order.
inline Polynomial<VectorForm> mc_residual_polynomial(const DolbeaultComplex& dc, const DeformationSeries& s) {
    Polynomial<VectorForm> out = s.phi.map([&](const VectorForm& v) { return dc.dbar(v); });
    out += s.bracket * Complex(Rational(1, 2));
    return out.truncated(s.order);
}

template <class S>
VectorForm mc_residual(const DolbeaultComplex& dc, const DeformationSeries& s, const std::vector<S>& t) {
    return mc_residual_polynomial(dc, s).evaluate(t, VectorForm(dc.n(), 2));
}

template <class S>
VectorForm evaluate_series(const DeformationSeries& s, const std::vector<S>& t, std::size_t n) {
    return s.phi.evaluate(t, VectorForm(n, 1));
}

struct DeformedStructure {
    std::vector<Complex> t;
    AlmostComplexStructure j;
    VectorForm phi;                 // Phi(t)
    unsigned order = 0;
    std::string provenance;
};

/// The structure whose (0,1)-vectors are conj(X_l) + Phi(conj(X_l)) = conj(X_l) + sum_a phi(a, l) X_a.
inline DeformedStructure deform_structure(const DolbeaultComplex& dc, const DeformationSeries& s, const std::vector<Complex>& t,
                                          const std::string& base_name = "J") {
    if (t.size() != s.params)
        throw PreconditionError("expected " + std::to_string(s.params) + " parameters, got " + std::to_string(t.size()));
    const std::size_t n = dc.n(), m = 2 * n;
    const VectorForm phi = evaluate_series(s, t, n);
    const auto& basis = dc.frame().basis();
    std::vector<Vector<Complex>> ybar(n), cols;
    for (std::size_t l = 0; l < n; ++l) {
        ybar[l] = basis.col(n + l);
        for (std::size_t a = 0; a < n; ++a) axpy(ybar[l], phi(a, {l}), basis.col(a));
    }
    for (std::size_t l = 0; l < n; ++l) cols.push_back(conj_vector(ybar[l]));
    for (std::size_t l = 0; l < n; ++l) cols.push_back(ybar[l]);
    const auto p = Matrix<Complex>::from_columns(cols, m);
    const auto pinv = inverse(p);
    if (!pinv) throw PreconditionError("parameter too large: deformed (0,1)-space degenerate");
    Matrix<Complex> diag(m, m);
    for (std::size_t l = 0; l < n; ++l) {
        diag(l, l) = Complex::i();
        diag(n + l, n + l) = -Complex::i();
    }
    const auto jc = p * diag * *pinv;
    Matrix<Rational> jr(m, m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) {
            if (!jc(r, c).is_real()) throw std::logic_error("deformed J is not real");
            jr(r, c) = jc(r, c).re();
        }
    std::string where;
    for (std::size_t i = 0; i < t.size(); ++i) where += (i ? "," : "") + t[i].str();
    DeformedStructure out{t, AlmostComplexStructure(std::move(jr), base_name + "(t=" + where + ")"), phi, s.order, ""};
    out.provenance = base_name + ", order " + std::to_string(s.order) + ", t=(" + where + ")";
    return out;
}

inline DeformedStructure deform_structure(const DolbeaultComplex& dc, const DeformationSeries& s, const std::vector<Rational>& t,
                                          const std::string& base_name = "J") {
    std::vector<Complex> tc;
    for (const auto& x : t) tc.emplace_back(x);
    return deform_structure(dc, s, tc, base_name);
}

struct DeformationReport {
    bool integrable = false;
    bool abelian = false;
    bool nilpotent = false;
    std::vector<std::size_t> j_series_dims;
};

inline DeformationReport classify_structure(const LieAlgebra& a, const AlmostComplexStructure& j) {
    DeformationReport r;
    r.integrable = is_integrable(a, j).integrable;
    r.abelian = is_abelian(a, j);
    const auto js = j_ascending_series(a, j);
    r.nilpotent = js.nilpotent;
    r.j_series_dims = js.flag.dims();
    return r;
}

inline DeformationReport classify_deformation(const LieAlgebra& a, const DeformedStructure& d) {
    return classify_structure(a, d.j);
}

struct AbelianLocus {
    std::vector<VectorForm> basis;                  // the H^1 basis the coordinates refer to
    std::vector<Vector<Complex>> coordinates;       // basis of the locus, in those coordinates
    std::size_t dimension() const { return coordinates.size(); }
};

/// {a : {sum a_i basis_i, conj(omega)^l} = 0 for every l}.
inline AbelianLocus infinitesimal_abelian_locus(const DolbeaultComplex& dc, std::optional<std::vector<VectorForm>> basis = std::nullopt) {
    AbelianLocus out;
    out.basis = basis ? std::move(*basis) : dc.cohomology(1).harmonic_basis;
    const std::size_t n = dc.n(), N = out.basis.size();
    std::vector<Monomial> monomials;
    for (const auto& s : subsets(n, 2)) monomials.push_back(subset_monomial_bar(n, s));
    Matrix<Complex> m(n * monomials.size(), N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t l = 0; l < n; ++l) {
            const auto f = schouten_with_coform(dc, out.basis[i], InvariantForm::omega_bar(n, l));
            if (f.bidegrees().size() > 1 || (!f.is_zero() && *f.bidegrees().begin() != Bidegree{0, 2}))
                throw std::logic_error("schouten_with_coform is not a (0,2)-form");
            for (std::size_t r = 0; r < monomials.size(); ++r) m(l * monomials.size() + r, i) = f.coefficient(monomials[r]);
        }
    out.coordinates = kernel_basis(m);
    return out;
}

/// The Lie algebra g^{1,0} ⊕ g^{*(0,1)} with {V, conj(omega)} = iota_V d conj(omega) and the two summands abelian.
struct GradedCenter {
    std::size_t n = 0;
    std::vector<std::vector<Vector<Complex>>> table;   // table[a][l] = {X_a, conj(omega)^l} over conj(omega)^1..n
    std::vector<Vector<Complex>> basis;                // center; coordinates (X_1..X_n, conj(omega)^1..n)

    /// {(v, alpha), (w, beta)} = {v, beta} - {w, alpha}, a (0,1)-form.
    Vector<Complex> bracket(const Vector<Complex>& x, const Vector<Complex>& y) const {
        Vector<Complex> out(n, Complex(0));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t l = 0; l < n; ++l) {
                const Complex c = x[a] * y[n + l] - y[a] * x[n + l];
                if (!c.is_zero()) axpy(out, c, table[a][l]);
            }
        return out;
    }
};

inline GradedCenter graded_center(const DolbeaultComplex& dc) {
    GradedCenter g;
    const std::size_t n = g.n = dc.n();
    g.table.assign(n, std::vector<Vector<Complex>>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t l = 0; l < n; ++l) {
            const auto d = exterior_derivative(dc.structure(), InvariantForm::omega_bar(n, l));
            const auto f = interior(unit_vector<Complex>(2 * n, a), d);
            Vector<Complex> v(n, Complex(0));
            for (const auto& [mono, c] : f.terms()) {
                if (InvariantForm::bidegree(mono, n) != Bidegree{0, 1}) throw std::logic_error("iota_V d conj(omega) is not a (0,1)-form");
                v[std::countr_zero(mono) - n] = c;
            }
            g.table[a][l] = std::move(v);
        }
    // z is central iff {z, X_b} = 0 and {z, conj(omega)^l} = 0 for all b, l.
    std::vector<Vector<Complex>> rows;
    for (std::size_t b = 0; b < 2 * n; ++b) {
        const auto e = unit_vector<Complex>(2 * n, b);
        // column c of the map z -> {z, e_b}
        std::vector<Vector<Complex>> cols;
        for (std::size_t c = 0; c < 2 * n; ++c) cols.push_back(g.bracket(unit_vector<Complex>(2 * n, c), e));
        const auto mat = Matrix<Complex>::from_columns(cols, n);
        for (std::size_t r = 0; r < n; ++r) rows.push_back(mat.row(r));
    }
    g.basis = canonical_basis(kernel_basis(Matrix<Complex>::from_rows(rows, 2 * n)), 2 * n);
    return g;
}

} // namespace nilcx
