#pragma once

// The complex  g^{*(0,k)} ⊗ g^{1,0}  for an abelian complex structure.
// Chain coordinates: the element sum mu(a, I) conj(omega)^I ⊗ X_a is stored at
// index a * C(n, k) + rank(I), where I runs over increasing k-subsets of
// {0..n-1} in lexicographic order. The frame {X_a} and coframe {conj(omega)^i}
// are declared orthonormal, so the Hermitian product is the coordinate one.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "complex_structure.hpp"
#include "errors.hpp"
#include "forms.hpp"
#include "frame.hpp"
#include "linalg.hpp"

namespace nilcx {

inline std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Increasing k-subsets of {0..n-1}, lexicographic.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

inline std::size_t subset_rank(std::size_t n, const std::vector<std::size_t>& s) {
    // lexicographic rank among k-subsets of {0..n-1}
    const std::size_t k = s.size();
    std::size_t r = 0, prev = 0;
    for (std::size_t pos = 0; pos < k; ++pos) {
        for (std::size_t v = (pos ? prev + 1 : 0); v < s[pos]; ++v) r += binomial(n - v - 1, k - pos - 1);
        prev = s[pos];
    }
    return r;
}

inline Monomial subset_monomial_bar(std::size_t n, const std::vector<std::size_t>& s) {
    Monomial m = 0;
    for (auto i : s) m |= Monomial(1) << (n + i);
    return m;
}

/// sum mu(a, I) conj(omega)^I ⊗ X_a with k = |I|.
class VectorForm {
public:
    VectorForm() = default;
    VectorForm(std::size_t n, std::size_t k) : n_(n), k_(k), c_(n * binomial(n, k), Complex(0)) {}
    VectorForm(std::size_t n, std::size_t k, Vector<Complex> coeffs) : n_(n), k_(k), c_(std::move(coeffs)) {
        if (c_.size() != n * binomial(n, k)) throw std::invalid_argument("VectorForm: coefficient vector has wrong length");
    }

    /// conj(omega)^{i_1} ∧ ... ⊗ X_a; indices need not be sorted (sign applied), repeated ones give 0.
    static VectorForm basic(std::size_t n, std::size_t a, std::vector<std::size_t> forms, Complex coef = Complex(1)) {
        VectorForm v(n, forms.size());
        int sign = 1;
        for (std::size_t i = 0; i < forms.size(); ++i)
            for (std::size_t j = i + 1; j < forms.size(); ++j) {
                if (forms[i] == forms[j]) return v;
                if (forms[i] > forms[j]) sign = -sign;
            }
        std::sort(forms.begin(), forms.end());
        v.c_[v.index(a, forms)] = sign > 0 ? coef : -coef;
        return v;
    }

    std::size_t n() const noexcept { return n_; }
    std::size_t degree() const noexcept { return k_; }
    std::size_t size() const noexcept { return c_.size(); }
    const Vector<Complex>& coeffs() const noexcept { return c_; }
    Vector<Complex>& coeffs() noexcept { return c_; }

    std::size_t index(std::size_t a, const std::vector<std::size_t>& sorted_forms) const {
        return a * binomial(n_, k_) + subset_rank(n_, sorted_forms);
    }
    const Complex& operator()(std::size_t a, const std::vector<std::size_t>& sorted_forms) const {
        return c_[index(a, sorted_forms)];
    }
    Complex& operator()(std::size_t a, const std::vector<std::size_t>& sorted_forms) { return c_[index(a, sorted_forms)]; }

    bool is_zero() const { return is_zero_vector(c_); }

    /// The (0,k)-form paired with X_a.
    InvariantForm form_part(std::size_t a) const {
        InvariantForm out(n_);
        const auto subs = subsets(n_, k_);
        for (std::size_t r = 0; r < subs.size(); ++r) out.add_term(subset_monomial_bar(n_, subs[r]), c_[a * subs.size() + r]);
        return out;
    }

    /// Inverse of form_part: sum_a forms[a] ⊗ X_a, each forms[a] a pure (0,k)-form.
    static VectorForm from_parts(std::size_t n, std::size_t k, const std::vector<InvariantForm>& forms) {
        VectorForm v(n, k);
        const auto subs = subsets(n, k);
        for (std::size_t a = 0; a < forms.size(); ++a)
            for (const auto& [m, c] : forms[a].terms()) {
                if (InvariantForm::bidegree(m, n) != Bidegree{0, k}) throw std::invalid_argument("from_parts: not a (0,k)-form");
                std::vector<std::size_t> idx;
                for (std::size_t i = 0; i < n; ++i)
                    if (m & (Monomial(1) << (n + i))) idx.push_back(i);
                v.c_[v.index(a, idx)] += c;
            }
        return v;
    }

    VectorForm& operator+=(const VectorForm& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    VectorForm& operator-=(const VectorForm& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    VectorForm& operator*=(const Complex& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }
    friend VectorForm operator+(VectorForm a, const VectorForm& b) { return a += b; }
    friend VectorForm operator-(VectorForm a, const VectorForm& b) { return a -= b; }
    friend VectorForm operator*(VectorForm a, const Complex& s) { return a *= s; }
    friend VectorForm operator*(const Complex& s, VectorForm a) { return a *= s; }
    friend bool operator==(const VectorForm& a, const VectorForm& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.c_ == b.c_;
    }

    /// e.g. "(1)wb1⊗X1 + (-2)wb3⊗X2"
    std::string str() const {
        std::string s;
        const auto subs = subsets(n_, k_);
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t r = 0; r < subs.size(); ++r) {
                const auto& c = c_[a * subs.size() + r];
                if (c.is_zero()) continue;
                if (!s.empty()) s += " + ";
                s += "(" + c.str() + ")";
                for (std::size_t q = 0; q < subs[r].size(); ++q) s += (q ? "^wb" : "wb") + std::to_string(subs[r][q] + 1);
                s += (k_ ? "⊗X" : "X") + std::to_string(a + 1);
            }
        return s.empty() ? "0" : s;
    }

private:
    void check(const VectorForm& o) const {
        if (n_ != o.n_ || k_ != o.k_) throw std::invalid_argument("VectorForm degree or frame mismatch");
    }
    std::size_t n_ = 0;
    std::size_t k_ = 0;
    Vector<Complex> c_;
};

/// Hermitian product with the frame and coframe orthonormal; linear in the first slot.
inline Complex inner_product(const VectorForm& mu, const VectorForm& nu) {
    if (mu.n() != nu.n() || mu.degree() != nu.degree()) throw std::invalid_argument("inner_product: degree or frame mismatch");
    return hermitian(mu.coeffs(), nu.coeffs());
}

struct CohomologySpace {
    std::size_t degree = 0;
    std::size_t dimension = 0;
    std::vector<VectorForm> harmonic_basis;
    Matrix<Complex> gram;
    std::size_t kernel_dim = 0;     // dim ker dbar_k
    std::size_t image_rank = 0;     // rank dbar_{k-1}
};

/// Differentials, adjoints, Laplacians and Green's operators of one (algebra, abelian J, frame).
/// Matrices are built lazily and cached; the cache is guarded so shared instances stay usable from many threads.
class DolbeaultComplex {
public:
    DolbeaultComplex(const LieAlgebra& a, const AlmostComplexStructure& j, ComplexFrame f)
        : frame_(std::move(f)), structure_(a, frame_), n_(frame_.n()), cache_(std::make_shared<Cache>()) {
        if (a.dim() != j.dim()) throw PreconditionError("J and algebra dimensions differ");
        if (!is_abelian(a, j)) throw PreconditionError("complex structure is not abelian");
        cache_->d.resize(n_ + 1);
        cache_->lap.resize(n_ + 1);
        cache_->h.resize(n_ + 1);
        cache_->dstar_green.resize(n_ + 1);
    }

    /// Built on the adapted frame.
    static DolbeaultComplex adapted(const LieAlgebra& a, const AlmostComplexStructure& j) {
        if (!is_abelian(a, j)) throw PreconditionError("complex structure is not abelian");
        return DolbeaultComplex(a, j, adapted_frame(a, j));
    }

    std::size_t n() const noexcept { return n_; }
    std::size_t chain_dim(std::size_t k) const { return n_ * binomial(n_, k); }
    const ComplexFrame& frame() const noexcept { return frame_; }
    const FrameStructure& structure() const noexcept { return structure_; }

    /// [conj X_j, X_a] projected to g^{1,0}: coefficient of X_b.
    const Complex& B(std::size_t b, std::size_t j, std::size_t a) const { return structure_(n_ + j, a, b); }

    /// Matrix of dbar_k : C^k -> C^{k+1}.
    const Matrix<Complex>& dbar_matrix(std::size_t k) const {
        if (k > n_) throw std::out_of_range("dbar_matrix: degree exceeds n");
        std::lock_guard lock(cache_->mutex);
        auto& slot = cache_->d[k];
        if (!slot) slot = build_dbar(k);
        return *slot;
    }

    VectorForm dbar(const VectorForm& mu) const {
        check(mu);
        return VectorForm(n_, mu.degree() + 1, dbar_matrix(mu.degree()) * mu.coeffs());
    }

    /// dbar V = sum_j conj(omega)^j ⊗ [conj X_j, V]^{1,0}, V given by its X_a-coefficients.
    VectorForm dbar_vector(const Vector<Complex>& v) const {
        if (v.size() != n_) throw std::invalid_argument("dbar_vector: expected n coefficients");
        return dbar(VectorForm(n_, 0, v));
    }

    /// Conjugate transpose of dbar_{k-1}.
    VectorForm dbar_adjoint(const VectorForm& mu) const {
        check(mu);
        if (mu.degree() == 0) throw PreconditionError("dbar_adjoint: degree must be at least 1");
        return VectorForm(n_, mu.degree() - 1, dbar_matrix(mu.degree() - 1).adjoint() * mu.coeffs());
    }

    /// dbar_{k-1} dbar_{k-1}^* + dbar_k^* dbar_k
    const Matrix<Complex>& laplacian_matrix(std::size_t k) const {
        if (k > n_) throw std::out_of_range("laplacian_matrix: degree exceeds n");
        {
            std::lock_guard lock(cache_->mutex);
            if (cache_->lap[k]) return *cache_->lap[k];
        }
        const auto& dk = dbar_matrix(k);
        Matrix<Complex> lap = dk.adjoint() * dk;
        if (k > 0) {
            const auto& dp = dbar_matrix(k - 1);
            lap += dp * dp.adjoint();
        }
        std::lock_guard lock(cache_->mutex);
        if (!cache_->lap[k]) cache_->lap[k] = std::make_shared<Matrix<Complex>>(std::move(lap));
        return *cache_->lap[k];
    }

    VectorForm laplacian(const VectorForm& mu) const {
        check(mu);
        return VectorForm(n_, mu.degree(), laplacian_matrix(mu.degree()) * mu.coeffs());
    }

    /// Reduced echelon basis of ker Laplacian, unnormalised.
    const std::vector<Vector<Complex>>& harmonic_vectors(std::size_t k) const {
        {
            std::lock_guard lock(cache_->mutex);
            if (cache_->h[k]) return *cache_->h[k];
        }
        const auto& lap = laplacian_matrix(k);
        auto basis = canonical_basis(kernel_basis(lap), chain_dim(k));
        std::lock_guard lock(cache_->mutex);
        if (!cache_->h[k]) cache_->h[k] = std::make_shared<std::vector<Vector<Complex>>>(std::move(basis));
        return *cache_->h[k];
    }

    VectorForm harmonic_projection(const VectorForm& mu) const {
        check(mu);
        return VectorForm(n_, mu.degree(), project_onto(harmonic_vectors(mu.degree()), mu.coeffs()));
    }

    /// G mu: zero on harmonics, inverse of the Laplacian on their orthogonal complement.
    VectorForm green(const VectorForm& mu) const {
        check(mu);
        const std::size_t k = mu.degree();
        const auto rhs = sub(mu.coeffs(), project_onto(harmonic_vectors(k), mu.coeffs()));
        auto x = solve_in_image(laplacian_matrix(k), rhs);
        if (!x) throw std::logic_error("green: non-harmonic part is not in the image of the Laplacian");
        return VectorForm(n_, k, std::move(*x));
    }

    /// Matrix of dbar^* G on C^k (k >= 1), landing in C^{k-1}.
    const Matrix<Complex>& dbar_adjoint_green_matrix(std::size_t k) const {
        if (k == 0 || k > n_) throw std::out_of_range("dbar_adjoint_green_matrix: degree out of range");
        {
            std::lock_guard lock(cache_->mutex);
            if (cache_->dstar_green[k]) return *cache_->dstar_green[k];
        }
        std::vector<Vector<Complex>> cols;
        for (std::size_t c = 0; c < chain_dim(k); ++c)
            cols.push_back(dbar_adjoint(green(VectorForm(n_, k, unit_vector<Complex>(chain_dim(k), c)))).coeffs());
        auto m = Matrix<Complex>::from_columns(cols, chain_dim(k - 1));
        std::lock_guard lock(cache_->mutex);
        if (!cache_->dstar_green[k]) cache_->dstar_green[k] = std::make_shared<Matrix<Complex>>(std::move(m));
        return *cache_->dstar_green[k];
    }

    CohomologySpace cohomology(std::size_t k) const {
        if (k > n_) throw std::out_of_range("cohomology: degree exceeds n");
        CohomologySpace out;
        out.degree = k;
        const auto& h = harmonic_vectors(k);
        out.dimension = h.size();
        for (const auto& v : h) out.harmonic_basis.emplace_back(n_, k, v);
        out.gram = Matrix<Complex>(h.size(), h.size());
        for (std::size_t i = 0; i < h.size(); ++i)
            for (std::size_t j = 0; j < h.size(); ++j) out.gram(i, j) = hermitian(h[i], h[j]);
        out.kernel_dim = chain_dim(k) - rank(dbar_matrix(k));
        out.image_rank = k == 0 ? 0 : rank(dbar_matrix(k - 1));
        if (out.dimension != out.kernel_dim - out.image_rank)
            throw std::logic_error("harmonic dimension differs from cohomology dimension");
        return out;
    }

private:
    struct Cache {
        std::mutex mutex;
        std::vector<std::shared_ptr<Matrix<Complex>>> d, lap, dstar_green;
        std::vector<std::shared_ptr<std::vector<Vector<Complex>>>> h;
    };

    void check(const VectorForm& mu) const {
        if (mu.n() != n_) throw std::invalid_argument("VectorForm belongs to a different frame");
        if (mu.degree() > n_) throw std::invalid_argument("VectorForm degree exceeds n");
    }

    // dbar_k(conj(omega)^I ⊗ X_a) = (-1)^k sum_{j not in I, b} sign(I, j) B(b, j, a) conj(omega)^{I ∪ j} ⊗ X_b
    std::shared_ptr<Matrix<Complex>> build_dbar(std::size_t k) const {
        const auto src = subsets(n_, k);
        const std::size_t rows = chain_dim(k + 1);
        auto m = std::make_shared<Matrix<Complex>>(rows, chain_dim(k));
        if (rows == 0) return m;
        const std::size_t ck = src.size(), ck1 = binomial(n_, k + 1);
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t r = 0; r < ck; ++r) {
                const auto& I = src[r];
                for (std::size_t j = 0; j < n_; ++j) {
                    if (std::find(I.begin(), I.end(), j) != I.end()) continue;
                    std::size_t greater = 0;
                    for (auto i : I)
                        if (i > j) ++greater;
                    auto joined = I;
                    joined.insert(std::upper_bound(joined.begin(), joined.end(), j), j);
                    const bool negative = ((k + greater) % 2) == 1;
                    const std::size_t target = subset_rank(n_, joined);
                    for (std::size_t b = 0; b < n_; ++b) {
                        const Complex& c = B(b, j, a);
                        if (c.is_zero()) continue;
                        (*m)(b * ck1 + target, a * ck + r) += negative ? -c : c;
                    }
                }
            }
        return m;
    }

    ComplexFrame frame_;
    FrameStructure structure_;
    std::size_t n_;
    std::shared_ptr<Cache> cache_;
};

} // namespace nilcx
