#pragma once

// Exterior algebra of invariant complex forms over a frame coframe
// theta^0..theta^{2n-1} = omega^1..omega^n, conj(omega^1)..conj(omega^n).
// A monomial is a bitmask of generator indices in increasing order. Evaluation
// uses the determinant convention (a ∧ b)(X, Y) = a(X) b(Y) - a(Y) b(X), and
// for a 1-form d alpha(X, Y) = -alpha([X, Y]).

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "frame.hpp"

namespace nilcx {

using Monomial = std::uint32_t;

struct Bidegree {
    std::size_t p = 0;
    std::size_t q = 0;
    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

class InvariantForm {
public:
    InvariantForm() = default;
    explicit InvariantForm(std::size_t n) : n_(n) {
        if (2 * n > 32) throw std::invalid_argument("InvariantForm supports at most 16 complex dimensions");
    }

    /// theta^s
    static InvariantForm generator(std::size_t n, std::size_t s, Complex coef = Complex(1)) {
        InvariantForm f(n);
        f.add_term(Monomial(1) << s, coef);
        return f;
    }
    static InvariantForm omega(std::size_t n, std::size_t a) { return generator(n, a); }
    static InvariantForm omega_bar(std::size_t n, std::size_t a) { return generator(n, n + a); }

    std::size_t n() const noexcept { return n_; }
    const std::map<Monomial, Complex>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(Monomial m, const Complex& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Complex coefficient(Monomial m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Complex(0) : it->second;
    }

    static Bidegree bidegree(Monomial m, std::size_t n) {
        const Monomial low = n == 0 ? 0 : ((Monomial(1) << n) - 1);
        return {static_cast<std::size_t>(std::popcount(m & low)), static_cast<std::size_t>(std::popcount(m & ~low))};
    }

    /// Bidegrees with nonzero support.
    std::set<Bidegree> bidegrees() const {
        std::set<Bidegree> out;
        for (const auto& [m, c] : terms_) out.insert(bidegree(m, n_));
        return out;
    }

    InvariantForm component(std::size_t p, std::size_t q) const {
        InvariantForm out(n_);
        for (const auto& [m, c] : terms_)
            if (bidegree(m, n_) == Bidegree{p, q}) out.terms_.emplace(m, c);
        return out;
    }

    InvariantForm& operator+=(const InvariantForm& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    InvariantForm& operator-=(const InvariantForm& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    InvariantForm& operator*=(const Complex& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    friend InvariantForm operator+(InvariantForm a, const InvariantForm& b) { return a += b; }
    friend InvariantForm operator-(InvariantForm a, const InvariantForm& b) { return a -= b; }
    friend InvariantForm operator*(InvariantForm a, const Complex& s) { return a *= s; }
    friend bool operator==(const InvariantForm& a, const InvariantForm& b) { return a.terms_ == b.terms_; }

    /// Complex conjugate: swaps omega^a and conj(omega^a), conjugates coefficients.
    InvariantForm conj() const;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")";
            for (std::size_t g = 0; g < 2 * n_; ++g)
                if (m & (Monomial(1) << g))
                    s += (g < n_ ? " w" : " wb") + std::to_string((g % (n_ ? n_ : 1)) + 1);
        }
        return s;
    }

private:
    std::size_t n_ = 0;
    std::map<Monomial, Complex> terms_;
};

/// Sign of the permutation sorting the concatenation (a, b) of two disjoint monomials.
inline int wedge_sign(Monomial a, Monomial b) {
    int swaps = 0;
    for (Monomial rest = b; rest; rest &= rest - 1) {
        const int j = std::countr_zero(rest);
        swaps += std::popcount(a >> (j + 1));
    }
    return (swaps % 2) ? -1 : 1;
}

inline InvariantForm wedge(const InvariantForm& x, const InvariantForm& y) {
    InvariantForm out(x.n());
    for (const auto& [ma, ca] : x.terms())
        for (const auto& [mb, cb] : y.terms()) {
            if (ma & mb) continue;
            Complex c = ca * cb;
            if (wedge_sign(ma, mb) < 0) c = -c;
            out.add_term(ma | mb, c);
        }
    return out;
}

inline InvariantForm InvariantForm::conj() const {
    InvariantForm out(n_);
    const Monomial low = n_ == 0 ? 0 : ((Monomial(1) << n_) - 1);
    for (const auto& [m, c] : terms_) {
        // Swap the two halves, then account for reordering: the conjugate of
        // theta^{i_1}...theta^{i_k} lists the images in the original order.
        std::vector<std::size_t> idx;
        for (std::size_t g = 0; g < 2 * n_; ++g)
            if (m & (Monomial(1) << g)) idx.push_back(g < n_ ? g + n_ : g - n_);
        InvariantForm mono = generator(n_, idx.empty() ? 0 : idx[0]);
        if (idx.empty()) {
            mono = InvariantForm(n_);
            mono.add_term(0, Complex(1));
        }
        for (std::size_t r = 1; r < idx.size(); ++r) mono = wedge(mono, generator(n_, idx[r]));
        (void)low;
        out += mono * c.conj();
    }
    return out;
}

/// d theta^u = -sum_{s<t} C(s,t,u) theta^s ∧ theta^t.
inline InvariantForm exterior_derivative_generator(const FrameStructure& fs, std::size_t u) {
    const std::size_t m = fs.rank();
    InvariantForm out(fs.n());
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = s + 1; t < m; ++t) {
            const Complex& c = fs(s, t, u);
            if (!c.is_zero()) out.add_term((Monomial(1) << s) | (Monomial(1) << t), -c);
        }
    return out;
}

/// Chevalley–Eilenberg differential on invariant forms, by the Leibniz rule
/// d(theta^{i_1} ∧ ... ∧ theta^{i_p}) = sum_r (-1)^r theta^{i_1} ∧ ... d theta^{i_r} ... ∧ theta^{i_p}.
inline InvariantForm exterior_derivative(const FrameStructure& fs, const InvariantForm& form) {
    const std::size_t n = fs.n();
    std::vector<InvariantForm> dgen;
    for (std::size_t u = 0; u < fs.rank(); ++u) dgen.push_back(exterior_derivative_generator(fs, u));
    InvariantForm out(n);
    for (const auto& [m, c] : form.terms()) {
        std::vector<std::size_t> idx;
        for (std::size_t g = 0; g < fs.rank(); ++g)
            if (m & (Monomial(1) << g)) idx.push_back(g);
        for (std::size_t r = 0; r < idx.size(); ++r) {
            Monomial before = 0, after = 0;
            for (std::size_t q = 0; q < r; ++q) before |= Monomial(1) << idx[q];
            for (std::size_t q = r + 1; q < idx.size(); ++q) after |= Monomial(1) << idx[q];
            InvariantForm left(n), right(n);
            left.add_term(before, Complex(1));
            right.add_term(after, Complex(1));
            InvariantForm piece = wedge(wedge(left, dgen[idx[r]]), right);
            out += piece * ((r % 2) ? -c : c);
        }
    }
    return out;
}

/// Interior product iota_Z alpha, Z in frame coordinates (length 2n).
inline InvariantForm interior(const Vector<Complex>& z, const InvariantForm& form) {
    InvariantForm out(form.n());
    for (const auto& [m, c] : form.terms()) {
        int position = 0;
        for (Monomial rest = m; rest; rest &= rest - 1, ++position) {
            const int g = std::countr_zero(rest);
            if (z[g].is_zero()) continue;
            Complex v = c * z[g];
            if (position % 2) v = -v;
            out.add_term(m & ~(Monomial(1) << g), v);
        }
    }
    return out;
}

/// alpha(Z_1, ..., Z_p) for vectors in frame coordinates.
inline Complex evaluate(const InvariantForm& form, const std::vector<Vector<Complex>>& args) {
    InvariantForm cur = form;
    for (const auto& z : args) cur = interior(z, cur);
    return cur.coefficient(0);
}

/// Real 1-form (a covector over e_1..e_m) expressed in the coframe: alpha = sum_s alpha(Z_s) theta^s.
inline InvariantForm form_from_covector(const ComplexFrame& f, const Vector<Complex>& covector) {
    InvariantForm out(f.n());
    for (std::size_t s = 0; s < f.real_dim(); ++s) {
        Complex v(0);
        const auto z = f.generator(s);
        for (std::size_t r = 0; r < z.size(); ++r) v += covector[r] * z[r];
        out.add_term(Monomial(1) << s, v);
    }
    return out;
}

} // namespace nilcx
