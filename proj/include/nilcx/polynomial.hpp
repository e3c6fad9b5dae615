#pragma once

// Truncated multivariate polynomials in t_1..t_N with coefficients in any
// module over Q(i) that provides +=, * Complex and is_zero().

#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gaussian.hpp"

namespace nilcx {

using MultiIndex = std::vector<unsigned>;

inline unsigned total_degree(const MultiIndex& e) { return std::accumulate(e.begin(), e.end(), 0u); }

/// "t1^2*t4"; "1" for the constant monomial.
inline std::string monomial_string(const MultiIndex& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (!s.empty()) s += "*";
        s += "t" + std::to_string(i + 1);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

/// Orders monomials by total degree, then lexicographically with higher powers of t1 first.
struct GradedOrder {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        const unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a > b;
    }
};

template <class T>
class Polynomial {
public:
    using Terms = std::map<MultiIndex, T, GradedOrder>;

    Polynomial() = default;
    explicit Polynomial(std::size_t vars) : vars_(vars) {}

    /// t_i * value
    static Polynomial linear(std::size_t vars, std::size_t i, T value) {
        Polynomial p(vars);
        MultiIndex e(vars, 0);
        e.at(i) = 1;
        p.add_term(e, std::move(value));
        return p;
    }

    std::size_t vars() const noexcept { return vars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const MultiIndex& e, const T& value) {
        if (e.size() != vars_) throw std::invalid_argument("monomial has the wrong number of variables");
        if (value.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, value);
            return;
        }
        it->second += value;
        if (it->second.is_zero()) terms_.erase(it);
    }

    /// Lowest total degree of a nonzero term (0 for the zero polynomial).
    unsigned min_degree() const { return terms_.empty() ? 0 : total_degree(terms_.begin()->first); }
    unsigned max_degree() const { return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first); }

    Polynomial homogeneous(unsigned r) const {
        Polynomial out(vars_);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) == r) out.terms_.emplace(e, c);
        return out;
    }

    Polynomial truncated(unsigned order) const {
        Polynomial out(vars_);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) <= order) out.terms_.emplace(e, c);
        return out;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c * Complex(-1));
        return *this;
    }
    Polynomial& operator*=(const Complex& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c = c * s;
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Complex& s) { return a *= s; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }

    /// Applies a linear map to every coefficient.
    template <class F>
    auto map(F&& f) const {
        using U = decltype(f(std::declval<const T&>()));
        Polynomial<U> out(vars_);
        for (const auto& [e, c] : terms_) out.add_term(e, f(c));
        return out;
    }

    /// sum_alpha c_alpha t^alpha at a point over Q or Q(i); `zero` seeds the accumulator.
    template <class S>
    T evaluate(const std::vector<S>& point, T zero) const {
        if (point.size() != vars_) throw std::invalid_argument("evaluation point has the wrong number of coordinates");
        for (const auto& [e, c] : terms_) {
            Complex w(1);
            for (std::size_t i = 0; i < vars_; ++i)
                for (unsigned p = 0; p < e[i]; ++p) w *= Complex(point[i]);
            if (!w.is_zero()) zero += c * w;
        }
        return zero;
    }

private:
    void check(const Polynomial& o) const {
        if (vars_ != o.vars_) throw std::invalid_argument("polynomials in different variables");
    }
    std::size_t vars_ = 0;
    Terms terms_;
};

/// Product of two polynomials through a bilinear map on coefficients, keeping total degree <= order.
template <class R, class A, class B, class F>
Polynomial<R> bilinear_product(const Polynomial<A>& a, const Polynomial<B>& b, F&& f, unsigned order) {
    if (a.vars() != b.vars()) throw std::invalid_argument("polynomials in different variables");
    Polynomial<R> out(a.vars());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            if (total_degree(ea) + total_degree(eb) > order) continue;
            MultiIndex e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, f(ca, cb));
        }
    return out;
}

/// "(3)*t1*t4 + (-1/2)*t2^2"
template <class T, class S>
std::string polynomial_string(const Polynomial<T>& p, S&& coef_str) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [e, c] : p.terms()) {
        if (!s.empty()) s += " + ";
        s += "(" + coef_str(c) + ")*" + monomial_string(e);
    }
    return s;
}

inline std::string polynomial_string(const Polynomial<Complex>& p) {
    return polynomial_string(p, [](const Complex& c) { return c.str(); });
}

} // namespace nilcx
