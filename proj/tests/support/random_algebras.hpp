#pragma once

#include <random>
#include <string>
#include <vector>

#include "nilcx/nilcx.hpp"

namespace nilcx::testing {

struct AlgebraWithJ {
    LieAlgebra algebra;
    AlmostComplexStructure j;
    std::string label;
};

inline Rational small_rational(std::mt19937& rng, int lo = -2, int hi = 2) {
    std::uniform_int_distribution<int> num(lo, hi), den(1, 2);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline Complex small_complex(std::mt19937& rng) {
    return Complex(small_rational(rng, -3, 3), small_rational(rng, -3, 3));
}

inline Vector<Complex> random_vector(std::mt19937& rng, std::size_t n) {
    Vector<Complex> v(n);
    for (auto& x : v) x = small_complex(rng);
    return v;
}

/// V ⊕ W with W central: [x, y] = sum_k B_k(x, y) w_k, each B_k antisymmetric and
/// J-compatible (B(Jx, Jy) = B(x, y)); J standard on both summands.
inline AlgebraWithJ two_step(std::mt19937& rng, std::size_t p, std::size_t q) {
    const std::size_t dv = 2 * p, m = 2 * (p + q);
    const auto j0 = AlmostComplexStructure::standard(dv).matrix();
    LieAlgebra a("two_step", m);
    for (std::size_t k = 0; k < 2 * q; ++k) {
        Matrix<Rational> mm(dv, dv);
        for (std::size_t i = 0; i < dv; ++i)
            for (std::size_t j = i + 1; j < dv; ++j) {
                mm(i, j) = small_rational(rng);
                mm(j, i) = -mm(i, j);
            }
        Matrix<Rational> b = mm + j0.transpose() * mm * j0;
        for (std::size_t i = 0; i < dv; ++i)
            for (std::size_t j = i + 1; j < dv; ++j)
                if (sgn(b(i, j)) != 0) a.add(i, j, dv + k, Rational(b(i, j) / 2));
    }
    return {a, AlmostComplexStructure::standard(m), "two_step(" + std::to_string(p) + "," + std::to_string(q) + ")"};
}

/// aff(A) = A ⊕ A, [(a, b), (c, d)] = (0, ad - cb), J(a, b) = (b, -a), for A = x Q[x] / (x^{k+1}).
inline AlgebraWithJ affine(std::size_t k) {
    const std::size_t m = 2 * k;
    LieAlgebra a("aff" + std::to_string(k), m);
    // A-basis x^1..x^k at indices 0..k-1 (first copy) and k..2k-1 (second copy)
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t j = 1; j <= k; ++j) {
            if (i + j > k) continue;
            // [(x^i, 0), (0, x^j)] = (0, x^{i+j})
            a.add(i - 1, k + j - 1, k + i + j - 1, Rational(1));
        }
    Matrix<Rational> jm(m, m);
    for (std::size_t i = 0; i < k; ++i) {
        jm(k + i, i) = -1;  // J(a, 0) = (0, -a)
        jm(i, k + i) = 1;   // J(0, b) = (b, 0)
    }
    return {a, AlmostComplexStructure(jm, "J"), "aff(" + std::to_string(k) + ")"};
}

inline AlgebraWithJ direct_sum(const AlgebraWithJ& x, const AlgebraWithJ& y) {
    const std::size_t m1 = x.algebra.dim(), m = m1 + y.algebra.dim();
    LieAlgebra a("sum", m);
    for (const auto& b : x.algebra.brackets())
        for (const auto& [k, v] : b.value) a.add(b.i, b.j, k, v);
    for (const auto& b : y.algebra.brackets())
        for (const auto& [k, v] : b.value) a.add(m1 + b.i, m1 + b.j, m1 + k, v);
    Matrix<Rational> jm(m, m);
    for (std::size_t r = 0; r < m1; ++r)
        for (std::size_t c = 0; c < m1; ++c) jm(r, c) = x.j.matrix()(r, c);
    for (std::size_t r = 0; r < y.algebra.dim(); ++r)
        for (std::size_t c = 0; c < y.algebra.dim(); ++c) jm(m1 + r, m1 + c) = y.j.matrix()(r, c);
    return {a, AlmostComplexStructure(jm, "J"), x.label + "+" + y.label};
}

/// Same algebra in the basis f_i = P e_i.
inline AlgebraWithJ change_basis(const AlgebraWithJ& x, const Matrix<Rational>& p) {
    const std::size_t m = x.algebra.dim();
    const auto pinv = *inverse(p);
    LieAlgebra a(x.algebra.name(), m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const auto v = pinv * x.algebra.bracket(p.col(i), p.col(j));
            for (std::size_t k = 0; k < m; ++k)
                if (sgn(v[k]) != 0) a.add(i, j, k, v[k]);
        }
    return {a, AlmostComplexStructure(pinv * x.j.matrix() * p, "J"), x.label + "^P"};
}

inline Matrix<Rational> random_invertible(std::mt19937& rng, std::size_t m) {
    std::uniform_int_distribution<int> d(-1, 1);
    while (true) {
        Matrix<Rational> p = Matrix<Rational>::identity(m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (i != j && d(rng) != 0) p(i, j) = small_rational(rng, -1, 1);
        if (inverse(p)) return p;
    }
}

/// Deterministic family: 2-step, 3-step (affine) and mixed algebras with abelian J.
inline AlgebraWithJ random_abelian(unsigned seed) {
    std::mt19937 rng(seed);
    AlgebraWithJ base;
    switch (seed % 3) {
        case 0: base = two_step(rng, 2 + (seed % 2), 1); break;
        case 1: base = affine(2 + (seed % 3)); break;
        default: {
            auto x = two_step(rng, 1, 1);
            base = direct_sum(x, affine(2));
        }
    }
    auto out = change_basis(base, random_invertible(rng, base.algebra.dim()));
    out.label = "seed " + std::to_string(seed) + ": " + out.label;
    out.algebra.set_name("random" + std::to_string(seed));
    return out;
}

inline std::vector<AlgebraWithJ> random_family(std::size_t count = 25) {
    std::vector<AlgebraWithJ> out;
    for (unsigned s = 1; s <= count; ++s) out.push_back(random_abelian(s));
    return out;
}

} // namespace nilcx::testing
