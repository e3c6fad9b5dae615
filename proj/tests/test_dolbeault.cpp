#include <gtest/gtest.h>

#include <random>

#include "nilcx/nilcx.hpp"
#include "support/oracles.hpp"
#include "support/random_algebras.hpp"

using namespace nilcx;
namespace nt = nilcx::testing;

namespace {

DolbeaultComplex complex_of(const std::string& name, const CatalogParams& p = {}) {
    const auto e = catalog_get(name, p);
    return DolbeaultComplex::adapted(e.algebra, e.structures.front());
}

std::vector<std::size_t> h_dims(const DolbeaultComplex& dc) {
    std::vector<std::size_t> d;
    for (std::size_t k = 0; k <= dc.n(); ++k) d.push_back(dc.cohomology(k).dimension);
    return d;
}

VectorForm random_form(std::mt19937& rng, const DolbeaultComplex& dc, std::size_t k) {
    return VectorForm(dc.n(), k, nt::random_vector(rng, dc.chain_dim(k)));
}

std::vector<Vector<Complex>> coeffs(const std::vector<VectorForm>& v) {
    std::vector<Vector<Complex>> out;
    for (const auto& x : v) out.push_back(x.coeffs());
    return out;
}

// b(a, I) with 1-based labels, the way harmonic forms are printed
VectorForm b(std::size_t a, std::vector<std::size_t> forms, Complex c = Complex(1)) {
    for (auto& f : forms) --f;
    return VectorForm::basic(3, a - 1, forms, c);
}

}  // namespace

TEST(Combinatorics, SubsetsAndRanks) {
    EXPECT_EQ(binomial(5, 2), 10u);
    EXPECT_EQ(binomial(3, 4), 0u);
    const auto s = subsets(4, 2);
    ASSERT_EQ(s.size(), 6u);
    EXPECT_EQ(s.front(), (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(s.back(), (std::vector<std::size_t>{2, 3}));
    for (std::size_t r = 0; r < s.size(); ++r) EXPECT_EQ(subset_rank(4, s[r]), r);
}

TEST(VectorForm, BasicSignsAndParts) {
    EXPECT_EQ(VectorForm::basic(3, 0, {2, 0}), VectorForm::basic(3, 0, {0, 2}) * Complex(-1));
    EXPECT_TRUE(VectorForm::basic(3, 0, {1, 1}).is_zero());
    const auto v = b(1, {1, 2}) + b(2, {1, 3}, Complex(-2));
    std::vector<InvariantForm> parts;
    for (std::size_t a = 0; a < 3; ++a) parts.push_back(v.form_part(a));
    EXPECT_EQ(VectorForm::from_parts(3, 2, parts), v);
    EXPECT_EQ(v.str(), "(1)wb1^wb2⊗X1 + (-2)wb1^wb3⊗X2");
    EXPECT_THROW(VectorForm(3, 1, Vector<Complex>(4)), std::invalid_argument);
}

TEST(Dolbeault, RejectsNonAbelian) {
    const auto e = catalog_get("n10", {1, Rational(1, 2), 3});
    EXPECT_THROW(DolbeaultComplex::adapted(e.algebra, e.structures.front()), PreconditionError);
}

TEST(Dolbeault, DbarVectorMatchesRealBasisOracle) {
    std::mt19937 rng(21);
    std::vector<std::pair<LieAlgebra, AlmostComplexStructure>> cases;
    for (const auto& name : {"h9", "h15", "n10"}) cases.emplace_back(catalog_get(name).algebra, catalog_get(name).structures.front());
    for (const auto& x : nt::random_family(25)) cases.emplace_back(x.algebra, x.j);
    for (const auto& [a, j] : cases) {
        const auto dc = DolbeaultComplex::adapted(a, j);
        for (int trial = 0; trial < 4; ++trial) {
            const auto v = nt::random_vector(rng, dc.n());
            EXPECT_EQ(dc.dbar_vector(v), nt::dbar_vector_oracle(a, j, dc.frame(), v)) << a.name();
        }
    }
}

TEST(Dolbeault, DbarSquaredIsZero) {
    for (const auto& name : {"h9", "h15", "n10", "torus"}) {
        const auto dc = complex_of(name);
        for (std::size_t k = 0; k + 1 < dc.n(); ++k) EXPECT_TRUE((dc.dbar_matrix(k + 1) * dc.dbar_matrix(k)).is_zero()) << name << " k=" << k;
    }
}

TEST(Dolbeault, CohomologyDimensions) {
    EXPECT_EQ(h_dims(complex_of("h9")), (std::vector<std::size_t>{1, 3, 3, 1}));
    EXPECT_EQ(h_dims(complex_of("h15")), (std::vector<std::size_t>{2, 5, 4, 1}));
    EXPECT_EQ(h_dims(complex_of("n10")), (std::vector<std::size_t>{3, 14, 27, 27, 14, 3}));
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto dc = complex_of("torus", {1, 0, n});
        for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(dc.cohomology(k).dimension, n * binomial(n, k));
    }
}

TEST(Dolbeault, EulerCharacteristicVanishes) {
    for (const auto& x : nt::random_family(25)) {
        const auto dc = DolbeaultComplex::adapted(x.algebra, x.j);
        long chi = 0;
        for (std::size_t k = 0; k <= dc.n(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<long>(dc.cohomology(k).dimension);
        EXPECT_EQ(chi, 0) << x.label;
    }
}

TEST(Dolbeault, H9PrintedHarmonicForms) {
    const auto dc = complex_of("h9");
    const std::vector<VectorForm> beta = {b(1, {1}), b(2, {2}) - b(3, {3}), b(1, {2}) - b(2, {3})};
    for (const auto& x : beta) {
        EXPECT_TRUE(dc.laplacian(x).is_zero());
        EXPECT_TRUE(dc.dbar(x).is_zero());
        EXPECT_TRUE(dc.dbar_adjoint(x).is_zero());
    }
    EXPECT_EQ(inner_product(beta[1], beta[1]), Complex(2));
    EXPECT_TRUE(same_span(coeffs(beta), dc.harmonic_vectors(1), dc.chain_dim(1)));
    // our echelon basis lists beta_1, beta_3, beta_2
    const auto h = dc.cohomology(1).harmonic_basis;
    ASSERT_EQ(h.size(), 3u);
    EXPECT_EQ(h[0], beta[0]);
    EXPECT_EQ(h[1], beta[2]);
    EXPECT_EQ(h[2], beta[1]);
}

TEST(Dolbeault, H15PrintedHarmonicForms) {
    const auto dc = complex_of("h15");
    const std::vector<VectorForm> beta = {b(1, {1}), b(1, {2}) - b(2, {3}, Complex(2)), b(1, {3}), b(2, {1}), b(2, {2})};
    for (const auto& x : beta) EXPECT_TRUE(dc.laplacian(x).is_zero()) << x.str();
    EXPECT_EQ(inner_product(beta[1], beta[1]), Complex(5));
    const auto h = dc.cohomology(1);
    EXPECT_EQ(h.harmonic_basis, beta);
    Matrix<Complex> gram(5, 5);
    for (std::size_t i = 0; i < 5; ++i) gram(i, i) = i == 1 ? Complex(5) : Complex(1);
    EXPECT_EQ(h.gram, gram);
    // a non-harmonic closed form: dbar of a vector
    const auto exact = dc.dbar_vector({Complex(0), Complex(0), Complex(1)});
    EXPECT_FALSE(exact.is_zero());
    EXPECT_FALSE(dc.laplacian(exact).is_zero());
}

TEST(Dolbeault, AdjointnessOnRandomPairs) {
    std::mt19937 rng(22);
    const std::vector<DolbeaultComplex> cs = {complex_of("h9"), complex_of("h15"), complex_of("n10")};
    for (int trial = 0; trial < 100; ++trial) {
        const auto& dc = cs[trial % cs.size()];
        const std::size_t k = 1 + trial % dc.n();
        const auto mu = random_form(rng, dc, k), nu = random_form(rng, dc, k - 1);
        EXPECT_EQ(inner_product(dc.dbar_adjoint(mu), nu), inner_product(mu, dc.dbar(nu)));
    }
}

TEST(Dolbeault, HodgeDecomposition) {
    std::mt19937 rng(23);
    for (const auto& name : {"h9", "h15", "torus"}) {
        const auto dc = complex_of(name);
        for (std::size_t k = 0; k <= dc.n(); ++k)
            for (int trial = 0; trial < 3; ++trial) {
                const auto v = random_form(rng, dc, k);
                const auto g = dc.green(v);
                const auto h = dc.harmonic_projection(v);
                // v = H v + dbar dbar* G v + dbar* dbar G v
                VectorForm sum = h;
                if (k > 0) sum += dc.dbar(dc.dbar_adjoint(g));
                if (k < dc.n()) sum += dc.dbar_adjoint(dc.dbar(g));
                EXPECT_EQ(sum, v) << name << " k=" << k;
                EXPECT_EQ(dc.laplacian(g) + h, v);
                EXPECT_TRUE(dc.green(h).is_zero());
                for (const auto& hv : dc.harmonic_vectors(k)) EXPECT_TRUE(hermitian(g.coeffs(), hv).is_zero());
            }
    }
}

TEST(Dolbeault, DimensionBookkeeping) {
    for (const auto& name : {"h9", "h15", "n10"}) {
        const auto dc = complex_of(name);
        for (std::size_t k = 0; k <= dc.n(); ++k) {
            const auto c = dc.cohomology(k);
            const std::size_t rk_out = k < dc.n() ? rank(dc.dbar_matrix(k)) : 0;
            EXPECT_EQ(c.kernel_dim + rk_out, dc.chain_dim(k));
            EXPECT_EQ(c.dimension + c.image_rank + rk_out, dc.chain_dim(k));
            EXPECT_EQ(c.dimension, kernel_basis(dc.laplacian_matrix(k)).size());
        }
    }
}

TEST(Dolbeault, AdjointGreenCommutes) {
    std::mt19937 rng(24);
    for (const auto& name : {"h9", "h15"}) {
        const auto dc = complex_of(name);
        for (std::size_t k = 1; k <= dc.n(); ++k)
            for (int trial = 0; trial < 3; ++trial) {
                const auto v = random_form(rng, dc, k);
                const auto lhs = dc.dbar_adjoint(dc.green(v));
                EXPECT_EQ(lhs, dc.green(dc.dbar_adjoint(v)));
                EXPECT_EQ(VectorForm(dc.n(), k - 1, dc.dbar_adjoint_green_matrix(k) * v.coeffs()), lhs);
            }
    }
}

TEST(Dolbeault, FrameIndependentDimensions) {
    for (const auto& x : nt::random_family(12)) {
        const DolbeaultComplex a(x.algebra, x.j, standard_frame(x.j));
        const auto b2 = DolbeaultComplex::adapted(x.algebra, x.j);
        EXPECT_EQ(h_dims(a), h_dims(b2)) << x.label;
    }
}

TEST(Dolbeault, DbarVectorOnCenterVanishes) {
    // X1 spans the central (1,0)-direction of h9 and h15
    for (const auto& name : {"h9", "h15"}) EXPECT_TRUE(complex_of(name).dbar_vector({Complex(1), Complex(0), Complex(0)}).is_zero());
}
