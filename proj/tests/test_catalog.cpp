#include <gtest/gtest.h>

#include "nilcx/nilcx.hpp"

using namespace nilcx;

namespace {

void verify_facts(const CatalogEntry& e) {
    const auto& f = e.facts;
    const auto& j = e.structures.front();
    EXPECT_EQ(e.algebra.dim(), f.dim) << e.name;
    const auto lie = validate_lie(e.algebra);
    EXPECT_EQ(lie.step, f.step) << e.name;
    EXPECT_EQ(lie.series_dims, f.series_dims) << e.name;
    EXPECT_EQ(center(e.algebra).dim(), f.center_dim) << e.name;
    EXPECT_EQ(is_integrable(e.algebra, j).integrable, f.integrable) << e.name;
    EXPECT_EQ(is_abelian(e.algebra, j), f.abelian) << e.name;
    const auto js = j_ascending_series(e.algebra, j);
    EXPECT_EQ(js.nilpotent, f.j_nilpotent) << e.name;
    EXPECT_EQ(js.flag.dims(), f.j_series_dims) << e.name;
    if (f.h1_dim) {
        ASSERT_TRUE(f.abelian);
        EXPECT_EQ(DolbeaultComplex::adapted(e.algebra, j).cohomology(1).dimension, *f.h1_dim) << e.name;
    }
    for (const auto& [field, tag] : f.provenance) EXPECT_TRUE(tag == "PAPER" || tag == "DERIVED") << field;
}

}  // namespace

TEST(Catalog, Names) {
    EXPECT_EQ(catalog_names(), (std::vector<std::string>{"h9", "h15", "n10", "torus"}));
    EXPECT_THROW(catalog_get("h7"), PreconditionError);
}

TEST(Catalog, FactsReverifiedLive) {
    verify_facts(catalog_get("h9"));
    verify_facts(catalog_get("h15"));
    for (std::size_t n = 1; n <= 4; ++n) verify_facts(catalog_get("torus", {1, 0, n}));
    verify_facts(catalog_get("n10", {1, 0, 3}));
    verify_facts(catalog_get("n10", {1, Rational(1, 2), 3}));
    verify_facts(catalog_get("n10", {2, Rational(-1, 3), 3}));
    verify_facts(catalog_get("n10", {0, 1, 3}));
}

TEST(Catalog, H9Brackets) {
    const auto a = catalog_get("h9").algebra;
    const auto e = [](std::size_t k) { return unit_vector<Rational>(6, k - 1); };
    EXPECT_EQ(a.bracket(e(1), e(2)), e(3));
    EXPECT_EQ(a.bracket(e(1), e(3)), e(6));
    EXPECT_EQ(a.bracket(e(2), e(4)), e(6));
    EXPECT_EQ(a.brackets().size(), 3u);
}

TEST(Catalog, H15Brackets) {
    const auto a = catalog_get("h15").algebra;
    const auto e = [](std::size_t k) { return unit_vector<Rational>(6, k - 1); };
    EXPECT_EQ(a.bracket(e(1), e(2)), scale(e(4), Rational(-1)));
    EXPECT_EQ(a.bracket(e(1), e(3)), e(5));
    EXPECT_EQ(a.bracket(e(2), e(4)), e(5));
    EXPECT_EQ(a.bracket(e(1), e(4)), scale(e(6), Rational(-1)));
    EXPECT_EQ(a.bracket(e(2), e(3)), e(6));
}

TEST(Catalog, N10RoundTrip) {
    const auto e = catalog_get("n10");
    const auto d = differentials(e.algebra);
    for (std::size_t k = 0; k < 10; ++k) EXPECT_EQ(d[k], detail::parse_differential(n10_printed_differentials()[k])) << k + 1;
    EXPECT_EQ(from_differentials("n10", d), e.algebra);
    EXPECT_EQ(e.printed_differentials[3], "de^4 = -e^{12}+e^{13}+e^{27}");
}

TEST(Catalog, ParseDifferential) {
    const auto d = detail::parse_differential("2e^{12} - e^{1,10} + 1/2e^{43}");
    EXPECT_EQ(d.at({1, 2}), Rational(2));
    EXPECT_EQ(d.at({1, 10}), Rational(-1));
    EXPECT_EQ(d.at({3, 4}), Rational(-1, 2));
    EXPECT_TRUE(detail::parse_differential("0").empty());
    EXPECT_TRUE(detail::parse_differential("e^{12} - e^{12}").empty());
    EXPECT_THROW(detail::parse_differential("e^{123}"), std::invalid_argument);
    EXPECT_THROW(detail::parse_differential("x"), std::invalid_argument);
}

TEST(Catalog, N10ParameterConstraint) {
    EXPECT_THROW(catalog_get("n10", {1, 1, 3}), PreconditionError);
    EXPECT_THROW(catalog_get("n10", {Rational(2, 3), Rational(-2, 3), 3}), PreconditionError);
    EXPECT_THROW(catalog_get("n10", {0, 0, 3}), PreconditionError);
    EXPECT_NO_THROW(catalog_get("n10", {1, 2, 3}));
}

TEST(Catalog, N10StructureImages) {
    const auto j = n10_structure(1, 0);
    const auto e = [](std::size_t k) { return unit_vector<Rational>(10, k - 1); };
    EXPECT_EQ(j.apply(e(1)), e(2));
    EXPECT_EQ(j.apply(e(4)), e(5));
    EXPECT_EQ(j.apply(e(8)), e(9));
    EXPECT_EQ(j.apply(e(3)), e(7));
    EXPECT_EQ(j.apply(e(10)), scale(e(6), Rational(-1)));
    EXPECT_EQ(j.name(), "J_{1,0}");
}

TEST(Catalog, TorusRejectsZero) { EXPECT_THROW(catalog_get("torus", {1, 0, 0}), PreconditionError); }
