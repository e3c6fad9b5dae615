#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "complex_structure.hpp"
#include "errors.hpp"
#include "frame.hpp"
#include "lie.hpp"

namespace nilcx {

/// Facts recorded with each entry; `provenance[field]` is "PAPER" or "DERIVED".
struct ExpectedFacts {
    std::size_t dim = 0;
    std::size_t step = 0;
    std::vector<std::size_t> series_dims;
    std::size_t center_dim = 0;
    std::optional<std::size_t> h1_dim;          // only for abelian structures
    bool integrable = true;
    bool abelian = false;
    bool j_nilpotent = true;
    std::vector<std::size_t> j_series_dims;
    std::map<std::string, std::string> provenance;
};

struct CatalogParams {
    Rational s = 1;
    Rational t = 0;
    std::size_t n = 3;     // torus complex dimension
};

struct CatalogEntry {
    std::string name;
    LieAlgebra algebra;
    std::vector<AlmostComplexStructure> structures;
    ExpectedFacts facts;                         // for structures.front()
    std::vector<std::string> printed_differentials;  // "de^k = ..." in display form, when the entry is given by them
};

namespace detail {

inline Vector<Rational> ev(std::size_t m, std::size_t i) { return unit_vector<Rational>(m, i - 1); }

inline AlmostComplexStructure paired_structure(std::size_t m, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                               std::string name) {
    std::map<std::size_t, Vector<Rational>> images;
    for (auto [x, y] : pairs) images[x - 1] = ev(m, y);
    return AlmostComplexStructure::from_basis_images(m, images, std::move(name));
}

/// de^k as a map (i, j) -> coefficient of e^{ij}, i < j, 1-based.
using Differential = std::map<std::pair<std::size_t, std::size_t>, Rational>;

/// Parses "-e^{12}+e^{13}+e^{27}", "2e^{12} - e^{1,10}" or "0".
inline Differential parse_differential(std::string_view s) {
    Differential out;
    std::size_t p = 0;
    auto skip = [&] {
        while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    };
    skip();
    if (s.substr(p) == "0") return out;
    while (p < s.size()) {
        skip();
        int sign = 1;
        if (p < s.size() && (s[p] == '+' || s[p] == '-')) {
            if (s[p] == '-') sign = -1;
            ++p;
            skip();
        }
        std::size_t q = p;
        while (q < s.size() && (std::isdigit(static_cast<unsigned char>(s[q])) || s[q] == '/')) ++q;
        Rational c = q > p ? parse_rational(s.substr(p, q - p)) : Rational(1);
        p = q;
        if (s.substr(p, 3) != "e^{") throw std::invalid_argument("differential: expected e^{..} in \"" + std::string(s) + "\"");
        p += 3;
        const auto close = s.find('}', p);
        if (close == std::string_view::npos) throw std::invalid_argument("differential: unterminated e^{");
        const std::string_view inner = s.substr(p, close - p);
        std::size_t i = 0, j = 0;
        if (const auto comma = inner.find(','); comma != std::string_view::npos) {
            i = std::stoul(std::string(inner.substr(0, comma)));
            j = std::stoul(std::string(inner.substr(comma + 1)));
        } else if (inner.size() == 2) {
            i = static_cast<std::size_t>(inner[0] - '0');
            j = static_cast<std::size_t>(inner[1] - '0');
        } else {
            throw std::invalid_argument("differential: ambiguous index e^{" + std::string(inner) + "}");
        }
        p = close + 1;
        Rational v = sign < 0 ? Rational(-c) : c;
        if (i > j) {
            std::swap(i, j);
            v = -v;
        }
        out[{i, j}] += v;
        if (sgn(out[{i, j}]) == 0) out.erase({i, j});
        skip();
    }
    return out;
}

} // namespace detail

/// de^k = -sum_{i<j} c^k_{ij} e^{ij}, 1-based keys.
inline std::vector<detail::Differential> differentials(const LieAlgebra& a) {
    std::vector<detail::Differential> out(a.dim());
    for (const auto& b : a.brackets())
        for (const auto& [k, v] : b.value) out[k][{b.i + 1, b.j + 1}] = -v;
    return out;
}

/// Inverse of differentials().
inline LieAlgebra from_differentials(std::string name, const std::vector<detail::Differential>& d) {
    LieAlgebra a(std::move(name), d.size());
    for (std::size_t k = 0; k < d.size(); ++k)
        for (const auto& [ij, v] : d[k]) {
            if (ij.first < 1 || ij.second > d.size() || ij.first >= ij.second) throw ValidationError("differential index out of range");
            a.add(ij.first - 1, ij.second - 1, k, Rational(-v));
        }
    return a;
}

inline CatalogEntry catalog_h9() {
    CatalogEntry e;
    e.name = "h9";
    e.algebra = LieAlgebra::from_brackets("h9", 6, {{0, 1, {{2, 1}}}, {0, 2, {{5, 1}}}, {1, 3, {{5, 1}}}});
    e.structures.push_back(detail::paired_structure(6, {{1, 2}, {3, 4}, {5, 6}}, "J"));
    e.facts = {6, 3, {2, 4, 6}, 2, 3, true, true, true, {2, 4, 6}, {}};
    e.facts.provenance = {{"step", "PAPER"}, {"h1_dim", "PAPER"}, {"abelian", "PAPER"}, {"integrable", "PAPER"},
                          {"series_dims", "DERIVED"}, {"center_dim", "DERIVED"}, {"j_nilpotent", "PAPER"},
                          {"j_series_dims", "PAPER"}, {"dim", "PAPER"}};
    return e;
}

inline CatalogEntry catalog_h15() {
    CatalogEntry e;
    e.name = "h15";
    e.algebra = LieAlgebra::from_brackets(
        "h15", 6, {{0, 1, {{3, -1}}}, {0, 2, {{4, 1}}}, {1, 3, {{4, 1}}}, {0, 3, {{5, -1}}}, {1, 2, {{5, 1}}}});
    e.structures.push_back(detail::paired_structure(6, {{1, 2}, {3, 4}, {5, 6}}, "J"));
    e.facts = {6, 3, {2, 4, 6}, 2, 5, true, true, true, {2, 4, 6}, {}};
    e.facts.provenance = {{"step", "PAPER"}, {"h1_dim", "PAPER"}, {"abelian", "PAPER"}, {"integrable", "PAPER"},
                          {"series_dims", "DERIVED"}, {"center_dim", "DERIVED"}, {"j_nilpotent", "PAPER"},
                          {"j_series_dims", "PAPER"}, {"dim", "PAPER"}};
    return e;
}

/// The ten-dimensional algebra in its printed form.
inline const std::vector<std::string>& n10_printed_differentials() {
    static const std::vector<std::string> d = {
        "0",
        "0",
        "0",
        "-e^{12}+e^{13}+e^{27}",
        "-e^{12}-e^{17}+e^{23}",
        "- e^{14} - e^{15} - e^{25} +e^{24} -e^{19} +e^{28}-2e^{45}+e^{48}+e^{59}-e^{49}+e^{58}-e^{89}",
        "0",
        "-e^{17}+e^{23}-e^{13}-e^{27}",
        "2e^{12}+e^{17}-e^{23}-e^{13}-e^{27}",
        "0",
    };
    return d;
}

/// J_{s,t}; requires t^2 != s^2.
inline AlmostComplexStructure n10_structure(const Rational& s, const Rational& t) {
    const Rational den = t * t - s * s;
    if (sgn(den) == 0) throw PreconditionError("n10 requires t^2 != s^2");
    const std::size_t m = 10;
    using detail::ev;
    auto comb = [&](std::initializer_list<std::pair<Rational, std::size_t>> terms) {
        Vector<Rational> v(m, Rational(0));
        for (const auto& [c, i] : terms) v[i - 1] += c;
        return v;
    };
    std::map<std::size_t, Vector<Rational>> images = {
        {0, ev(m, 2)},
        {3, ev(m, 5)},
        {7, ev(m, 9)},
        {2, comb({{t, 6}, {s, 7}})},
        {9, comb({{Rational(-s), 6}, {Rational(-t), 7}})},
        {5, comb({{Rational(-t / den), 3}, {Rational(-s / den), 10}})},
        {6, comb({{Rational(s / den), 3}, {Rational(t / den), 10}})},
    };
    return AlmostComplexStructure::from_basis_images(m, images, "J_{" + to_string(s) + "," + to_string(t) + "}");
}

inline CatalogEntry catalog_n10(const Rational& s, const Rational& t) {
    CatalogEntry e;
    e.name = "n10";
    std::vector<detail::Differential> d;
    for (const auto& text : n10_printed_differentials()) d.push_back(detail::parse_differential(text));
    e.algebra = from_differentials("n10", d);
    if (differentials(e.algebra) != d) throw std::logic_error("n10: differentials do not round-trip");
    for (std::size_t k = 0; k < d.size(); ++k)
        e.printed_differentials.push_back("de^" + std::to_string(k + 1) + " = " + n10_printed_differentials()[k]);
    e.structures.push_back(n10_structure(s, t));
    const bool abelian = sgn(t) == 0;
    // The printed equations give a 2-step algebra with a 4-dimensional center.
    e.facts = {10, 2, {4, 10}, 4, std::nullopt, true, abelian, true, {}, {}};
    e.facts.provenance = {{"dim", "PAPER"}, {"integrable", "PAPER"}, {"abelian", "PAPER"},
                          {"step", "DERIVED"}, {"series_dims", "DERIVED"}, {"center_dim", "DERIVED"},
                          {"j_nilpotent", "DERIVED"}, {"j_series_dims", "DERIVED"}};
    if (abelian) {
        e.facts.h1_dim = 14;
        e.facts.j_series_dims = {4, 10};
        e.facts.provenance["h1_dim"] = "DERIVED";
    } else {
        e.facts.j_series_dims = {2, 6, 10};
    }
    return e;
}

/// Abelian R^{2n} with the standard J.
inline CatalogEntry catalog_torus(std::size_t n) {
    if (n == 0) throw PreconditionError("torus requires n >= 1");
    CatalogEntry e;
    e.name = "torus";
    e.algebra = LieAlgebra("torus" + std::to_string(n), 2 * n);
    e.structures.push_back(AlmostComplexStructure::standard(2 * n));
    e.structures.back().set_name("J");
    e.facts = {2 * n, 1, {2 * n}, 2 * n, n * n, true, true, true, {2 * n}, {}};
    for (const char* f : {"dim", "step", "series_dims", "center_dim", "h1_dim", "integrable", "abelian", "j_nilpotent", "j_series_dims"})
        e.facts.provenance[f] = "DERIVED";
    return e;
}

inline std::vector<std::string> catalog_names() { return {"h9", "h15", "n10", "torus"}; }

inline CatalogEntry catalog_get(std::string_view name, const CatalogParams& p = {}) {
    if (name == "h9") return catalog_h9();
    if (name == "h15") return catalog_h15();
    if (name == "n10") return catalog_n10(p.s, p.t);
    if (name == "torus") return catalog_torus(p.n);
    throw PreconditionError("unknown catalog entry: " + std::string(name));
}

} // namespace nilcx
