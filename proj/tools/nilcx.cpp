// nilcx: command-line front end for algebra files.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilcx/nilcx.hpp"

using namespace nilcx;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "nilcx/1";

enum Exit { kOk = 0, kValidation = 1, kParse = 2, kPrecondition = 3 };

json base(const std::string& command) {
    json j;
    j["schema"] = kSchema;
    j["command"] = command;
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string vector_string(const Vector<Complex>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + ")";
}

std::string vector_string(const Vector<Rational>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
    return s + ")";
}

template <class T>
json vector_json(const Vector<T>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

template <class T>
json matrix_json(const Matrix<T>& m) {
    json a = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vector_json(m.row(r)));
    return a;
}

template <class T>
void print_matrix(const Matrix<T>& m, const std::string& indent = "  ") {
    for (std::size_t r = 0; r < m.rows(); ++r) std::cout << indent << vector_string(m.row(r)) << '\n';
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string classification_line(const DeformationReport& r) {
    return std::string(r.integrable ? "integrable" : "not integrable") + ", " + (r.nilpotent ? "nilpotent" : "not nilpotent") + ", " +
           (r.abelian ? "abelian" : "not abelian");
}

std::string dims_string(const std::vector<std::size_t>& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? ", " : "") + std::to_string(d[i]);
    return s + ")";
}

const AlmostComplexStructure& pick_structure(const AlgebraFile& f, const std::string& name) {
    if (f.structures.empty()) throw PreconditionError("file defines no complex structure");
    if (name.empty()) return f.structures.front();
    const auto* s = f.structure(name);
    if (!s) throw PreconditionError("no structure named '" + name + "'");
    return *s;
}

std::vector<Rational> parse_point(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(parse_rational(item));
        } catch (const std::invalid_argument& e) {
            throw ParseError(1, out.size() + 1, std::string("--at: ") + e.what());
        }
    }
    if (out.empty()) throw ParseError(1, 1, "--at: empty parameter list");
    return out;
}

// ---------------------------------------------------------------- validate

int cmd_validate(const std::string& path, const std::string& structure, bool as_json) {
    const auto f = read_alg(path);
    json j = base("validate");
    j["algebra"] = f.algebra.name();
    j["dim"] = f.algebra.dim();
    bool ok = true;
    std::optional<LieReport> lie;
    std::string lie_error;
    try {
        lie = validate_lie(f.algebra);
    } catch (const ValidationError& e) {
        ok = false;
        lie_error = e.what();
    }
    j["lie"] = {{"valid", lie.has_value()}};
    if (lie) {
        j["lie"]["step"] = lie->step;
        j["lie"]["series_dims"] = lie->series_dims;
    } else {
        j["lie"]["error"] = lie_error;
    }
    json structures = json::array();
    std::vector<const AlmostComplexStructure*> selected;
    if (!structure.empty()) selected.push_back(&pick_structure(f, structure));
    else
        for (const auto& s : f.structures) selected.push_back(&s);
    for (const auto* s : selected) {
        const auto r = classify_structure(f.algebra, *s);
        if (!r.integrable) ok = false;
        structures.push_back({{"name", s->name()},
                              {"j_squared_minus_identity", true},
                              {"integrable", r.integrable},
                              {"abelian", r.abelian},
                              {"j_nilpotent", r.nilpotent},
                              {"j_series_dims", r.j_series_dims}});
    }
    j["structures"] = structures;
    j["ok"] = ok;
    if (as_json) {
        emit(j);
    } else {
        std::cout << "algebra " << f.algebra.name() << ", dim " << f.algebra.dim() << '\n';
        if (lie) {
            std::cout << "jacobi: ok\n";
            std::cout << "nilpotent: yes, step " << lie->step << ", ascending series " << dims_string(lie->series_dims) << '\n';
        } else {
            std::cout << "lie algebra: FAILED: " << lie_error << '\n';
        }
        for (const auto& s : structures) {
            std::cout << "structure " << s["name"].get<std::string>() << ": J^2 = -I ok"
                      << ", integrable " << yes_no(s["integrable"]) << ", abelian " << yes_no(s["abelian"]) << ", J-nilpotent "
                      << yes_no(s["j_nilpotent"]) << " " << dims_string(s["j_series_dims"]) << '\n';
        }
        std::cout << (ok ? "valid" : "INVALID") << '\n';
    }
    return ok ? kOk : kValidation;
}

// ---------------------------------------------------------------- series

int cmd_series(const std::string& path, const std::string& structure, bool as_json) {
    const auto f = read_alg(path);
    const auto flag = ascending_series(f.algebra);
    json j = base("series");
    j["algebra"] = f.algebra.name();
    j["series_dims"] = flag.dims();
    json terms = json::array();
    for (const auto& t : flag.terms) {
        json b = json::array();
        for (const auto& v : t.basis) b.push_back(vector_json(v));
        terms.push_back(b);
    }
    j["series"] = terms;
    std::optional<ComplexFrame> frame;
    std::string frame_name;
    if (!f.structures.empty()) {
        const auto& s = pick_structure(f, structure);
        frame_name = s.name();
        frame = adapted_frame(f.algebra, s);
    }
    if (frame) {
        json fr = json::array();
        for (std::size_t a = 0; a < frame->n(); ++a)
            fr.push_back({{"vector", vector_json(frame->vectors()[a])}, {"level", frame->levels()[a]}});
        j["structure"] = frame_name;
        j["adapted_frame"] = fr;
    }
    if (as_json) {
        emit(j);
        return kOk;
    }
    std::cout << "ascending series dims " << dims_string(flag.dims()) << '\n';
    for (std::size_t l = 0; l < flag.terms.size(); ++l) {
        std::cout << "g_" << l + 1 << ":";
        for (const auto& v : flag.terms[l].basis) std::cout << ' ' << vector_string(v);
        std::cout << '\n';
    }
    if (frame) {
        std::cout << "adapted frame for " << frame_name << ":\n";
        for (std::size_t a = 0; a < frame->n(); ++a)
            std::cout << "  X" << a + 1 << " = " << vector_string(frame->vectors()[a]) << "  (level " << frame->levels()[a] << ")\n";
    }
    return kOk;
}

// ---------------------------------------------------------------- cohomology

int cmd_cohomology(const std::string& path, const std::string& structure, std::size_t degree, bool as_json) {
    const auto f = read_alg(path);
    validate_lie(f.algebra);
    const auto& s = pick_structure(f, structure);
    const auto dc = DolbeaultComplex::adapted(f.algebra, s);
    if (degree > dc.n()) throw PreconditionError("degree exceeds complex dimension " + std::to_string(dc.n()));
    const auto h = dc.cohomology(degree);
    if (as_json) {
        json j = base("cohomology");
        j["algebra"] = f.algebra.name();
        j["structure"] = s.name();
        j["degree"] = degree;
        j["dim"] = h.dimension;
        j["kernel_dim"] = h.kernel_dim;
        j["image_rank"] = h.image_rank;
        json b = json::array();
        for (const auto& v : h.harmonic_basis) b.push_back({{"form", v.str()}, {"coefficients", vector_json(v.coeffs())}});
        j["harmonic_basis"] = b;
        j["gram"] = matrix_json(h.gram);
        emit(j);
        return kOk;
    }
    std::cout << "H^" << degree << " of " << f.algebra.name() << " with " << s.name() << '\n';
    std::cout << "dim = " << h.dimension << '\n';
    std::cout << "dim ker dbar = " << h.kernel_dim << ", rank of incoming dbar = " << h.image_rank << '\n';
    std::cout << "harmonic basis:\n";
    for (std::size_t i = 0; i < h.harmonic_basis.size(); ++i)
        std::cout << "  b" << i + 1 << " = " << h.harmonic_basis[i].str() << '\n';
    std::cout << "gram matrix:\n";
    print_matrix(h.gram);
    return kOk;
}

// ---------------------------------------------------------------- kuranishi

int cmd_kuranishi(const std::string& path, const std::string& structure, unsigned order, const std::string& at, bool as_json) {
    const auto f = read_alg(path);
    validate_lie(f.algebra);
    const auto& s = pick_structure(f, structure);
    const auto dc = DolbeaultComplex::adapted(f.algebra, s);
    const auto series = kuranishi_series(dc, order);
    const auto obs = obstructions(dc, series);
    bool higher_zero = true;
    for (unsigned r = 2; r <= order; ++r)
        if (!series.phi_r(r).is_zero()) higher_zero = false;
    auto vf = [](const VectorForm& v) { return v.str(); };

    json j = base("kuranishi");
    j["algebra"] = f.algebra.name();
    j["structure"] = s.name();
    j["order"] = order;
    json basis = json::array();
    for (const auto& b : series.basis) basis.push_back(b.str());
    j["basis"] = basis;
    j["basis_gram"] = matrix_json(series.basis_gram);
    json phi = json::array();
    for (unsigned r = 1; r <= order; ++r) {
        json terms = json::array();
        const auto pr = series.phi_r(r);
        for (const auto& [e, c] : pr.terms()) terms.push_back({{"monomial", monomial_string(e)}, {"value", c.str()}});
        phi.push_back({{"r", r}, {"terms", terms}});
    }
    j["phi"] = phi;
    j["higher_terms_vanish"] = higher_zero;
    json ob = json::array();
    for (std::size_t k = 0; k < obs.polys.size(); ++k)
        ob.push_back({{"gamma", obs.gamma[k].str()}, {"polynomial", polynomial_string(obs.polys[k])}});
    j["obstructions"] = ob;
    j["obstructions_vanish"] = obs.identically_zero();

    std::optional<DeformedStructure> def;
    std::optional<DeformationReport> rep;
    bool point_unobstructed = false, residual_zero = false;
    if (!at.empty()) {
        const auto t = parse_point(at);
        def = deform_structure(dc, series, t, s.name());
        rep = classify_deformation(f.algebra, *def);
        point_unobstructed = obs.vanish_at(t);
        residual_zero = mc_residual(dc, series, t).is_zero();
        json d;
        d["t"] = vector_json(Vector<Rational>(t));
        d["phi"] = def->phi.str();
        d["j"] = matrix_json(def->j.matrix());
        d["obstructions_vanish"] = point_unobstructed;
        d["mc_residual_zero"] = residual_zero;
        d["classification"] = {{"integrable", rep->integrable}, {"abelian", rep->abelian}, {"nilpotent", rep->nilpotent},
                               {"j_series_dims", rep->j_series_dims}};
        j["deformation"] = d;
    }
    if (as_json) {
        emit(j);
        return kOk;
    }

    std::cout << "Kuranishi series of " << f.algebra.name() << " with " << s.name() << ", order " << order << '\n';
    std::cout << "parameters t1..t" << series.params << " along:\n";
    for (std::size_t i = 0; i < series.basis.size(); ++i) std::cout << "  b" << i + 1 << " = " << series.basis[i].str() << '\n';
    for (unsigned r = 1; r <= order; ++r) {
        const auto p = series.phi_r(r);
        if (p.is_zero()) continue;
        std::cout << "phi_" << r << ":\n";
        for (const auto& [e, c] : p.terms()) std::cout << "  " << monomial_string(e) << ": " << vf(c) << '\n';
    }
    if (higher_zero) std::cout << "φ_r = 0 for r ≥ 2\n";
    if (obs.identically_zero()) {
        std::cout << "no obstructions\n";
    } else {
        std::cout << "obstructions:\n";
        for (std::size_t k = 0; k < obs.polys.size(); ++k)
            std::cout << "  f" << k + 1 << " = " << polynomial_string(obs.polys[k]) << "   [gamma" << k + 1 << " = " << obs.gamma[k].str()
                      << "]\n";
    }
    if (def) {
        std::cout << "deformation at t = (" << at << "):\n";
        std::cout << "  Phi(t) = " << def->phi.str() << '\n';
        std::cout << "  obstructions vanish at t: " << yes_no(point_unobstructed) << '\n';
        std::cout << "  Maurer-Cartan residual zero: " << yes_no(residual_zero) << '\n';
        std::cout << "  deformed J:\n";
        print_matrix(def->j.matrix(), "    ");
        std::cout << "  J-series dims " << dims_string(rep->j_series_dims) << '\n';
        std::cout << "classification: " << classification_line(*rep) << '\n';
    }
    return kOk;
}

// ---------------------------------------------------------------- abelian-locus

int cmd_abelian_locus(const std::string& path, const std::string& structure, bool as_json) {
    const auto f = read_alg(path);
    validate_lie(f.algebra);
    const auto& s = pick_structure(f, structure);
    const auto dc = DolbeaultComplex::adapted(f.algebra, s);
    const auto locus = infinitesimal_abelian_locus(dc);
    if (as_json) {
        json j = base("abelian-locus");
        j["algebra"] = f.algebra.name();
        j["structure"] = s.name();
        json b = json::array();
        for (const auto& v : locus.basis) b.push_back(v.str());
        j["h1_basis"] = b;
        j["dim"] = locus.dimension();
        json c = json::array();
        for (const auto& v : locus.coordinates) c.push_back(vector_json(v));
        j["locus"] = c;
        emit(j);
        return kOk;
    }
    std::cout << "H^1 basis:\n";
    for (std::size_t i = 0; i < locus.basis.size(); ++i) std::cout << "  b" << i + 1 << " = " << locus.basis[i].str() << '\n';
    std::cout << "infinitesimal abelian locus: dim = " << locus.dimension() << " of " << locus.basis.size() << '\n';
    for (const auto& v : locus.coordinates) std::cout << "  " << vector_string(v) << '\n';
    return kOk;
}

// ---------------------------------------------------------------- catalog

int cmd_catalog(const std::string& name, const std::string& s, const std::string& t, std::size_t n, bool as_json) {
    if (name.empty()) {
        if (as_json) {
            json j = base("catalog");
            j["entries"] = catalog_names();
            emit(j);
        } else {
            std::cout << "h9      6-dim 3-step algebra with an abelian structure\n";
            std::cout << "h15     6-dim 3-step algebra with an abelian structure\n";
            std::cout << "n10     10-dim algebra with structures J_{s,t} (--s, --t; t^2 != s^2)\n";
            std::cout << "torus   abelian R^{2n} with the standard structure (--n)\n";
        }
        return kOk;
    }
    CatalogParams p;
    try {
        p.s = parse_rational(s);
        p.t = parse_rational(t);
    } catch (const std::invalid_argument& e) {
        throw ParseError(1, 1, std::string("catalog parameter: ") + e.what());
    }
    p.n = n;
    const auto e = catalog_get(name, p);
    std::vector<std::string> comments = {"catalog entry " + e.name};
    for (const auto& d : e.printed_differentials) comments.push_back(d);
    const std::string text = emit_alg(e.algebra, e.structures, comments);
    if (as_json) {
        json j = base("catalog");
        j["name"] = e.name;
        j["alg"] = text;
        emit(j);
    } else {
        std::cout << text;
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariant complex structures on nilpotent Lie algebras"};
    app.require_subcommand(1);
    bool as_json = false;
    std::string file, structure;
    std::size_t degree = 1;
    unsigned order = 6;
    std::string at;
    std::string cat_name, cat_s = "1", cat_t = "0";
    std::size_t cat_n = 3;

    auto add_file = [&](CLI::App* c) {
        c->add_option("file", file, "algebra file (.alg)")->required();
        c->add_option("--structure", structure, "structure block to use (default: first)");
        c->add_flag("--json", as_json, "machine-readable output");
    };
    auto* validate = app.add_subcommand("validate", "Jacobi, nilpotency, J^2 = -I, integrability, abelian, J-nilpotent");
    add_file(validate);
    auto* series = app.add_subcommand("series", "ascending series and adapted frame");
    add_file(series);
    auto* cohomology = app.add_subcommand("cohomology", "Dolbeault cohomology of the holomorphic tangent complex");
    add_file(cohomology);
    cohomology->add_option("--degree", degree, "degree K")->required();
    auto* kuranishi = app.add_subcommand("kuranishi", "Kuranishi series, obstructions and deformed structures");
    add_file(kuranishi);
    kuranishi->add_option("--order", order, "truncation order")->required()->check(CLI::Range(1u, 64u));
    kuranishi->add_option("--at", at, "parameter point t1,...,tN (rationals)");
    auto* locus = app.add_subcommand("abelian-locus", "infinitesimal abelian locus in H^1");
    add_file(locus);
    auto* catalog = app.add_subcommand("catalog", "list built-in algebras or emit one as an .alg file");
    catalog->add_option("name", cat_name, "entry name");
    catalog->add_option("--s", cat_s, "n10 parameter s");
    catalog->add_option("--t", cat_t, "n10 parameter t");
    catalog->add_option("--n", cat_n, "torus complex dimension");
    catalog->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    try {
        if (*validate) return cmd_validate(file, structure, as_json);
        if (*series) return cmd_series(file, structure, as_json);
        if (*cohomology) return cmd_cohomology(file, structure, degree, as_json);
        if (*kuranishi) return cmd_kuranishi(file, structure, order, at, as_json);
        if (*locus) return cmd_abelian_locus(file, structure, as_json);
        if (*catalog) return cmd_catalog(cat_name, cat_s, cat_t, cat_n, as_json);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const ValidationError& e) {
        std::cerr << "validation failed: " << e.what() << '\n';
        return kValidation;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << '\n';
        return kPrecondition;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParse;
    }
    return kOk;
}
