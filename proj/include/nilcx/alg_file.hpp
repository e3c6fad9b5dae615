#pragma once

// Text format:
//
//   # comment
//   algebra h9
//   dim 6
//   bracket e1 e2 = 1*e3
//   bracket e1 e3 = 1*e6 + -1/2*e5
//   structure J
//   J e1 = 1*e2
//
// Brackets list [e_i, e_j] for i < j; J lines give images of basis vectors and
// are completed by J(J e_i) = -e_i. Coefficients are integers or p/q, with an
// optional leading sign; "c*" may be omitted for c = 1.

#include <cctype>
#include <cstddef>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "frame.hpp"
#include "lie.hpp"

namespace nilcx {

struct AlgebraFile {
    LieAlgebra algebra;
    std::vector<AlmostComplexStructure> structures;

    const AlmostComplexStructure* structure(std::string_view name) const {
        for (const auto& s : structures)
            if (s.name() == name) return &s;
        return nullptr;
    }
};

namespace detail {

class LineScanner {
public:
    LineScanner(std::string_view text, std::size_t line) : s_(text), line_(line) {}

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, p_ + 1, what); }

    void skip_space() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }
    bool at_end() {
        skip_space();
        return p_ >= s_.size();
    }
    bool peek(char c) {
        skip_space();
        return p_ < s_.size() && s_[p_] == c;
    }
    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++p_;
    }
    std::string word() {
        skip_space();
        const std::size_t start = p_;
        while (p_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
        if (p_ == start) fail("expected a name");
        return std::string(s_.substr(start, p_ - start));
    }
    std::size_t integer() {
        skip_space();
        const std::size_t start = p_;
        while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
        if (p_ == start) fail("expected an integer");
        return std::stoul(std::string(s_.substr(start, p_ - start)));
    }
    /// e<k> with 1 <= k <= dim; returns 0-based index.
    std::size_t basis_vector(std::size_t dim) {
        skip_space();
        if (p_ >= s_.size() || s_[p_] != 'e') fail("expected a basis vector e<k>");
        ++p_;
        const std::size_t col = p_;
        if (p_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[p_]))) fail("expected an index after 'e'");
        const std::size_t k = integer();
        if (k < 1 || k > dim) throw ParseError(line_, col + 1, "index e" + std::to_string(k) + " out of range 1.." + std::to_string(dim));
        return k - 1;
    }
    /// c1*ek + c2*el ...; separators '+' or '-'.
    std::map<std::size_t, Rational> combination(std::size_t dim) {
        std::map<std::size_t, Rational> out;
        bool first = true;
        while (true) {
            int sign = 1;
            skip_space();
            if (!first) {
                if (p_ >= s_.size()) break;
                if (s_[p_] == '+') ++p_;
                else if (s_[p_] == '-') {
                    sign = -1;
                    ++p_;
                } else fail("expected '+' or '-' between terms");
            }
            first = false;
            skip_space();
            Rational c = 1;
            if (p_ < s_.size() && s_[p_] != 'e') {
                const std::size_t start = p_;
                if (s_[p_] == '+' || s_[p_] == '-') ++p_;
                while (p_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[p_])) || s_[p_] == '/')) ++p_;
                const std::string_view tok = s_.substr(start, p_ - start);
                if (tok == "-") c = -1;
                else if (tok == "+") c = 1;
                else {
                    try {
                        c = parse_rational(tok);
                    } catch (const std::exception&) {
                        p_ = start;
                        fail("bad coefficient '" + std::string(tok) + "'");
                    }
                    skip_space();
                    if (p_ < s_.size() && s_[p_] == '*') ++p_;
                    else fail("expected '*' after coefficient");
                }
            }
            const std::size_t k = basis_vector(dim);
            if (sign < 0) c = -c;
            out[k] += c;
            if (sgn(out[k]) == 0) out.erase(k);
        }
        return out;
    }

private:
    std::string_view s_;
    std::size_t line_;
    std::size_t p_ = 0;
};

} // namespace detail

inline AlgebraFile parse_alg(std::string_view text) {
    AlgebraFile out;
    std::string name;
    std::size_t dim = 0;
    bool have_dim = false;
    std::vector<LieAlgebra::Bracket> brackets;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    struct Block {
        std::string name;
        std::size_t line;
        std::map<std::size_t, Vector<Rational>> images;
    };
    std::vector<Block> blocks;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        detail::LineScanner sc(line, line_no);
        if (sc.at_end()) continue;
        const std::string kw = sc.word();
        if (kw == "algebra") {
            if (!name.empty()) sc.fail("duplicate 'algebra' line");
            name = sc.word();
        } else if (kw == "dim") {
            if (name.empty()) sc.fail("'dim' before 'algebra'");
            if (have_dim) sc.fail("duplicate 'dim' line");
            dim = sc.integer();
            have_dim = true;
        } else if (kw == "bracket") {
            if (!have_dim) sc.fail("'bracket' before 'dim'");
            if (!blocks.empty()) sc.fail("'bracket' after a structure block");
            const std::size_t i = sc.basis_vector(dim);
            const std::size_t j = sc.basis_vector(dim);
            if (i >= j) sc.fail("bracket requires i < j");
            if (!seen.insert({i, j}).second) sc.fail("duplicate bracket [e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) + "]");
            sc.expect('=');
            brackets.push_back({i, j, sc.combination(dim)});
            continue;
        } else if (kw == "structure") {
            if (!have_dim) sc.fail("'structure' before 'dim'");
            Block b{sc.word(), line_no, {}};
            for (const auto& other : blocks)
                if (other.name == b.name) sc.fail("duplicate structure '" + b.name + "'");
            blocks.push_back(std::move(b));
        } else if (kw == "J") {
            if (blocks.empty()) sc.fail("'J' line outside a structure block");
            const std::size_t i = sc.basis_vector(dim);
            sc.expect('=');
            const auto comb = sc.combination(dim);
            Vector<Rational> v(dim, Rational(0));
            for (const auto& [k, c] : comb) v[k] = c;
            if (!blocks.back().images.emplace(i, std::move(v)).second) sc.fail("duplicate image for e" + std::to_string(i + 1));
            continue;
        } else {
            sc.fail("unknown keyword '" + kw + "'");
        }
        if (!sc.at_end()) sc.fail("unexpected trailing text");
    }
    if (name.empty()) throw ParseError(line_no, 1, "missing 'algebra' line");
    if (!have_dim) throw ParseError(line_no, 1, "missing 'dim' line");
    out.algebra = LieAlgebra::from_brackets(name, dim, brackets);
    for (auto& b : blocks) {
        if (b.images.empty()) throw ParseError(b.line, 1, "structure '" + b.name + "' has no J lines");
        try {
            out.structures.push_back(AlmostComplexStructure::from_basis_images(dim, b.images, b.name));
        } catch (const ValidationError& e) {
            throw ValidationError("structure '" + b.name + "' (line " + std::to_string(b.line) + "): " + e.what());
        }
    }
    return out;
}

inline AlgebraFile read_alg(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_alg(ss.str());
}

/// "1*e3 + -1/2*e5"; "0" for the zero vector.
inline std::string combination_string(const Vector<Rational>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (sgn(v[k]) == 0) continue;
        if (!s.empty()) s += " + ";
        s += to_string(v[k]) + "*e" + std::to_string(k + 1);
    }
    return s.empty() ? "0" : s;
}

inline std::string emit_alg(const LieAlgebra& a, const std::vector<AlmostComplexStructure>& structures,
                            const std::vector<std::string>& comments = {}) {
    std::ostringstream os;
    for (const auto& c : comments) os << "# " << c << '\n';
    os << "algebra " << a.name() << '\n' << "dim " << a.dim() << '\n';
    for (const auto& b : a.brackets()) {
        Vector<Rational> v(a.dim(), Rational(0));
        for (const auto& [k, c] : b.value) v[k] = c;
        os << "bracket e" << b.i + 1 << " e" << b.j + 1 << " = " << combination_string(v) << '\n';
    }
    for (const auto& j : structures) {
        os << "structure " << j.name() << '\n';
        for (std::size_t i = 0; i < j.dim(); ++i) os << "J e" << i + 1 << " = " << combination_string(j.matrix().col(i)) << '\n';
    }
    return os.str();
}

} // namespace nilcx
