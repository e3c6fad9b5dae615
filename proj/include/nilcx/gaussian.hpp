#pragma once

#include <gmpxx.h>

#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace nilcx {

using Rational = mpq_class;

inline Rational conj(const Rational& x) { return x; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline std::string to_string(const Rational& x) { return x.get_str(); }

/// Parses "p", "-p" or "p/q" (whitespace trimmed). Throws std::invalid_argument.
inline Rational parse_rational(std::string_view text) {
    std::size_t b = 0, e = text.size();
    while (b < e && (text[b] == ' ' || text[b] == '\t')) ++b;
    while (e > b && (text[e - 1] == ' ' || text[e - 1] == '\t')) --e;
    std::string s(text.substr(b, e - b));
    if (s.empty()) throw std::invalid_argument("empty number");
    if (s.front() == '+') s.erase(0, 1);
    std::size_t i = (s.front() == '-') ? 1 : 0;
    bool slash = false;
    if (i == s.size()) throw std::invalid_argument("bad number '" + s + "'");
    for (; i < s.size(); ++i) {
        if (s[i] == '/') {
            if (slash || i + 1 == s.size()) throw std::invalid_argument("bad number '" + s + "'");
            slash = true;
        } else if (s[i] < '0' || s[i] > '9') {
            throw std::invalid_argument("bad number '" + s + "'");
        }
    }
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad number '" + s + "'");
    if (slash && sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator");
    q.canonicalize();
    return q;
}

/// Exact complex number with rational real and imaginary parts, i.e. an element of Q(i).
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {}                          // NOLINT(implicit)
    GaussianRational(int v) : re_(v) {}                           // NOLINT(implicit)
    GaussianRational(Rational re) : re_(std::move(re)) {}         // NOLINT(implicit)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    /// |z|^2 = re^2 + im^2.
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    GaussianRational conj() const { return {re_, -im_}; }

    GaussianRational inverse() const {
        Rational n = norm2();
        if (sgn(n) == 0) throw std::domain_error("division by zero in Q(i)");
        return {re_ / n, -im_ / n};
    }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        if (o.is_real()) {
            re_ *= o.re_;
            im_ *= o.re_;
            return *this;
        }
        Rational r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_real()) {
            if (sgn(o.re_) == 0) throw std::domain_error("division by zero in Q(i)");
            re_ /= o.re_;
            im_ /= o.re_;
            return *this;
        }
        return *this *= o.inverse();
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Lexicographic on (re, im); only used to make containers deterministic.
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        int c = cmp(a.re_, b.re_);
        return c != 0 ? c < 0 : cmp(a.im_, b.im_) < 0;
    }

    /// "3/2", "-i", "1/2+3*i", "-2*i".
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        if (sgn(re_) != 0) os << re_.get_str();
        if (sgn(im_) != 0) {
            if (sgn(re_) != 0 && sgn(im_) > 0) os << '+';
            if (im_ == 1) {
                os << 'i';
            } else if (im_ == -1) {
                os << "-i";
            } else {
                os << im_.get_str() << "*i";
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

private:
    Rational re_{0};
    Rational im_{0};
};

inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }
inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }
inline std::string to_string(const GaussianRational& z) { return z.str(); }

using Complex = GaussianRational;

} // namespace nilcx
