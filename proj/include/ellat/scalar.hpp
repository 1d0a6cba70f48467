#pragma once
// Exact scalars: arbitrary-precision integers and sparse multivariate
// polynomials with integer coefficients over named parameters.  An integer
// is represented as a polynomial with no parameters, so one type covers
// both the concrete and the symbolic gram matrices.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ellat {

using Integer = mpz_class;
using Rational = mpq_class;

// Monomial: parameter name -> exponent (> 0).  Ordered map gives a
// canonical form for free.
using Monomial = std::map<std::string, unsigned>;

namespace detail {

inline unsigned monomial_degree(const Monomial& m) {
    unsigned d = 0;
    for (const auto& [name, e] : m) d += e;
    return d;
}

// Print order: total degree descending, then lex on the exponent vectors,
// so e.g. A^2 comes before A*B which comes before B^2.
inline bool monomial_before(const Monomial& a, const Monomial& b) {
    const unsigned da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da > db;
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second > ib->second;
        ++ia;
        ++ib;
    }
    return ib != b.end();
}

}  // namespace detail

class Scalar {
public:
    Scalar() = default;
    Scalar(long v) { if (v != 0) terms_[Monomial{}] = Integer(v); }
    Scalar(int v) : Scalar(long(v)) {}
    Scalar(Integer v) { if (v != 0) terms_[Monomial{}] = std::move(v); }

    static Scalar variable(const std::string& name) {
        if (name.empty()) throw std::invalid_argument("Scalar: empty parameter name");
        Scalar s;
        s.terms_[Monomial{{name, 1u}}] = 1;
        return s;
    }

    bool is_zero() const { return terms_.empty(); }

    // True when no parameter occurs (the constant, possibly zero, case).
    bool is_integer() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    Integer integer_value() const {
        if (terms_.empty()) return Integer(0);
        if (!is_integer()) throw std::invalid_argument("Scalar: not an integer: " + str());
        return terms_.begin()->second;
    }

    Scalar operator-() const {
        Scalar r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    Scalar& operator+=(const Scalar& o) {
        for (const auto& [m, c] : o.terms_) {
            Integer& t = terms_[m];
            t += c;
            if (t == 0) terms_.erase(m);
        }
        return *this;
    }
    Scalar& operator-=(const Scalar& o) { return *this += (-o); }

    friend Scalar operator+(Scalar a, const Scalar& b) { a += b; return a; }
    friend Scalar operator-(Scalar a, const Scalar& b) { a -= b; return a; }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar r;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (const auto& [name, e] : mb) m[name] += e;
                Integer& t = r.terms_[m];
                t += ca * cb;
                if (t == 0) r.terms_.erase(m);
            }
        }
        return r;
    }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    // Canonical order, used for deterministic containers.
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.terms_ < b.terms_; }

    std::vector<std::string> parameters() const {
        std::map<std::string, bool> seen;
        for (const auto& [m, c] : terms_)
            for (const auto& [name, e] : m) seen[name] = true;
        std::vector<std::string> out;
        for (const auto& [name, b] : seen) out.push_back(name);
        return out;
    }

    // Substitute integer values for every parameter that occurs.
    Scalar evaluate(const std::map<std::string, Integer>& values) const {
        Scalar r;
        for (const auto& [m, c] : terms_) {
            Integer v = c;
            for (const auto& [name, e] : m) {
                auto it = values.find(name);
                if (it == values.end())
                    throw std::invalid_argument("Scalar::evaluate: unbound parameter " + name);
                for (unsigned k = 0; k < e; ++k) v *= it->second;
            }
            r += Scalar(v);
        }
        return r;
    }

    // Canonical text, e.g. "2*c + d - 1" or "-2*A^2 - 4*A*B".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Monomial, Integer>> ts(terms_.begin(), terms_.end());
        std::sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
            return detail::monomial_before(x.first, y.first);
        });
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : ts) {
            Integer a = abs(c);
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            const bool unit = (a == 1);
            if (!unit || m.empty()) os << a.get_str();
            bool star = !unit && !m.empty();
            for (const auto& [name, e] : m) {
                if (star) os << "*";
                os << name;
                if (e > 1) os << "^" << e;
                star = true;
            }
        }
        return os.str();
    }

    static Scalar parse(const std::string& text);

private:
    std::map<Monomial, Integer> terms_;  // invariant: no zero coefficients
};

namespace detail {

// Recursive-descent parser for the canonical polynomial text.
class ScalarParser {
public:
    explicit ScalarParser(const std::string& s) : s_(s) {}

    Scalar run() {
        Scalar r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("Scalar::parse: " + what + " in \"" + s_ + "\"");
    }
    void skip_ws() { while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_; }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    Scalar expr() {
        Scalar r = eat('-') ? -term() : term();
        for (;;) {
            if (eat('+')) r += term();
            else if (eat('-')) r -= term();
            else return r;
        }
    }

    Scalar term() {
        Scalar r = factor();
        while (eat('*')) r *= factor();
        return r;
    }

    Scalar factor() {
        Scalar base = atom();
        if (eat('^')) {
            skip_ws();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("exponent expected");
            unsigned long e = std::stoul(s_.substr(start, pos_ - start));
            Scalar r(1);
            for (unsigned long k = 0; k < e; ++k) r *= base;
            return r;
        }
        return base;
    }

    Scalar atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar r = expr();
            if (!eat(')')) fail("')' expected");
            return r;
        }
        if (c == '-') { ++pos_; return -atom(); }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Scalar(Integer(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            return Scalar::variable(s_.substr(start, pos_ - start));
        }
        fail("unexpected character");
    }
};

}  // namespace detail

inline Scalar Scalar::parse(const std::string& text) {
    return detail::ScalarParser(text).run();
}

}  // namespace ellat
