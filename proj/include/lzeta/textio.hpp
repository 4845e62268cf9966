// Text form of exact scalars.  Canonical grammar, round-trip lossless:
//   scalar   := gaussian | gaussian "+(" gaussian ")*sqrt(" p ")"
//   gaussian := rat | rat sign urat "i" | rat "i"
//   rat      := "-"? digits ("/" digits)?
// Examples: "3", "-1/2", "3/4+1/2i", "0-2i", "5i", "1+(1/2)*sqrt(5)".
#pragma once

#include <cctype>
#include <string>

#include "errors.hpp"
#include "scalar.hpp"

namespace lzeta {

inline std::string to_string(const mpq_class &q) { return q.get_str(); }

inline std::string to_string(const GaussianRational &g) {
    if (sgn(g.im) == 0) return to_string(g.re);
    if (sgn(g.re) == 0) return to_string(g.im) + "i";
    std::string s = to_string(g.re);
    if (sgn(g.im) > 0)
        s += "+" + to_string(g.im) + "i";
    else
        s += "-" + to_string(mpq_class(-g.im)) + "i";
    return s;
}

inline std::string to_string(const Scalar &v) {
    if (v.is_rational_part_only()) return to_string(v.a);
    return to_string(v.a) + "+(" + to_string(v.b) + ")*sqrt(" + std::to_string(v.p) + ")";
}

namespace detail {

struct TextCursor {
    const std::string &s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool eat_word(const char *w) {
        skip_ws();
        size_t k = 0;
        while (w[k] && pos + k < s.size() && s[pos + k] == w[k]) ++k;
        if (w[k]) return false;
        pos += k;
        return true;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
};

inline mpq_class parse_rat(TextCursor &c) {
    c.skip_ws();
    size_t start = c.pos;
    if (c.pos < c.s.size() && c.s[c.pos] == '-') ++c.pos;
    size_t digits = 0;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
        ++c.pos;
        ++digits;
    }
    if (digits == 0) throw parse_error("scalar: expected a rational at '" + c.s.substr(start) + "'");
    if (c.pos < c.s.size() && c.s[c.pos] == '/') {
        ++c.pos;
        size_t den = 0;
        while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
            ++c.pos;
            ++den;
        }
        if (den == 0) throw parse_error("scalar: expected a denominator in '" + c.s + "'");
    }
    mpq_class q;
    if (q.set_str(c.s.substr(start, c.pos - start), 10) != 0)
        throw parse_error("scalar: malformed rational '" + c.s.substr(start, c.pos - start) + "'");
    if (q.get_den() == 0) throw parse_error("scalar: zero denominator in '" + c.s.substr(start, c.pos - start) + "'");
    q.canonicalize();
    return q;
}

inline GaussianRational parse_gaussian(TextCursor &c) {
    mpq_class first = parse_rat(c);
    if (c.eat('i')) return GaussianRational(mpq_class(0), first);
    c.skip_ws();
    if (c.pos < c.s.size() && (c.s[c.pos] == '+' || c.s[c.pos] == '-')) {
        size_t save = c.pos;
        bool neg = c.s[c.pos] == '-';
        ++c.pos;
        // Only an imaginary tail may follow inside a gaussian.
        mpq_class second;
        try {
            second = parse_rat(c);
        } catch (const parse_error &) {
            c.pos = save;
            return GaussianRational(first);
        }
        if (!c.eat('i')) {
            c.pos = save;
            return GaussianRational(first);
        }
        if (neg) second = -second;
        return GaussianRational(first, second);
    }
    return GaussianRational(first);
}

} // namespace detail

inline GaussianRational parse_gaussian(const std::string &text) {
    detail::TextCursor c{text};
    GaussianRational g = detail::parse_gaussian(c);
    if (!c.done()) throw parse_error("gaussian: trailing characters in '" + text + "'");
    return g;
}

inline Scalar parse_scalar(const std::string &text, unsigned long context_p = 0) {
    detail::TextCursor c{text};
    GaussianRational a = detail::parse_gaussian(c);
    c.skip_ws();
    if (c.done()) return Scalar(a);
    if (!c.eat('+') || !c.eat('('))
        throw parse_error("scalar: expected '+(' before the sqrt part in '" + text + "'");
    GaussianRational b = detail::parse_gaussian(c);
    if (!c.eat(')') || !c.eat('*') || !c.eat_word("sqrt") || !c.eat('('))
        throw parse_error("scalar: expected ')*sqrt(' in '" + text + "'");
    mpq_class pq = detail::parse_rat(c);
    if (!c.eat(')') || !c.done()) throw parse_error("scalar: trailing characters in '" + text + "'");
    if (pq.get_den() != 1 || pq <= 1) throw parse_error("scalar: sqrt argument must be an integer >= 2 in '" + text + "'");
    unsigned long p = mpz_class(pq.get_num()).get_ui();
    if (context_p != 0 && p != context_p)
        throw parse_error("scalar: sqrt argument disagrees with the ambient residue cardinality");
    return Scalar(a, b, p);
}

} // namespace lzeta
