// Exact scalar types and fraction parsing/printing.
//
// Int is an arbitrary-precision integer, Rational an always-reduced fraction
// with positive denominator. Every number that crosses a file-format or
// report boundary is rendered as a fraction string ("p" or "p/q"), never as
// floating point.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ordcone {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using QVector = std::vector<Rational>;

inline Int rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

// Floor division for arbitrary signs, b != 0.
inline Int floor_div(const Int& a, const Int& b) {
    if (b == 0) throw std::invalid_argument("floor_div: division by zero");
    Int q = a / b;  // truncates toward zero
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

inline Int rational_floor(const Rational& q) { return floor_div(rat_num(q), rat_den(q)); }

inline Int rational_ceil(const Rational& q) { return ceil_div(rat_num(q), rat_den(q)); }

// Parses "p" or "p/q" with optional leading sign on p; q must be a positive
// integer literal. Anything else is rejected.
inline Rational parse_rational(std::string_view text) {
    const auto fail = [&](const char* why) {
        throw std::invalid_argument("malformed fraction '" + std::string(text) + "': " + why);
    };
    if (text.empty()) fail("empty");
    std::size_t pos = 0;
    if (text[pos] == '+' || text[pos] == '-') ++pos;
    std::size_t num_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == num_begin) fail("missing digits");
    Int num(std::string(text.substr(0, pos)));
    if (pos == text.size()) return Rational(num);
    if (text[pos] != '/') fail("unexpected character");
    ++pos;
    std::size_t den_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_begin || pos != text.size()) fail("malformed denominator");
    Int den(std::string(text.substr(den_begin)));
    if (den == 0) fail("zero denominator");
    return Rational(num, den);
}

inline Int parse_integer(std::string_view text) {
    Rational q = parse_rational(text);
    if (rat_den(q) != 1)
        throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
    return rat_num(q);
}

inline std::string fraction_string(const Rational& q) {
    if (rat_den(q) == 1) return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

inline std::string fraction_string(const Int& n) { return n.str(); }

// --- small exact-vector helpers over Rational -------------------------------

inline Rational q_dot(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("q_dot: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool q_is_zero(const QVector& v) {
    for (const Rational& x : v)
        if (x != 0) return false;
    return true;
}

inline QVector q_add(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("q_add: dimension mismatch");
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline QVector q_sub(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("q_sub: dimension mismatch");
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline QVector q_scale(const Rational& c, const QVector& v) {
    QVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

inline std::string q_vector_string(const QVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += fraction_string(v[i]);
    }
    s += ")";
    return s;
}

}  // namespace ordcone
