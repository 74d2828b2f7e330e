#pragma once

// Exact scalars and vectors. Integers are GMP integers, rationals are GMP
// rationals kept in canonical (reduced, positive denominator) form.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ehrkit/errors.hpp"

namespace ehrkit {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer ceil_of(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline bool is_integral(std::span<const Rational> v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return is_integral(q); });
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// den(c): lcm of the reduced denominators of the coordinates (1 for the empty vector).
inline Integer den(std::span<const Rational> v) {
    Integer d = 1;
    for (const auto& q : v) d = lcm(d, q.get_den());
    return d;
}

inline Integer den(const Rational& q) { return q.get_den(); }

/// Accepts an optional sign, decimal digits and an optional "/" followed by a
/// positive decimal integer.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] { return ParseError("malformed rational: '" + std::string(text) + "'"); };
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
    if (digits == 0) throw fail();
    std::string num(text.substr(0, i));
    if (num.front() == '+') num.erase(0, 1);
    std::string dens = "1";
    if (i < text.size()) {
        if (text[i] != '/') throw fail();
        ++i;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start || i != text.size()) throw fail();
        dens = std::string(text.substr(start));
    }
    Integer n(num, 10), d(dens, 10);
    if (d == 0) throw fail();
    return make_rational(n, d);
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// "p/q", or "p" when integral.
inline std::string to_string(const Rational& q) {
    if (is_integral(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline RatVector to_rational(std::span<const Integer> v) {
    return RatVector(v.begin(), v.end());
}

inline Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot product of vectors of different length");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot product of vectors of different length");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rational dot(std::span<const Integer> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot product of vectors of different length");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

template <class T>
std::vector<T> operator+(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sum of different lengths");
    std::vector<T> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

template <class T>
std::vector<T> operator-(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector difference of different lengths");
    std::vector<T> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

template <class T>
std::vector<T> operator-(const std::vector<T>& a) {
    std::vector<T> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

template <class T, class S>
std::vector<T> scaled(const std::vector<T>& a, const S& s) {
    std::vector<T> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

inline RatVector operator+(const RatVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sum of different lengths");
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

/// Componentwise fractional part, each coordinate in [0, 1).
inline RatVector fractional_part(std::span<const Rational> v) {
    RatVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] - floor_of(v[i]);
    return r;
}

inline bool is_zero(std::span<const Integer> v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& z) { return z == 0; });
}

inline bool is_zero(std::span<const Rational> v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& z) { return z == 0; });
}

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
inline IntVector primitive(IntVector v) {
    Integer g = 0;
    for (const auto& z : v) g = gcd(g, z);
    if (g > 1)
        for (auto& z : v) z /= g;
    return v;
}

/// Smallest positive multiple of v that is an integer vector, divided to be primitive.
inline IntVector primitive_multiple(std::span<const Rational> v) {
    Integer l = den(v);
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational s = v[i] * l;
        r[i] = s.get_num();
    }
    return primitive(std::move(r));
}

/// Lexicographic comparison, used wherever a deterministic ordering is needed.
template <class T>
bool lex_less(const std::vector<T>& a, const std::vector<T>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline std::string to_string(std::span<const Rational> v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

inline std::string to_string(std::span<const Integer> v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

} // namespace ehrkit
