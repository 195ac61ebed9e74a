#ifndef HELLYCONE_RATIONAL_HPP
#define HELLYCONE_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace hellycone {

// Exact arbitrary-precision rational. GMP keeps results of arithmetic in
// canonical form (denominator > 0, gcd(|num|, den) = 1) as long as the
// operands are canonical, so construction goes through make_rational().
using Rational = mpq_class;

// RationalVector: a point/direction in R^d with exact coordinates.
using Vec = std::vector<Rational>;

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Signals a broken internal invariant (a bug), never a bad input.
struct invariant_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw input_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rational r{mpz_class(s)};
            return r;
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw input_error("rational with zero denominator: " + s);
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw input_error("malformed rational: " + s);
    }
}

inline std::string to_string(const Rational& r) {
    return r.get_str();
}

inline Vec vec_of(std::initializer_list<long> xs) {
    Vec v;
    v.reserve(xs.size());
    for (long x : xs) v.emplace_back(make_rational(x));
    return v;
}

inline bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline Vec unit_vec(std::size_t d, std::size_t i, long sign = 1) {
    Vec v(d, Rational(0));
    v[i] = make_rational(sign);
    return v;
}

inline Rational dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw input_error("dot: dimension mismatch");
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec negated(const Vec& v) {
    Vec r(v);
    for (auto& x : r) x = -x;
    return r;
}

}  // namespace hellycone

#endif  // HELLYCONE_RATIONAL_HPP
