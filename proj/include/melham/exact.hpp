#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace melham {

// Arbitrary-precision signed integer. Everything identity-bearing in this
// library runs on exact arithmetic; no floating point appears in any math path.
using BigInt = boost::multiprecision::cpp_int;

// Exact rational, kept in lowest terms with positive denominator, so
// structural equality coincides with mathematical equality.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt int_pow(const BigInt& base, long exponent) {
    if (exponent < 0) throw std::domain_error("int_pow: negative exponent on an integer base");
    if (exponent == 0) return 1;  // includes 0^0 = 1
    return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

// num/den as a normalized rational; the two-argument cpp_rational constructor
// rejects negative denominators, so route through exact division instead.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational r(num);
    r /= den;
    return r;
}

// base^e for any integer e; e < 0 requires base != 0.
inline Rational rational_pow(const Rational& base, long exponent) {
    if (exponent == 0) return 1;
    if (exponent < 0) {
        if (base == 0) throw std::domain_error("rational_pow: negative exponent on zero");
        return rational_pow(Rational(1) / base, -exponent);
    }
    return make_rational(int_pow(numerator(base), exponent), int_pow(denominator(base), exponent));
}

// Combinatorial binomial coefficient: zero outside 0 <= k <= n. Every summation
// here only ever indexes within-range binomials, and the zero convention keeps
// loop bounds forgiving.
inline BigInt binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is a binomial coefficient at every step
    }
    return r;
}

inline BigInt factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    BigInt r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline std::string to_decimal_string(const BigInt& v) { return v.str(); }

inline std::string to_decimal_string(const Rational& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace melham
