#pragma once

#include <cstdlib>
#include <stdexcept>

#include "exact.hpp"
#include "poly.hpp"

namespace melham {

enum class Family { fibonacci, lucas };

// F_n or L_n for any integer n. The recurrence runs forward from the standard
// initial values; negative indices come from F_{-n} = (-1)^(n+1) F_n and
// L_{-n} = (-1)^n L_n (the specialization at x = 1 of the polynomial rule).
inline BigInt family_number(Family f, long n) {
    const long a = std::labs(n);
    BigInt prev = (f == Family::fibonacci) ? 0 : 2;
    BigInt cur = 1;
    if (a == 0) return prev;
    for (long i = 2; i <= a; ++i) {
        BigInt next = cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    if (n < 0) {
        const bool flip = (f == Family::fibonacci) ? (a % 2 == 0) : (a % 2 != 0);
        if (flip) return -cur;
    }
    return cur;
}

inline BigInt fib_number(long n) { return family_number(Family::fibonacci, n); }
inline BigInt lucas_number(long n) { return family_number(Family::lucas, n); }

// F_n(x) or L_n(x) for any integer n: F_n = x F_{n-1} + F_{n-2} from
// F_0 = 0, F_1 = 1 (Lucas: L_0 = 2, L_1 = x), with the same negative-index
// parity rules as the numbers.
inline IntPoly family_poly(Family f, long n) {
    const long a = std::labs(n);
    IntPoly prev = (f == Family::fibonacci) ? IntPoly() : IntPoly::constant(2);
    IntPoly cur = (f == Family::fibonacci) ? IntPoly::constant(1) : IntPoly::variable();
    if (a == 0) return prev;
    const IntPoly x = IntPoly::variable();
    for (long i = 2; i <= a; ++i) {
        IntPoly next = x * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    if (n < 0) {
        const bool flip = (f == Family::fibonacci) ? (a % 2 == 0) : (a % 2 != 0);
        if (flip) return -cur;
    }
    return cur;
}

inline IntPoly fib_poly(long n) { return family_poly(Family::fibonacci, n); }
inline IntPoly lucas_poly(long n) { return family_poly(Family::lucas, n); }

// Koshy's closed-form expansion of the Fibonacci polynomial:
//   F_n(x) = sum_{i=0}^{floor((n-1)/2)} C(n-i-1, i) x^(n-2i-1),  n >= 1.
inline IntPoly koshy_expansion(long n) {
    if (n < 1) throw std::invalid_argument("koshy_expansion: needs n >= 1");
    IntPoly out;
    for (long i = 0; n - 2 * i - 1 >= 0; ++i)
        out += IntPoly::monomial(static_cast<std::size_t>(n - 2 * i - 1), binom(n - i - 1, i));
    return out;
}

// Power of an odd-indexed Lucas polynomial as a binomial-weighted combination
// of Lucas polynomials:
//   (L_{2k+1}(x))^j = (1/2) sum_{l=0}^{j} C(j,l) (-1)^(l(2k+1)) L_{(j-2l)(2k+1)}(x).
// The half-sum always has even integer coefficients, so the result stays in Z[x].
inline IntPoly lucas_power_expansion(long j, long k) {
    if (j < 0 || k < 0) throw std::invalid_argument("lucas_power_expansion: needs j, k >= 0");
    const long idx = 2 * k + 1;
    IntPoly sum;
    for (long l = 0; l <= j; ++l) {
        IntPoly term = lucas_poly((j - 2 * l) * idx) * binom(j, l);
        // (-1)^(l(2k+1)) has the parity of l since 2k+1 is odd
        if (l % 2 != 0) term = -term;
        sum += term;
    }
    std::vector<BigInt> halved;
    halved.reserve(sum.coefficients().size());
    for (const BigInt& c : sum.coefficients()) {
        if (c % 2 != 0)
            throw std::logic_error("lucas_power_expansion: odd coefficient in the half-sum");
        halved.push_back(c / 2);
    }
    return IntPoly(std::move(halved));
}

}  // namespace melham
