#pragma once

#include <stdexcept>

#include "exact.hpp"
#include "poly.hpp"

namespace melham::oracle {

// Brute-force reference sums. Everything here is direct summation of powers
// with locally recomputed Fibonacci/Lucas values; nothing is shared with the
// closed-form side beyond exact arithmetic, so failure modes stay independent.

// sum_{k=1}^{n} (F_{2k})^(2m+1)
inline BigInt sum_fib_odd_powers(long m, long n) {
    if (m < 1 || n < 1) throw std::invalid_argument("sum_fib_odd_powers: needs m, n >= 1");
    BigInt prev = 0, cur = 1;  // F_0, F_1
    BigInt total = 0;
    for (long i = 2; i <= 2 * n; ++i) {
        BigInt next = cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
        if (i % 2 == 0) total += int_pow(cur, 2 * m + 1);
    }
    return total;
}

// sum_{j=1}^{n} (L_{2j})^(2m+1)
inline BigInt sum_lucas_odd_powers(long m, long n) {
    if (m < 1 || n < 1) throw std::invalid_argument("sum_lucas_odd_powers: needs m, n >= 1");
    BigInt prev = 2, cur = 1;  // L_0, L_1
    BigInt total = 0;
    for (long i = 2; i <= 2 * n; ++i) {
        BigInt next = cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
        if (i % 2 == 0) total += int_pow(cur, 2 * m + 1);
    }
    return total;
}

// sum_{j=1}^{n} (F_{2j}(x))^(2m+1)
inline IntPoly sum_fibpoly_powers(long m, long n) {
    if (m < 1 || n < 1) throw std::invalid_argument("sum_fibpoly_powers: needs m, n >= 1");
    const IntPoly x = IntPoly::variable();
    IntPoly prev, cur = IntPoly::constant(1);  // F_0(x), F_1(x)
    IntPoly total;
    for (long i = 2; i <= 2 * n; ++i) {
        IntPoly next = x * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
        if (i % 2 == 0) total += cur.pow(2 * m + 1);
    }
    return total;
}

}  // namespace melham::oracle
