#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "check.hpp"
#include "exact.hpp"
#include "fib_lucas.hpp"
#include "gaussian.hpp"
#include "jet.hpp"
#include "poly.hpp"

namespace melham {

// Closed form for the i-th derivative of L_n(x) at x = 2I:
//   i = 0:            L_n(2I) = 2 I^n
//   1 <= i <= |n|:    |n| (i-1)! I^(n-i) C(|n|+i-1, 2i-1)
//   i > |n|:          0   (past the degree)
inline GaussianRational lucas_deriv_at_2I(long n, long i) {
    if (i < 0) throw std::invalid_argument("lucas_deriv_at_2I: needs i >= 0");
    const long a = std::labs(n);
    if (i == 0) return GaussianRational(2) * gaussian_i_pow(n);
    if (i > a) return {};
    const BigInt scale = BigInt(a) * factorial(i - 1) * binom(a + i - 1, 2 * i - 1);
    return GaussianRational(scale) * gaussian_i_pow(n - i);
}

// Verifies the two-term contiguous relation the closed form above satisfies,
//   h(n,i) = 2(2i+1)I / ((n-i)(n+i)) * h(n,i+1)   for 1 <= i < n,
// together with the anchor h(n,n) = n!. At i = n only the anchor applies.
inline IdentityCheck check_lucas_deriv_recurrence(long n, long i) {
    if (n < 1 || i < 1 || i > n)
        throw std::invalid_argument("check_lucas_deriv_recurrence: needs 1 <= i <= n");
    IdentityCheck c;
    c.name = "h_recurrence";
    c.params = {{"n", n}, {"i", i}};
    const GaussianRational anchor = lucas_deriv_at_2I(n, n);
    const GaussianRational anchor_expect{Rational(factorial(n))};
    if (i == n) {
        c.lhs = anchor.str();
        c.rhs = anchor_expect.str();
        c.pass = anchor == anchor_expect;
        return c;
    }
    const GaussianRational lhs = lucas_deriv_at_2I(n, i);
    const GaussianRational step{Rational(0), make_rational(2 * (2 * i + 1), (n - i) * (n + i))};
    const GaussianRational rhs = step * lucas_deriv_at_2I(n, i + 1);
    c.lhs = lhs.str();
    c.rhs = rhs.str();
    c.pass = lhs == rhs && anchor == anchor_expect;
    return c;
}

// i-th derivative of 1/L_index(x) at 2I computed two independent ways:
//   (a) Leslie's reciprocal-derivative formula
//         (1/f)^(i) = sum_{j=1}^{i} (-1)^j C(i+1, j+1) (f^j)^(i) / f^(j+1),
//       with (f^j)^(i)|_{2I} taken through the Lucas power expansion and the
//       per-term closed form lucas_deriv_at_2I — the same ingredient chain the
//       divisibility argument relies on, so a mismatch localizes the break;
//   (b) power-series inversion of the jet of L_index at 2I.
// index must be odd (the power expansion is for odd-indexed Lucas polynomials).
inline IdentityCheck check_leslie_reciprocal(long index, long i, long order) {
    if (index < 1 || index % 2 == 0)
        throw std::invalid_argument("check_leslie_reciprocal: needs an odd positive Lucas index");
    if (i < 1) throw std::invalid_argument("check_leslie_reciprocal: the reciprocal formula needs i >= 1");
    if (i > order) throw std::invalid_argument("check_leslie_reciprocal: needs i <= order");
    const long k = (index - 1) / 2;

    const GaussianRational f_at = GaussianRational(2) * gaussian_i_pow(index);
    if (f_at.is_zero()) throw std::domain_error("check_leslie_reciprocal: pole at 2I");

    GaussianRational leslie;
    for (long j = 1; j <= i; ++j) {
        // (f^j)^(i)|_{2I} = (1/2) sum_l C(j,l) (-1)^l h((j-2l)(2k+1), i)
        GaussianRational power_deriv;
        for (long l = 0; l <= j; ++l) {
            GaussianRational term =
                GaussianRational(binom(j, l)) * lucas_deriv_at_2I((j - 2 * l) * index, i);
            power_deriv += (l % 2 != 0) ? -term : term;
        }
        power_deriv *= GaussianRational(make_rational(1, 2));
        GaussianRational term = GaussianRational(binom(i + 1, j + 1)) * power_deriv / f_at.pow(j + 1);
        leslie += (j % 2 != 0) ? -term : term;
    }

    const Jet inv = jet_of_poly(lucas_poly(index), GaussianRational::two_i(), order).inverse();
    const GaussianRational by_jet = inv.derivative(static_cast<std::size_t>(i));

    IdentityCheck c;
    c.name = "leslie";
    c.params = {{"index", index}, {"i", i}};
    c.lhs = leslie.str();
    c.rhs = by_jet.str();
    c.pass = leslie == by_jet;
    return c;
}

// Closed form against independent jet differentiation of the recurrence-built
// polynomial: one record covers every order 0 <= i <= |n| (plus i = |n|+1,
// which must vanish past the degree).
inline IdentityCheck check_lucas_deriv_closed_form(long n) {
    const long a = std::labs(n);
    const Jet jet = jet_of_poly(lucas_poly(n), GaussianRational::two_i(), a + 1);
    IdentityCheck c;
    c.name = "lucas_deriv";
    c.params = {{"n", n}};
    c.pass = true;
    for (long i = 0; i <= a + 1; ++i) {
        const GaussianRational closed = lucas_deriv_at_2I(n, i);
        const GaussianRational raw = jet.derivative(static_cast<std::size_t>(i));
        if (closed != raw) {
            c.pass = false;
            c.lhs = closed.str();
            c.rhs = raw.str();
            c.detail = "first mismatch at i=" + std::to_string(i);
            return c;
        }
    }
    c.lhs = c.rhs = "agree for 0 <= i <= " + std::to_string(a + 1);
    return c;
}

enum class ChuLi { L, F, O, LL, FF, lucasid };

inline const char* chu_li_variant_name(ChuLi v) {
    switch (v) {
        case ChuLi::L: return "L";
        case ChuLi::F: return "F";
        case ChuLi::O: return "O";
        case ChuLi::LL: return "LL";
        case ChuLi::FF: return "FF";
        default: return "lucasid";
    }
}

// The six binomial identities behind the factor theorem, checked exactly:
//   L:  sum_i x^(2i+1)/(2i+1) C(k+i,2i)            = L_{2k+1}(x)/(2k+1)
//   F:  sum_i (-1)^i (x^2+4)^i/(2i+1) C(k+i,2i)    = (-1)^k F_{2k+1}(x)/(2k+1)
//   O:  x * sum_i (-1)^i (x^2+4)^i C(k+i,2i)       = (-1)^k L_{2k+1}(x)
//   LL/FF/lucasid: the x = 1 specializations of the three above.
// Variant O is compared after clearing the 1/x, keeping everything polynomial.
inline IdentityCheck check_chu_li(long k, ChuLi variant) {
    if (k < 0) throw std::invalid_argument("check_chu_li: needs k >= 0");
    IdentityCheck c;
    c.name = std::string("chu_li_") + chu_li_variant_name(variant);
    c.params = {{"k", k}};
    const bool k_odd = (k % 2 != 0);

    switch (variant) {
        case ChuLi::L: {
            RatPoly lhs;
            for (long i = 0; i <= k; ++i)
                lhs += RatPoly::monomial(static_cast<std::size_t>(2 * i + 1),
                                         make_rational(binom(k + i, 2 * i), 2 * i + 1));
            const RatPoly rhs = to_rational(lucas_poly(2 * k + 1)) * make_rational(1, 2 * k + 1);
            c.lhs = lhs.str();
            c.rhs = rhs.str();
            c.pass = lhs == rhs;
            return c;
        }
        case ChuLi::F: {
            const RatPoly base = to_rational(IntPoly(std::vector<BigInt>{4, 0, 1}));  // x^2 + 4
            RatPoly lhs, pw = RatPoly::constant(1);
            for (long i = 0; i <= k; ++i) {
                Rational s = make_rational(binom(k + i, 2 * i), 2 * i + 1);
                if (i % 2 != 0) s = -s;
                lhs += pw * s;
                pw *= base;
            }
            RatPoly rhs = to_rational(fib_poly(2 * k + 1)) * make_rational(1, 2 * k + 1);
            if (k_odd) rhs = -rhs;
            c.lhs = lhs.str();
            c.rhs = rhs.str();
            c.pass = lhs == rhs;
            return c;
        }
        case ChuLi::O: {
            const IntPoly base(std::vector<BigInt>{4, 0, 1});
            IntPoly sum, pw = IntPoly::constant(1);
            for (long i = 0; i <= k; ++i) {
                IntPoly term = pw * binom(k + i, 2 * i);
                sum += (i % 2 != 0) ? -term : term;
                pw *= base;
            }
            const IntPoly lhs = IntPoly::variable() * sum;
            IntPoly rhs = lucas_poly(2 * k + 1);
            if (k_odd) rhs = -rhs;
            c.lhs = lhs.str();
            c.rhs = rhs.str();
            c.pass = lhs == rhs;
            return c;
        }
        case ChuLi::LL: {
            Rational lhs;
            for (long i = 0; i <= k; ++i) lhs += make_rational(binom(k + i, 2 * i), 2 * i + 1);
            const Rational rhs = make_rational(lucas_number(2 * k + 1), 2 * k + 1);
            c.lhs = to_decimal_string(lhs);
            c.rhs = to_decimal_string(rhs);
            c.pass = lhs == rhs;
            return c;
        }
        case ChuLi::FF: {
            Rational lhs;
            BigInt pw = 1;  // (-5)^i
            for (long i = 0; i <= k; ++i) {
                lhs += make_rational(pw * binom(k + i, 2 * i), 2 * i + 1);
                pw *= -5;
            }
            Rational rhs = make_rational(fib_number(2 * k + 1), 2 * k + 1);
            if (k_odd) rhs = -rhs;
            c.lhs = to_decimal_string(lhs);
            c.rhs = to_decimal_string(rhs);
            c.pass = lhs == rhs;
            return c;
        }
        default: {  // lucasid
            BigInt lhs = 0, pw = 1;
            for (long i = 0; i <= k; ++i) {
                lhs += pw * binom(k + i, 2 * i);
                pw *= -5;
            }
            BigInt rhs = lucas_number(2 * k + 1);
            if (k_odd) rhs = -rhs;
            c.lhs = lhs.str();
            c.rhs = rhs.str();
            c.pass = lhs == rhs;
            return c;
        }
    }
}

// F_{2k+1} evaluated at I*sqrt(x^2+4): the Fibonacci polynomial of odd index
// has only even powers, so substituting t = -(x^2+4) for the squared argument
// stays polynomial and yields
//   sum_i C(2k-i, i) (-1)^(k-i) (x^2+4)^(k-i)  =  (-1)^k L_{2k+1}(x) / x,
// compared here after multiplying through by x.
inline IdentityCheck check_conjugate_substitution(long k) {
    if (k < 0) throw std::invalid_argument("check_conjugate_substitution: needs k >= 0");
    const IntPoly base(std::vector<BigInt>{4, 0, 1});
    IntPoly sum, pw = IntPoly::constant(1);  // pw = (x^2+4)^(k-i), built from i = k downward
    for (long i = k; i >= 0; --i) {
        IntPoly term = pw * binom(2 * k - i, i);
        sum += ((k - i) % 2 != 0) ? -term : term;
        pw *= base;
    }
    const IntPoly lhs = IntPoly::variable() * sum;
    IntPoly rhs = lucas_poly(2 * k + 1);
    if (k % 2 != 0) rhs = -rhs;

    IdentityCheck c;
    c.name = "conjugate_substitution";
    c.params = {{"k", k}};
    c.lhs = lhs.str();
    c.rhs = rhs.str();
    c.pass = lhs == rhs;
    return c;
}

// The key alternating double-binomial sum
//   sum_{j=s}^{m} (-1)^j C(2m+1, m-j) C(j+s, 2s) q(2j+1)
// with the argument polynomial supplied in t = 2j+1. Vanishes whenever q is
// odd of degree < 2m-2s+1; the caller decides what to make of nonzero values
// (they do occur for even q — see key_sum_even_q in the verification registry).
inline Rational key_sum(long m, long s, const RatPoly& q) {
    if (!(0 <= s && s < m)) throw std::invalid_argument("key_sum: needs 0 <= s < m");
    Rational acc;
    for (long j = s; j <= m; ++j) {
        Rational term = Rational(binom(2 * m + 1, m - j) * binom(j + s, 2 * s));
        term *= q.eval(Rational(2 * j + 1));
        acc += (j % 2 != 0) ? -term : term;
    }
    return acc;
}

// sum_{j=0}^{k} (-1)^(k-j) C(k,j) j^n: zero for n < k, k! at n = k (the
// finite-difference identity behind the key sum). Uses 0^0 = 1.
inline BigInt alt_power_sum(long k, long n) {
    if (k < 0 || n < 0) throw std::invalid_argument("alt_power_sum: needs k, n >= 0");
    BigInt acc = 0;
    for (long j = 0; j <= k; ++j) {
        const BigInt term = binom(k, j) * int_pow(BigInt(j), n);
        acc += ((k - j) % 2 != 0) ? -term : term;
    }
    return acc;
}

}  // namespace melham
