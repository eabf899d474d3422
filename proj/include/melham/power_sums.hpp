#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "check.hpp"
#include "exact.hpp"
#include "fib_lucas.hpp"
#include "gaussian.hpp"
#include "identities.hpp"
#include "jet.hpp"
#include "oracle.hpp"
#include "poly.hpp"

namespace melham {

// Witness that the scaled power-sum polynomial clears to an integer polynomial
// with the double root: lucas_product * S = (x-1)^2 * P exactly, with P of
// degree 2m-1 over the integers.
struct MelhamWitness {
    long m = 0;
    RatPoly S;
    IntPoly P;
    BigInt lucas_product;
};

// Witness for (x^2+4)^(m-s) | R(x;m,s) with integer quotient.
struct DivisibilityWitness {
    long m = 0, s = 0;
    IntPoly R;
    IntPoly quotient;
};

// Lucas-side analogue: lucas_product * W = (x-1) * Q with Q of degree 2m.
struct LucasAnalogueWitness {
    long m = 0;
    RatPoly W;
    IntPoly Q;
};

// L_1 L_3 ... L_{2m+1}
inline BigInt odd_lucas_product(long m) {
    BigInt p = 1;
    for (long j = 0; j <= m; ++j) p *= lucas_number(2 * j + 1);
    return p;
}

inline IntPoly x_minus_one_sq() { return IntPoly(std::vector<BigInt>{1, -2, 1}); }
inline IntPoly x_squared_plus_4() { return IntPoly(std::vector<BigInt>{4, 0, 1}); }

// The Ozeki-Prodinger polynomial S_{2m+1}: the rational polynomial with
//   sum_{k=1}^{n} F_{2k}^(2m+1) = S_{2m+1}(F_{2n+1})  for all n >= 1,
// built term by term as
//   S(x) = sum_{s=0}^{m} x^(2s+1) sum_{k=s}^{m} (1+2k)/(1+2s) C(2m+1,m-k) C(k+s,2s) (-5)^(s-m) / L_{2k+1}
//        - 5^(-m) sum_{k=0}^{m} (-1)^(m-k) C(2m+1,m-k) F_{2k+1} / L_{2k+1}.
inline RatPoly ozeki_prodinger_poly(long m) {
    if (m < 1) throw std::invalid_argument("ozeki_prodinger_poly: needs m >= 1");
    std::vector<Rational> coeffs(static_cast<std::size_t>(2 * m + 2));
    for (long s = 0; s <= m; ++s) {
        Rational a;
        const Rational five_pow = rational_pow(Rational(-5), s - m);
        for (long k = s; k <= m; ++k) {
            Rational t = make_rational(2 * k + 1, 2 * s + 1);
            t *= Rational(binom(2 * m + 1, m - k) * binom(k + s, 2 * s));
            t *= five_pow;
            t /= Rational(lucas_number(2 * k + 1));
            a += t;
        }
        coeffs[static_cast<std::size_t>(2 * s + 1)] = a;
    }
    Rational c;
    const Rational inv_5m = rational_pow(Rational(5), -m);
    for (long k = 0; k <= m; ++k) {
        Rational t = Rational(binom(2 * m + 1, m - k) * fib_number(2 * k + 1));
        t /= Rational(lucas_number(2 * k + 1));
        t *= inv_5m;
        c += ((m - k) % 2 != 0) ? -t : t;
    }
    coeffs[0] = -c;
    return RatPoly(std::move(coeffs));
}

// Exact comparison of S_{2m+1}(F_{2n+1}) against the brute-force power sum.
inline IdentityCheck check_ozeki(long m, long n) {
    if (m < 1 || n < 1) throw std::invalid_argument("check_ozeki: needs m, n >= 1");
    const Rational lhs = ozeki_prodinger_poly(m).eval(Rational(fib_number(2 * n + 1)));
    const Rational rhs{oracle::sum_fib_odd_powers(m, n)};
    IdentityCheck c;
    c.name = "ozeki";
    c.params = {{"m", m}, {"n", n}};
    c.lhs = to_decimal_string(lhs);
    c.rhs = to_decimal_string(rhs);
    c.pass = lhs == rhs;
    return c;
}

// Clears S_{2m+1} by L_1 L_3 ... L_{2m+1}, demands integer coefficients, and
// splits off the (x-1)^2 factor. Both demands are backed by proved statements,
// so any failure is raised as a falsification with its counterexample.
inline MelhamWitness melham_witness(long m) {
    MelhamWitness w;
    w.m = m;
    w.S = ozeki_prodinger_poly(m);
    w.lucas_product = odd_lucas_product(m);
    const RatPoly scaled = w.S * Rational(w.lucas_product);
    auto integral = to_integral(scaled);
    if (!integral) {
        throw FalsificationError("melham_witness: lucas_product * S has a non-integer coefficient at m=" +
                                     std::to_string(m),
                                 scaled.str());
    }
    const IntDivision div = try_divexact(*integral, x_minus_one_sq());
    if (!div.exact) {
        throw FalsificationError("melham_witness: (x-1)^2 does not divide lucas_product * S at m=" +
                                     std::to_string(m),
                                 "remainder " + div.remainder.str());
    }
    w.P = div.quotient;
    if (!w.P.degree() || *w.P.degree() != 2 * m - 1) {
        throw FalsificationError("melham_witness: P has wrong degree at m=" + std::to_string(m), w.P.str());
    }
    return w;
}

// lucas_product * sum_{k=1}^{n} F_{2k}^(2m+1) == (F_{2n+1}-1)^2 P(F_{2n+1}),
// the two sides computed independently (direct summation vs. witness).
inline IdentityCheck check_melham(const MelhamWitness& w, long n) {
    if (n < 1) throw std::invalid_argument("check_melham: needs n >= 1");
    const BigInt lhs = w.lucas_product * oracle::sum_fib_odd_powers(w.m, n);
    const BigInt f = fib_number(2 * n + 1);
    const BigInt rhs = (f - 1) * (f - 1) * w.P.eval(f);
    IdentityCheck c;
    c.name = "melham";
    c.params = {{"m", w.m}, {"n", n}};
    c.lhs = lhs.str();
    c.rhs = rhs.str();
    c.pass = lhs == rhs;
    return c;
}

inline IdentityCheck check_melham(long m, long n) { return check_melham(melham_witness(m), n); }

// Integer combination coefficient (1+2k)/(1+2s) C(k+s,2s) in its cleared form
// 2 C(k+s+1, 2s+1) - C(k+s, 2s).
inline BigInt cleared_coefficient(long k, long s) {
    return 2 * binom(k + s + 1, 2 * s + 1) - binom(k + s, 2 * s);
}

// R(x;m,s): the denominator-cleared combination
//   sum_{k=s}^{m} [C(2m+1,m-k) * cleared_coefficient(k,s)] * prod_{j in [s..m], j != k} L_{2j+1}(x),
// an integer polynomial by construction. Empty products are 1, so R = 1 at s = m.
inline IntPoly divisibility_poly(long m, long s) {
    if (!(0 <= s && s <= m)) throw std::invalid_argument("divisibility_poly: needs 0 <= s <= m");
    IntPoly r;
    for (long k = s; k <= m; ++k) {
        IntPoly prod = IntPoly::constant(1);
        for (long j = s; j <= m; ++j)
            if (j != k) prod *= lucas_poly(2 * j + 1);
        r += prod * (binom(2 * m + 1, m - k) * cleared_coefficient(k, s));
    }
    return r;
}

// (x^2+4)^(m-s) | R(x;m,s) with an integer quotient; failure falsifies.
inline DivisibilityWitness divisibility_witness(long m, long s) {
    if (!(0 <= s && s < m)) throw std::invalid_argument("divisibility_witness: needs 0 <= s < m");
    DivisibilityWitness w;
    w.m = m;
    w.s = s;
    w.R = divisibility_poly(m, s);
    const IntDivision div = try_divexact(w.R, x_squared_plus_4().pow(m - s));
    if (!div.exact) {
        throw FalsificationError("divisibility_witness: (x^2+4)^(m-s) does not divide R at m=" +
                                     std::to_string(m) + ", s=" + std::to_string(s),
                                 div.remainder.is_zero() ? "fractional quotient " + div.field_quotient.str()
                                                         : "remainder " + div.remainder.str());
    }
    w.quotient = div.quotient;
    return w;
}

// Raw derivatives, orders 0..m-s-1, of the reciprocal Lucas combination
//   sum_{k=s}^{m} (1+2k)/(1+2s) C(2m+1,m-k) C(k+s,2s) / L_{2k+1}(x)
// at the given base point, via per-term jet inversion. With base = +-2I every
// returned value must be exactly zero; L_{2k+1}(+-2I) = +-2I^(2k+1) != 0, so a
// pole here can only mean an internal bug.
inline std::vector<GaussianRational> reciprocal_sum_derivatives(long m, long s,
                                                                const GaussianRational& base) {
    if (!(0 <= s && s < m)) throw std::invalid_argument("reciprocal_sum_derivatives: needs 0 <= s < m");
    const long order = m - s - 1;
    Jet acc = Jet::constant(GaussianRational(), base, order);
    for (long k = s; k <= m; ++k) {
        const Jet inv = jet_of_poly(lucas_poly(2 * k + 1), base, order).inverse();
        acc += inv.scaled(GaussianRational(binom(2 * m + 1, m - k) * cleared_coefficient(k, s)));
    }
    std::vector<GaussianRational> out;
    out.reserve(static_cast<std::size_t>(order) + 1);
    for (long i = 0; i <= order; ++i) out.push_back(acc.derivative(static_cast<std::size_t>(i)));
    return out;
}

// W_{2m+1}: the Lucas-side analogue of S,
//   W(x) = sum_{s=0}^{m} x^(2s+1) sum_{k=s}^{m} (1+2k)/(1+2s) C(2m+1,m-k) C(k+s,2s) / L_{2k+1} - 4^m,
// with sum_{j=1}^{n} L_{2j}^(2m+1) = W(L_{2n+1}).
inline RatPoly lucas_power_sum_poly(long m) {
    if (m < 1) throw std::invalid_argument("lucas_power_sum_poly: needs m >= 1");
    std::vector<Rational> coeffs(static_cast<std::size_t>(2 * m + 2));
    for (long s = 0; s <= m; ++s) {
        Rational a;
        for (long k = s; k <= m; ++k) {
            Rational t = make_rational(2 * k + 1, 2 * s + 1);
            t *= Rational(binom(2 * m + 1, m - k) * binom(k + s, 2 * s));
            t /= Rational(lucas_number(2 * k + 1));
            a += t;
        }
        coeffs[static_cast<std::size_t>(2 * s + 1)] = a;
    }
    coeffs[0] = -Rational(int_pow(BigInt(4), m));
    return RatPoly(std::move(coeffs));
}

// Clears W by the Lucas product and splits off the (x-1) factor; Q must come
// out integral of degree 2m.
inline LucasAnalogueWitness lucas_analogue_witness(long m) {
    LucasAnalogueWitness w;
    w.m = m;
    w.W = lucas_power_sum_poly(m);
    const RatPoly scaled = w.W * Rational(odd_lucas_product(m));
    auto integral = to_integral(scaled);
    if (!integral) {
        throw FalsificationError("lucas_analogue_witness: lucas_product * W has a non-integer coefficient at m=" +
                                     std::to_string(m),
                                 scaled.str());
    }
    const IntDivision div = try_divexact(*integral, IntPoly(std::vector<BigInt>{-1, 1}));
    if (!div.exact) {
        throw FalsificationError("lucas_analogue_witness: (x-1) does not divide lucas_product * W at m=" +
                                     std::to_string(m),
                                 "remainder " + div.remainder.str());
    }
    w.Q = div.quotient;
    if (!w.Q.degree() || *w.Q.degree() != 2 * m) {
        throw FalsificationError("lucas_analogue_witness: Q has wrong degree at m=" + std::to_string(m),
                                 w.Q.str());
    }
    return w;
}

// W_{2m+1}(L_{2n+1}) against the brute-force Lucas power sum.
inline IdentityCheck check_prodinger_lucas(long m, long n) {
    if (m < 1 || n < 1) throw std::invalid_argument("check_prodinger_lucas: needs m, n >= 1");
    const Rational lhs = lucas_power_sum_poly(m).eval(Rational(lucas_number(2 * n + 1)));
    const Rational rhs{oracle::sum_lucas_odd_powers(m, n)};
    IdentityCheck c;
    c.name = "prodinger_lucas";
    c.params = {{"m", m}, {"n", n}};
    c.lhs = to_decimal_string(lhs);
    c.rhs = to_decimal_string(rhs);
    c.pass = lhs == rhs;
    return c;
}

// lucas_product * sum L_{2j}^(2m+1) == (L_{2n+1} - 1) * Q(L_{2n+1}).
inline IdentityCheck check_lucas_analogue(const LucasAnalogueWitness& w, long n) {
    if (n < 1) throw std::invalid_argument("check_lucas_analogue: needs n >= 1");
    const BigInt lhs = odd_lucas_product(w.m) * oracle::sum_lucas_odd_powers(w.m, n);
    const BigInt l = lucas_number(2 * n + 1);
    const BigInt rhs = (l - 1) * w.Q.eval(l);
    IdentityCheck c;
    c.name = "lucas_analogue";
    c.params = {{"m", w.m}, {"n", n}};
    c.lhs = lhs.str();
    c.rhs = rhs.str();
    c.pass = lhs == rhs;
    return c;
}

// The cubic power sum against both of its closed forms:
//   4 sum_{k=1}^{n} F_{2k}^3 = (F_{2n+1}-1)^2 (F_{2n+1}+2)
// and the parity-split product form
//   even n: F_n^2 L_{n+1}^2 F_{n-1} L_{n+2},  odd n: L_n^2 F_{n+1}^2 L_{n-1} F_{n+2}
// (both sides kept as integers by comparing against 4 * sum).
inline IdentityCheck check_clary_hemenway(long n) {
    if (n < 1) throw std::invalid_argument("check_clary_hemenway: needs n >= 1");
    const BigInt four_sum = 4 * oracle::sum_fib_odd_powers(1, n);
    BigInt parity_form;
    if (n % 2 == 0) {
        parity_form = fib_number(n) * fib_number(n) * lucas_number(n + 1) * lucas_number(n + 1) *
                      fib_number(n - 1) * lucas_number(n + 2);
    } else {
        parity_form = lucas_number(n) * lucas_number(n) * fib_number(n + 1) * fib_number(n + 1) *
                      lucas_number(n - 1) * fib_number(n + 2);
    }
    const BigInt f = fib_number(2 * n + 1);
    const BigInt squared_form = (f - 1) * (f - 1) * (f + 2);
    IdentityCheck c;
    c.name = "clary_hemenway";
    c.params = {{"n", n}};
    c.lhs = four_sum.str();
    c.rhs = squared_form.str();
    c.detail = "parity form " + parity_form.str();
    c.pass = four_sum == parity_form && four_sum == squared_form;
    return c;
}

enum class WangZhangFactor { minus_one, minus_x };

// Divisibility of the polynomial power sum: does F_{2n+1}(x) - 1 (or the
// variant F_{2n+1}(x) - x) divide L_1(x)...L_{2m+1}(x) * sum_j F_{2j}(x)^(2m+1)?
// Non-divisibility is a recorded outcome here, not an error: the minus_x
// variant genuinely fails at m=1, n=1 while minus_one holds on every tested
// instance. The quotient (or the nonzero remainder) rides along as detail.
inline IdentityCheck check_wang_zhang(long m, long n, WangZhangFactor factor) {
    if (m < 1 || n < 1) throw std::invalid_argument("check_wang_zhang: needs m, n >= 1");
    IntPoly product = IntPoly::constant(1);
    for (long j = 0; j <= m; ++j) product *= lucas_poly(2 * j + 1);
    const IntPoly value = product * oracle::sum_fibpoly_powers(m, n);
    IntPoly divisor = fib_poly(2 * n + 1);
    if (factor == WangZhangFactor::minus_one)
        divisor -= IntPoly::constant(1);
    else
        divisor -= IntPoly::variable();

    const IntDivision div = try_divexact(value, divisor);
    IdentityCheck c;
    c.name = (factor == WangZhangFactor::minus_one) ? "wang_zhang_minus_one" : "wang_zhang_minus_x";
    c.params = {{"m", m}, {"n", n}};
    c.pass = div.exact;
    c.lhs = "remainder of division by " + divisor.str();
    c.rhs = "0";
    c.detail = div.exact ? "quotient " + div.quotient.str() : "remainder " + div.remainder.str();
    return c;
}

}  // namespace melham
