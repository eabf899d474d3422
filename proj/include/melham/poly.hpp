#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "exact.hpp"
#include "gaussian.hpp"

namespace melham {

// Dense univariate polynomial over an exact commutative ring R. Coefficient i
// belongs to x^i; trailing zeros are trimmed, so the representation is
// canonical and operator== is mathematical equality. The zero polynomial has
// no degree (degree() is empty) rather than a -1 sentinel.
template <typename R>
class DensePoly {
public:
    DensePoly() = default;

    explicit DensePoly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static DensePoly constant(R c) {
        DensePoly p;
        p.coeffs_.push_back(std::move(c));
        p.trim();
        return p;
    }

    static DensePoly monomial(std::size_t degree, R c = R(1)) {
        DensePoly p;
        if (!(c == R{})) {
            p.coeffs_.assign(degree + 1, R{});
            p.coeffs_.back() = std::move(c);
        }
        return p;
    }

    static DensePoly variable() { return monomial(1); }

    bool is_zero() const { return coeffs_.empty(); }

    std::optional<long> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return static_cast<long>(coeffs_.size()) - 1;
    }

    const std::vector<R>& coefficients() const { return coeffs_; }

    R coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : R{}; }

    const R& leading_coefficient() const {
        if (coeffs_.empty()) throw std::domain_error("leading_coefficient of the zero polynomial");
        return coeffs_.back();
    }

    DensePoly operator-() const {
        DensePoly p = *this;
        for (R& c : p.coeffs_) c = -c;
        return p;
    }

    DensePoly& operator+=(const DensePoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R{});
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    DensePoly& operator-=(const DensePoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R{});
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    DensePoly& operator*=(const DensePoly& o) { return *this = *this * o; }

    DensePoly& operator*=(const R& s) {
        for (R& c : coeffs_) c *= s;
        trim();
        return *this;
    }

    friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
    friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }

    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        DensePoly p;
        p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, R{});
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        p.trim();
        return p;
    }

    friend DensePoly operator*(DensePoly a, const R& s) { return a *= s; }
    friend DensePoly operator*(const R& s, DensePoly a) { return a *= s; }

    DensePoly pow(long e) const {
        if (e < 0) throw std::domain_error("DensePoly::pow: negative exponent");
        DensePoly acc = constant(R(1));
        DensePoly sq = *this;
        while (e > 0) {
            if (e & 1) acc *= sq;
            if (e >>= 1) sq *= sq;
        }
        return acc;
    }

    DensePoly derivative() const {
        if (coeffs_.size() <= 1) return {};
        DensePoly p;
        p.coeffs_.resize(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) p.coeffs_[i - 1] = coeffs_[i] * R(static_cast<long>(i));
        p.trim();
        return p;
    }

    // Horner evaluation in any ring V the coefficients embed into.
    template <typename V>
    V eval(const V& point) const {
        V acc{};
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * point + V(coeffs_[i]);
        return acc;
    }

    friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const DensePoly& a, const DensePoly& b) { return !(a == b); }

    std::string str(const char* var = "x") const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            if (coeffs_[i] == R{}) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << to_decimal_string(coeffs_[i]) << ")";
            if (i == 1)
                os << "*" << var;
            else if (i > 1)
                os << "*" << var << "^" << i;
        }
        return os.str();
    }

private:
    std::vector<R> coeffs_;

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == R{}) coeffs_.pop_back();
    }
};

using IntPoly = DensePoly<BigInt>;
using RatPoly = DensePoly<Rational>;

template <typename R, typename S, typename F>
DensePoly<S> map_poly(const DensePoly<R>& p, F&& f) {
    std::vector<S> out;
    out.reserve(p.coefficients().size());
    for (const R& c : p.coefficients()) out.push_back(f(c));
    return DensePoly<S>(std::move(out));
}

inline RatPoly to_rational(const IntPoly& p) {
    return map_poly<BigInt, Rational>(p, [](const BigInt& c) { return Rational(c); });
}

// All-integer coefficient check; empty when any denominator is nontrivial.
inline std::optional<IntPoly> to_integral(const RatPoly& p) {
    std::vector<BigInt> out;
    out.reserve(p.coefficients().size());
    for (const Rational& c : p.coefficients()) {
        if (denominator(c) != 1) return std::nullopt;
        out.push_back(numerator(c));
    }
    return IntPoly(std::move(out));
}

template <typename R>
struct PolyDivision {
    DensePoly<R> quotient;
    DensePoly<R> remainder;
};

// Long division from the top degree down. Requires R to be a field: every
// leading-coefficient division below is exact, so the remainder degree drops
// at each step.
template <typename R>
PolyDivision<R> divmod(const DensePoly<R>& p, const DensePoly<R>& d) {
    static_assert(!std::is_same_v<R, BigInt>, "divmod needs field coefficients; use try_divexact for integer polynomials");
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    DensePoly<R> q, r = p;
    const long dd = *d.degree();
    const R& lead = d.leading_coefficient();
    while (!r.is_zero() && *r.degree() >= dd) {
        const auto t = DensePoly<R>::monomial(static_cast<std::size_t>(*r.degree() - dd),
                                              r.leading_coefficient() / lead);
        q += t;
        r -= t * d;
    }
    return {std::move(q), std::move(r)};
}

struct IntDivision {
    bool exact = false;       // p == d * quotient with an integer quotient
    IntPoly quotient;         // meaningful only when exact
    RatPoly field_quotient;   // quotient over the rationals, always set
    RatPoly remainder;        // nonzero exactly when division left a remainder
};

// Divisibility witness for integer polynomials: divide over the fraction
// field, then demand a zero remainder and an integral quotient.
inline IntDivision try_divexact(const IntPoly& p, const IntPoly& d) {
    auto [q, r] = divmod(to_rational(p), to_rational(d));
    IntDivision out;
    out.field_quotient = q;
    out.remainder = std::move(r);
    if (!out.remainder.is_zero()) return out;
    if (auto zq = to_integral(out.field_quotient)) {
        out.exact = true;
        out.quotient = std::move(*zq);
    }
    return out;
}

inline IntPoly divexact(const IntPoly& p, const IntPoly& d) {
    IntDivision r = try_divexact(p, d);
    if (!r.exact) {
        throw std::domain_error("divexact: not divisible; remainder " + r.remainder.str());
    }
    return std::move(r.quotient);
}

template <typename R>
DensePoly<R> divexact(const DensePoly<R>& p, const DensePoly<R>& d) {
    auto [q, r] = divmod(p, d);
    if (!r.is_zero()) throw std::domain_error("divexact: not divisible; remainder " + r.str());
    return std::move(q);
}

}  // namespace melham
