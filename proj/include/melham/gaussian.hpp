#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "exact.hpp"

namespace melham {

// Element of Q(I): re + im*I with I^2 = -1 and exact rational parts. This is
// the field where all evaluations at x = 2I live; (2I)^2 + 4 = 0 makes 2I a
// root of x^2 + 4.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(int v) : re_(v) {}
    GaussianRational(long v) : re_(v) {}
    GaussianRational(const BigInt& v) : re_(v) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }
    static GaussianRational two_i() { return {Rational(0), Rational(2)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool is_zero() const { return re_ == 0 && im_ == 0; }

    // re^2 + im^2; zero iff the value is zero, which gates inversion.
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational conjugate() const { return {re_, -im_}; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        return *this;
    }

    GaussianRational inverse() const {
        if (is_zero()) throw std::domain_error("GaussianRational: inverse of zero");
        const Rational n = norm();
        return {re_ / n, -im_ / n};
    }

    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    // Integer power; negative exponents require a nonzero base.
    GaussianRational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        GaussianRational acc(1), sq = *this;
        while (e > 0) {
            if (e & 1) acc *= sq;
            if (e >>= 1) sq *= sq;
        }
        return acc;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    std::string str() const {
        if (im_ == 0) return to_decimal_string(re_);
        std::string imag = to_decimal_string(im_) + "*I";
        if (re_ == 0) return imag;
        if (im_ > 0) return to_decimal_string(re_) + "+" + imag;
        return to_decimal_string(re_) + imag;  // the minus sign rides on im
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& v) { return os << v.str(); }

private:
    Rational re_, im_;
};

// I^e for any integer e; the powers cycle with period four.
inline GaussianRational gaussian_i_pow(long e) {
    switch (((e % 4) + 4) % 4) {
        case 0: return GaussianRational(1);
        case 1: return GaussianRational::i();
        case 2: return GaussianRational(-1);
        default: return -GaussianRational::i();
    }
}

inline std::string to_decimal_string(const GaussianRational& v) { return v.str(); }

}  // namespace melham
