#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exact.hpp"
#include "gaussian.hpp"
#include "poly.hpp"

namespace melham {

// Truncated Taylor expansion of a function at a fixed Gaussian-rational base
// point. Entry i stores d_i = f^(i)(base)/i!, so multiplication is a plain
// Cauchy product and raw derivatives are recovered as i! * d_i on demand.
class Jet {
public:
    Jet(GaussianRational base, std::vector<GaussianRational> taylor)
        : base_(std::move(base)), d_(std::move(taylor)) {
        if (d_.empty()) throw std::invalid_argument("Jet: needs at least the order-zero entry");
    }

    static Jet constant(const GaussianRational& value, const GaussianRational& base, long order) {
        std::vector<GaussianRational> d(check_order(order) + 1);
        d[0] = value;
        return Jet(base, std::move(d));
    }

    long order() const { return static_cast<long>(d_.size()) - 1; }
    const GaussianRational& base() const { return base_; }
    const std::vector<GaussianRational>& taylor() const { return d_; }

    const GaussianRational& taylor_coeff(std::size_t i) const { return d_.at(i); }

    // Raw i-th derivative at the base point: i! * d_i.
    GaussianRational derivative(std::size_t i) const {
        return GaussianRational(Rational(factorial(static_cast<long>(i)))) * d_.at(i);
    }

    Jet operator-() const {
        Jet j = *this;
        for (auto& c : j.d_) c = -c;
        return j;
    }

    Jet& operator+=(const Jet& o) {
        require_compatible(o);
        for (std::size_t i = 0; i < d_.size(); ++i) d_[i] += o.d_[i];
        return *this;
    }

    Jet& operator-=(const Jet& o) {
        require_compatible(o);
        for (std::size_t i = 0; i < d_.size(); ++i) d_[i] -= o.d_[i];
        return *this;
    }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }

    friend Jet operator*(const Jet& a, const Jet& b) {
        a.require_compatible(b);
        std::vector<GaussianRational> out(a.d_.size());
        for (std::size_t i = 0; i < a.d_.size(); ++i)
            for (std::size_t j = 0; i + j < a.d_.size(); ++j) out[i + j] += a.d_[i] * b.d_[j];
        return Jet(a.base_, std::move(out));
    }

    Jet scaled(const GaussianRational& s) const {
        Jet j = *this;
        for (auto& c : j.d_) c *= s;
        return j;
    }

    // Multiplicative inverse as a truncated power series. Defined only when
    // the function value at the base point is nonzero.
    Jet inverse() const {
        if (d_[0].is_zero()) throw std::domain_error("Jet::inverse: pole at the base point");
        std::vector<GaussianRational> b(d_.size());
        b[0] = d_[0].inverse();
        for (std::size_t i = 1; i < d_.size(); ++i) {
            GaussianRational s;
            for (std::size_t k = 1; k <= i; ++k) s += d_[k] * b[i - k];
            b[i] = -(s * b[0]);
        }
        return Jet(base_, std::move(b));
    }

    friend bool operator==(const Jet& a, const Jet& b) { return a.base_ == b.base_ && a.d_ == b.d_; }
    friend bool operator!=(const Jet& a, const Jet& b) { return !(a == b); }

private:
    GaussianRational base_;
    std::vector<GaussianRational> d_;

    static long check_order(long order) {
        if (order < 0) throw std::invalid_argument("Jet: negative order");
        return order;
    }

    void require_compatible(const Jet& o) const {
        if (base_ != o.base_ || d_.size() != o.d_.size())
            throw std::invalid_argument("Jet: operands must share base point and order");
    }
};

// Exact jet of a polynomial: d_i = p^(i)(base)/i! via repeated formal
// differentiation. Works for any coefficient ring that embeds in Q(I).
template <typename R>
Jet jet_of_poly(const DensePoly<R>& p, const GaussianRational& base, long order) {
    if (order < 0) throw std::invalid_argument("jet_of_poly: negative order");
    std::vector<GaussianRational> d(static_cast<std::size_t>(order) + 1);
    DensePoly<R> cur = p;
    BigInt fact = 1;
    for (long i = 0; i <= order; ++i) {
        if (i > 0) {
            fact *= i;
            cur = cur.derivative();
        }
        d[static_cast<std::size_t>(i)] =
            cur.template eval<GaussianRational>(base) * GaussianRational(make_rational(1, fact));
    }
    return Jet(base, std::move(d));
}

}  // namespace melham
