#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "motzeta/error.hpp"
#include "motzeta/exactalg/ring_traits.hpp"
#include "motzeta/exactalg/upoly.hpp"

namespace motzeta::alg {

/// Univariate rational function num/den over a field R.
///
/// Canonical form: num and den coprime, and the lowest-degree nonzero
/// coefficient of den equals 1. Two equal functions therefore have equal
/// members, and == is structural.
template <class R>
    requires RingTraits<R>::is_field
class RationalFunction {
public:
    using Traits = RingTraits<R>;
    using P = Poly<R>;

    RationalFunction() : num_(), den_(P::one()) {}
    RationalFunction(P num) : num_(std::move(num)), den_(P::one()) { canonicalize(); }  // NOLINT
    RationalFunction(P num, P den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

    const P& num() const { return num_; }
    const P& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + RationalFunction(-b.num_, b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw NotInvertible("rational function division by zero");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction scaled(const R& s) const { return RationalFunction(num_.scaled(s), den_); }

    /// Power-series coefficients c_0..c_order. Requires den(0) != 0.
    std::vector<R> expand(std::size_t order) const {
        if (Traits::is_zero(den_[0]))
            throw NotInvertible("rational function has a pole at t = 0; no power-series expansion");
        const R d0inv = Traits::inverse(den_[0]);
        std::vector<R> c(order + 1, Traits::zero());
        for (std::size_t n = 0; n <= order; ++n) {
            R acc = num_[n];
            for (std::size_t j = 1; j <= n && j < den_.size(); ++j) {
                R t = den_[j] * c[n - j];
                acc -= t;
            }
            c[n] = acc * d0inv;
        }
        return c;
    }

    /// Exact value at t = x; throws PoleError when den(x) = 0.
    R evaluate(const R& x) const {
        R d = den_.eval(x);
        if (Traits::is_zero(d)) throw PoleError("rational function has a pole at the requested point");
        return num_.eval(x) * Traits::inverse(d);
    }

    /// Substitute t -> c*t.
    RationalFunction rescaled(const R& c) const { return RationalFunction(num_.rescaled(c), den_.rescaled(c)); }

    std::string to_string(std::string_view var = "t") const {
        std::string n = num_.to_string(var, false);
        if (den_ == P::one()) return n;
        return "(" + n + ")/(" + den_.to_string(var, false) + ")";
    }

private:
    void canonicalize() {
        if (den_.is_zero()) throw NotInvertible("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = P::one();
            return;
        }
        P g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        const R lowinv = Traits::inverse(den_[den_.valuation()]);
        num_ = num_.scaled(lowinv);
        den_ = den_.scaled(lowinv);
    }

    P num_;
    P den_;
};

/// t^t_power * value. Produced by substitutions such as t -> 1/(c t) that
/// leave a monomial factor outside the canonical rational function.
template <class R>
struct ShiftedRational {
    long t_power = 0;
    RationalFunction<R> value;

    friend bool operator==(const ShiftedRational& a, const ShiftedRational& b) {
        const long k = a.t_power - b.t_power;
        Poly<R> lhs = a.value.num() * b.value.den();
        Poly<R> rhs = b.value.num() * a.value.den();
        if (k > 0) lhs = lhs.shifted(static_cast<std::size_t>(k));
        if (k < 0) rhs = rhs.shifted(static_cast<std::size_t>(-k));
        return lhs == rhs;
    }

    /// Canonical single rational function; valid when t_power >= 0 or the
    /// numerator absorbs the negative power.
    RationalFunction<R> flatten() const {
        if (t_power >= 0) return RationalFunction<R>(value.num().shifted(static_cast<std::size_t>(t_power)), value.den());
        return RationalFunction<R>(value.num(), value.den().shifted(static_cast<std::size_t>(-t_power)));
    }
};

/// f(1/(c t)) written as t^k * g(t) with g canonical.
template <class R>
ShiftedRational<R> invert_argument(const RationalFunction<R>& f, const R& c) {
    using T = RingTraits<R>;
    auto flip = [&](const Poly<R>& p) {
        const std::size_t d = static_cast<std::size_t>(p.degree());
        const R cinv = T::inverse(c);
        std::vector<R> out(d + 1, T::zero());
        R scale = T::one();
        for (std::size_t i = 0; i <= d; ++i) {
            out[d - i] = p[i] * scale;
            scale *= cinv;
        }
        return Poly<R>(std::move(out));
    };
    if (f.is_zero()) return {0, f};
    const long a = f.num().degree();
    const long b = f.den().degree();
    return {b - a, RationalFunction<R>(flip(f.num()), flip(f.den()))};
}

} // namespace motzeta::alg
