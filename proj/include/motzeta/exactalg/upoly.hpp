#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "motzeta/exactalg/ring_traits.hpp"

namespace motzeta::alg {

/// Dense univariate polynomial over a coefficient ring R. Trailing zero
/// coefficients are never stored, so the zero polynomial has no coefficients.
template <class R>
class Poly {
public:
    using Traits = RingTraits<R>;

    Poly() = default;
    explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<R> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(const R& value) { return Poly(std::vector<R>{value}); }
    static Poly monomial(const R& value, std::size_t degree) {
        std::vector<R> c(degree + 1, Traits::zero());
        c[degree] = value;
        return Poly(std::move(c));
    }
    static Poly one() { return constant(Traits::one()); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::size_t size() const { return c_.size(); }
    const std::vector<R>& coeffs() const { return c_; }

    R operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Traits::zero(); }
    const R& leading() const { return c_.back(); }

    /// Index of the lowest nonzero coefficient; 0 for the zero polynomial.
    std::size_t valuation() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!Traits::is_zero(c_[i])) return i;
        return 0;
    }

    R eval(const R& x) const {
        R acc = Traits::zero();
        for (std::size_t i = c_.size(); i-- > 0;) {
            R next = acc * x;
            acc = next + c_[i];
        }
        return acc;
    }

    /// Multiply by var^k.
    Poly shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<R> c(k, Traits::zero());
        c.insert(c.end(), c_.begin(), c_.end());
        return Poly(std::move(c));
    }

    /// Divide by var^k; the low coefficients must be zero.
    Poly unshifted(std::size_t k) const {
        if (k >= c_.size()) return {};
        return Poly(std::vector<R>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
    }

    /// Coefficients reversed with respect to a formal degree d >= degree().
    Poly reversed(std::size_t d) const {
        std::vector<R> c(d + 1, Traits::zero());
        for (std::size_t i = 0; i < c_.size(); ++i) c[d - i] = c_[i];
        return Poly(std::move(c));
    }

    /// Keep coefficients of index <= n.
    Poly truncated(std::size_t n) const {
        if (c_.size() <= n + 1) return *this;
        return Poly(std::vector<R>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n + 1)));
    }

    Poly operator-() const {
        std::vector<R> c = c_;
        for (auto& x : c) x = -x;
        return Poly(std::move(c));
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Traits::zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Traits::zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> c(a.c_.size() + b.c_.size() - 1, Traits::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (Traits::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                R term = a.c_[i] * b.c_[j];
                c[i + j] += term;
            }
        }
        return Poly(std::move(c));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const R& s) const {
        std::vector<R> c = c_;
        for (auto& x : c) x *= s;
        return Poly(std::move(c));
    }

    Poly pow(unsigned e) const {
        Poly result = one(), base = *this;
        while (e) {
            if (e & 1u) result *= base;
            e >>= 1u;
            if (e) base *= base;
        }
        return result;
    }

    /// Substitute var -> value * var.
    Poly rescaled(const R& value) const {
        std::vector<R> c = c_;
        R f = Traits::one();
        for (auto& x : c) {
            x *= f;
            f *= value;
        }
        return Poly(std::move(c));
    }

    /// Substitute var -> q(var).
    Poly compose(const Poly& q) const {
        Poly acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + constant(c_[i]);
        return acc;
    }

    template <class F>
    auto map(F&& f) const {
        using S = std::decay_t<decltype(f(std::declval<R>()))>;
        std::vector<S> c;
        c.reserve(c_.size());
        for (const auto& x : c_) c.push_back(f(x));
        return Poly<S>(std::move(c));
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    /// Compact text form such as "L^2-1" (descending) or "1+3*t^2" (ascending).
    std::string to_string(std::string_view var, bool descending = true) const {
        if (is_zero()) return "0";
        std::string out;
        auto emit = [&](std::size_t i) {
            const R& c = c_[i];
            if (Traits::is_zero(c)) return;
            std::string cs = Traits::to_string(c);
            const bool atomic = Traits::is_atomic(c);
            std::string term;
            if (i == 0) {
                term = atomic ? cs : "(" + cs + ")";
            } else {
                std::string mono(var);
                if (i > 1) mono += "^" + std::to_string(i);
                if (cs == "1") term = mono;
                else if (cs == "-1") term = "-" + mono;
                else term = (atomic ? cs : "(" + cs + ")") + "*" + mono;
            }
            if (!out.empty() && term.front() != '-') out += "+";
            out += term;
        };
        if (descending)
            for (std::size_t i = c_.size(); i-- > 0;) emit(i);
        else
            for (std::size_t i = 0; i < c_.size(); ++i) emit(i);
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && Traits::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<R> c_;
};

/// Euclidean division over a field: a = q*b + r with deg r < deg b.
template <class R>
    requires RingTraits<R>::is_field
std::pair<Poly<R>, Poly<R>> divmod(const Poly<R>& a, const Poly<R>& b) {
    using T = RingTraits<R>;
    if (b.is_zero()) throw NotInvertible("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<R>{}, a};
    std::vector<R> rem = a.coeffs();
    std::vector<R> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), T::zero());
    const R lead_inv = T::inverse(b.leading());
    const std::size_t db = static_cast<std::size_t>(b.degree());
    for (std::size_t k = rem.size(); k-- > db;) {
        if (T::is_zero(rem[k])) continue;
        R f = rem[k] * lead_inv;
        quo[k - db] = f;
        for (std::size_t j = 0; j <= db; ++j) {
            R t = f * b[j];
            rem[k - db + j] -= t;
        }
    }
    rem.resize(db);
    return {Poly<R>(std::move(quo)), Poly<R>(std::move(rem))};
}

/// Monic greatest common divisor over a field; gcd(0, 0) = 0.
template <class R>
    requires RingTraits<R>::is_field
Poly<R> gcd(Poly<R> a, Poly<R> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(RingTraits<R>::inverse(a.leading()));
}

/// Exact quotient over a field; throws if b does not divide a.
template <class R>
    requires RingTraits<R>::is_field
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw NotInvertible("inexact polynomial division");
    return q;
}

} // namespace motzeta::alg
