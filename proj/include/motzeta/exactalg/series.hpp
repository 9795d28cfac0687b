#pragma once

#include <optional>
#include <string>
#include <vector>

#include "motzeta/error.hpp"
#include "motzeta/exactalg/ratfunc.hpp"
#include "motzeta/exactalg/ring_traits.hpp"
#include "motzeta/exactalg/upoly.hpp"

namespace motzeta::alg {

inline constexpr std::size_t kDefaultSeriesOrder = 16;

/// Power series c_0 + c_1 t + ... + c_N t^N known to order N, optionally
/// carrying a recognized rational form whose expansion matches c_0..c_N.
template <class R>
class Series {
public:
    using Traits = RingTraits<R>;

    Series() = default;
    explicit Series(std::vector<R> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw PreconditionError("series needs at least the constant coefficient");
    }

    static Series constant(const R& value, std::size_t order) {
        std::vector<R> c(order + 1, Traits::zero());
        c[0] = value;
        return Series(std::move(c));
    }

    std::size_t order() const { return c_.size() - 1; }
    const std::vector<R>& coeffs() const { return c_; }
    const R& operator[](std::size_t i) const { return c_.at(i); }

    bool has_form() const { return form_num_.has_value(); }
    const Poly<R>& form_numerator() const { return *form_num_; }
    const Poly<R>& form_denominator() const { return *form_den_; }

    /// Attach num/den as the recognized form; the expansion must match.
    void attach_form(const Poly<R>& num, const Poly<R>& den) {
        if (Traits::is_zero(den[0])) throw NotInvertible("recognized form needs an invertible constant term");
        std::vector<R> e = expand_quotient(num, den, order());
        for (std::size_t i = 0; i < e.size(); ++i)
            if (!(e[i] == c_[i])) throw PreconditionError("recognized form does not match the series coefficients");
        form_num_ = num;
        form_den_ = den;
    }

    RationalFunction<R> rational_form() const
        requires Traits::is_field
    {
        if (!has_form()) throw PreconditionError("series has no recognized rational form");
        return RationalFunction<R>(*form_num_, *form_den_);
    }

    /// Coefficientwise equality to the common order; forms are not compared.
    friend bool operator==(const Series& a, const Series& b) {
        if (a.order() != b.order()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    Series truncated(std::size_t order) const {
        if (order > this->order()) throw PreconditionError("cannot extend a truncated series");
        Series out(std::vector<R>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
        if (has_form()) {
            out.form_num_ = form_num_;
            out.form_den_ = form_den_;
        }
        return out;
    }

    static std::vector<R> expand_quotient(const Poly<R>& num, const Poly<R>& den, std::size_t order) {
        const R d0inv = Traits::inverse(den[0]);
        std::vector<R> c(order + 1, Traits::zero());
        for (std::size_t n = 0; n <= order; ++n) {
            R acc = num[n];
            for (std::size_t j = 1; j <= n && j < den.size(); ++j) {
                R t = den[j] * c[n - j];
                acc -= t;
            }
            c[n] = acc * d0inv;
        }
        return c;
    }

    static Series from_quotient(const Poly<R>& num, const Poly<R>& den, std::size_t order) {
        Series s(expand_quotient(num, den, order));
        s.form_num_ = num;
        s.form_den_ = den;
        return s;
    }

private:
    template <class S>
    friend Series<S> series_add(const Series<S>&, const Series<S>&);
    template <class S>
    friend Series<S> series_sub(const Series<S>&, const Series<S>&);
    template <class S>
    friend Series<S> series_mul(const Series<S>&, const Series<S>&);
    template <class S>
    friend Series<S> series_div(const Series<S>&, const Series<S>&);

    std::vector<R> c_;
    std::optional<Poly<R>> form_num_;
    std::optional<Poly<R>> form_den_;
};

namespace detail {
template <class R>
void require_same_order(const Series<R>& a, const Series<R>& b) {
    if (a.order() != b.order())
        throw RingMismatch("series truncation orders differ: " + std::to_string(a.order()) + " vs " +
                           std::to_string(b.order()));
}

template <class R>
void canonical_form(Poly<R>& num, Poly<R>& den) {
    if constexpr (RingTraits<R>::is_field) {
        RationalFunction<R> f(num, den);
        num = f.num();
        den = f.den();
    }
}
} // namespace detail

template <class R>
Series<R> series_add(const Series<R>& a, const Series<R>& b) {
    detail::require_same_order(a, b);
    std::vector<R> c = a.c_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
    Series<R> out(std::move(c));
    if (a.has_form() && b.has_form()) {
        Poly<R> n = *a.form_num_ * *b.form_den_ + *b.form_num_ * *a.form_den_;
        Poly<R> d = *a.form_den_ * *b.form_den_;
        detail::canonical_form(n, d);
        out.form_num_ = n;
        out.form_den_ = d;
    }
    return out;
}

template <class R>
Series<R> series_sub(const Series<R>& a, const Series<R>& b) {
    detail::require_same_order(a, b);
    std::vector<R> c = a.c_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.c_[i];
    Series<R> out(std::move(c));
    if (a.has_form() && b.has_form()) {
        Poly<R> n = *a.form_num_ * *b.form_den_ - *b.form_num_ * *a.form_den_;
        Poly<R> d = *a.form_den_ * *b.form_den_;
        detail::canonical_form(n, d);
        out.form_num_ = n;
        out.form_den_ = d;
    }
    return out;
}

template <class R>
Series<R> series_mul(const Series<R>& a, const Series<R>& b) {
    using T = RingTraits<R>;
    detail::require_same_order(a, b);
    const std::size_t n = a.order();
    std::vector<R> c(n + 1, T::zero());
    for (std::size_t i = 0; i <= n; ++i) {
        if (T::is_zero(a.c_[i])) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            R t = a.c_[i] * b.c_[j];
            c[i + j] += t;
        }
    }
    Series<R> out(std::move(c));
    if (a.has_form() && b.has_form()) {
        Poly<R> num = *a.form_num_ * *b.form_num_;
        Poly<R> den = *a.form_den_ * *b.form_den_;
        detail::canonical_form(num, den);
        out.form_num_ = num;
        out.form_den_ = den;
    }
    return out;
}

template <class R>
Series<R> series_div(const Series<R>& a, const Series<R>& b) {
    using T = RingTraits<R>;
    detail::require_same_order(a, b);
    if (!T::is_unit(b.c_[0])) throw NotInvertible("series division needs an invertible constant term");
    const R b0inv = T::inverse(b.c_[0]);
    const std::size_t n = a.order();
    std::vector<R> q(n + 1, T::zero());
    for (std::size_t k = 0; k <= n; ++k) {
        R acc = a.c_[k];
        for (std::size_t j = 1; j <= k; ++j) {
            R t = b.c_[j] * q[k - j];
            acc -= t;
        }
        q[k] = acc * b0inv;
    }
    Series<R> out(std::move(q));
    if (a.has_form() && b.has_form() && !b.form_num_->is_zero() && T::is_unit((*b.form_num_)[0])) {
        Poly<R> num = *a.form_num_ * *b.form_den_;
        Poly<R> den = *a.form_den_ * *b.form_num_;
        detail::canonical_form(num, den);
        out.form_num_ = num;
        out.form_den_ = den;
    }
    return out;
}

enum class SeriesOp { add, mul, div };

template <class R>
Series<R> series_arith(const Series<R>& a, const Series<R>& b, SeriesOp op) {
    switch (op) {
    case SeriesOp::add: return series_add(a, b);
    case SeriesOp::mul: return series_mul(a, b);
    case SeriesOp::div: return series_div(a, b);
    }
    throw PreconditionError("unknown series operation");
}

/// Formal exponential; the constant term must be zero.
template <class R>
    requires FieldWithRationals<R>
Series<R> series_exp(const Series<R>& a) {
    using T = RingTraits<R>;
    if (!T::is_zero(a[0])) throw PreconditionError("exp requires a series with zero constant term");
    const std::size_t n = a.order();
    std::vector<R> b(n + 1, T::zero());
    b[0] = T::one();
    for (std::size_t k = 1; k <= n; ++k) {
        R acc = T::zero();
        for (std::size_t j = 1; j <= k; ++j) {
            R t = T::from_rational(BigRational(static_cast<long>(j))) * a[j] * b[k - j];
            acc += t;
        }
        b[k] = acc * T::from_rational(BigRational(1, static_cast<long>(k)));
    }
    return Series<R>(std::move(b));
}

/// Formal logarithm; the constant term must be one.
template <class R>
    requires FieldWithRationals<R>
Series<R> series_log(const Series<R>& a) {
    using T = RingTraits<R>;
    if (!(a[0] == T::one())) throw PreconditionError("log requires a series with constant term 1");
    const std::size_t n = a.order();
    std::vector<R> l(n + 1, T::zero());
    for (std::size_t k = 1; k <= n; ++k) {
        R acc = T::from_rational(BigRational(static_cast<long>(k))) * a[k];
        for (std::size_t j = 1; j < k; ++j) {
            R t = T::from_rational(BigRational(static_cast<long>(j))) * l[j] * a[k - j];
            acc -= t;
        }
        l[k] = acc * T::from_rational(BigRational(1, static_cast<long>(k)));
    }
    return Series<R>(std::move(l));
}

enum class ExpLogOp { exp, log };

template <class R>
    requires FieldWithRationals<R>
Series<R> series_exp_log(const Series<R>& a, ExpLogOp op) {
    return op == ExpLogOp::exp ? series_exp(a) : series_log(a);
}

/// Solve A x = b over a field by Gaussian elimination. Returns nullopt when
/// the system is inconsistent; free variables are set to zero.
template <class R>
    requires RingTraits<R>::is_field
std::optional<std::vector<R>> solve_linear(std::vector<std::vector<R>> a, std::vector<R> b, std::size_t unknowns) {
    using T = RingTraits<R>;
    const std::size_t rows = a.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < unknowns && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && T::is_zero(a[piv][col])) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        std::swap(b[piv], b[r]);
        const R inv = T::inverse(a[r][col]);
        for (std::size_t j = col; j < unknowns; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || T::is_zero(a[i][col])) continue;
            const R f = a[i][col];
            for (std::size_t j = col; j < unknowns; ++j) {
                R t = f * a[r][j];
                a[i][j] -= t;
            }
            R t = f * b[r];
            b[i] -= t;
        }
        pivot_col.push_back(col);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!T::is_zero(b[i])) return std::nullopt;
    std::vector<R> x(unknowns, T::zero());
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return x;
}

/// Finds P/Q with deg P <= max_num_deg, deg Q <= max_den_deg, Q(0) = 1,
/// whose expansion matches every known coefficient of the series. Denominator
/// degrees are tried in increasing order, so the result is the reduced form.
/// Returns nullopt (NotFound) when no such function exists.
template <class R>
    requires RingTraits<R>::is_field
std::optional<RationalFunction<R>> rational_reconstruct(const Series<R>& s, std::size_t max_num_deg,
                                                        std::size_t max_den_deg) {
    using T = RingTraits<R>;
    const std::size_t n = s.order();
    if (n < max_num_deg + 2 * max_den_deg + 1)
        throw PreconditionError("rational_reconstruct needs order >= max_num_deg + 2*max_den_deg + 1 (have " +
                                std::to_string(n) + ")");
    auto coeff = [&](long i) { return i < 0 ? T::zero() : s[static_cast<std::size_t>(i)]; };
    for (std::size_t d = 0; d <= max_den_deg; ++d) {
        // Unknowns q_1..q_d; equations for coefficients max_num_deg+1..n of Q*S.
        std::vector<std::vector<R>> a;
        std::vector<R> b;
        for (std::size_t i = max_num_deg + 1; i <= n; ++i) {
            std::vector<R> row(d, T::zero());
            for (std::size_t j = 1; j <= d; ++j) row[j - 1] = coeff(static_cast<long>(i) - static_cast<long>(j));
            a.push_back(std::move(row));
            b.push_back(-s[i]);
        }
        auto q = solve_linear(std::move(a), std::move(b), d);
        if (!q) continue;
        std::vector<R> qc(d + 1, T::one());
        for (std::size_t j = 1; j <= d; ++j) qc[j] = (*q)[j - 1];
        Poly<R> den(std::move(qc));
        std::vector<R> pc(max_num_deg + 1, T::zero());
        for (std::size_t i = 0; i <= max_num_deg; ++i) {
            R acc = T::zero();
            for (std::size_t j = 0; j <= std::min(i, d); ++j) {
                R t = den[j] * s[i - j];
                acc += t;
            }
            pc[i] = acc;
        }
        return RationalFunction<R>(Poly<R>(std::move(pc)), den);
    }
    return std::nullopt;
}

} // namespace motzeta::alg
