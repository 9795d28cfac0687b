#include "motzeta/exactalg/fraction.hpp"

#include "motzeta/error.hpp"

namespace motzeta::alg {

Poly<BigRational> to_rational_poly(const Poly<BigInt>& p) {
    return p.map([](const BigInt& c) { return BigRational(c); });
}

std::pair<BigRational, Poly<BigInt>> primitive_part(const Poly<BigRational>& p) {
    if (p.is_zero()) return {BigRational(0), Poly<BigInt>{}};
    BigInt den_lcm = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<BigInt> ints;
    ints.reserve(p.size());
    BigInt g = 0;
    for (const auto& c : p.coeffs()) {
        BigInt v = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        ints.push_back(v);
    }
    if (ints.back() < 0) g = -g;
    for (auto& v : ints) v /= g;
    return {make_rational(g, den_lcm), Poly<BigInt>(std::move(ints))};
}

Fraction::Fraction(const BigRational& value) : Fraction() {
    if (value == 0) return;
    num_ = Poly<BigInt>::constant(value.get_num());
    den_ = Poly<BigInt>::constant(value.get_den());
}

Fraction Fraction::from_polys(const Poly<BigRational>& num_in, const Poly<BigRational>& den_in, long shift) {
    if (den_in.is_zero()) throw NotInvertible("fraction with zero denominator");
    Fraction out;
    if (num_in.is_zero()) return out;
    const std::size_t v = num_in.valuation();
    const std::size_t w = den_in.valuation();
    Poly<BigRational> num = num_in.unshifted(v);
    Poly<BigRational> den = den_in.unshifted(w);
    shift += static_cast<long>(v) - static_cast<long>(w);
    if (den.degree() > 0 && num.degree() > 0) {
        Poly<BigRational> g = gcd(num, den);
        if (g.degree() > 0) {
            num = exact_div(num, g);
            den = exact_div(den, g);
        }
    }
    auto [cn, pn] = primitive_part(num);
    auto [cd, pd] = primitive_part(den);
    BigRational ratio = cn / cd;
    BigInt a = ratio.get_num();
    BigInt b = ratio.get_den();
    out.num_ = pn.scaled(a);
    out.den_ = pd.scaled(b);
    out.shift_ = shift;
    return out;
}

Fraction Fraction::from_polys(const Poly<BigInt>& num, const Poly<BigInt>& den, long shift) {
    return from_polys(to_rational_poly(num), to_rational_poly(den), shift);
}

Fraction Fraction::power_of_var(long k) {
    Fraction f(1);
    f.shift_ = k;
    return f;
}

bool Fraction::is_one() const {
    return shift_ == 0 && den_ == Poly<BigInt>::one() && num_ == Poly<BigInt>::one();
}

BigRational Fraction::constant_value() const {
    if (!is_constant() && !is_zero()) throw PreconditionError("fraction is not a constant: " + to_string());
    if (is_zero()) return 0;
    return make_rational(num_[0], den_[0]);
}

Fraction Fraction::operator-() const {
    Fraction out = *this;
    out.num_ = -out.num_;
    return out;
}

Fraction operator+(const Fraction& a, const Fraction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const long s = std::min(a.shift_, b.shift_);
    Poly<BigInt> lhs = (a.num_ * b.den_).shifted(static_cast<std::size_t>(a.shift_ - s));
    Poly<BigInt> rhs = (b.num_ * a.den_).shifted(static_cast<std::size_t>(b.shift_ - s));
    if (a.den_ == b.den_) {
        return Fraction::from_polys(a.num_.shifted(static_cast<std::size_t>(a.shift_ - s)) +
                                        b.num_.shifted(static_cast<std::size_t>(b.shift_ - s)),
                                    a.den_, s);
    }
    return Fraction::from_polys(lhs + rhs, a.den_ * b.den_, s);
}

Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }

Fraction operator*(const Fraction& a, const Fraction& b) {
    if (a.is_zero() || b.is_zero()) return Fraction();
    if (a.is_laurent_polynomial() && b.is_laurent_polynomial()) {
        // Product of primitive-times-content integer polynomials stays canonical.
        Fraction out;
        out.num_ = a.num_ * b.num_;
        out.den_ = Poly<BigInt>::one();
        out.shift_ = a.shift_ + b.shift_;
        return out;
    }
    return Fraction::from_polys(a.num_ * b.num_, a.den_ * b.den_, a.shift_ + b.shift_);
}

Fraction operator/(const Fraction& a, const Fraction& b) { return a * b.inverse(); }

Fraction Fraction::inverse() const {
    if (is_zero()) throw NotInvertible("inverse of zero in Q(L)");
    return from_polys(den_, num_, -shift_);
}

Fraction Fraction::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Fraction result(1), base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

BigRational Fraction::evaluate(const BigRational& q) const {
    if (is_zero()) return 0;
    BigRational d = to_rational_poly(den_).eval(q);
    if (d == 0) throw PoleError("pole of " + to_string() + " at " + q.get_str());
    if (q == 0 && shift_ < 0) throw PoleError("pole of " + to_string() + " at 0");
    BigRational n = to_rational_poly(num_).eval(q);
    return alg::pow(q, shift_) * n / d;
}

Fraction Fraction::substitute_power(long k) const {
    if (k == 0) throw PreconditionError("substitute_power requires a nonzero exponent");
    auto spread = [k](const Poly<BigInt>& p) {
        const std::size_t step = static_cast<std::size_t>(k > 0 ? k : -k);
        std::vector<BigInt> c(p.size() == 0 ? 0 : (p.size() - 1) * step + 1, BigInt(0));
        for (std::size_t i = 0; i < p.size(); ++i) c[i * step] = p[i];
        return Poly<BigInt>(std::move(c));
    };
    if (k > 0) return from_polys(spread(num_), spread(den_), shift_ * k);
    // x -> x^-m: p(x^-m) = x^(-m deg p) * reversed(p)(x^m)
    const long m = -k;
    Poly<BigInt> n = spread(num_.reversed(static_cast<std::size_t>(num_.degree())));
    Poly<BigInt> d = spread(den_.reversed(static_cast<std::size_t>(den_.degree())));
    const long s = -shift_ * m - m * num_.degree() + m * den_.degree();
    return from_polys(n, d, s);
}

InverseExpansion Fraction::expand_inverse(std::size_t terms) const {
    InverseExpansion out;
    if (is_zero()) {
        out.coeffs.assign(terms, BigRational(0));
        return out;
    }
    const long a = num_.degree();
    const long b = den_.degree();
    out.valuation = b - a - shift_;
    Poly<BigRational> n = to_rational_poly(num_.reversed(static_cast<std::size_t>(a)));
    Poly<BigRational> d = to_rational_poly(den_.reversed(static_cast<std::size_t>(b)));
    // Power-series division n/d with d(0) = lead(den) != 0.
    const BigRational d0inv = 1 / d[0];
    out.coeffs.resize(terms);
    for (std::size_t k = 0; k < terms; ++k) {
        BigRational acc = n[k];
        for (std::size_t j = 1; j <= k && j < d.size(); ++j) acc -= d[j] * out.coeffs[k - j];
        out.coeffs[k] = acc * d0inv;
    }
    return out;
}

Poly<BigInt> Fraction::full_numerator() const {
    return shift_ > 0 ? num_.shifted(static_cast<std::size_t>(shift_)) : num_;
}

Poly<BigInt> Fraction::full_denominator() const {
    return shift_ < 0 ? den_.shifted(static_cast<std::size_t>(-shift_)) : den_;
}

std::string Fraction::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    const std::string n = full_numerator().to_string(var);
    const Poly<BigInt> dp = full_denominator();
    if (dp == Poly<BigInt>::one()) return n;
    auto wrap = [](const std::string& s) {
        return s.find_first_of("+-*") == std::string::npos ? s : "(" + s + ")";
    };
    return wrap(n) + "/" + wrap(dp.to_string(var));
}

} // namespace motzeta::alg

namespace motzeta::alg {

namespace {

using QX = Poly<BigRational>;
using QXT = std::vector<QX>;  // coefficients in t, each in Q[x]

void trim(QXT& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

// Scales by the lcm of the denominators so every coefficient lies in Q[x].
QXT clear_denominators(const Poly<Fraction>& p) {
    QX l = QX::one();
    for (const auto& c : p.coeffs()) {
        if (c.is_zero()) continue;
        const QX d = to_rational_poly(c.full_denominator());
        l = exact_div(l * d, gcd(l, d));
    }
    QXT out;
    for (const auto& c : p.coeffs()) {
        if (c.is_zero()) {
            out.emplace_back();
            continue;
        }
        out.push_back(exact_div(to_rational_poly(c.full_numerator()) * l, to_rational_poly(c.full_denominator())));
    }
    trim(out);
    return out;
}

// Divides by the gcd of the coefficients and fixes the rational scale.
void make_primitive(QXT& a) {
    QX content;
    for (const auto& c : a) content = gcd(content, c);
    if (content.degree() > 0)
        for (auto& c : a) c = exact_div(c, content);
    const BigRational lead = a.back().leading();
    for (auto& c : a) c = c.scaled(1 / lead);
}

QXT pseudo_remainder(QXT a, const QXT& b) {
    const std::size_t db = b.size() - 1;
    const QX& lb = b.back();
    while (a.size() > db) {
        const QX c = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (auto& x : a) x = x * lb;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    return a;
}

Poly<Fraction> monic(const Poly<Fraction>& p) {
    return p.scaled(p.leading().inverse());
}

} // namespace

Poly<Fraction> gcd(const Poly<Fraction>& a, const Poly<Fraction>& b) {
    if (a.is_zero()) return b.is_zero() ? b : monic(b);
    if (b.is_zero()) return monic(a);
    if (a.degree() == 0 || b.degree() == 0) return Poly<Fraction>::one();

    int tested = 0;
    for (long l : {2, 3, 5, 7, 11, 13, 17, 19}) {
        const BigRational x(l);
        std::vector<BigRational> sa, sb;
        try {
            for (const auto& c : a.coeffs()) sa.push_back(c.evaluate(x));
            for (const auto& c : b.coeffs()) sb.push_back(c.evaluate(x));
        } catch (const PoleError&) {
            continue;
        }
        if (sa.back() == 0 || sb.back() == 0) continue;
        if (gcd(QX(sa), QX(sb)).degree() == 0) return Poly<Fraction>::one();
        if (++tested == 3) break;
    }

    QXT x = clear_denominators(a), y = clear_denominators(b);
    make_primitive(x);
    make_primitive(y);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        QXT r = pseudo_remainder(x, y);
        if (!r.empty()) make_primitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<Fraction> out;
    for (const auto& c : x) out.push_back(Fraction::from_polys(c, QX::one()));
    return monic(Poly<Fraction>(std::move(out)));
}

} // namespace motzeta::alg
