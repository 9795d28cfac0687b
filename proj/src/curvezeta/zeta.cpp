#include "motzeta/curvezeta/zeta.hpp"

#include <stdexcept>

#include "motzeta/error.hpp"

namespace motzeta::curve {

using alg::Fraction;
using alg::Poly;
using QPoly = Poly<BigRational>;

namespace {

QPoly to_q(const Poly<BigInt>& p) {
    std::vector<BigRational> c;
    for (const auto& x : p.coeffs()) c.emplace_back(x);
    return QPoly(std::move(c));
}

QPoly zeta_denominator(std::uint64_t q) {
    const BigRational qq(static_cast<unsigned long>(q));
    return QPoly{BigRational(1), BigRational(-1) - qq, qq};
}

alg::Series<BigRational> log_series_from_counts(const std::vector<std::uint64_t>& counts) {
    std::vector<BigRational> c(counts.size() + 1, BigRational(0));
    for (std::size_t n = 1; n <= counts.size(); ++n)
        c[n] = alg::make_rational(BigInt(static_cast<unsigned long>(counts[n - 1])), BigInt(static_cast<unsigned long>(n)));
    return alg::Series<BigRational>(std::move(c));
}

std::string join_counts(const std::vector<std::uint64_t>& v) {
    std::string out;
    for (auto x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
    return "[" + out + "]";
}

} // namespace

alg::RationalFunction<BigRational> ZetaData::zeta() const {
    return alg::RationalFunction<BigRational>(to_q(P), zeta_denominator(q));
}

alg::Series<BigRational> ZetaData::series(std::size_t order) const {
    return alg::Series<BigRational>::from_quotient(to_q(P), zeta_denominator(q), order);
}

BigInt ZetaData::predicted_count(unsigned n) const {
    auto lg = alg::series_log(series(n));
    BigRational v = lg[n] * n;
    if (!alg::is_integer(v)) throw std::logic_error("non-integral count predicted by the zeta numerator");
    return v.get_num();
}

ZetaData zeta_from_numerator(std::uint64_t q, const Poly<BigInt>& P) {
    if (P.is_zero() || P[0] != 1) throw PreconditionError("zeta numerator must have constant term 1");
    ZetaData z;
    z.q = q;
    z.P = P;
    z.genus = static_cast<unsigned>((P.degree() + 1) / 2);
    return z;
}

ZetaData hasse_weil(const CurveData& c) {
    const unsigned g = c.genus();
    if (g > 2) throw PreconditionError("hasse_weil supports genus <= 2, got " + std::to_string(g));
    const std::uint64_t q = c.p();
    const unsigned m = std::max(2 * g, 1u);
    ZetaData z;
    z.q = q;
    z.genus = g;
    z.counts = count_tower(c, m);

    // Low half of P from N_1..N_g, upper half by symmetry.
    std::vector<std::uint64_t> low(z.counts.begin(), z.counts.begin() + g);
    auto zs = alg::series_exp(log_series_from_counts(low));
    std::vector<BigRational> zc = zs.coeffs();
    const QPoly den = zeta_denominator(q);
    std::vector<BigInt> a(2 * g + 1, BigInt(0));
    for (unsigned i = 0; i <= g; ++i) {
        BigRational acc = 0;
        for (unsigned j = 0; j <= i && j < den.size(); ++j) acc += den[j] * zc[i - j];
        if (!alg::is_integer(acc)) throw std::runtime_error("non-integral zeta numerator coefficient");
        a[i] = acc.get_num();
    }
    BigInt qq(static_cast<unsigned long>(q));
    for (unsigned i = 0; i < g; ++i) a[2 * g - i] = alg::pow(qq, g - i) * a[i];
    z.P = Poly<BigInt>(std::move(a));

    for (unsigned n = g + 1; n <= m; ++n) {
        const BigInt predicted = z.predicted_count(n);
        if (predicted != BigInt(static_cast<unsigned long>(z.counts[n - 1])))
            throw std::runtime_error("zeta of " + c.describe() + " predicts N_" + std::to_string(n) + " = " +
                                     predicted.get_str() + " but enumeration gives " + std::to_string(z.counts[n - 1]) +
                                     "; the model is singular or the genus is wrong");
    }
    return z;
}

Verdict functional_equation_check(const ZetaData& z) {
    const int d = z.P.degree();
    if (d % 2 != 0) return {false, "numerator degree " + std::to_string(d) + " is odd"};
    const long g = d / 2;
    const auto Z = z.zeta();
    const BigRational q(static_cast<unsigned long>(z.q));
    auto flipped = alg::invert_argument(Z, q);
    alg::ShiftedRational<BigRational> lhs{0, Z};
    alg::ShiftedRational<BigRational> rhs{2 * g - 2 + flipped.t_power, flipped.value.scaled(alg::pow(q, g - 1))};
    const bool ok = lhs == rhs;
    std::string detail = "Z(t) = " + Z.to_string();
    if (!ok) detail += "; q^(g-1) t^(2g-2) Z(1/(qt)) = t^" + std::to_string(rhs.t_power) + " * " + rhs.value.to_string();
    return {ok, detail};
}

Verdict exp_log_check(const ZetaData& z, const std::vector<std::uint64_t>& counts) {
    auto from_counts = alg::series_exp(log_series_from_counts(counts));
    auto expected = z.series(counts.size());
    for (std::size_t i = 0; i <= counts.size(); ++i)
        if (from_counts[i] != expected[i])
            return {false, "coefficient " + std::to_string(i) + ": exp gives " + from_counts[i].get_str() +
                               ", zeta gives " + expected[i].get_str()};
    return {true, "exp(sum N_n t^n/n) matches Z to order " + std::to_string(counts.size()) + " for counts " +
                      join_counts(counts)};
}

UFunction pellikaan_zeta(const CurveData& c) {
    if (c.genus() > 1) throw PreconditionError("Pellikaan zeta is implemented for genus 0 and 1 only");
    const Fraction u = Fraction::power_of_var(1);
    Poly<Fraction> den{Fraction(1), Fraction(-1) - u, u};
    if (c.genus() == 0) return UFunction(Poly<Fraction>{Fraction(1)}, den);
    // 1 + N1 t / ((1 - t)(1 - u t)) over the common denominator
    const Fraction n1(BigInt(static_cast<unsigned long>(count_curve(c, 1))));
    Poly<Fraction> num{Fraction(1), n1 - Fraction(1) - u, u};
    return UFunction(num, den);
}

alg::Series<Fraction> pellikaan_series(const CurveData& c, std::size_t order) {
    if (c.genus() > 1) throw PreconditionError("Pellikaan zeta is implemented for genus 0 and 1 only");
    const Fraction u = Fraction::power_of_var(1);
    auto n_u = [&](std::size_t n) {
        Fraction acc(0), pw(1);
        for (std::size_t i = 0; i < n; ++i) {
            acc += pw;
            pw *= u;
        }
        return acc;
    };
    std::vector<Fraction> coeffs;
    if (c.genus() == 0) {
        // one class in each degree d >= 0, h^0 = d + 1
        for (std::size_t d = 0; d <= order; ++d) coeffs.push_back(n_u(d + 1));
    } else {
        // Pic^d has N_1 classes; h^0 = d for d >= 1, and in degree 0 only
        // the trivial class has a section.
        const Fraction n1(BigInt(static_cast<unsigned long>(count_curve(c, 1))));
        coeffs.push_back(n_u(1));
        for (std::size_t d = 1; d <= order; ++d) coeffs.push_back(n1 * n_u(d));
    }
    return alg::Series<Fraction>(std::move(coeffs));
}

alg::RationalFunction<BigRational> specialize_u(const UFunction& f, const BigRational& value) {
    auto sp = [&](const Poly<Fraction>& p) {
        std::vector<BigRational> c;
        for (const auto& x : p.coeffs()) c.push_back(x.evaluate(value));
        return QPoly(std::move(c));
    };
    return alg::RationalFunction<BigRational>(sp(f.num()), sp(f.den()));
}

std::string to_string_u(const UFunction& f) {
    auto show = [](const Poly<Fraction>& p) {
        std::string out;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i].is_zero()) continue;
            std::string c = p[i].to_string("u");
            std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
            std::string term;
            if (mono.empty()) term = c;
            else if (c == "1") term = mono;
            else if (c == "-1") term = "-" + mono;
            else if (c.find_first_of("+-/", 1) == std::string::npos) term = c + "*" + mono;
            else term = "(" + c + ")*" + mono;
            if (!out.empty() && term.front() != '-') out += " + ";
            else if (!out.empty()) out += " ";
            out += term;
        }
        return out.empty() ? std::string("0") : out;
    };
    return "(" + show(f.num()) + ")/(" + show(f.den()) + ")";
}

} // namespace motzeta::curve
