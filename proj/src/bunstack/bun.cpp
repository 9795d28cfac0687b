#include "motzeta/bunstack/bun.hpp"

#include "motzeta/curvezeta/zeta.hpp"
#include "motzeta/error.hpp"

namespace motzeta::bun {

using k0::lefschetz;

namespace {

// Strips (1 - t) and (1 - L t); true when only a unit remains.
bool poles_at_one_and_inverse_lefschetz(const mot::KFunction& f) {
    mot::KPoly den = f.den();
    for (const mot::KPoly& factor : {mot::KPoly{K0Element(1), K0Element(-1)}, mot::KPoly{K0Element(1), -lefschetz(1)}}) {
        while (den.degree() > 0) {
            auto [q, r] = alg::divmod(den, factor);
            if (!r.is_zero()) break;
            den = q;
        }
    }
    return den.degree() == 0;
}

std::string show_expansion(const alg::InverseExpansion& e) {
    std::string out;
    for (std::size_t i = 0; i < e.coeffs.size(); ++i) {
        if (e.coeffs[i] == 0) continue;
        if (!out.empty()) out += " + ";
        out += alg::to_string(e.coeffs[i]) + "*L^" + std::to_string(-(e.valuation + static_cast<long>(i)));
    }
    return out.empty() ? "0" : out;
}

} // namespace

BigRational BunValue::specialize(const BigRational& q) const { return k0::specialize(value, q); }

RootDatumLite special_linear(long n) {
    if (n < 1 || n > 6) throw PreconditionError("SL_n is bundled for 1 <= n <= 6, got n = " + std::to_string(n));
    return k0::root_datum(n == 1 ? "trivial" : "SL" + std::to_string(n));
}

BunValue bun_rhs(const RootDatumLite& rd, const mot::MotZeta& z, long genus, std::size_t order) {
    rd.validate();
    if (genus < 0) throw PreconditionError("genus must be nonnegative");
    for (long d : rd.degrees)
        if (d < 2) throw PreconditionError("degree " + std::to_string(d) + " of " + rd.name + " is below 2");
    if (!poles_at_one_and_inverse_lefschetz(z.value))
        throw PreconditionError("zeta " + mot::to_string(z.value) + " has poles away from t = 1 and t = L^-1");
    BunValue b;
    b.group = rd;
    b.zeta = z;
    b.genus = genus;
    b.prefactor = lefschetz((genus - 1) * rd.dim);
    b.value = b.prefactor;
    for (long d : rd.degrees) {
        b.factors.push_back(mot::special_value(z, d));
        b.value *= b.factors.back();
    }
    b.series = b.value.expand_inverse(order);
    return b;
}

HarderResult harder_check(const curve::CurveData& c, long n) {
    const RootDatumLite rd = special_linear(n);
    const auto hw = curve::hasse_weil(c);
    const long g = static_cast<long>(hw.genus);
    const BigRational q(static_cast<unsigned long>(hw.q));

    HarderResult r;
    r.lhs = alg::pow(q, (g - 1) * (n * n - 1));
    const auto Z = hw.zeta();
    for (long i = 2; i <= n; ++i) r.lhs *= Z.evaluate(alg::pow(q, -i));

    const auto motivic = mot::zeta_mot(mot::KimuraObject::curve(hw), 0);
    r.rhs = bun_rhs(rd, motivic, g, 0).specialize(q);
    r.holds = r.lhs == r.rhs;
    r.detail = c.describe() + ", SL" + std::to_string(n) + ": direct " + alg::to_string(r.lhs) + ", via bun_rhs " +
               alg::to_string(r.rhs);
    return r;
}

Verdict bg_check(const RootDatumLite& rd, std::size_t order) {
    K0Element lhs = lefschetz(-rd.dim);
    for (long d : rd.degrees) lhs /= K0Element(1) - lefschetz(-d);
    const auto a = lhs.expand_inverse(order);
    const auto b = k0::class_bg(rd, order);
    const std::string both = "L^-dim prod (1 - L^-d)^-1 = " + show_expansion(a) + "; [G]^-1 = " + show_expansion(b);
    if (a.valuation != b.valuation || a.coeffs != b.coeffs) return Verdict::fail(rd.name + ": " + both);
    return Verdict::pass(rd.name + " to order " + std::to_string(order) + ": " + show_expansion(a));
}

} // namespace motzeta::bun
