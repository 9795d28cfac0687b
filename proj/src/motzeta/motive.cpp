#include "motzeta/motzeta/motive.hpp"

#include "motzeta/error.hpp"

namespace motzeta::mot {

using k0::lefschetz;

namespace {

KPoly one_minus(const K0Element& c) { return KPoly{K0Element(1), -c}; }

} // namespace

OddGenerator OddGenerator::dual() const {
    std::vector<K0Element> c;
    for (std::size_t i = 0; i < numerator.size(); ++i) c.push_back(numerator[i] * lefschetz(-static_cast<long>(i)));
    return {name.empty() ? name : name + "^v", genus, KPoly(std::move(c))};
}

KimuraObject::KimuraObject(MixedTateClass plus, std::vector<OddGenerator> odd)
    : plus_(std::move(plus)), odd_(std::move(odd)) {
    for (const auto& g : odd_) {
        if (g.genus < 1) throw PreconditionError("odd generator needs genus >= 1");
        if (g.numerator.degree() != g.rank())
            throw PreconditionError("odd generator " + g.name + ": zeta polynomial degree " +
                                    std::to_string(g.numerator.degree()) + " differs from rank " +
                                    std::to_string(g.rank()));
        if (!g.numerator[0].is_one()) throw PreconditionError("odd generator zeta polynomial must start with 1");
    }
}

KimuraObject KimuraObject::unit() { return KimuraObject(MixedTateClass::lefschetz_power(0), {}); }

KimuraObject KimuraObject::lefschetz(long m) { return KimuraObject(MixedTateClass::lefschetz_power(m), {}); }

KimuraObject KimuraObject::projective_space(long n) { return KimuraObject(k0::class_projective_space(n), {}); }

KimuraObject KimuraObject::curve(const curve::ZetaData& z) {
    MixedTateClass plus = MixedTateClass::lefschetz_power(0) + MixedTateClass::lefschetz_power(1);
    const long g = static_cast<long>(z.genus);
    if (g == 0) return KimuraObject(plus, {});
    std::vector<K0Element> c(static_cast<std::size_t>(2 * g + 1), K0Element(0));
    for (long i = 0; i <= g; ++i) {
        const K0Element ci(z.P[static_cast<std::size_t>(i)]);
        c[static_cast<std::size_t>(i)] = ci;
        c[static_cast<std::size_t>(2 * g - i)] = ci * k0::lefschetz(g - i);
    }
    return KimuraObject(plus, {OddGenerator{"h1", g, KPoly(std::move(c))}});
}

KimuraObject KimuraObject::elliptic(const K0Element& a) {
    MixedTateClass plus = MixedTateClass::lefschetz_power(0) + MixedTateClass::lefschetz_power(1);
    return KimuraObject(plus, {OddGenerator{"h1(E)", 1, KPoly{K0Element(1), -a, k0::lefschetz(1)}}});
}

long KimuraObject::chi_plus() const { return plus_.rank(); }

long KimuraObject::chi_minus() const {
    long r = 0;
    for (const auto& g : odd_) r += g.rank();
    return -r;
}

K0Element KimuraObject::det() const {
    long e = 0;
    for (const auto& [m, a] : plus_.terms()) e += m * a;
    for (const auto& g : odd_) e -= g.genus;
    return k0::lefschetz(e);
}

KimuraObject KimuraObject::dual() const {
    std::vector<OddGenerator> odd;
    for (const auto& g : odd_) odd.push_back(g.dual());
    return KimuraObject(plus_.dual(), std::move(odd));
}

KimuraObject operator+(const KimuraObject& a, const KimuraObject& b) {
    std::vector<OddGenerator> odd = a.odd_;
    odd.insert(odd.end(), b.odd_.begin(), b.odd_.end());
    return KimuraObject(a.plus_ + b.plus_, std::move(odd));
}

alg::RationalFunction<BigRational> MotZeta::specialize(const BigRational& q) const {
    auto sp = [&](const KPoly& p) {
        std::vector<BigRational> c;
        for (const auto& x : p.coeffs()) c.push_back(k0::specialize(x, q));
        return alg::Poly<BigRational>(std::move(c));
    };
    return alg::RationalFunction<BigRational>(sp(value.num()), sp(value.den()));
}

MotZeta zeta_mot(const KimuraObject& m, std::size_t order) {
    KPoly num = KPoly::one(), den = KPoly::one();
    for (const auto& g : m.odd()) num *= g.numerator;
    for (const auto& [e, a] : m.plus().terms()) {
        const KPoly f = one_minus(lefschetz(e)).pow(static_cast<unsigned>(a < 0 ? -a : a));
        if (a > 0) den *= f;
        else num *= f;
    }
    return {KFunction(num, den), alg::Series<K0Element>::from_quotient(num, den, order)};
}

Verdict kahn_check(const KimuraObject& m) {
    const KFunction z = zeta_mot(m, 0).value;
    const KFunction zd = zeta_mot(m.dual(), 0).value;
    const auto lhs = alg::invert_argument(zd, K0Element(1));
    const K0Element factor = (m.chi_plus() % 2 == 0 ? K0Element(1) : K0Element(-1)) * m.det();
    const alg::ShiftedRational<K0Element> rhs{m.chi(), z.scaled(factor)};
    const std::string detail = "chi+ = " + std::to_string(m.chi_plus()) + ", chi- = " + std::to_string(m.chi_minus()) +
                               ", det = " + m.det().to_string();
    if (lhs == rhs) return {true, detail};
    // residual numerator of lhs - rhs
    KPoly a = lhs.value.num() * rhs.value.den();
    KPoly b = rhs.value.num() * lhs.value.den();
    const long k = lhs.t_power - rhs.t_power;
    if (k > 0) a = a.shifted(static_cast<std::size_t>(k));
    if (k < 0) b = b.shifted(static_cast<std::size_t>(-k));
    return {false, detail + "; residual " + (a - b).to_string("t", false)};
}

K0Element special_value(const MotZeta& z, long d) {
    const K0Element t0 = lefschetz(-d);
    if (z.value.den().eval(t0).is_zero())
        throw PoleError("t = L^" + std::to_string(-d) + " is a pole of " + to_string(z.value));
    return z.value.evaluate(t0);
}

std::string to_string(const KFunction& f) { return f.to_string("t"); }

} // namespace motzeta::mot
