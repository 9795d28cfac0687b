#include <doctest.h>

#include "motzeta/bunstack/bun.hpp"
#include "motzeta/curvezeta/zeta.hpp"
#include "motzeta/error.hpp"

using namespace motzeta;
using namespace motzeta::bun;
using alg::BigInt;
using k0::lefschetz;

namespace {

BigRational q_of(const curve::CurveData& c) { return BigRational(static_cast<unsigned long>(c.p())); }

} // namespace

TEST_CASE("bun_rhs examples") {
    const K0Element one(1);
    const auto denominator = (one - lefschetz(-2)) * (one - lefschetz(-1));
    const auto p1 = mot::zeta_mot(mot::KimuraObject::projective_space(1));
    CHECK(bun_rhs(special_linear(2), p1, 0).value == lefschetz(-3) / denominator);

    const auto e = mot::zeta_mot(mot::KimuraObject::elliptic(K0Element(0)));
    const auto be = bun_rhs(special_linear(2), e, 1);
    CHECK(be.prefactor.is_one());
    CHECK(be.value == (one + lefschetz(-3)) / denominator);

    CHECK(bun_rhs(k0::root_datum("trivial"), p1, 0).value.is_one());
    CHECK(bun_rhs(k0::root_datum("trivial"), e, 1).value.is_one());

    // L^-3 (1 + L^-1 + 2 L^-2 + 2 L^-3 + ...)
    const auto s = bun_rhs(special_linear(2), p1, 0, 6).series;
    CHECK(s.valuation == 3);
    CHECK(s.coeffs == std::vector<BigRational>{1, 1, 2, 2, 3, 3});
}

TEST_CASE("bun_rhs preconditions") {
    const auto bad = mot::zeta_mot(mot::KimuraObject::lefschetz(2));
    CHECK_THROWS_AS(bun_rhs(special_linear(2), bad, 0), PreconditionError);
    CHECK_THROWS_AS(special_linear(7), PreconditionError);
    CHECK_THROWS_AS(bun_rhs(special_linear(2), mot::zeta_mot(mot::KimuraObject::unit()), -1), PreconditionError);
}

TEST_CASE("harder_check examples") {
    const auto a = harder_check(curve::CurveData::projective_line(3), 2);
    CHECK(a.holds);
    CHECK(a.lhs == alg::make_rational(1, 16));
    const auto b = harder_check(curve::CurveData::projective_line(2), 2);
    CHECK(b.holds);
    CHECK(b.rhs == alg::make_rational(1, 3));
    const auto c = harder_check(*curve::builtin_curve("e0_f3"), 2);
    CHECK(c.holds);
    CHECK(c.lhs == alg::make_rational(7, 4));
}

TEST_CASE("property: both Harder paths agree on every bundled curve") {
    for (const auto& nc : curve::builtin_curves()) {
        CAPTURE(nc.name);
        const BigRational q = q_of(nc.curve);
        for (long n = 1; n <= 4; ++n) {
            CAPTURE(n);
            const auto r = harder_check(nc.curve, n);
            CHECK_MESSAGE(r.holds, r.detail);
            CHECK(r.lhs > 0);
            // after removing powers of q the denominator divides prod (q^d - 1)(q^(d-1) - 1)
            BigInt den = r.lhs.get_den();
            const BigInt qi = q.get_num();
            while (den % qi == 0) den /= qi;
            BigInt bound = 1;
            for (long d = 2; d <= n; ++d) {
                bound *= alg::pow(qi, static_cast<unsigned long>(d)) - 1;
                bound *= alg::pow(qi, static_cast<unsigned long>(d - 1)) - 1;
            }
            CHECK(bound % den == 0);
        }
    }
}

TEST_CASE("property: [BG] = [G]^-1 from the degrees") {
    for (const auto& name : k0::root_datum_names()) {
        CAPTURE(name);
        const auto v = bg_check(k0::root_datum(name), 12);
        CHECK_MESSAGE(v.holds, v.detail);
    }
    auto wrong = k0::root_datum("SL3");
    wrong.dim = 9;
    CHECK_THROWS_AS(bg_check(wrong, 12), PreconditionError);
}

TEST_CASE("property: bun_rhs specializes to the Hasse-Weil special values") {
    for (const auto& nc : curve::builtin_curves()) {
        CAPTURE(nc.name);
        const auto hw = curve::hasse_weil(nc.curve);
        const auto z = mot::zeta_mot(mot::KimuraObject::curve(hw), 0);
        const auto v = bun_rhs(special_linear(3), z, static_cast<long>(hw.genus));
        const BigRational q = q_of(nc.curve);
        for (std::size_t i = 0; i < v.factors.size(); ++i)
            CHECK(k0::specialize(v.factors[i], q) == hw.zeta().evaluate(alg::pow(q, -static_cast<long>(i + 2))));
    }
}
