#pragma once

#include <random>
#include <vector>

#include "motzeta/exactalg/fraction.hpp"
#include "motzeta/exactalg/multipoly.hpp"
#include "motzeta/exactalg/rational.hpp"
#include "motzeta/exactalg/upoly.hpp"

namespace gen {

using motzeta::alg::BigInt;
using motzeta::alg::BigRational;

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(0x5eed1234ULL);
    return g;
}

inline long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline BigRational rational(long bound = 50) {
    long d = integer(1, bound);
    return motzeta::alg::make_rational(integer(-bound, bound), d);
}

inline motzeta::alg::Poly<BigRational> rpoly(int max_deg, long bound = 9) {
    std::vector<BigRational> c(static_cast<std::size_t>(integer(0, max_deg) + 1));
    for (auto& x : c) x = motzeta::alg::make_rational(integer(-bound, bound), integer(1, 3));
    return motzeta::alg::Poly<BigRational>(std::move(c));
}

inline motzeta::alg::Poly<BigInt> ipoly(int max_deg, long bound = 5) {
    std::vector<BigInt> c(static_cast<std::size_t>(integer(0, max_deg) + 1));
    for (auto& x : c) x = integer(-bound, bound);
    return motzeta::alg::Poly<BigInt>(std::move(c));
}

inline motzeta::alg::Fraction fraction(int max_deg = 2) {
    auto den = ipoly(max_deg);
    while (den.is_zero()) den = ipoly(max_deg);
    return motzeta::alg::Fraction::from_polys(ipoly(max_deg), den, integer(-2, 2));
}

inline motzeta::alg::MultiPoly multipoly(std::size_t nvars, int terms = 4, unsigned max_exp = 2) {
    motzeta::alg::MultiPoly p(nvars);
    for (int i = 0; i < terms; ++i) {
        motzeta::alg::Exponents e(nvars);
        for (auto& x : e) x = static_cast<std::uint32_t>(integer(0, max_exp));
        p.add_term(e, integer(-6, 6));
    }
    return p;
}

} // namespace gen
