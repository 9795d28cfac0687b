#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "motzeta/check.hpp"
#include "motzeta/curvezeta/curve.hpp"
#include "motzeta/exactalg/fraction.hpp"
#include "motzeta/exactalg/ratfunc.hpp"
#include "motzeta/exactalg/series.hpp"

namespace motzeta::curve {

using alg::BigInt;
using alg::BigRational;

/// Z(t) = P(t) / ((1 - t)(1 - q t)).
struct ZetaData {
    std::uint64_t q = 0;
    unsigned genus = 0;
    std::vector<std::uint64_t> counts;  // N_1, N_2, ...
    alg::Poly<BigInt> P;

    alg::RationalFunction<BigRational> zeta() const;
    alg::Series<BigRational> series(std::size_t order = alg::kDefaultSeriesOrder) const;
    /// N_n implied by P: q^n + 1 - sum alpha_i^n.
    BigInt predicted_count(unsigned n) const;
};

/// Zeta data from a supplied numerator; the genus is deg P / 2 (rounded up).
ZetaData zeta_from_numerator(std::uint64_t q, const alg::Poly<BigInt>& P);

/// Counts N_1..N_g, solves for P using the coefficient symmetry, then
/// checks N_{g+1}..N_{2g} against fresh counts. Throws std::runtime_error on
/// mismatch and PreconditionError for genus > 2.
ZetaData hasse_weil(const CurveData& c);

/// Z(t) = q^{g-1} t^{2g-2} Z(1/(q t)) as rational functions.
Verdict functional_equation_check(const ZetaData& z);

/// exp(sum N_n t^n / n) over the supplied counts against the expansion of Z.
Verdict exp_log_check(const ZetaData& z, const std::vector<std::uint64_t>& counts);

/// Two-variable zeta P(t,u) / ((1 - t)(1 - u t)); coefficients in Q(u).
using UFunction = alg::RationalFunction<alg::Fraction>;
UFunction pellikaan_zeta(const CurveData& c);

/// Direct sum over line-bundle classes, degree by degree, to the given order.
alg::Series<alg::Fraction> pellikaan_series(const CurveData& c, std::size_t order);

/// Substitute u -> value in every coefficient.
alg::RationalFunction<BigRational> specialize_u(const UFunction& f, const BigRational& value);

std::string to_string_u(const UFunction& f);

} // namespace motzeta::curve
