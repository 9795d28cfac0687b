#pragma once

#include <string>
#include <vector>

#include "motzeta/check.hpp"
#include "motzeta/curvezeta/curve.hpp"
#include "motzeta/k0ring/k0.hpp"
#include "motzeta/motzeta/motive.hpp"

namespace motzeta::bun {

using alg::BigRational;
using k0::K0Element;
using k0::RootDatumLite;

/// [Q((1-g) dim G)] * prod_i Z(X, L^-d_i), with [Q(k)] = L^-k.
struct BunValue {
    RootDatumLite group;
    mot::MotZeta zeta;
    long genus = 0;
    K0Element prefactor;
    std::vector<K0Element> factors;  // Z(X, L^-d_i)
    K0Element value;
    alg::InverseExpansion series;    // value in powers of L^-1

    BigRational specialize(const BigRational& q) const;
};

/// Requires every d_i >= 2 and Z with poles only at t = 1 and t = L^-1.
BunValue bun_rhs(const RootDatumLite& rd, const mot::MotZeta& z, long genus, std::size_t order = 12);

/// SL_n from its degrees 2..n; n = 1 gives the trivial group.
RootDatumLite special_linear(long n);

struct HarderResult {
    BigRational lhs;  // q^{(g-1)(n^2-1)} prod_{i=2}^n zeta_K(i) from the Hasse-Weil zeta
    BigRational rhs;  // bun_rhs for SL_n at L = q
    bool holds = false;
    std::string detail;
};

/// Both sides of Harder's formula for SL_n on c; genus <= 2, 1 <= n <= 6.
HarderResult harder_check(const curve::CurveData& c, long n);

/// L^-dim prod (1 - L^-d_i)^-1 against [G]^-1, coefficientwise in L^-1.
Verdict bg_check(const RootDatumLite& rd, std::size_t order = 12);

} // namespace motzeta::bun
