#pragma once

#include <string>
#include <vector>

#include "motzeta/check.hpp"
#include "motzeta/curvezeta/zeta.hpp"
#include "motzeta/k0ring/k0.hpp"

namespace motzeta::mot {

using k0::K0Element;
using k0::MixedTateClass;
using alg::BigInt;
using alg::BigRational;
using KPoly = alg::Poly<K0Element>;
using KFunction = alg::RationalFunction<K0Element>;

/// Opaque odd generator h^1 of a genus-g curve: rank 2g, zeta polynomial of
/// degree 2g, det = L^g, dual = h^1 (x) L^-1.
struct OddGenerator {
    std::string name;
    long genus = 1;
    KPoly numerator;

    long rank() const { return 2 * genus; }
    OddGenerator dual() const;
};

/// M = M_+ (+) M_- with M_+ mixed Tate and M_- a sum of curve symbols.
class KimuraObject {
public:
    KimuraObject() = default;
    KimuraObject(MixedTateClass plus, std::vector<OddGenerator> odd);

    static KimuraObject unit();
    static KimuraObject lefschetz(long m);
    static KimuraObject projective_space(long n);
    /// h(X) = 1 (+) L (+) h^1 with the motivic numerator of the curve's zeta.
    static KimuraObject curve(const curve::ZetaData& z);
    /// h(E) with numerator 1 - a t + L t^2.
    static KimuraObject elliptic(const K0Element& a);

    const MixedTateClass& plus() const { return plus_; }
    const std::vector<OddGenerator>& odd() const { return odd_; }
    long chi_plus() const;
    long chi_minus() const;
    long chi() const { return chi_plus() + chi_minus(); }
    /// L^(sum of plus exponents) times the inverse odd determinants.
    K0Element det() const;
    KimuraObject dual() const;

    friend KimuraObject operator+(const KimuraObject& a, const KimuraObject& b);

private:
    MixedTateClass plus_;
    std::vector<OddGenerator> odd_;
};

struct MotZeta {
    KFunction value;
    alg::Series<K0Element> series;

    /// L -> q coefficientwise.
    alg::RationalFunction<BigRational> specialize(const BigRational& q) const;
};

MotZeta zeta_mot(const KimuraObject& m, std::size_t order = alg::kDefaultSeriesOrder);

/// Z(M^v, 1/t) = (-1)^chi_+ det(M) t^chi Z(M, t); the detail carries the
/// residual numerator on failure.
Verdict kahn_check(const KimuraObject& m);

/// Z at t = L^-d. Throws PoleError when t is a pole.
K0Element special_value(const MotZeta& z, long d);

std::string to_string(const KFunction& f);

} // namespace motzeta::mot
