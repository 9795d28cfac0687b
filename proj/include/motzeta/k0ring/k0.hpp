#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "motzeta/check.hpp"
#include "motzeta/exactalg/fraction.hpp"
#include "motzeta/exactalg/series.hpp"

namespace motzeta::k0 {

using alg::BigInt;
using alg::BigRational;

/// Working image of K0 on mixed-Tate classes: an element of Q(L).
using K0Element = alg::Fraction;

inline K0Element lefschetz(long power = 1) { return K0Element::power_of_var(power); }

/// One denominator factor of an element of Z[L, L^-1, (L^n - 1)^-1].
struct LocalizationFactor {
    enum class Kind { lefschetz_power, cyclotomic_block };
    Kind kind;
    /// L^exponent, or (L^exponent - 1).
    long exponent;
    long multiplicity;

    friend bool operator==(const LocalizationFactor&, const LocalizationFactor&) = default;
};

/// Denominator multiset of x, or nullopt when x does not lie in the
/// localization of Z[L] at L and the L^n - 1. Each cyclotomic block
/// (L^n - 1) is chosen greedily from the largest n still needed.
std::optional<std::vector<LocalizationFactor>> localization_factors(const K0Element& x);
std::string to_string(const std::vector<LocalizationFactor>& factors);

/// Virtual sum of Lefschetz powers sum_m a_m L^m.
class MixedTateClass {
public:
    MixedTateClass() = default;
    static MixedTateClass lefschetz_power(long m, long multiplicity = 1);
    /// Integer Laurent polynomial in L, otherwise nullopt.
    static std::optional<MixedTateClass> from_k0(const K0Element& x);

    const std::map<long, long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long rank() const;
    void add(long m, long multiplicity);

    friend MixedTateClass operator+(const MixedTateClass& a, const MixedTateClass& b);
    friend MixedTateClass operator*(const MixedTateClass& a, const MixedTateClass& b);
    MixedTateClass operator-() const;
    friend MixedTateClass operator-(const MixedTateClass& a, const MixedTateClass& b) { return a + (-b); }
    friend bool operator==(const MixedTateClass&, const MixedTateClass&) = default;

    /// Dual class, L^m -> L^-m.
    MixedTateClass dual() const;
    K0Element to_k0() const;
    std::string to_string() const;

private:
    std::map<long, long> terms_;
};

MixedTateClass class_projective_space(long n);

K0Element class_gl(long n);
K0Element class_sl(long n);
/// (L^n - 1)(L^n - L)...(L^n - L^(n-1)) one factor per entry.
std::vector<K0Element> class_gl_factors(long n);
/// "(f1)*(f2)*..." with factors written in L.
std::string factored_string(const std::vector<K0Element>& factors);

/// Class of the space of quadratic forms of rank r in n variables.
K0Element class_sym_rank(long n, long r);

struct RootDatumLite {
    std::string name;
    long rank = 0;
    long dim = 0;
    std::vector<long> degrees;
    /// Cartan matrix a_ij; s_i(alpha_j) = alpha_j - a_ij alpha_i.
    std::vector<std::vector<long>> cartan;

    /// Throws PreconditionError when the degree identities fail.
    void validate() const;
};

/// A1, A2, B2, G2, SL2..SL6 and "trivial"; throws PreconditionError otherwise.
RootDatumLite root_datum(const std::string& name);
std::vector<std::string> root_datum_names();

K0Element class_semisimple(const RootDatumLite& rd);
/// [BG] = [G]^-1 expanded in L^-1 with `terms` coefficients.
alg::InverseExpansion class_bg(const RootDatumLite& rd, std::size_t terms = 12);
/// Term-by-term value of a truncated expansion in L^-1 at L = q.
BigRational specialize(const alg::InverseExpansion& s, const BigRational& q);

struct WeylElement {
    std::vector<std::vector<long>> matrix;
    long length;
};

/// Closure of the simple reflections, lengths by breadth-first word length.
/// Throws BudgetExceeded past `bound` elements.
std::vector<WeylElement> enumerate_weyl(const RootDatumLite& rd, std::size_t bound = 10000);
/// sum_w t^l(w) as an integer polynomial.
alg::Poly<BigInt> weyl_poincare(const RootDatumLite& rd);

Verdict weyl_poincare_check(const RootDatumLite& rd);
/// [G] = (sum_w L^l(w)) (L-1)^r L^((dim G - r)/2).
Verdict bruhat_check(const RootDatumLite& rd);

/// Kapranov zeta of a mixed-Tate class: prod (1 - L^m t)^(-a_m).
alg::Series<K0Element> sigma_t(const MixedTateClass& c, std::size_t order = alg::kDefaultSeriesOrder);

BigRational specialize(const K0Element& x, const BigRational& q);
BigRational specialize(const MixedTateClass& x, const BigRational& q);

} // namespace motzeta::k0
