#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "motzeta/exactalg/rational.hpp"
#include "motzeta/exactalg/ring_traits.hpp"
#include "motzeta/exactalg/upoly.hpp"

namespace motzeta::alg {

Poly<BigRational> to_rational_poly(const Poly<BigInt>& p);

/// Splits p = content * prim with prim a primitive integer polynomial whose
/// leading coefficient is positive. Zero maps to (0, 0).
std::pair<BigRational, Poly<BigInt>> primitive_part(const Poly<BigRational>& p);

/// Laurent expansion in s = 1/x: value = sum_i coeffs[i] * s^(valuation + i).
struct InverseExpansion {
    long valuation = 0;
    std::vector<BigRational> coeffs;
};

/// An element of the rational function field Q(x), stored canonically as
/// x^shift * num / den with integer polynomials num, den such that
///   - num and den are coprime in Q[x] and neither is divisible by x,
///   - the integer content of num and den together is 1,
///   - den has positive leading coefficient.
/// Equality is therefore structural.
class Fraction {
public:
    Fraction() : num_(), den_(Poly<BigInt>::one()), shift_(0) {}
    Fraction(long value) : Fraction(BigRational(value)) {}  // NOLINT(google-explicit-constructor)
    Fraction(const BigInt& value) : Fraction(BigRational(value)) {}  // NOLINT
    Fraction(const BigRational& value);  // NOLINT

    /// x^shift * num / den, normalized.
    static Fraction from_polys(const Poly<BigRational>& num, const Poly<BigRational>& den, long shift = 0);
    static Fraction from_polys(const Poly<BigInt>& num, const Poly<BigInt>& den, long shift = 0);
    /// The variable x itself raised to an integer power.
    static Fraction power_of_var(long k);

    const Poly<BigInt>& num() const { return num_; }
    const Poly<BigInt>& den() const { return den_; }
    long shift() const { return shift_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    /// True when the value is a Laurent polynomial (denominator 1).
    bool is_laurent_polynomial() const { return den_ == Poly<BigInt>::one(); }
    /// True when the value is a rational constant.
    bool is_constant() const { return is_laurent_polynomial() && num_.degree() == 0 && shift_ == 0; }
    BigRational constant_value() const;

    Fraction operator-() const;
    friend Fraction operator+(const Fraction& a, const Fraction& b);
    friend Fraction operator-(const Fraction& a, const Fraction& b);
    friend Fraction operator*(const Fraction& a, const Fraction& b);
    friend Fraction operator/(const Fraction& a, const Fraction& b);
    Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
    Fraction& operator-=(const Fraction& o) { return *this = *this - o; }
    Fraction& operator*=(const Fraction& o) { return *this = *this * o; }
    Fraction& operator/=(const Fraction& o) { return *this = *this / o; }
    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
    }

    Fraction inverse() const;
    Fraction pow(long e) const;

    /// Exact evaluation x -> q. Throws PoleError at a pole.
    BigRational evaluate(const BigRational& q) const;

    /// Substitute x -> x^k for a nonzero integer k.
    Fraction substitute_power(long k) const;

    InverseExpansion expand_inverse(std::size_t terms) const;

    /// Numerator and denominator as plain polynomials (shift absorbed).
    Poly<BigInt> full_numerator() const;
    Poly<BigInt> full_denominator() const;

    /// "num" or "(num)/(den)" in the given variable name.
    std::string to_string(std::string_view var = "L") const;

private:
    Poly<BigInt> num_;
    Poly<BigInt> den_;
    long shift_;
};

template <>
struct RingTraits<Fraction> {
    static constexpr const char* name = "Q(L)";
    static constexpr bool is_field = true;
    static constexpr bool contains_rationals = true;
    static Fraction zero() { return Fraction(); }
    static Fraction one() { return Fraction(1); }
    static bool is_zero(const Fraction& a) { return a.is_zero(); }
    static bool is_unit(const Fraction& a) { return !a.is_zero(); }
    static Fraction inverse(const Fraction& a) { return a.inverse(); }
    static Fraction from_rational(const BigRational& a) { return Fraction(a); }
    static std::string to_string(const Fraction& a) { return a.to_string("L"); }
    static bool is_atomic(const Fraction& a) {
        return a.is_laurent_polynomial() && a.num().size() <= 1 && a.num()[0] >= 0 && a.shift() >= 0;
    }
};

/// Monic gcd in Q(x)[t]. Coprimality is first tested by specializing x at
/// small integers where both leading coefficients survive; otherwise a
/// primitive remainder sequence over Q[x] avoids coefficient swell.
Poly<Fraction> gcd(const Poly<Fraction>& a, const Poly<Fraction>& b);

} // namespace motzeta::alg
