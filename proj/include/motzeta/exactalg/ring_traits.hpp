#pragma once

#include <string>

#include "motzeta/error.hpp"
#include "motzeta/exactalg/rational.hpp"

namespace motzeta::alg {

/// Coefficient-ring interface used by the generic polynomial, series and
/// rational-function templates. Each exact coefficient type specializes it.
template <class R>
struct RingTraits;

template <>
struct RingTraits<BigInt> {
    static constexpr const char* name = "ZZ";
    static constexpr bool is_field = false;
    static constexpr bool contains_rationals = false;
    static BigInt zero() { return 0; }
    static BigInt one() { return 1; }
    static bool is_zero(const BigInt& a) { return a == 0; }
    static bool is_unit(const BigInt& a) { return a == 1 || a == -1; }
    static BigInt inverse(const BigInt& a) {
        if (!is_unit(a)) throw NotInvertible("integer " + a.get_str() + " is not a unit");
        return a;
    }
    static std::string to_string(const BigInt& a) { return a.get_str(); }
    static bool is_atomic(const BigInt&) { return true; }
};

template <>
struct RingTraits<BigRational> {
    static constexpr const char* name = "QQ";
    static constexpr bool is_field = true;
    static constexpr bool contains_rationals = true;
    static BigRational zero() { return 0; }
    static BigRational one() { return 1; }
    static bool is_zero(const BigRational& a) { return a == 0; }
    static bool is_unit(const BigRational& a) { return a != 0; }
    static BigRational inverse(const BigRational& a) {
        if (a == 0) throw NotInvertible("division by zero rational");
        return 1 / a;
    }
    static BigRational from_rational(const BigRational& a) { return a; }
    static std::string to_string(const BigRational& a) { return a.get_str(); }
    static bool is_atomic(const BigRational& a) { return a.get_den() == 1; }
};

template <class R>
concept FieldWithRationals = RingTraits<R>::is_field && RingTraits<R>::contains_rationals;

} // namespace motzeta::alg
