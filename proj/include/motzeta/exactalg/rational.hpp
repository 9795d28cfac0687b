#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace motzeta::alg {

using BigInt = mpz_class;
/// Always canonical: gcd(|num|, den) = 1 and den >= 1.
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);
BigRational parse_rational(std::string_view text);

std::string to_string(const BigInt& x);
std::string to_string(const BigRational& x);

BigRational pow(const BigRational& base, long exponent);
BigInt pow(const BigInt& base, unsigned long exponent);

inline bool is_integer(const BigRational& x) { return x.get_den() == 1; }

} // namespace motzeta::alg
