#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "motzeta/exactalg/fraction.hpp"
#include "motzeta/exactalg/rational.hpp"

namespace motzeta::alg {

/// Laurent polynomial with rational coefficients in named variables, used for
/// reading coefficients such as "L^2-1" or "-a*t" from JSON documents.
class SymPoly {
public:
    using Monomial = std::map<std::string, long>;
    using TermMap = std::map<Monomial, BigRational>;

    SymPoly() = default;
    static SymPoly constant(const BigRational& c);
    static SymPoly variable(const std::string& name, long exponent = 1);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::set<std::string> variables() const;

    SymPoly operator-() const;
    friend SymPoly operator+(const SymPoly& a, const SymPoly& b);
    friend SymPoly operator-(const SymPoly& a, const SymPoly& b) { return a + (-b); }
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    SymPoly pow(unsigned e) const;

    /// Coefficient of var^k as a SymPoly in the remaining variables.
    SymPoly coefficient_of(const std::string& var, long k) const;
    long max_degree(const std::string& var) const;
    long min_degree(const std::string& var) const;

    /// Substitute numeric values for named symbols.
    SymPoly assign(const std::map<std::string, BigRational>& values) const;

    /// Convert to an element of Q(var); every other variable must be absent.
    Fraction to_fraction(const std::string& var = "L") const;

    friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.terms_ == b.terms_; }

private:
    void add(const Monomial& m, const BigRational& c);
    TermMap terms_;
};

/// Parses sums of products of integers, rationals "p/q" written as
/// "3/4", identifiers with optional integer exponents (negative allowed on a
/// bare identifier) and parenthesized subexpressions with nonnegative powers.
SymPoly parse_sympoly(std::string_view text);

/// Parses an element of Q(L) written in the serialized "num/den" form or any
/// expression accepted by parse_sympoly in the single variable L.
Fraction parse_fraction(std::string_view text, const std::string& var = "L");

} // namespace motzeta::alg
