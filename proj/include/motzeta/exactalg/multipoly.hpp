#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "motzeta/exactalg/rational.hpp"

namespace motzeta::alg {

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, then lexicographic with
/// x1 > x2 > ... ; "less" means smaller in that order.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with integer coefficients in a fixed
/// number of variables x1..xn. Zero coefficients are never stored.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, BigInt, GrlexLess>;

    explicit MultiPoly(std::size_t num_vars = 0) : nvars_(num_vars) {}

    static MultiPoly constant(std::size_t num_vars, const BigInt& c);
    /// The variable x_{index+1}.
    static MultiPoly variable(std::size_t num_vars, std::size_t index);

    std::size_t num_vars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t num_terms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * x^e (e must have num_vars entries).
    void add_term(const Exponents& e, const BigInt& c);
    BigInt coefficient(const Exponents& e) const;

    /// Total degree; -1 for the zero polynomial.
    long degree() const;
    std::uint32_t degree_in(std::size_t var) const;
    bool is_homogeneous() const;
    bool involves(std::size_t var) const { return degree_in(var) > 0; }

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    BigRational evaluate(const std::vector<BigRational>& x) const;
    /// Value modulo a prime p of the polynomial at a point with entries in [0, p).
    std::uint64_t evaluate_mod(const std::vector<std::uint64_t>& x, std::uint64_t p) const;

    /// Canonical text form "c*x1^a1*...*xk^ak + ..." in descending grlex
    /// order; unit coefficients and unit exponents are omitted.
    std::string to_string() const;

private:
    std::size_t nvars_;
    TermMap terms_;
};

} // namespace motzeta::alg
