#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace motzeta::curve {

/// F_{p^n} with elements encoded as integers sum c_i p^i, where
/// c_0 + c_1 x + ... is the residue modulo the defining polynomial. The prime
/// field F_p sits inside as the integers 0..p-1.
class FiniteField {
public:
    using Elem = std::uint64_t;

    FiniteField(std::uint64_t p, unsigned n, std::vector<std::uint64_t> modulus);

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return n_; }
    std::uint64_t size() const { return size_; }
    /// Monic modulus, coefficients from the constant term up.
    const std::vector<std::uint64_t>& modulus() const { return mod_; }
    std::string modulus_string() const;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long long v) const;
    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const { return sub(0, a); }
    Elem mul(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t e) const;
    Elem inv(Elem a) const;
    /// a^(p^k)
    Elem frobenius(Elem a, unsigned k = 1) const;
    /// Quadratic character: 0, 1 or -1 (p odd).
    int chi(Elem a) const;

private:
    Elem slow_mul(Elem a, Elem b) const;

    std::uint64_t p_;
    unsigned n_;
    std::uint64_t size_;
    std::vector<std::uint64_t> mod_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;
};

/// True when the monic polynomial (coefficients low to high) is irreducible
/// over F_p. Uses gcd(f, x^{p^i} - x) = 1 for i <= deg/2.
bool is_irreducible_mod_p(const std::vector<std::uint64_t>& monic, std::uint64_t p);

/// F_{p^n} with the smallest monic irreducible modulus, ordering the
/// candidates by their non-leading coefficients read as a base-p integer.
/// Cached; safe to call concurrently.
std::shared_ptr<const FiniteField> field_make(std::uint64_t p, unsigned n);

} // namespace motzeta::curve
