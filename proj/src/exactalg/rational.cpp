#include "motzeta/exactalg/rational.hpp"

#include "motzeta/error.hpp"

namespace motzeta::alg {

BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw NotInvertible("rational with zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

BigRational parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (!s.empty() && s.front() == '+') s.erase(s.begin());
    BigRational r;
    if (s.empty() || r.set_str(s, 10) != 0) throw SchemaError("not a rational number: '" + s + "'");
    if (r.get_den() == 0) throw NotInvertible("rational with zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const BigRational& x) { return x.get_str(); }

BigRational pow(const BigRational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) throw NotInvertible("zero to a negative power");
        BigRational inv = 1 / base;
        return pow(inv, -exponent);
    }
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return BigRational(num, den);
}

BigInt pow(const BigInt& base, unsigned long exponent) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

} // namespace motzeta::alg
