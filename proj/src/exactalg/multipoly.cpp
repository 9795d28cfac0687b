#include "motzeta/exactalg/multipoly.hpp"

#include <numeric>

#include "motzeta/error.hpp"

namespace motzeta::alg {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) return da < db;
    // Lexicographic with x1 most significant.
    return a < b;
}

MultiPoly MultiPoly::constant(std::size_t num_vars, const BigInt& c) {
    MultiPoly p(num_vars);
    p.add_term(Exponents(num_vars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t index) {
    if (index >= num_vars) throw PreconditionError("variable index out of range");
    Exponents e(num_vars, 0);
    e[index] = 1;
    MultiPoly p(num_vars);
    p.add_term(e, 1);
    return p;
}

void MultiPoly::add_term(const Exponents& e, const BigInt& c) {
    if (e.size() != nvars_) throw PreconditionError("exponent vector length does not match variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

long MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.rbegin()->first;
    return static_cast<long>(std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
}

std::uint32_t MultiPoly::degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const long d = degree();
    for (const auto& [e, c] : terms_)
        if (static_cast<long>(std::accumulate(e.begin(), e.end(), std::uint64_t{0})) != d) return false;
    return true;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.nvars_ != nvars_) throw PreconditionError("variable counts differ");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (o.nvars_ != nvars_) throw PreconditionError("variable counts differ");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw PreconditionError("variable counts differ");
    MultiPoly out(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

BigRational MultiPoly::evaluate(const std::vector<BigRational>& x) const {
    if (x.size() != nvars_) throw PreconditionError("point dimension does not match variable count");
    BigRational acc = 0;
    for (const auto& [e, c] : terms_) {
        BigRational t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i]) t *= pow(x[i], static_cast<long>(e[i]));
        acc += t;
    }
    return acc;
}

std::uint64_t MultiPoly::evaluate_mod(const std::vector<std::uint64_t>& x, std::uint64_t p) const {
    std::uint64_t acc = 0;
    for (const auto& [e, c] : terms_) {
        BigInt cm = c % static_cast<unsigned long>(p);
        if (cm < 0) cm += static_cast<unsigned long>(p);
        std::uint64_t t = cm.get_ui();
        for (std::size_t i = 0; i < nvars_ && t; ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) t = t * x[i] % p;
        acc = (acc + t) % p;
    }
    return acc;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        BigInt mag = abs(c);
        std::string term;
        if (mono.empty()) term = mag.get_str();
        else if (mag == 1) term = mono;
        else term = mag.get_str() + "*" + mono;
        if (out.empty()) out = (c < 0 ? "-" : "") + term;
        else out += (c < 0 ? " - " : " + ") + term;
    }
    return out;
}

} // namespace motzeta::alg
