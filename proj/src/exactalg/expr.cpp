#include "motzeta/exactalg/expr.hpp"

#include <cctype>

#include "motzeta/error.hpp"

namespace motzeta::alg {

SymPoly SymPoly::constant(const BigRational& c) {
    SymPoly p;
    p.add({}, c);
    return p;
}

SymPoly SymPoly::variable(const std::string& name, long exponent) {
    SymPoly p;
    if (exponent == 0) p.add({}, 1);
    else p.add({{name, exponent}}, 1);
    return p;
}

void SymPoly::add(const Monomial& m, const BigRational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::set<std::string> SymPoly::variables() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m) out.insert(v);
    return out;
}

SymPoly SymPoly::operator-() const {
    SymPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

SymPoly operator+(const SymPoly& a, const SymPoly& b) {
    SymPoly out = a;
    for (const auto& [m, c] : b.terms_) out.add(m, c);
    return out;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    SymPoly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            SymPoly::Monomial m = ma;
            for (const auto& [v, e] : mb) {
                long& slot = m[v];
                slot += e;
                if (slot == 0) m.erase(v);
            }
            out.add(m, ca * cb);
        }
    }
    return out;
}

SymPoly SymPoly::pow(unsigned e) const {
    SymPoly result = constant(1), base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

SymPoly SymPoly::coefficient_of(const std::string& var, long k) const {
    SymPoly out;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(var);
        const long e = it == m.end() ? 0 : it->second;
        if (e != k) continue;
        Monomial rest = m;
        rest.erase(var);
        out.add(rest, c);
    }
    return out;
}

long SymPoly::max_degree(const std::string& var) const {
    long d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(var);
        const long e = it == m.end() ? 0 : it->second;
        d = first ? e : std::max(d, e);
        first = false;
    }
    return d;
}

long SymPoly::min_degree(const std::string& var) const {
    long d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(var);
        const long e = it == m.end() ? 0 : it->second;
        d = first ? e : std::min(d, e);
        first = false;
    }
    return d;
}

SymPoly SymPoly::assign(const std::map<std::string, BigRational>& values) const {
    SymPoly out;
    for (const auto& [m, c] : terms_) {
        Monomial rest;
        BigRational coef = c;
        for (const auto& [v, e] : m) {
            auto it = values.find(v);
            if (it == values.end()) rest[v] = e;
            else coef *= alg::pow(it->second, e);
        }
        out.add(rest, coef);
    }
    return out;
}

Fraction SymPoly::to_fraction(const std::string& var) const {
    Fraction acc;
    for (const auto& [m, c] : terms_) {
        long e = 0;
        for (const auto& [v, k] : m) {
            if (v != var) throw SchemaError("unassigned symbol '" + v + "' in an expression over " + var);
            e = k;
        }
        acc += Fraction(c) * Fraction::power_of_var(e);
    }
    return acc;
}

namespace {

template <class V>
struct Hooks;

template <>
struct Hooks<SymPoly> {
    static SymPoly number(const BigRational& r) { return SymPoly::constant(r); }
    static SymPoly ident(const std::string& name) { return SymPoly::variable(name); }
    static SymPoly add(const SymPoly& a, const SymPoly& b) { return a + b; }
    static SymPoly sub(const SymPoly& a, const SymPoly& b) { return a - b; }
    static SymPoly mul(const SymPoly& a, const SymPoly& b) { return a * b; }
    static SymPoly neg(const SymPoly& a) { return -a; }
    static SymPoly invert_monomial(const SymPoly& a) {
        if (a.terms().size() != 1) throw SchemaError("division is only supported by a single monomial");
        const auto& [m, c] = *a.terms().begin();
        if (c == 0) throw SchemaError("division by zero");
        SymPoly out = SymPoly::constant(1 / c);
        for (const auto& [v, e] : m) out = out * SymPoly::variable(v, -e);
        return out;
    }
    static SymPoly div(const SymPoly& a, const SymPoly& b) { return a * invert_monomial(b); }
    static SymPoly pow(const SymPoly& a, long e) {
        if (e >= 0) return a.pow(static_cast<unsigned>(e));
        return invert_monomial(a).pow(static_cast<unsigned>(-e));
    }
};

template <>
struct Hooks<Fraction> {
    static std::string var;
    static Fraction number(const BigRational& r) { return Fraction(r); }
    static Fraction ident(const std::string& name) {
        if (name != var) throw SchemaError("unexpected symbol '" + name + "' (expected " + var + ")");
        return Fraction::power_of_var(1);
    }
    static Fraction add(const Fraction& a, const Fraction& b) { return a + b; }
    static Fraction sub(const Fraction& a, const Fraction& b) { return a - b; }
    static Fraction mul(const Fraction& a, const Fraction& b) { return a * b; }
    static Fraction neg(const Fraction& a) { return -a; }
    static Fraction div(const Fraction& a, const Fraction& b) {
        if (b.is_zero()) throw SchemaError("division by zero");
        return a / b;
    }
    static Fraction pow(const Fraction& a, long e) { return a.pow(e); }
};
std::string Hooks<Fraction>::var = "L";

template <class V>
class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    V parse() {
        V v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

private:
    using H = Hooks<V>;

    [[noreturn]] void fail(const std::string& what) const {
        throw SchemaError("cannot parse '" + std::string(s_) + "': " + what + " at offset " + std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    V expr() {
        V acc;
        if (eat('-')) acc = H::neg(term());
        else {
            eat('+');
            acc = term();
        }
        for (;;) {
            if (eat('+')) acc = H::add(acc, term());
            else if (eat('-')) acc = H::sub(acc, term());
            else return acc;
        }
    }

    V term() {
        V acc = factor();
        for (;;) {
            if (eat('*')) acc = H::mul(acc, factor());
            else if (eat('/')) acc = H::div(acc, factor());
            else return acc;
        }
    }

    V factor() {
        V b = base();
        if (eat('^')) {
            bool negative = eat('-');
            skip();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected an integer exponent");
            long e = std::stol(std::string(s_.substr(start, pos_ - start)));
            b = H::pow(b, negative ? -e : e);
        }
        return b;
    }

    V base() {
        skip();
        if (eat('(')) {
            V v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (eat('-')) return H::neg(factor());
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return H::number(BigRational(BigInt(std::string(s_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            return H::ident(std::string(s_.substr(start, pos_ - start)));
        }
        fail("expected a number, symbol or '('");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

SymPoly parse_sympoly(std::string_view text) { return Parser<SymPoly>(text).parse(); }

Fraction parse_fraction(std::string_view text, const std::string& var) {
    Hooks<Fraction>::var = var;
    Fraction f = Parser<Fraction>(text).parse();
    Hooks<Fraction>::var = "L";
    return f;
}

} // namespace motzeta::alg
