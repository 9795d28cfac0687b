#include "motzeta/artinl/artin.hpp"

#include <algorithm>
#include <future>
#include <map>

#include "motzeta/config.hpp"
#include "motzeta/curvezeta/field.hpp"
#include "motzeta/error.hpp"

namespace motzeta::artin {

using curve::CurveData;
using alg::BigInt;
using u64 = std::uint64_t;

namespace {

u64 residue(long long v, u64 p) {
    const long long m = static_cast<long long>(p);
    return static_cast<u64>(((v % m) + m) % m);
}

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    for (a %= p; e; e >>= 1, a = mulmod(a, a, p))
        if (e & 1) r = mulmod(r, a, p);
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

Automorphism reduce(const Automorphism& g, u64 p) {
    return {static_cast<long long>(residue(g.a, p)), static_cast<long long>(residue(g.b, p)),
            static_cast<long long>(residue(g.c, p)), static_cast<long long>(residue(g.d, p))};
}

bool is_line(const CurveData& c) { return c.model() == CurveData::Model::projective_line; }

void require_supported(const CurveData& c) {
    if (c.model() == CurveData::Model::plane)
        throw PreconditionError("group actions are supported on P^1 and hyperelliptic models only");
}

// g o h
Automorphism compose(const CurveData& c, const Automorphism& g, const Automorphism& h) {
    const u64 p = c.p();
    const Automorphism x = reduce(g, p), y = reduce(h, p);
    auto m = [&](long long s, long long t, long long u, long long v) {
        return static_cast<long long>((mulmod(static_cast<u64>(s), static_cast<u64>(t), p) +
                                       mulmod(static_cast<u64>(u), static_cast<u64>(v), p)) %
                                      p);
    };
    if (is_line(c)) return {m(x.a, y.a, x.b, y.c), m(x.a, y.b, x.b, y.d), m(x.c, y.a, x.d, y.c), m(x.c, y.b, x.d, y.d)};
    return {m(x.a, y.a, 0, 0), m(x.a, y.b, x.b, 1), 0, m(x.d, y.d, 0, 0)};
}

bool same_map(const CurveData& c, const Automorphism& g, const Automorphism& h) {
    const u64 p = c.p();
    const Automorphism x = reduce(g, p), y = reduce(h, p);
    if (!is_line(c)) return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    // matrices equal up to a scalar
    const long long u[4] = {x.a, x.b, x.c, x.d}, v[4] = {y.a, y.b, y.c, y.d};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (mulmod(static_cast<u64>(u[i]), static_cast<u64>(v[j]), p) !=
                mulmod(static_cast<u64>(u[j]), static_cast<u64>(v[i]), p))
                return false;
    return true;
}

std::string show(const Automorphism& g) {
    return "(" + std::to_string(g.a) + "," + std::to_string(g.b) + "," + std::to_string(g.c) + "," +
           std::to_string(g.d) + ")";
}

// ---- polynomials over F_p for the separability kernel ----

using Dense = std::vector<u64>;          // low to high
using Sparse = std::map<u64, u64>;       // exponent -> nonzero coefficient

void trim(Dense& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Dense dense_rem(Dense a, const Dense& m, u64 p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const u64 inv = invmod(m.back(), p);
    while (a.size() > dm) {
        const u64 f = mulmod(a.back(), inv, p);
        const std::size_t s = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) a[s + i] = (a[s + i] + p - mulmod(f, m[i], p)) % p;
        trim(a);
    }
    return a;
}

Dense dense_mulmod(const Dense& a, const Dense& b, const Dense& m, u64 p) {
    if (a.empty() || b.empty()) return {};
    Dense r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    return dense_rem(std::move(r), m, p);
}

Dense x_power_mod(u64 e, const Dense& m, u64 p) {
    Dense r = dense_rem({1}, m, p), base = dense_rem({0, 1}, m, p);
    for (; e; e >>= 1) {
        if (e & 1) r = dense_mulmod(r, base, m, p);
        base = dense_mulmod(base, base, m, p);
    }
    return r;
}

Dense sparse_rem_dense(const Sparse& a, const Dense& m, u64 p) {
    Dense r;
    for (const auto& [e, c] : a) {
        Dense t = x_power_mod(e, m, p);
        if (r.size() < t.size()) r.resize(t.size(), 0);
        for (std::size_t i = 0; i < t.size(); ++i) r[i] = (r[i] + mulmod(c, t[i], p)) % p;
    }
    trim(r);
    return r;
}

// Long division by a divisor with few terms; every step cancels the leading
// term of a.
Sparse sparse_rem_sparse(Sparse a, const Sparse& m, u64 p) {
    const u64 dm = m.rbegin()->first;
    const u64 inv = invmod(m.rbegin()->second, p);
    std::uint64_t steps = 0;
    const std::uint64_t budget = enumeration_budget();
    while (!a.empty() && a.rbegin()->first >= dm) {
        if (++steps > budget) throw BudgetExceeded("sparse polynomial division exceeds the enumeration budget");
        const auto [e, c] = *a.rbegin();
        const u64 f = mulmod(c, inv, p);
        for (const auto& [me, mc] : m) {
            const u64 ex = e - dm + me;
            const u64 v = (a[ex] + p - mulmod(f, mc, p)) % p;
            if (v == 0) a.erase(ex);
            else a[ex] = v;
        }
    }
    return a;
}

Dense to_dense(const Sparse& a) {
    Dense d(a.empty() ? 0 : a.rbegin()->first + 1, 0);
    for (const auto& [e, c] : a) d[e] = c;
    return d;
}

// Degree of gcd(a, b); a, b nonzero.
std::size_t gcd_degree(Sparse a, Sparse b, u64 p) {
    constexpr u64 kDenseLimit = 256;
    if (a.rbegin()->first < b.rbegin()->first) std::swap(a, b);
    while (b.rbegin()->first > kDenseLimit) {
        Sparse r = sparse_rem_sparse(std::move(a), b, p);
        a = std::move(b);
        if (r.empty()) return a.rbegin()->first;
        b = std::move(r);
    }
    Dense x = to_dense(b), y = sparse_rem_dense(a, x, p);
    while (!y.empty()) {
        Dense r = dense_rem(x, y, p);
        x = std::move(y);
        y = std::move(r);
    }
    return x.size() - 1;
}

u64 checked_power(u64 base, u64 e, const std::string& what) {
    u64 r = 1;
    for (u64 i = 0; i < e; ++i) {
        if (r > enumeration_budget() / base) throw BudgetExceeded(what + " exceeds the enumeration budget");
        r *= base;
    }
    return r;
}

// Roots of c x^{Q+1} - a x^Q + d x - b over the closure, plus infinity when
// c = 0; exact when the polynomial is separable.
std::optional<u64> line_kernel(const CurveData& c, const Automorphism& g, unsigned n) {
    const u64 p = c.p();
    const Automorphism m = reduce(g, p);
    u64 Q = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (Q > (u64{1} << 62) / p) throw BudgetExceeded("q^n does not fit in 64 bits");
        Q *= p;
    }
    Sparse f;
    auto put = [&](u64 e, long long v) {
        const u64 r = residue(v, p);
        if (r) f[e] = (f.count(e) ? f[e] + r : r) % p;
    };
    put(Q + 1, m.c);
    put(Q, -m.a);
    put(1, m.d);
    put(0, -m.b);
    Sparse df;
    for (const auto& [e, v] : f) {
        const u64 w = mulmod(e % p, v, p);
        if (e > 0 && w) df[e - 1] = w;
    }
    if (df.empty()) return std::nullopt;
    if (gcd_degree(f, df, p) != 0) return std::nullopt;
    return f.rbegin()->first + (m.c == 0 ? 1 : 0);
}

u64 enumerate_fixed(const CurveData& c, const Automorphism& g, unsigned n) {
    const u64 p = c.p();
    const Automorphism m = reduce(g, p);
    const unsigned ord = automorphism_order(c, g);
    const unsigned k = n * ord;
    checked_power(p, k, "search field F_" + std::to_string(p) + "^" + std::to_string(k));
    const auto K = curve::field_make(p, k);
    const auto A = K->from_int(m.a), B = K->from_int(m.b), C = K->from_int(m.c), D = K->from_int(m.d);
    u64 count = 0;
    if (is_line(c)) {
        for (u64 x = 0; x < K->size(); ++x) {
            const auto xq = K->frobenius(x, n);
            const auto lhs = K->add(K->mul(K->mul(C, x), xq), K->mul(D, x));
            if (lhs == K->add(K->mul(A, xq), B)) ++count;
        }
        return count + (m.c == 0 ? 1 : 0);
    }
    // y with d y^Q = y, bucketed by y^2
    std::map<u64, u64> squares;
    for (u64 y = 0; y < K->size(); ++y)
        if (K->mul(D, K->frobenius(y, n)) == y) ++squares[K->mul(y, y)];
    const auto& f = c.f();
    for (u64 x = 0; x < K->size(); ++x) {
        if (K->add(K->mul(A, K->frobenius(x, n)), B) != x) continue;
        u64 fx = 0;
        for (std::size_t i = f.size(); i-- > 0;) fx = K->add(K->mul(fx, x), K->from_int(f[i]));
        auto it = squares.find(fx);
        if (it != squares.end()) count += it->second;
    }
    const std::size_t deg = f.size() - 1;
    if (deg % 2 == 1) return count + 1;
    // s = y / x^{deg/2} at infinity: s^2 = lead, fixed iff d s^Q = a^{deg/2} s
    const auto lead = K->from_int(f.back());
    const auto ak = K->pow(A, deg / 2);
    for (u64 s = 0; s < K->size(); ++s)
        if (K->mul(s, s) == lead && K->mul(D, K->frobenius(s, n)) == K->mul(ak, s)) ++count;
    return count;
}

// counts[i][n-1] = #Fix(h_i F^n)
using FixTable = std::vector<std::vector<u64>>;

FixTable fix_table(const ActionData& a, const std::vector<std::size_t>& h, std::size_t order) {
    std::vector<std::vector<std::future<u64>>> jobs(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (h[i] >= a.maps.size()) throw PreconditionError("group element has no automorphism");
        for (std::size_t n = 1; n <= order; ++n)
            jobs[i].push_back(std::async(std::launch::async, [&a, g = h[i], n] {
                return fixed_points(a, g, static_cast<unsigned>(n));
            }));
    }
    FixTable t(h.size());
    for (std::size_t i = 0; i < h.size(); ++i)
        for (auto& j : jobs[i]) t[i].push_back(j.get());
    return t;
}

std::vector<std::size_t> all_elements(const CharacterData& g) {
    std::vector<std::size_t> v(g.order());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
    return v;
}

BigRational nu_from_table(const CharacterData& g, const std::vector<std::size_t>& h, const ClassFunction& chi,
                          const FixTable& t, unsigned n) {
    if (chi.size() != h.size()) throw PreconditionError("character has the wrong length");
    BigRational s = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const auto inv = std::find(h.begin(), h.end(), g.inverse[h[i]]);
        if (inv == h.end()) throw PreconditionError("subset is not closed under inverses");
        s += chi[static_cast<std::size_t>(inv - h.begin())] * BigRational(BigInt(t[i][n - 1]));
    }
    return s / static_cast<long>(h.size());
}

alg::Series<BigRational> l_from_table(const CharacterData& g, const std::vector<std::size_t>& h,
                                      const ClassFunction& chi, const FixTable& t, std::size_t order) {
    std::vector<BigRational> lg(order + 1, BigRational(0));
    for (std::size_t n = 1; n <= order; ++n)
        lg[n] = nu_from_table(g, h, chi, t, static_cast<unsigned>(n)) / static_cast<long>(n);
    return alg::series_exp(alg::Series<BigRational>(std::move(lg)));
}

std::string show_series(const alg::Series<BigRational>& s) {
    std::string out;
    for (const auto& c : s.coeffs()) out += (out.empty() ? "" : ", ") + alg::to_string(c);
    return "[" + out + "]";
}

Verdict compare(const std::string& what, const alg::Series<BigRational>& lhs, const alg::Series<BigRational>& rhs) {
    for (std::size_t i = 0; i <= lhs.order(); ++i)
        if (lhs[i] != rhs[i])
            return Verdict::fail(what + ": coefficient of t^" + std::to_string(i) + " is " + alg::to_string(lhs[i]) +
                                 " on the left and " + alg::to_string(rhs[i]) + " on the right");
    return Verdict::pass(what + " holds to order " + std::to_string(lhs.order()) + ": " + show_series(lhs));
}

ClassFunction add(const ClassFunction& a, const ClassFunction& b) {
    ClassFunction c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

} // namespace

unsigned automorphism_order(const CurveData& c, const Automorphism& g) {
    const Automorphism id{};
    Automorphism x = g;
    for (unsigned m = 1; m <= 1024; ++m) {
        if (same_map(c, x, id)) return m;
        x = compose(c, g, x);
    }
    throw PreconditionError("automorphism " + show(g) + " has order above 1024");
}

Verdict validate_action(const ActionData& a, const CharacterData& g) {
    require_supported(a.curve);
    const u64 p = a.curve.p();
    if (a.maps.size() != g.order())
        return Verdict::fail(std::to_string(a.maps.size()) + " maps for a group of order " + std::to_string(g.order()));
    for (std::size_t i = 0; i < a.maps.size(); ++i) {
        const Automorphism m = reduce(a.maps[i], p);
        if (is_line(a.curve)) {
            if ((mulmod(m.a, m.d, p) + p - mulmod(m.b, m.c, p)) % p == 0)
                return Verdict::fail("map of " + g.labels[i] + " is singular");
            continue;
        }
        if (m.c != 0 || m.a == 0 || m.d == 0)
            return Verdict::fail("map of " + g.labels[i] + " is not of the form (x, y) -> (a x + b, d y)");
        // f(a x + b) = d^2 f(x)
        const auto& f = a.curve.f();
        Dense lhs{0}, lin{static_cast<u64>(m.b), static_cast<u64>(m.a)};
        for (std::size_t k = f.size(); k-- > 0;) {
            Dense next(lhs.size() + 1, 0);
            for (std::size_t j = 0; j < lhs.size(); ++j)
                for (std::size_t t = 0; t < 2; ++t) next[j + t] = (next[j + t] + mulmod(lhs[j], lin[t], p)) % p;
            next[0] = (next[0] + residue(f[k], p)) % p;
            lhs = std::move(next);
        }
        const u64 d2 = mulmod(m.d, m.d, p);
        for (std::size_t k = 0; k < lhs.size(); ++k) {
            const u64 rhs = k < f.size() ? mulmod(d2, residue(f[k], p), p) : 0;
            if (lhs[k] != rhs) return Verdict::fail("map of " + g.labels[i] + " does not preserve the curve equation");
        }
    }
    for (std::size_t x = 0; x < g.order(); ++x)
        for (std::size_t y = 0; y < g.order(); ++y)
            if (!same_map(a.curve, compose(a.curve, a.maps[x], a.maps[y]), a.maps[g.mult[x][y]]))
                return Verdict::fail("maps do not respect the group law at (" + g.labels[x] + ", " + g.labels[y] + ")");
    return Verdict::pass(g.name + " acts on " + a.curve.describe());
}

std::uint64_t fixed_points(const ActionData& a, std::size_t g, unsigned n, FixMethod method) {
    require_supported(a.curve);
    if (n == 0) throw PreconditionError("fixed points need n >= 1");
    if (g >= a.maps.size()) throw PreconditionError("group element out of range");
    const Automorphism& m = a.maps[g];
    if (method == FixMethod::kernel) {
        if (!is_line(a.curve)) throw PreconditionError("the separability kernel covers P^1 only");
        auto k = line_kernel(a.curve, m, n);
        if (!k) throw PreconditionError("fixed-point polynomial is inseparable; enumerate instead");
        return *k;
    }
    if (method == FixMethod::automatic && is_line(a.curve))
        if (auto k = line_kernel(a.curve, m, n)) return *k;
    return enumerate_fixed(a.curve, m, n);
}

BigRational nu_n(const ActionData& a, const CharacterData& g, const std::vector<std::size_t>& h,
                 const ClassFunction& chi, unsigned n) {
    FixTable t(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) t[i].assign(n, 0);
    for (std::size_t i = 0; i < h.size(); ++i) t[i][n - 1] = fixed_points(a, h[i], n);
    return nu_from_table(g, h, chi, t, n);
}

BigRational nu_n(const ActionData& a, const CharacterData& g, const ClassFunction& chi, unsigned n) {
    return nu_n(a, g, all_elements(g), chi, n);
}

LSeries artin_L(const ActionData& a, const CharacterData& g, const std::vector<std::size_t>& h,
                const ClassFunction& chi, std::size_t order, std::string label) {
    if (!is_subgroup(g, h)) throw PreconditionError("artin_L needs a subgroup");
    const auto t = fix_table(a, h, order);
    return {std::move(label), l_from_table(g, h, chi, t, order), order};
}

LSeries artin_L(const ActionData& a, const CharacterData& g, const ClassFunction& chi, std::size_t order,
                std::string label) {
    return artin_L(a, g, all_elements(g), chi, order, std::move(label));
}

alg::Series<BigRational> curve_zeta_series(const CurveData& c, std::size_t order) {
    const auto counts = curve::count_tower(c, static_cast<unsigned>(order));
    std::vector<BigRational> lg(order + 1, BigRational(0));
    for (std::size_t n = 1; n <= order; ++n)
        lg[n] = alg::make_rational(BigInt(static_cast<unsigned long>(counts[n - 1])), BigInt(static_cast<unsigned long>(n)));
    return alg::series_exp(alg::Series<BigRational>(std::move(lg)));
}

Verdict formalism_check(const ActionData& a, const CharacterData& g, Formalism which, std::size_t order,
                        const FormalismInput& input) {
    const auto all = all_elements(g);
    const FixTable t = fix_table(a, all, order);
    auto L = [&](const ClassFunction& chi) { return l_from_table(g, all, chi, t, order); };

    switch (which) {
    case Formalism::additivity: {
        std::vector<std::pair<ClassFunction, ClassFunction>> pairs;
        if (input.chi1 || input.chi2) {
            const ClassFunction zero(g.order(), BigRational(0));
            pairs.emplace_back(input.chi1.value_or(zero), input.chi2.value_or(zero));
        } else {
            for (std::size_t i = 0; i < g.table.size(); ++i) {
                pairs.emplace_back(g.character(i), ClassFunction(g.order(), BigRational(0)));
                for (std::size_t j = i; j < g.table.size(); ++j) pairs.emplace_back(g.character(i), g.character(j));
            }
        }
        Verdict last;
        for (const auto& [x, y] : pairs) {
            last = compare("L(chi + chi') = L(chi) L(chi')", L(add(x, y)), alg::series_mul(L(x), L(y)));
            if (!last) return last;
        }
        return Verdict::pass("additivity holds for " + std::to_string(pairs.size()) + " pairs to order " +
                             std::to_string(order));
    }
    case Formalism::induction: {
        if (!input.induction) throw PreconditionError("induction check needs subgroup data");
        const auto& ind = *input.induction;
        const ClassFunction big = induce(g, ind.subgroup, ind.chi);
        FixTable sub;
        for (auto x : ind.subgroup) sub.push_back(t[x]);
        return compare("L(X, G, Ind chi') = L(X, H, chi')", L(big), l_from_table(g, ind.subgroup, ind.chi, sub, order));
    }
    case Formalism::inflation: {
        if (!input.inflation) throw PreconditionError("inflation check needs quotient data");
        const auto& inf = *input.inflation;
        const auto& q = inf.quotient_group;
        if (!is_normal_subgroup(g, inf.normal_subgroup)) throw PreconditionError("G' is not a normal subgroup");
        if (inf.projection.size() != g.order()) throw PreconditionError("projection has the wrong length");
        for (std::size_t x = 0; x < g.order(); ++x)
            for (std::size_t y = 0; y < g.order(); ++y)
                if (inf.projection[g.mult[x][y]] != q.mult[inf.projection[x]][inf.projection[y]])
                    throw PreconditionError("projection is not a homomorphism");
        for (std::size_t x = 0; x < g.order(); ++x) {
            const bool in_kernel = inf.projection[x] == q.identity();
            const bool in_sub = std::find(inf.normal_subgroup.begin(), inf.normal_subgroup.end(), x) !=
                                inf.normal_subgroup.end();
            if (in_kernel != in_sub) throw PreconditionError("projection kernel differs from G'");
        }
        if (inf.normal_subgroup.size() * q.order() != g.order()) throw PreconditionError("projection is not onto");
        if (auto v = validate_action(inf.quotient_action, q); !v) throw PreconditionError("quotient action: " + v.detail);
        ClassFunction pulled(g.order());
        for (std::size_t x = 0; x < g.order(); ++x) pulled[x] = inf.chi.at(inf.projection[x]);
        return compare("L(X, G, Inf chi'') = L(X/G', G/G', chi'')", L(pulled),
                       artin_L(inf.quotient_action, q, inf.chi, order).series);
    }
    case Formalism::factorization: {
        auto prod = alg::Series<BigRational>::constant(BigRational(1), order);
        for (std::size_t k = 0; k < g.table.size(); ++k) {
            const auto lk = L(g.character(k));
            const long deg = g.table[k][g.class_of[g.identity()]].get_num().get_si();
            for (long i = 0; i < deg; ++i) prod = alg::series_mul(prod, lk);
        }
        return compare("Z(X) = prod L(chi)^chi(1)", curve_zeta_series(a.curve, order), prod);
    }
    }
    throw PreconditionError("unknown formalism check");
}

Formalism parse_formalism(const std::string& name) {
    for (auto f : {Formalism::additivity, Formalism::induction, Formalism::inflation, Formalism::factorization})
        if (to_string(f) == name) return f;
    throw PreconditionError("unknown formalism check '" + name + "'");
}

std::string to_string(Formalism f) {
    switch (f) {
    case Formalism::additivity: return "additivity";
    case Formalism::induction: return "induction";
    case Formalism::inflation: return "inflation";
    case Formalism::factorization: return "factorization";
    }
    return "?";
}

namespace {

InflationData collapse_all(const CharacterData& g, std::uint64_t p) {
    InflationData d{all_elements(g), trivial_group(), {CurveData::projective_line(p), {Automorphism{}}},
                    std::vector<std::size_t>(g.order(), 0), {BigRational(1)}};
    return d;
}

NamedAction z2_on_line(std::uint64_t p) {
    const auto g = cyclic2();
    NamedAction a{"z2_neg_p1_f" + std::to_string(p), g,
                  {CurveData::projective_line(p), {Automorphism{}, Automorphism{-1, 0, 0, 1}}},
                  InductionData{{g.identity()}, {BigRational(1)}}, collapse_all(g, p)};
    return a;
}

} // namespace

std::vector<NamedAction> builtin_actions() {
    std::vector<NamedAction> out;
    out.push_back(z2_on_line(3));
    out.push_back(z2_on_line(5));
    {
        // anharmonic group permuting {0, 1, oo}; x + 1/(1-x) + (x-1)/x is
        // invariant under the 3-cycles and goes to 3 - u under (01)
        const auto g = symmetric3();
        const auto p1 = CurveData::projective_line(5);
        const auto z2 = cyclic2();
        out.push_back({"s3_anharmonic_p1_f5", g,
                       {p1, {{1, 0, 0, 1}, {-1, 1, 0, 1}, {0, 1, 1, 0}, {1, 0, 1, -1}, {0, 1, -1, 1}, {1, -1, 1, 0}}},
                       InductionData{{g.element("e"), g.element("(01)")}, {BigRational(1), BigRational(-1)}},
                       InflationData{{g.element("e"), g.element("(012)"), g.element("(021)")},
                                     z2,
                                     {p1, {Automorphism{}, Automorphism{-1, 3, 0, 1}}},
                                     {0, 1, 1, 1, 0, 0},
                                     z2.character(z2.character_index("sign"))}});
    }
    {
        // u = x^2 collapses <-x>; 1/x acts on u as 1/u
        const auto g = klein4();
        const auto p1 = CurveData::projective_line(5);
        const auto z2 = cyclic2();
        out.push_back({"v4_p1_f5", g,
                       {p1, {{1, 0, 0, 1}, {-1, 0, 0, 1}, {0, 1, 1, 0}, {0, -1, 1, 0}}},
                       InductionData{{g.element("e"), g.element("a")}, {BigRational(1), BigRational(-1)}},
                       InflationData{{g.element("e"), g.element("a")},
                                     z2,
                                     {p1, {Automorphism{}, Automorphism{0, 1, 1, 0}}},
                                     {0, 0, 1, 1},
                                     z2.character(z2.character_index("sign"))}});
    }
    {
        const auto g = cyclic2();
        out.push_back({"z2_hyperelliptic_e0_f3", g,
                       {*curve::builtin_curve("e0_f3"), {Automorphism{}, Automorphism{1, 0, 0, -1}}},
                       InductionData{{g.identity()}, {BigRational(1)}}, collapse_all(g, 3)});
    }
    return out;
}

const NamedAction* builtin_action(const std::string& name) {
    static const std::vector<NamedAction> all = builtin_actions();
    for (const auto& a : all)
        if (a.name == name) return &a;
    return nullptr;
}

} // namespace motzeta::artin
