// Exact point counting over F_p by eliminating variables one at a time.
//
// For a system S and a variable x in which every member has degree <= 1,
// write f_i = a_i x + b_i. A point y of the remaining coordinates lifts to
//   p solutions   if every a_i(y) and b_i(y) vanishes,
//   1 solution    if some a_j(y) != 0 and all minors a_i b_j - a_j b_i vanish,
//   0 otherwise.
// Since {a = 0} is contained in {minors = 0}, the count is
//   p * N(C, a, b) + N(C, minors) - N(C, a)
// with C the members not involving x.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "motzeta/error.hpp"
#include "motzeta/graphzeta/count.hpp"

namespace motzeta::graph {

namespace {

using Exp = std::vector<std::uint8_t>;
using Coef = std::uint64_t;

struct PPoly {
    std::map<Exp, Coef> t;
    bool is_zero() const { return t.empty(); }
    bool operator<(const PPoly& o) const { return t < o.t; }
    bool operator==(const PPoly& o) const { return t == o.t; }
};

class Field {
public:
    explicit Field(Coef p) : p_(p) {}
    Coef p() const { return p_; }
    Coef add(Coef a, Coef b) const { return (a + b) % p_; }
    Coef sub(Coef a, Coef b) const { return (a + p_ - b) % p_; }
    Coef mul(Coef a, Coef b) const { return a * b % p_; }
    Coef pow(Coef a, Coef e) const {
        Coef r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Coef inv(Coef a) const { return pow(a, p_ - 2); }

private:
    Coef p_;
};

class Eliminator {
public:
    Eliminator(Coef p, std::size_t nvars) : f_(p), n_(nvars) {}

    PPoly from_multipoly(const alg::MultiPoly& m) const {
        PPoly out;
        for (const auto& [e, c] : m.terms()) {
            Exp x(n_);
            for (std::size_t i = 0; i < n_; ++i) {
                if (e[i] > 255) throw PreconditionError("exponent too large for the elimination kernel");
                x[i] = static_cast<std::uint8_t>(e[i]);
            }
            alg::BigInt r = c % static_cast<unsigned long>(f_.p());
            if (r < 0) r += static_cast<unsigned long>(f_.p());
            add_term(out, x, r.get_ui());
        }
        return out;
    }

    Coef count(std::vector<PPoly> system, std::vector<bool> live) {
        // Clean up: drop zeros, detect nonzero constants, make monic, dedupe.
        std::set<PPoly> clean;
        for (auto& f : system) {
            if (f.is_zero()) continue;
            if (is_constant(f)) return 0;
            clean.insert(monic(f));
        }
        std::vector<bool> used(n_, false);
        for (const auto& f : clean)
            for (const auto& [e, c] : f.t)
                for (std::size_t i = 0; i < n_; ++i)
                    if (e[i]) used[i] = true;
        Coef free_factor = 1;
        for (std::size_t i = 0; i < n_; ++i)
            if (live[i] && !used[i]) free_factor *= f_.p();
        if (clean.empty()) return free_factor;
        return free_factor * count_core(std::vector<PPoly>(clean.begin(), clean.end()), used);
    }

private:
    static bool is_constant(const PPoly& f) {
        if (f.t.size() != 1) return false;
        const auto& e = f.t.begin()->first;
        return std::all_of(e.begin(), e.end(), [](std::uint8_t v) { return v == 0; });
    }

    void add_term(PPoly& f, const Exp& e, Coef c) const {
        if (c == 0) return;
        auto [it, inserted] = f.t.try_emplace(e, c);
        if (!inserted) {
            it->second = f_.add(it->second, c);
            if (it->second == 0) f.t.erase(it);
        }
    }

    PPoly monic(const PPoly& f) const {
        const Coef inv = f_.inv(f.t.rbegin()->second);
        if (inv == 1) return f;
        PPoly out = f;
        for (auto& [e, c] : out.t) c = f_.mul(c, inv);
        return out;
    }

    PPoly mul(const PPoly& a, const PPoly& b) const {
        PPoly out;
        Exp e(n_);
        for (const auto& [ea, ca] : a.t)
            for (const auto& [eb, cb] : b.t) {
                for (std::size_t i = 0; i < n_; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
                add_term(out, e, f_.mul(ca, cb));
            }
        return out;
    }

    PPoly sub(PPoly a, const PPoly& b) const {
        for (const auto& [e, c] : b.t) add_term(a, e, f_.sub(0, c));
        return a;
    }

    PPoly scale(PPoly a, Coef s) const {
        if (s == 0) return {};
        for (auto& [e, c] : a.t) c = f_.mul(c, s);
        return a;
    }

    static unsigned degree_in(const PPoly& f, std::size_t x) {
        unsigned d = 0;
        for (const auto& [e, c] : f.t) d = std::max<unsigned>(d, e[x]);
        return d;
    }

    // f = sum_k coef_k(other vars) * x^k
    std::vector<PPoly> split(const PPoly& f, std::size_t x) const {
        std::vector<PPoly> parts(degree_in(f, x) + 1);
        for (const auto& [e, c] : f.t) {
            Exp rest = e;
            rest[x] = 0;
            add_term(parts[e[x]], rest, c);
        }
        return parts;
    }

    // f with x replaced by g (g free of x).
    PPoly substitute(const PPoly& f, std::size_t x, const PPoly& g) const {
        auto parts = split(f, x);
        PPoly out;
        PPoly power;
        add_term(power, Exp(n_, 0), 1);
        for (std::size_t k = 0; k < parts.size(); ++k) {
            if (!parts[k].is_zero()) {
                PPoly term = mul(parts[k], power);
                for (const auto& [e, c] : term.t) add_term(out, e, c);
            }
            if (k + 1 < parts.size()) power = mul(power, g);
        }
        return out;
    }

    PPoly constant(Coef c) const {
        PPoly out;
        add_term(out, Exp(n_, 0), c);
        return out;
    }

    std::string key(const std::vector<PPoly>& system) const {
        std::string k;
        for (const auto& f : system) {
            k += static_cast<char>(0xff);
            for (const auto& [e, c] : f.t) {
                k.append(reinterpret_cast<const char*>(e.data()), e.size());
                k.append(reinterpret_cast<const char*>(&c), sizeof c);
            }
        }
        return k;
    }

    // system is clean, sorted, nonempty; live = exactly the variables used.
    Coef count_core(const std::vector<PPoly>& system, const std::vector<bool>& live) {
        const std::string k = key(system);
        if (auto it = memo_.find(k); it != memo_.end()) return it->second;
        const Coef result = solve(system, live);
        memo_.emplace(k, result);
        return result;
    }

    Coef solve(const std::vector<PPoly>& system, const std::vector<bool>& live) {
        const std::size_t m = system.size();
        // Independent components multiply.
        std::vector<std::size_t> comp(m);
        for (std::size_t i = 0; i < m; ++i) comp[i] = i;
        auto find = [&](std::size_t a) {
            while (comp[a] != a) a = comp[a] = comp[comp[a]];
            return a;
        };
        for (std::size_t x = 0; x < n_; ++x) {
            if (!live[x]) continue;
            std::size_t first = m;
            for (std::size_t i = 0; i < m; ++i) {
                if (degree_in(system[i], x) == 0) continue;
                if (first == m) first = i;
                else comp[find(i)] = find(first);
            }
        }
        std::map<std::size_t, std::vector<PPoly>> groups;
        for (std::size_t i = 0; i < m; ++i) groups[find(i)].push_back(system[i]);
        if (groups.size() > 1) {
            Coef prod = 1;
            for (auto& [root, members] : groups) {
                std::vector<bool> vars(n_, false);
                for (const auto& f : members)
                    for (const auto& [e, c] : f.t)
                        for (std::size_t i = 0; i < n_; ++i)
                            if (e[i]) vars[i] = true;
                prod *= count(members, vars);
                if (prod == 0) return 0;
            }
            return prod;
        }

        // A member with a monomial factor: f = x^k g vanishes iff x or g does.
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t x = 0; x < n_; ++x) {
                if (!live[x]) continue;
                std::uint8_t k = 255;
                for (const auto& [e, c] : system[i].t) k = std::min(k, e[x]);
                if (k == 0) continue;
                PPoly g;
                for (const auto& [e, c] : system[i].t) {
                    Exp r = e;
                    r[x] = static_cast<std::uint8_t>(r[x] - k);
                    add_term(g, r, c);
                }
                PPoly var;
                Exp ex(n_, 0);
                ex[x] = 1;
                add_term(var, ex, 1);
                std::vector<PPoly> rest;
                for (std::size_t j = 0; j < m; ++j)
                    if (j != i) rest.push_back(system[j]);
                auto with = [&](std::initializer_list<PPoly> extra) {
                    std::vector<PPoly> s = rest;
                    s.insert(s.end(), extra.begin(), extra.end());
                    return count(std::move(s), live);
                };
                if (is_constant(g)) {
                    if (k == 1 && system[i].t.size() == 1) break;
                    return with({var});
                }
                return with({var}) + with({g}) - with({var, g});
            }
        }

        // A member linear in x with a unit coefficient determines x.
        std::size_t best_f = m, best_x = n_;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t x = 0; x < n_; ++x) {
                if (!live[x] || degree_in(system[i], x) != 1) continue;
                auto parts = split(system[i], x);
                if (!is_constant(parts[1])) continue;
                if (best_f == m || system[i].t.size() < system[best_f].t.size()) {
                    best_f = i;
                    best_x = x;
                }
                break;
            }
        }
        if (best_f != m) {
            auto parts = split(system[best_f], best_x);
            const Coef a = parts[1].t.begin()->second;
            PPoly g = scale(parts[0], f_.sub(0, f_.inv(a)));
            std::vector<PPoly> rest;
            for (std::size_t i = 0; i < m; ++i)
                if (i != best_f) rest.push_back(substitute(system[i], best_x, g));
            std::vector<bool> next = live;
            next[best_x] = false;
            return count(std::move(rest), std::move(next));
        }

        // A variable of degree <= 1 everywhere: eliminate with the minor formula.
        std::size_t lin_x = n_;
        std::size_t lin_involved = m + 1;
        for (std::size_t x = 0; x < n_; ++x) {
            if (!live[x]) continue;
            bool linear = true;
            std::size_t involved = 0;
            for (const auto& f : system) {
                const unsigned d = degree_in(f, x);
                if (d > 1) linear = false;
                if (d == 1) ++involved;
            }
            if (linear && involved > 0 && involved < lin_involved) {
                lin_x = x;
                lin_involved = involved;
            }
        }
        std::vector<bool> next = live;
        if (lin_x != n_) {
            next[lin_x] = false;
            std::vector<PPoly> others, as, bs;
            for (const auto& f : system) {
                if (degree_in(f, lin_x) == 0) {
                    others.push_back(f);
                    continue;
                }
                auto parts = split(f, lin_x);
                as.push_back(parts[1]);
                bs.push_back(parts[0]);
            }
            std::vector<PPoly> both = others, only_a = others, minors = others;
            both.insert(both.end(), as.begin(), as.end());
            both.insert(both.end(), bs.begin(), bs.end());
            only_a.insert(only_a.end(), as.begin(), as.end());
            for (std::size_t i = 0; i < as.size(); ++i)
                for (std::size_t j = i + 1; j < as.size(); ++j)
                    minors.push_back(sub(mul(as[i], bs[j]), mul(as[j], bs[i])));
            const Coef all_vanish = count(both, next);
            const Coef consistent = count(minors, next);
            const Coef a_vanish = count(only_a, next);
            return f_.p() * all_vanish + consistent - a_vanish;
        }

        // Otherwise branch over the values of the lowest-degree variable.
        // Ties go to the variable occurring in the most terms.
        std::size_t bx = n_;
        unsigned bdeg = ~0u;
        std::size_t bocc = 0;
        for (std::size_t x = 0; x < n_; ++x) {
            if (!live[x]) continue;
            unsigned d = 0;
            std::size_t occ = 0;
            for (const auto& f : system) {
                d = std::max(d, degree_in(f, x));
                for (const auto& [e, c] : f.t) occ += e[x] ? 1 : 0;
            }
            if (d > 0 && (d < bdeg || (d == bdeg && occ > bocc))) {
                bdeg = d;
                bx = x;
                bocc = occ;
            }
        }
        next[bx] = false;
        Coef total = 0;
        for (Coef v = 0; v < f_.p(); ++v) {
            std::vector<PPoly> sub_system;
            const PPoly val = constant(v);
            for (const auto& f : system) sub_system.push_back(substitute(f, bx, val));
            total += count(std::move(sub_system), next);
        }
        return total;
    }

    Field f_;
    std::size_t n_;
    std::map<std::string, Coef> memo_;
};

} // namespace

std::uint64_t count_zeros_elimination(const std::vector<alg::MultiPoly>& system, std::uint64_t p) {
    if (!is_prime(p)) throw PreconditionError("count_zeros_elimination needs a prime modulus");
    if (p >= (std::uint64_t{1} << 31)) throw PreconditionError("prime too large for the elimination kernel");
    if (system.empty()) throw PreconditionError("empty system");
    const std::size_t n = system.front().num_vars();
    for (const auto& f : system)
        if (f.num_vars() != n) throw PreconditionError("variable counts differ within the system");
    Eliminator e(p, n);
    std::vector<PPoly> polys;
    for (const auto& f : system) polys.push_back(e.from_multipoly(f));
    return e.count(std::move(polys), std::vector<bool>(n, true));
}

} // namespace motzeta::graph
