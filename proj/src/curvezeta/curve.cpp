#include "motzeta/curvezeta/curve.hpp"

#include <future>
#include <thread>

#include "motzeta/config.hpp"
#include "motzeta/curvezeta/field.hpp"
#include "motzeta/error.hpp"

namespace motzeta::curve {

namespace {

using Elem = FiniteField::Elem;

long long reduce(long long v, std::uint64_t p) {
    long long r = v % static_cast<long long>(p);
    return r < 0 ? r + static_cast<long long>(p) : r;
}

std::vector<PlaneTerm> normalize_terms(std::vector<PlaneTerm> terms, std::uint64_t p) {
    std::vector<PlaneTerm> out;
    for (auto t : terms) {
        t.coef = reduce(t.coef, p);
        bool merged = false;
        for (auto& o : out)
            if (o.i == t.i && o.j == t.j && o.k == t.k) {
                o.coef = reduce(o.coef + t.coef, p);
                merged = true;
            }
        if (!merged) out.push_back(t);
    }
    std::erase_if(out, [](const PlaneTerm& t) { return t.coef == 0; });
    return out;
}

std::vector<PlaneTerm> partial(const std::vector<PlaneTerm>& terms, int var, std::uint64_t p) {
    std::vector<PlaneTerm> out;
    for (const auto& t : terms) {
        unsigned e = var == 0 ? t.i : var == 1 ? t.j : t.k;
        if (e == 0) continue;
        PlaneTerm d = t;
        d.coef = reduce(t.coef * static_cast<long long>(e), p);
        (var == 0 ? d.i : var == 1 ? d.j : d.k) -= 1;
        out.push_back(d);
    }
    return normalize_terms(std::move(out), p);
}

// Evaluates each polynomial at one point using shared power tables.
struct PlaneEval {
    const FiniteField& k;
    std::vector<std::vector<PlaneTerm>> polys;
    std::vector<std::vector<Elem>> coef;
    unsigned degree;

    PlaneEval(const FiniteField& field, std::vector<std::vector<PlaneTerm>> ps, unsigned deg)
        : k(field), polys(std::move(ps)), degree(deg) {
        for (const auto& f : polys) {
            std::vector<Elem> c;
            for (const auto& t : f) c.push_back(k.from_int(t.coef));
            coef.push_back(std::move(c));
        }
    }

    bool all_vanish(Elem x, Elem y, Elem z) const {
        Elem px[8], py[8], pz[8];
        px[0] = py[0] = pz[0] = 1;
        for (unsigned e = 1; e <= degree; ++e) {
            px[e] = k.mul(px[e - 1], x);
            py[e] = k.mul(py[e - 1], y);
            pz[e] = k.mul(pz[e - 1], z);
        }
        for (std::size_t a = 0; a < polys.size(); ++a) {
            Elem acc = 0;
            for (std::size_t b = 0; b < polys[a].size(); ++b) {
                const auto& t = polys[a][b];
                acc = k.add(acc, k.mul(coef[a][b], k.mul(px[t.i], k.mul(py[t.j], pz[t.k]))));
            }
            if (acc != 0) return false;
        }
        return true;
    }

    std::uint64_t projective_zeros() const {
        const std::uint64_t q = k.size();
        std::uint64_t n = 0;
        for (Elem x = 0; x < q; ++x)
            for (Elem y = 0; y < q; ++y)
                if (all_vanish(x, y, 1)) ++n;
        for (Elem x = 0; x < q; ++x)
            if (all_vanish(x, 1, 0)) ++n;
        if (all_vanish(1, 0, 0)) ++n;
        return n;
    }
};

std::uint64_t checked_size(std::uint64_t p, unsigned n, unsigned copies) {
    const std::uint64_t budget = enumeration_budget();
    std::uint64_t s = 1;
    for (unsigned i = 0; i < n * copies; ++i) {
        if (s > budget / p)
            throw BudgetExceeded("curve enumeration over F_" + std::to_string(p) + "^" + std::to_string(n) +
                                 " exceeds the budget " + std::to_string(budget));
        s *= p;
    }
    return s;
}

// Squarefree over F_p with nonzero leading term.
bool squarefree_mod_p(const std::vector<long long>& f, std::uint64_t p) {
    using V = std::vector<std::uint64_t>;
    V a, d;
    for (auto c : f) a.push_back(static_cast<std::uint64_t>(reduce(c, p)));
    if (a.empty() || a.back() == 0) return false;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * (i % p) % p);
    auto trim = [](V& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    auto inv = [p](std::uint64_t x) {
        std::uint64_t r = 1, e = p - 2;
        while (e) {
            if (e & 1) r = r * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return r;
    };
    auto mod = [&](V x, const V& m) {
        trim(x);
        const std::uint64_t li = inv(m.back());
        while (x.size() >= m.size()) {
            const std::uint64_t c = x.back() * li % p;
            const std::size_t s = x.size() - m.size();
            for (std::size_t i = 0; i < m.size(); ++i) x[s + i] = (x[s + i] + p * p - c * m[i] % p) % p;
            trim(x);
        }
        return x;
    };
    trim(d);
    if (d.empty()) return false;
    V x = a, y = d;
    while (!y.empty()) {
        V r = mod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return x.size() == 1;
}

} // namespace

CurveData CurveData::projective_line(std::uint64_t p) {
    field_make(p, 1);
    CurveData c;
    c.model_ = Model::projective_line;
    c.p_ = p;
    return c;
}

CurveData CurveData::plane(std::uint64_t p, std::vector<PlaneTerm> terms) {
    field_make(p, 1);
    CurveData c;
    c.model_ = Model::plane;
    c.p_ = p;
    if (terms.empty()) throw PreconditionError("plane curve needs at least one term");
    c.degree_ = terms.front().i + terms.front().j + terms.front().k;
    for (const auto& t : terms)
        if (t.i + t.j + t.k != c.degree_) throw PreconditionError("plane equation is not homogeneous");
    if (c.degree_ != 3 && c.degree_ != 4) throw PreconditionError("plane model must be a cubic or a quartic");
    c.terms_ = normalize_terms(std::move(terms), p);
    if (c.terms_.empty()) throw PreconditionError("plane equation vanishes modulo p");
    c.genus_ = (c.degree_ - 1) * (c.degree_ - 2) / 2;
    // A reduced cubic has at most 3 singular points, each defined over a
    // field of degree <= 3; quartics are scanned to degree 2 only.
    std::vector<std::vector<PlaneTerm>> system{c.terms_, partial(c.terms_, 0, p), partial(c.terms_, 1, p),
                                               partial(c.terms_, 2, p)};
    const unsigned depth = c.degree_ == 3 ? 3 : 2;
    for (unsigned k = 1; k <= depth && c.smooth_; ++k) {
        auto field = field_make(p, k);
        if (PlaneEval(*field, system, c.degree_).projective_zeros() > 0) c.smooth_ = false;
    }
    if (!c.smooth_) throw PreconditionError("plane curve is singular modulo " + std::to_string(p));
    return c;
}

CurveData CurveData::hyperelliptic(std::uint64_t p, std::vector<long long> f) {
    if (p == 2) throw PreconditionError("hyperelliptic model y^2 = f(x) needs odd characteristic");
    field_make(p, 1);
    while (!f.empty() && reduce(f.back(), p) == 0) f.pop_back();
    const std::size_t deg = f.empty() ? 0 : f.size() - 1;
    if (deg < 3 || deg > 6) throw PreconditionError("hyperelliptic model needs deg f in 3..6");
    CurveData c;
    c.model_ = Model::hyperelliptic;
    c.p_ = p;
    c.f_ = std::move(f);
    for (auto& v : c.f_) v = reduce(v, p);
    c.genus_ = static_cast<unsigned>((deg - 1) / 2);
    c.smooth_ = squarefree_mod_p(c.f_, p);
    if (!c.smooth_) throw PreconditionError("f has a repeated root modulo " + std::to_string(p) + "; the model is singular");
    return c;
}

std::string CurveData::model_name() const {
    switch (model_) {
    case Model::projective_line: return "projective_line";
    case Model::plane: return "plane";
    case Model::hyperelliptic: return "hyperelliptic";
    }
    return "?";
}

std::string CurveData::describe() const {
    auto poly = [](const std::vector<long long>& f) {
        std::string out;
        for (std::size_t i = f.size(); i-- > 0;) {
            if (f[i] == 0) continue;
            std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
            std::string term = mono.empty() ? std::to_string(f[i]) : (f[i] == 1 ? mono : std::to_string(f[i]) + "*" + mono);
            out += (out.empty() ? "" : " + ") + term;
        }
        return out;
    };
    const std::string over = " over F_" + std::to_string(p_);
    switch (model_) {
    case Model::projective_line: return "P^1" + over;
    case Model::hyperelliptic: return "y^2 = " + poly(f_) + over;
    case Model::plane: {
        std::string out;
        for (const auto& t : terms_) {
            std::string mono;
            auto put = [&](const char* v, unsigned e) {
                if (!e) return;
                if (!mono.empty()) mono += "*";
                mono += v;
                if (e > 1) mono += "^" + std::to_string(e);
            };
            put("X", t.i);
            put("Y", t.j);
            put("Z", t.k);
            out += (out.empty() ? "" : " + ") + (t.coef == 1 ? mono : std::to_string(t.coef) + "*" + mono);
        }
        return out + " = 0" + over;
    }
    }
    return "?";
}

std::uint64_t count_curve(const CurveData& c, unsigned n) {
    if (n == 0) throw PreconditionError("extension degree must be at least 1");
    const std::uint64_t p = c.p();
    switch (c.model()) {
    case CurveData::Model::projective_line: return checked_size(p, n, 1) + 1;
    case CurveData::Model::plane: {
        checked_size(p, n, 2);
        auto field = field_make(p, n);
        return PlaneEval(*field, {c.plane_terms()}, c.plane_degree()).projective_zeros();
    }
    case CurveData::Model::hyperelliptic: {
        const std::uint64_t q = checked_size(p, n, 1);
        auto field = field_make(p, n);
        const FiniteField& k = *field;
        std::vector<Elem> coef;
        for (auto v : c.f()) coef.push_back(k.from_int(v));
        std::int64_t total = 0;
        for (Elem x = 0; x < q; ++x) {
            Elem acc = 0;
            for (std::size_t i = coef.size(); i-- > 0;) acc = k.add(k.mul(acc, x), coef[i]);
            total += 1 + k.chi(acc);
        }
        const std::size_t deg = coef.size() - 1;
        total += deg % 2 == 1 ? 1 : 1 + k.chi(coef.back());
        return static_cast<std::uint64_t>(total);
    }
    }
    return 0;
}

std::vector<std::uint64_t> count_tower(const CurveData& c, unsigned m) {
    std::vector<std::future<std::uint64_t>> tasks;
    const auto policy = std::thread::hardware_concurrency() > 1 ? std::launch::async : std::launch::deferred;
    for (unsigned n = 1; n <= m; ++n) tasks.push_back(std::async(policy, [&c, n] { return count_curve(c, n); }));
    std::vector<std::uint64_t> out;
    for (auto& t : tasks) out.push_back(t.get());
    return out;
}

Verdict hasse_bound_check(const CurveData& c) {
    const long long q = static_cast<long long>(c.p());
    const long long a = q + 1 - static_cast<long long>(count_curve(c, 1));
    const long long g = c.genus();
    const bool ok = a * a <= 4 * g * g * q;
    return {ok, "|q+1-N1| = " + std::to_string(a < 0 ? -a : a) + ", bound 2g*sqrt(q) with g=" + std::to_string(g) +
                    ", q=" + std::to_string(q)};
}

std::vector<NamedCurve> builtin_curves() {
    std::vector<NamedCurve> out;
    for (std::uint64_t p : {2u, 3u, 5u}) out.push_back({"p1_f" + std::to_string(p), CurveData::projective_line(p)});
    out.push_back({"e0_f3", CurveData::hyperelliptic(3, {0, -1, 0, 1})});
    out.push_back({"e1_f3", CurveData::hyperelliptic(3, {1, -1, 0, 1})});
    out.push_back({"e_f5", CurveData::hyperelliptic(5, {1, 1, 0, 1})});
    out.push_back({"e0_f5", CurveData::hyperelliptic(5, {0, -1, 0, 1})});
    out.push_back({"quartic_e_f5", CurveData::hyperelliptic(5, {1, 0, 0, 0, 1})});
    out.push_back({"cubic_f2", CurveData::plane(2, {{1, 0, 2, 1}, {1, 0, 1, 2}, {1, 3, 0, 0}})});
    out.push_back({"cubic2_f2", CurveData::plane(2, {{1, 0, 2, 1}, {1, 1, 1, 1}, {1, 3, 0, 0}, {1, 0, 0, 3}})});
    out.push_back({"fermat_f5", CurveData::plane(5, {{1, 3, 0, 0}, {1, 0, 3, 0}, {1, 0, 0, 3}})});
    out.push_back({"g2_f3", CurveData::hyperelliptic(3, {1, -1, 0, 0, 0, 1})});
    out.push_back({"g2_f5", CurveData::hyperelliptic(5, {1, 1, 0, 0, 0, 0, 1})});
    return out;
}

const CurveData* builtin_curve(const std::string& name) {
    static const std::vector<NamedCurve> table = builtin_curves();
    for (const auto& nc : table)
        if (nc.name == name) return &nc.curve;
    return nullptr;
}

} // namespace motzeta::curve
