#include "motzeta/k0ring/k0.hpp"

#include <deque>
#include <numeric>

#include "motzeta/error.hpp"

namespace motzeta::k0 {

namespace {

using QPoly = alg::Poly<BigRational>;
using ZPoly = alg::Poly<BigInt>;

QPoly x_pow_minus_one(long n) {
    return QPoly::monomial(BigRational(1), static_cast<std::size_t>(n)) - QPoly::one();
}

// Phi_n, assuming every Phi_d with d < n is already in the table.
const QPoly& cyclotomic(long n, std::map<long, QPoly>& table) {
    if (auto it = table.find(n); it != table.end()) return it->second;
    QPoly p = x_pow_minus_one(n);
    for (long d = 1; d < n; ++d)
        if (n % d == 0) p = alg::exact_div(p, cyclotomic(d, table));
    return table.emplace(n, std::move(p)).first->second;
}

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

K0Element lpoly(std::initializer_list<long> c) {
    std::vector<BigInt> v;
    for (long x : c) v.emplace_back(x);
    return K0Element::from_polys(ZPoly(std::move(v)), ZPoly::one());
}

// L^a - L^b
K0Element lpow_diff(long a, long b) { return lefschetz(a) - lefschetz(b); }

} // namespace

std::optional<std::vector<LocalizationFactor>> localization_factors(const K0Element& x) {
    std::vector<LocalizationFactor> out;
    if (x.is_zero()) return out;
    if (x.shift() < 0) out.push_back({LocalizationFactor::Kind::lefschetz_power, -x.shift(), 1});
    QPoly rest = alg::to_rational_poly(x.den());
    std::map<long, long> phi_mult;
    std::map<long, QPoly> table;
    const long deg = rest.degree();
    for (long n = 1; rest.degree() > 0 && n <= 2 * deg * deg + 2; ++n) {
        const QPoly& phi = cyclotomic(n, table);
        if (euler_phi(n) > rest.degree()) continue;
        for (;;) {
            auto [q, r] = alg::divmod(rest, phi);
            if (!r.is_zero()) break;
            rest = q;
            ++phi_mult[n];
        }
    }
    if (rest.degree() != 0) return std::nullopt;
    // Integer coefficients: the leftover constant and the numerator content
    // must not introduce a denominator.
    const BigRational c = rest[0];
    if (c != 1 && c != -1) return std::nullopt;
    // Cover the cyclotomic factors by blocks L^n - 1, largest n first.
    while (!phi_mult.empty()) {
        const long n = phi_mult.rbegin()->first;
        long block = 0;
        while (phi_mult.count(n)) {
            ++block;
            for (long d = 1; d <= n; ++d) {
                if (n % d) continue;
                auto it = phi_mult.find(d);
                if (it == phi_mult.end()) continue;
                if (--it->second == 0) phi_mult.erase(it);
            }
        }
        out.push_back({LocalizationFactor::Kind::cyclotomic_block, n, block});
    }
    return out;
}

std::string to_string(const std::vector<LocalizationFactor>& factors) {
    if (factors.empty()) return "1";
    std::string s;
    for (const auto& f : factors) {
        if (!s.empty()) s += "*";
        const bool lpow = f.kind == LocalizationFactor::Kind::lefschetz_power;
        const std::string power = f.exponent == 1 ? "L" : "L^" + std::to_string(f.exponent);
        s += lpow ? power : "(" + power + "-1)";
        if (f.multiplicity > 1) s += "^" + std::to_string(f.multiplicity);
    }
    return s;
}

MixedTateClass MixedTateClass::lefschetz_power(long m, long multiplicity) {
    MixedTateClass c;
    c.add(m, multiplicity);
    return c;
}

std::optional<MixedTateClass> MixedTateClass::from_k0(const K0Element& x) {
    if (!x.is_laurent_polynomial()) return std::nullopt;
    MixedTateClass c;
    const auto& n = x.num();
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (n[i] == 0) continue;
        if (!n[i].fits_slong_p()) return std::nullopt;
        c.add(static_cast<long>(i) + x.shift(), n[i].get_si());
    }
    return c;
}

long MixedTateClass::rank() const {
    long r = 0;
    for (const auto& [m, a] : terms_) r += a;
    return r;
}

void MixedTateClass::add(long m, long multiplicity) {
    if (multiplicity == 0) return;
    long& slot = terms_[m];
    slot += multiplicity;
    if (slot == 0) terms_.erase(m);
}

MixedTateClass operator+(const MixedTateClass& a, const MixedTateClass& b) {
    MixedTateClass out = a;
    for (const auto& [m, k] : b.terms_) out.add(m, k);
    return out;
}

MixedTateClass operator*(const MixedTateClass& a, const MixedTateClass& b) {
    MixedTateClass out;
    for (const auto& [m, k] : a.terms_)
        for (const auto& [n, l] : b.terms_) out.add(m + n, k * l);
    return out;
}

MixedTateClass MixedTateClass::operator-() const {
    MixedTateClass out = *this;
    for (auto& [m, k] : out.terms_) k = -k;
    return out;
}

MixedTateClass MixedTateClass::dual() const {
    MixedTateClass out;
    for (const auto& [m, k] : terms_) out.add(-m, k);
    return out;
}

K0Element MixedTateClass::to_k0() const {
    K0Element acc;
    for (const auto& [m, k] : terms_) acc += K0Element(k) * lefschetz(m);
    return acc;
}

std::string MixedTateClass::to_string() const { return to_k0().to_string(); }

MixedTateClass class_projective_space(long n) {
    if (n < 0) throw PreconditionError("projective space dimension must be nonnegative");
    MixedTateClass c;
    for (long m = 0; m <= n; ++m) c.add(m, 1);
    return c;
}

std::vector<K0Element> class_gl_factors(long n) {
    if (n < 1) throw PreconditionError("GL_n needs n >= 1");
    std::vector<K0Element> f;
    for (long i = 0; i < n; ++i) f.push_back(lpow_diff(n, i));
    return f;
}

K0Element class_gl(long n) {
    K0Element acc(1);
    for (const auto& f : class_gl_factors(n)) acc *= f;
    return acc;
}

K0Element class_sl(long n) { return class_gl(n) / lpoly({-1, 1}); }

std::string factored_string(const std::vector<K0Element>& factors) {
    if (factors.empty()) return "1";
    if (factors.size() == 1) return factors.front().to_string();
    std::string s;
    for (const auto& f : factors) {
        if (!s.empty()) s += "*";
        s += "(" + f.to_string() + ")";
    }
    return s;
}

K0Element class_sym_rank(long n, long r) {
    if (n < 0 || r < 0) throw PreconditionError("Sym^n_r needs nonnegative n and r");
    if (r > n) throw PreconditionError("Sym^n_r needs r <= n (got r=" + std::to_string(r) + ", n=" + std::to_string(n) + ")");
    if (r == 0) return K0Element(1);
    const long s = r / 2;
    K0Element acc(1);
    for (long i = 1; i <= s; ++i) acc *= lefschetz(2 * i) / (lefschetz(2 * i) - K0Element(1));
    const long top = r % 2 == 0 ? 2 * s - 1 : 2 * s;
    for (long i = 0; i <= top; ++i) acc *= lefschetz(n - i) - K0Element(1);
    return acc;
}

void RootDatumLite::validate() const {
    if (rank < 0 || dim < 0) throw PreconditionError("root datum " + name + ": negative rank or dimension");
    if (static_cast<long>(degrees.size()) != rank)
        throw PreconditionError("root datum " + name + ": expected " + std::to_string(rank) + " degrees");
    for (long d : degrees)
        if (d < 2) throw PreconditionError("root datum " + name + ": degrees must be >= 2");
    const long sum = std::accumulate(degrees.begin(), degrees.end(), 0L);
    if (2 * sum != dim + rank)
        throw PreconditionError("root datum " + name + ": sum of degrees " + std::to_string(sum) +
                                " differs from (dim + rank)/2");
    if (static_cast<long>(cartan.size()) != rank)
        throw PreconditionError("root datum " + name + ": Cartan matrix has the wrong size");
    for (long i = 0; i < rank; ++i) {
        if (static_cast<long>(cartan[i].size()) != rank || cartan[i][i] != 2)
            throw PreconditionError("root datum " + name + ": malformed Cartan matrix");
    }
}

namespace {

RootDatumLite type_a(long r, const std::string& name) {
    RootDatumLite rd;
    rd.name = name;
    rd.rank = r;
    rd.dim = (r + 1) * (r + 1) - 1;
    for (long d = 2; d <= r + 1; ++d) rd.degrees.push_back(d);
    rd.cartan.assign(static_cast<std::size_t>(r), std::vector<long>(static_cast<std::size_t>(r), 0));
    for (long i = 0; i < r; ++i) {
        rd.cartan[i][i] = 2;
        if (i + 1 < r) rd.cartan[i][i + 1] = rd.cartan[i + 1][i] = -1;
    }
    return rd;
}

} // namespace

RootDatumLite root_datum(const std::string& name) {
    RootDatumLite rd;
    if (name == "trivial") {
        rd.name = name;
    } else if (name == "A1") {
        rd = type_a(1, name);
    } else if (name == "A2") {
        rd = type_a(2, name);
    } else if (name == "B2") {
        rd = {name, 2, 10, {2, 4}, {{2, -2}, {-1, 2}}};
    } else if (name == "G2") {
        rd = {name, 2, 14, {2, 6}, {{2, -1}, {-3, 2}}};
    } else if (name.size() == 3 && name.rfind("SL", 0) == 0 && name[2] >= '2' && name[2] <= '6') {
        rd = type_a(name[2] - '1', name);
    } else {
        throw PreconditionError("unknown root datum '" + name + "'");
    }
    rd.validate();
    return rd;
}

std::vector<std::string> root_datum_names() {
    return {"trivial", "A1", "A2", "B2", "G2", "SL2", "SL3", "SL4", "SL5", "SL6"};
}

K0Element class_semisimple(const RootDatumLite& rd) {
    rd.validate();
    K0Element acc = lefschetz(rd.dim);
    for (long d : rd.degrees) acc *= K0Element(1) - lefschetz(-d);
    return acc;
}

alg::InverseExpansion class_bg(const RootDatumLite& rd, std::size_t terms) {
    return class_semisimple(rd).inverse().expand_inverse(terms);
}

BigRational specialize(const alg::InverseExpansion& s, const BigRational& q) {
    if (q == 0) throw PoleError("L^-1 expansion cannot be evaluated at L = 0");
    BigRational acc = 0;
    const BigRational qinv = 1 / q;
    BigRational p = alg::pow(qinv, s.valuation);
    for (const auto& c : s.coeffs) {
        acc += c * p;
        p *= qinv;
    }
    return acc;
}

std::vector<WeylElement> enumerate_weyl(const RootDatumLite& rd, std::size_t bound) {
    rd.validate();
    using Mat = std::vector<std::vector<long>>;
    const std::size_t r = static_cast<std::size_t>(rd.rank);
    Mat id(r, std::vector<long>(r, 0));
    for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
    std::vector<Mat> gens;
    for (std::size_t i = 0; i < r; ++i) {
        // column j is the image of alpha_j
        Mat s = id;
        for (std::size_t j = 0; j < r; ++j) s[i][j] -= rd.cartan[i][j];
        gens.push_back(s);
    }
    auto mul = [r](const Mat& a, const Mat& b) {
        Mat c(r, std::vector<long>(r, 0));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t k = 0; k < r; ++k)
                if (a[i][k])
                    for (std::size_t j = 0; j < r; ++j) c[i][j] += a[i][k] * b[k][j];
        return c;
    };
    std::map<Mat, long> seen{{id, 0}};
    std::vector<WeylElement> out{{id, 0}};
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            Mat next = mul(out[cur].matrix, g);
            if (seen.count(next)) continue;
            if (out.size() >= bound)
                throw BudgetExceeded("Weyl group of " + rd.name + " exceeds " + std::to_string(bound) + " elements");
            const long len = out[cur].length + 1;
            seen.emplace(next, len);
            out.push_back({std::move(next), len});
            queue.push_back(out.size() - 1);
        }
    }
    return out;
}

alg::Poly<BigInt> weyl_poincare(const RootDatumLite& rd) {
    std::vector<BigInt> c;
    for (const auto& w : enumerate_weyl(rd)) {
        if (static_cast<std::size_t>(w.length) >= c.size()) c.resize(static_cast<std::size_t>(w.length) + 1, BigInt(0));
        c[static_cast<std::size_t>(w.length)] += 1;
    }
    return ZPoly(std::move(c));
}

Verdict weyl_poincare_check(const RootDatumLite& rd) {
    const ZPoly poincare = weyl_poincare(rd);
    ZPoly lhs = poincare * ZPoly{BigInt(-1), BigInt(1)}.pow(static_cast<unsigned>(rd.rank));
    ZPoly rhs = ZPoly::one();
    for (long d : rd.degrees) rhs *= ZPoly::monomial(1, static_cast<std::size_t>(d)) - ZPoly::one();
    const std::string detail = "sum_w t^l(w) = " + poincare.to_string("t", false);
    if (lhs == rhs) return Verdict::pass(detail);
    return Verdict::fail(detail + "; (t-1)^r * sum = " + lhs.to_string("t", false) +
                         " but prod (t^d - 1) = " + rhs.to_string("t", false));
}

Verdict bruhat_check(const RootDatumLite& rd) {
    if ((rd.dim - rd.rank) % 2 != 0) return Verdict::fail("dim G - rank is odd");
    const ZPoly poincare = weyl_poincare(rd);
    K0Element flag = K0Element::from_polys(poincare, ZPoly::one());
    K0Element torus = (lefschetz(1) - K0Element(1)).pow(rd.rank);
    K0Element rhs = flag * torus * lefschetz((rd.dim - rd.rank) / 2);
    K0Element lhs = class_semisimple(rd);
    if (lhs == rhs) return Verdict::pass("[G] = " + lhs.to_string());
    return Verdict::fail("[G] = " + lhs.to_string() + " but Bruhat side = " + rhs.to_string());
}

alg::Series<K0Element> sigma_t(const MixedTateClass& c, std::size_t order) {
    using KPoly = alg::Poly<K0Element>;
    KPoly num = KPoly::one(), den = KPoly::one();
    for (const auto& [m, a] : c.terms()) {
        KPoly factor{K0Element(1), -lefschetz(m)};
        if (a > 0) den *= factor.pow(static_cast<unsigned>(a));
        else num *= factor.pow(static_cast<unsigned>(-a));
    }
    return alg::Series<K0Element>::from_quotient(num, den, order);
}

BigRational specialize(const K0Element& x, const BigRational& q) { return x.evaluate(q); }

BigRational specialize(const MixedTateClass& x, const BigRational& q) { return x.to_k0().evaluate(q); }

} // namespace motzeta::k0
