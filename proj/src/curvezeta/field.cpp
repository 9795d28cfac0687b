#include "motzeta/curvezeta/field.hpp"

#include <map>
#include <mutex>

#include "motzeta/config.hpp"
#include "motzeta/error.hpp"

namespace motzeta::curve {

namespace {

using Vec = std::vector<std::uint64_t>;

bool prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

void trim(Vec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Vec poly_mod(Vec a, const Vec& m, std::uint64_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t linv = powmod(m.back(), p - 2, p);
    while (a.size() > dm) {
        const std::uint64_t c = a.back() * linv % p;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p * p - c * m[i] % p) % p;
        trim(a);
    }
    return a;
}

Vec poly_mulmod(const Vec& a, const Vec& b, const Vec& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Vec c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(c), m, p);
}

Vec poly_gcd(Vec a, Vec b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Vec r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

} // namespace

bool is_irreducible_mod_p(const std::vector<std::uint64_t>& monic, std::uint64_t p) {
    const std::size_t n = monic.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    // x^(p^i) mod f by repeated p-th powering
    Vec xp{0, 1};
    for (std::size_t i = 1; i <= n / 2; ++i) {
        Vec base = xp, r{1};
        std::uint64_t e = p;
        while (e) {
            if (e & 1) r = poly_mulmod(r, base, monic, p);
            base = poly_mulmod(base, base, monic, p);
            e >>= 1;
        }
        xp = r;
        Vec d = xp;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = (d[1] + p - 1) % p;
        trim(d);
        if (d.empty()) return false;
        if (poly_gcd(monic, d, p).size() > 1) return false;
    }
    return true;
}

FiniteField::FiniteField(std::uint64_t p, unsigned n, std::vector<std::uint64_t> modulus)
    : p_(p), n_(n), mod_(std::move(modulus)) {
    if (!prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
    if (n == 0 || mod_.size() != n + 1 || mod_.back() != 1) throw PreconditionError("modulus must be monic of degree n");
    size_ = 1;
    for (unsigned i = 0; i < n; ++i) size_ *= p;
    if (size_ <= (1u << 20)) {
        // discrete log tables from a primitive element
        std::vector<std::uint64_t> primes_of_order;
        std::uint64_t m = size_ - 1;
        for (std::uint64_t d = 2; d * d <= m; ++d)
            if (m % d == 0) {
                primes_of_order.push_back(d);
                while (m % d == 0) m /= d;
            }
        if (m > 1) primes_of_order.push_back(m);
        auto slow_pow = [&](Elem a, std::uint64_t e) {
            Elem r = 1;
            while (e) {
                if (e & 1) r = slow_mul(r, a);
                a = slow_mul(a, a);
                e >>= 1;
            }
            return r;
        };
        Elem g = 1;
        for (Elem cand = 1; cand < size_; ++cand) {
            bool primitive = true;
            for (auto r : primes_of_order)
                if (slow_pow(cand, (size_ - 1) / r) == 1) {
                    primitive = false;
                    break;
                }
            if (primitive) {
                g = cand;
                break;
            }
        }
        exp_.resize(size_ - 1);
        log_.assign(size_, 0);
        Elem x = 1;
        for (std::uint64_t i = 0; i + 1 < size_; ++i) {
            exp_[i] = static_cast<std::uint32_t>(x);
            log_[x] = static_cast<std::uint32_t>(i);
            x = slow_mul(x, g);
        }
    }
}

std::string FiniteField::modulus_string() const {
    std::string out;
    for (std::size_t i = mod_.size(); i-- > 0;) {
        const std::uint64_t c = mod_[i];
        if (c == 0) continue;
        std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
        std::string term = mono.empty() ? std::to_string(c) : (c == 1 ? mono : std::to_string(c) + "*" + mono);
        out += (out.empty() ? "" : "+") + term;
    }
    return out;
}

FiniteField::Elem FiniteField::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<Elem>(r);
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
    if (n_ == 1) return (a + b) % p_;
    Elem out = 0, place = 1;
    for (unsigned i = 0; i < n_; ++i) {
        out += ((a % p_ + b % p_) % p_) * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return out;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const {
    if (n_ == 1) return (a + p_ - b) % p_;
    Elem out = 0, place = 1;
    for (unsigned i = 0; i < n_; ++i) {
        out += ((a % p_ + p_ - b % p_) % p_) * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return out;
}

FiniteField::Elem FiniteField::slow_mul(Elem a, Elem b) const {
    Vec x(n_), y(n_);
    for (unsigned i = 0; i < n_; ++i) {
        x[i] = a % p_;
        y[i] = b % p_;
        a /= p_;
        b /= p_;
    }
    Vec r = poly_mulmod(x, y, mod_, p_);
    Elem out = 0;
    for (std::size_t i = r.size(); i-- > 0;) out = out * p_ + r[i];
    return out;
}

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (n_ == 1) return a * b % p_;
    if (!log_.empty()) {
        std::uint64_t k = static_cast<std::uint64_t>(log_[a]) + log_[b];
        if (k >= size_ - 1) k -= size_ - 1;
        return exp_[k];
    }
    return slow_mul(a, b);
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
    if (!log_.empty() && a != 0) return exp_[(static_cast<unsigned __int128>(log_[a]) * e) % (size_ - 1)];
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

FiniteField::Elem FiniteField::inv(Elem a) const {
    if (a == 0) throw NotInvertible("zero has no inverse in a finite field");
    return pow(a, size_ - 2);
}

FiniteField::Elem FiniteField::frobenius(Elem a, unsigned k) const {
    for (unsigned i = 0; i < k % n_; ++i) a = pow(a, p_);
    return a;
}

int FiniteField::chi(Elem a) const {
    if (p_ == 2) throw PreconditionError("quadratic character needs odd characteristic");
    if (a == 0) return 0;
    return pow(a, (size_ - 1) / 2) == 1 ? 1 : -1;
}

std::shared_ptr<const FiniteField> field_make(std::uint64_t p, unsigned n) {
    if (!prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
    if (n == 0) throw PreconditionError("field degree must be at least 1");
    const std::uint64_t budget = enumeration_budget();
    std::uint64_t size = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (size > budget / p) throw BudgetExceeded("field of size " + std::to_string(p) + "^" + std::to_string(n) +
                                                    " exceeds the budget " + std::to_string(budget));
        size *= p;
    }
    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, unsigned>, std::shared_ptr<const FiniteField>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find({p, n}); it != cache.end()) return it->second;
    }
    Vec mod;
    for (std::uint64_t idx = 0; idx < size; ++idx) {
        Vec cand(n + 1, 0);
        std::uint64_t r = idx;
        for (unsigned i = 0; i < n; ++i) {
            cand[i] = r % p;
            r /= p;
        }
        cand[n] = 1;
        if (is_irreducible_mod_p(cand, p)) {
            mod = std::move(cand);
            break;
        }
    }
    auto field = std::make_shared<const FiniteField>(p, n, mod);
    std::lock_guard lock(mu);
    return cache.emplace(std::make_pair(p, n), field).first->second;
}

} // namespace motzeta::curve
