#pragma once

// Deliberately naive finite field used only as an independent oracle.
// Elements are coefficient vectors modulo a prime p reduced by a monic
// modulus of degree k <= 6 chosen as the first one with no monic factor of
// degree <= k/2 (found by trial division).

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace oracle {

struct TinyField {
    int p;
    int k;
    std::vector<int> modulus;  // monic, low to high, size k+1

    TinyField(int p_, int k_) : p(p_), k(k_) {
        if (k > 6) throw std::invalid_argument("TinyField only supports degree <= 6");
        std::vector<int> m(static_cast<std::size_t>(k) + 1, 0);
        m[static_cast<std::size_t>(k)] = 1;
        const long total = ipow(p, k);
        for (long idx = 0; idx < total; ++idx) {
            long v = idx;
            for (int i = 0; i < k; ++i) {
                m[static_cast<std::size_t>(i)] = static_cast<int>(v % p);
                v /= p;
            }
            const bool has_root = has_small_factor(m, p);
            if (!has_root) {
                modulus = m;
                return;
            }
        }
        throw std::logic_error("no irreducible modulus found");
    }

    // trial division by every monic polynomial of degree 1..deg/2
    static bool has_small_factor(const std::vector<int>& f, int p) {
        const int n = static_cast<int>(f.size()) - 1;
        for (int d = 1; d <= n / 2; ++d) {
            const long total = ipow(p, d);
            for (long idx = 0; idx < total; ++idx) {
                std::vector<long> g(static_cast<std::size_t>(d) + 1, 1);
                long v = idx;
                for (int i = 0; i < d; ++i) {
                    g[static_cast<std::size_t>(i)] = v % p;
                    v /= p;
                }
                std::vector<long> r(f.begin(), f.end());
                for (int top = n; top >= d; --top) {
                    const long c = r[static_cast<std::size_t>(top)] % p;
                    for (int i = 0; i <= d; ++i) r[static_cast<std::size_t>(top - d + i)] -= c * g[static_cast<std::size_t>(i)];
                }
                bool zero = true;
                for (int i = 0; i < d; ++i) zero = zero && ((r[static_cast<std::size_t>(i)] % p) + p) % p == 0;
                if (zero) return true;
            }
        }
        return false;
    }

    static long ipow(long b, int e) {
        long r = 1;
        while (e-- > 0) r *= b;
        return r;
    }

    long size() const { return ipow(p, k); }

    std::vector<int> element(long index) const {
        std::vector<int> v(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            v[static_cast<std::size_t>(i)] = static_cast<int>(index % p);
            index /= p;
        }
        return v;
    }

    long index(const std::vector<int>& v) const {
        long r = 0;
        for (int i = k; i-- > 0;) r = r * p + v[static_cast<std::size_t>(i)];
        return r;
    }

    long add(long a, long b) const {
        auto x = element(a), y = element(b);
        for (int i = 0; i < k; ++i) x[static_cast<std::size_t>(i)] = (x[static_cast<std::size_t>(i)] + y[static_cast<std::size_t>(i)]) % p;
        return index(x);
    }

    long neg(long a) const {
        auto x = element(a);
        for (auto& c : x) c = (p - c) % p;
        return index(x);
    }

    long mul(long a, long b) const {
        auto x = element(a), y = element(b);
        std::vector<long> prod(static_cast<std::size_t>(2 * k), 0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) prod[static_cast<std::size_t>(i + j)] += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
        for (int d = 2 * k - 1; d >= k; --d) {
            long c = prod[static_cast<std::size_t>(d)] % p;
            prod[static_cast<std::size_t>(d)] = 0;
            for (int i = 0; i < k; ++i) prod[static_cast<std::size_t>(d - k + i)] -= c * modulus[static_cast<std::size_t>(i)];
        }
        std::vector<int> r(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) r[static_cast<std::size_t>(i)] = static_cast<int>(((prod[static_cast<std::size_t>(i)] % p) + p) % p);
        return index(r);
    }

    long pow(long a, long e) const {
        long r = 1;
        while (e-- > 0) r = mul(r, a);
        return r;
    }

    long inverse(long a) const {
        for (long b = 1; b < size(); ++b)
            if (mul(a, b) == 1) return b;
        throw std::domain_error("zero has no inverse");
    }

    long frobenius(long a) const { return pow(a, p); }
};

} // namespace oracle
