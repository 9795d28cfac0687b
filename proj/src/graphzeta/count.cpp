#include "motzeta/graphzeta/count.hpp"

#include <future>
#include <stdexcept>
#include <thread>

#include "motzeta/error.hpp"

namespace motzeta::graph {

using alg::BigInt;
using alg::BigRational;

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 2; out.size() < count; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

namespace {

struct Term {
    std::uint64_t coef;
    std::vector<std::pair<std::size_t, std::uint32_t>> factors;
};

std::uint64_t ipow_capped(std::uint64_t b, std::size_t e, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > cap / b) return cap + 1;
        r *= b;
    }
    return r;
}

std::uint64_t roots_of_quadratic(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t p) {
    // a x^2 + b x + c over F_p
    if (a == 0) {
        if (b != 0) return 1;
        return c == 0 ? p : 0;
    }
    std::uint64_t n = 0;
    if (p == 2) {
        for (std::uint64_t x = 0; x < 2; ++x)
            if ((a * x * x + b * x + c) % 2 == 0) ++n;
        return n;
    }
    const std::uint64_t disc = (b * b % p + p * p - 4 * a % p * c % p) % p;
    if (disc == 0) return 1;
    // Euler's criterion
    std::uint64_t r = 1, base = disc, e = (p - 1) / 2;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r == 1 ? 2 : 0;
}

} // namespace

std::uint64_t count_zeros_exhaustive(const alg::MultiPoly& f, std::uint64_t p, std::uint64_t budget) {
    if (!is_prime(p)) throw PreconditionError("count_zeros_exhaustive needs a prime");
    const std::size_t n = f.num_vars();
    if (n == 0) return f.is_zero() ? 1 : 0;
    const std::size_t last = n - 1;
    const unsigned last_deg = f.degree_in(last);
    const bool solve_last = last_deg <= 2;
    const std::size_t enumerated = solve_last ? n - 1 : n;
    if (ipow_capped(p, enumerated, budget) > budget)
        throw BudgetExceeded("exhaustive count needs " + std::to_string(p) + "^" + std::to_string(enumerated) +
                             " evaluations, above the budget " + std::to_string(budget));
    // Group terms by their power of the last variable.
    std::vector<std::vector<Term>> by_power(solve_last ? 3 : 1);
    for (const auto& [e, c] : f.terms()) {
        BigInt r = c % static_cast<unsigned long>(p);
        if (r < 0) r += static_cast<unsigned long>(p);
        Term t{r.get_ui(), {}};
        const std::size_t limit = solve_last ? last : n;
        for (std::size_t i = 0; i < limit; ++i)
            if (e[i]) t.factors.emplace_back(i, e[i]);
        by_power[solve_last ? e[last] : 0].push_back(std::move(t));
    }
    std::vector<std::uint64_t> x(n, 0);
    auto eval = [&](const std::vector<Term>& terms) {
        std::uint64_t acc = 0;
        for (const auto& t : terms) {
            std::uint64_t v = t.coef;
            for (const auto& [i, k] : t.factors) {
                for (std::uint32_t j = 0; j < k && v; ++j) v = v * x[i] % p;
                if (!v) break;
            }
            acc += v;
        }
        return acc % p;
    };
    std::uint64_t zeros = 0;
    for (;;) {
        if (solve_last) {
            zeros += roots_of_quadratic(eval(by_power[2]), eval(by_power[1]), eval(by_power[0]), p);
        } else if (eval(by_power[0]) == 0) {
            ++zeros;
        }
        std::size_t i = 0;
        while (i < enumerated && ++x[i] == p) x[i++] = 0;
        if (i == enumerated) break;
    }
    return zeros;
}

CountRecord count_points(const Graph& g, std::uint64_t p, const CountOptions& opts) {
    if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
    const alg::MultiPoly psi = kirchhoff_by_determinant(g);
    CountRecord rec;
    rec.p = p;
    const std::size_t m = g.num_edges();
    if (g.loop_number() == 0) {
        rec.kernel = "trivial";
        return rec;
    }
    CountKernel kernel = opts.kernel;
    if (kernel == CountKernel::automatic)
        kernel = ipow_capped(p, m - 1, opts.exhaustive_cutoff) <= std::min(opts.exhaustive_cutoff, opts.budget)
                     ? CountKernel::exhaustive
                     : CountKernel::elimination;
    if (kernel == CountKernel::exhaustive) {
        rec.affine = count_zeros_exhaustive(psi, p, opts.budget);
        rec.kernel = "exhaustive";
    } else {
        rec.affine = count_zeros_elimination({psi}, p);
        rec.kernel = "elimination";
    }
    if ((rec.affine - 1) % (p - 1) != 0)
        throw std::logic_error("affine count " + std::to_string(rec.affine) + " violates homogeneity at p=" +
                               std::to_string(p));
    rec.projective = (rec.affine - 1) / (p - 1);
    return rec;
}

std::string to_string(FitReport::Status s) {
    switch (s) {
    case FitReport::Status::polynomial: return "Polynomial";
    case FitReport::Status::non_polynomial: return "NonPolynomial";
    case FitReport::Status::inconclusive: return "Inconclusive";
    }
    return "?";
}

std::vector<BigRational> interpolate(const std::vector<BigRational>& xs, const std::vector<BigRational>& ys) {
    const std::size_t n = xs.size();
    if (ys.size() != n || n == 0) throw PreconditionError("interpolation needs matching nonempty node lists");
    // Newton divided differences, then expand into the monomial basis.
    std::vector<BigRational> dd = ys;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    std::vector<BigRational> coeffs(n, BigRational(0));
    std::vector<BigRational> basis{BigRational(1)};
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] += dd[k] * basis[i];
        std::vector<BigRational> next(basis.size() + 1, BigRational(0));
        for (std::size_t i = 0; i < basis.size(); ++i) {
            next[i + 1] += basis[i];
            next[i] -= xs[k] * basis[i];
        }
        basis = std::move(next);
    }
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    return coeffs;
}

BigRational evaluate_poly(const std::vector<BigRational>& coeffs, const BigRational& x) {
    BigRational acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

std::string poly_in_p(const std::vector<BigRational>& coeffs) {
    std::string out;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const BigRational& c = coeffs[i];
        if (c == 0) continue;
        std::string mono = i == 0 ? "" : (i == 1 ? "p" : "p^" + std::to_string(i));
        BigRational mag = abs(c);
        std::string term;
        if (mono.empty()) term = mag.get_str();
        else if (mag == 1) term = mono;
        else term = mag.get_str() + "*" + mono;
        if (out.empty()) out = (c < 0 ? "-" : "") + term;
        else out += (c < 0 ? "-" : "+") + term;
    }
    return out.empty() ? "0" : out;
}

FitReport polynomiality_test(const Graph& g, const std::vector<std::uint64_t>& primes, std::size_t holdout,
                             const CountOptions& opts) {
    const std::size_t m = g.num_edges();
    if (primes.size() < m + 1 + holdout)
        throw PreconditionError("polynomiality test on " + std::to_string(m) + " edges needs at least " +
                                std::to_string(m + 1 + holdout) + " primes, got " + std::to_string(primes.size()));
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (!is_prime(primes[i])) throw PreconditionError(std::to_string(primes[i]) + " is not prime");
        if (i && primes[i] <= primes[i - 1]) throw PreconditionError("prime list must be ascending");
    }
    FitReport rep;
    rep.primes_used.assign(primes.begin(), primes.begin() + static_cast<std::ptrdiff_t>(m + 1));
    rep.primes_held_out.assign(primes.begin() + static_cast<std::ptrdiff_t>(m + 1), primes.end());

    // Independent counts per prime; results are placed by index so the
    // report does not depend on scheduling.
    rep.counts.resize(primes.size());
    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    try {
        for (std::size_t start = 0; start < primes.size(); start += workers) {
            std::vector<std::future<CountRecord>> batch;
            const std::size_t end = std::min(primes.size(), start + workers);
            for (std::size_t i = start; i < end; ++i)
                batch.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred,
                                           [&, i] { return count_points(g, primes[i], opts); }));
            for (std::size_t i = start; i < end; ++i) rep.counts[i] = batch[i - start].get();
        }
    } catch (const BudgetExceeded& e) {
        rep.status = FitReport::Status::inconclusive;
        rep.counts.clear();
        rep.note = e.what();
        return rep;
    }

    std::vector<BigRational> xs, ys;
    for (std::size_t i = 0; i <= m; ++i) {
        xs.emplace_back(static_cast<unsigned long>(primes[i]));
        ys.emplace_back(static_cast<unsigned long>(rep.counts[i].affine));
    }
    rep.coeffs = interpolate(xs, ys);
    rep.status = FitReport::Status::polynomial;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const BigRational v = evaluate_poly(rep.coeffs, BigRational(static_cast<unsigned long>(primes[i])));
        if (!alg::is_integer(v) || v != BigRational(static_cast<unsigned long>(rep.counts[i].affine))) {
            rep.status = FitReport::Status::non_polynomial;
            rep.witness = primes[i];
            break;
        }
    }
    return rep;
}

} // namespace motzeta::graph
