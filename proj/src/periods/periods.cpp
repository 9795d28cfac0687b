#include "motzeta/periods/periods.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "motzeta/config.hpp"
#include "motzeta/error.hpp"

namespace motzeta::periods {

namespace {

// Neumaier compensated sum.
struct Accumulator {
    double sum = 0, comp = 0;
    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) comp += (sum - t) + x;
        else comp += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

double inverse_power(double n, unsigned s) {
    const double inv = 1.0 / n;
    double r = 1;
    for (unsigned i = 0; i < s; ++i) r *= inv;
    return r;
}

struct Monomial {
    double coef;
    std::vector<std::pair<std::size_t, unsigned>> powers;
};

std::vector<Monomial> flatten(const alg::MultiPoly& p) {
    std::vector<Monomial> out;
    for (const auto& [e, c] : p.terms()) {
        Monomial m{c.get_d(), {}};
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) m.powers.emplace_back(i, e[i]);
        out.push_back(std::move(m));
    }
    return out;
}

double evaluate(const std::vector<Monomial>& poly, const std::vector<double>& x) {
    double s = 0;
    for (const auto& m : poly) {
        double t = m.coef;
        for (const auto& [i, k] : m.powers)
            for (unsigned j = 0; j < k; ++j) t *= x[i];
        s += t;
    }
    return s;
}

constexpr std::uint64_t kBatch = 8192;

struct BatchStats {
    std::uint64_t n = 0;
    double mean = 0, m2 = 0;
    std::uint64_t non_finite = 0;
};

// Chan et al. pairwise combination.
void merge(BatchStats& a, const BatchStats& b) {
    if (b.n == 0) {
        a.non_finite += b.non_finite;
        return;
    }
    const double n = static_cast<double>(a.n + b.n);
    const double delta = b.mean - a.mean;
    a.mean += delta * static_cast<double>(b.n) / n;
    a.m2 += b.m2 + delta * delta * static_cast<double>(a.n) * static_cast<double>(b.n) / n;
    a.n += b.n;
    a.non_finite += b.non_finite;
}

template <class F>
McEstimate monte_carlo(const graph::Graph& g, std::uint64_t samples, std::uint64_t seed, F integrand) {
    if (g.num_edges() == 0) throw PreconditionError("the simplex needs at least one edge");
    if (!g.is_connected()) throw PreconditionError("Psi vanishes identically on a disconnected graph");
    if (samples < 2) throw PreconditionError("Monte Carlo needs at least two samples");
    const auto psi = flatten(graph::kirchhoff(g));
    const std::size_t edges = g.num_edges();
    const std::uint64_t batches = (samples + kBatch - 1) / kBatch;

    auto run = [&](std::uint64_t b) {
        std::mt19937_64 rng(batch_seed(seed, b));
        const std::uint64_t count = std::min(kBatch, samples - b * kBatch);
        BatchStats s;
        std::vector<double> x(edges);
        for (std::uint64_t i = 0; i < count; ++i) {
            double total = 0;
            for (auto& v : x) {
                const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
                v = -std::log1p(-u);
                total += v;
            }
            for (auto& v : x) v /= total;
            const double y = integrand(evaluate(psi, x));
            if (!std::isfinite(y)) {
                ++s.non_finite;
                continue;
            }
            ++s.n;
            const double d = y - s.mean;
            s.mean += d / static_cast<double>(s.n);
            s.m2 += d * (y - s.mean);
        }
        return s;
    };

    const std::uint64_t wave = std::max(1u, std::thread::hardware_concurrency());
    BatchStats total;
    for (std::uint64_t start = 0; start < batches; start += wave) {
        std::vector<std::future<BatchStats>> jobs;
        for (std::uint64_t b = start; b < std::min(batches, start + wave); ++b)
            jobs.push_back(std::async(std::launch::async, run, b));
        for (auto& j : jobs) merge(total, j.get());
    }
    if (static_cast<double>(total.non_finite) > 0.001 * static_cast<double>(samples))
        throw Error(std::to_string(total.non_finite) + " of " + std::to_string(samples) +
                    " integrand samples are not finite");

    McEstimate e;
    e.mean = total.mean;
    e.samples = total.n;
    e.seed = seed;
    e.non_finite = total.non_finite;
    const double var = total.n > 1 ? total.m2 / static_cast<double>(total.n - 1) : 0;
    e.standard_error = std::sqrt(var / static_cast<double>(total.n));
    e.convention = "simplex measure normalized to volume 1; multiply by 1/" + std::to_string(edges - 1) +
                   "! for the Lebesgue measure";
    return e;
}

std::string convergence_warning(const graph::Graph& g, double D) {
    const double margin = static_cast<double>(g.num_edges()) - static_cast<double>(g.loop_number()) * D / 2;
    if (margin > 0) return {};
    std::ostringstream os;
    os << "|E| - b1 D/2 = " << margin << " is not positive; the estimate may not converge";
    return os.str();
}

} // namespace

MzvIndex MzvIndex::parse(const std::string& text) {
    MzvIndex idx;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw PreconditionError("MZV index '" + text + "' must be comma-separated positive integers");
        idx.s.push_back(static_cast<unsigned>(std::stoul(part)));
    }
    idx.validate();
    return idx;
}

void MzvIndex::validate() const {
    if (s.empty()) throw PreconditionError("MZV index is empty");
    if (s.size() > 4) throw PreconditionError("MZV depth " + std::to_string(s.size()) + " exceeds 4");
    for (auto x : s)
        if (x == 0) throw PreconditionError("MZV exponents must be positive");
    if (s[0] < 2) throw PreconditionError("MZV " + to_string() + " diverges: s_1 must be at least 2");
}

std::string MzvIndex::to_string() const {
    std::string out;
    for (auto x : s) out += (out.empty() ? "" : ",") + std::to_string(x);
    return "zeta(" + out + ")";
}

double mzv_truncated(const MzvIndex& idx, std::uint64_t cutoff) {
    idx.validate();
    const std::size_t k = idx.s.size();
    // partial[j] = sum over n > n_j > ... > n_k >= 1 of the depth-j tail
    std::vector<Accumulator> partial(k);
    std::vector<double> term(k);
    for (std::uint64_t n = 1; n <= cutoff; ++n) {
        const double dn = static_cast<double>(n);
        for (std::size_t j = k; j-- > 0;) {
            const double inner = j + 1 < k ? partial[j + 1].value() : 1.0;
            term[j] = inverse_power(dn, idx.s[j]) * inner;
        }
        for (std::size_t j = 0; j < k; ++j) partial[j].add(term[j]);
    }
    return partial[0].value();
}

double mzv_tail_bound(const MzvIndex& idx, std::uint64_t cutoff) {
    idx.validate();
    if (cutoff < 2) throw PreconditionError("tail bound needs cutoff >= 2");
    // sum_{n > M} (1 + ln n)^j n^-s <= integral from M of the same
    const unsigned j = static_cast<unsigned>(idx.s.size() - 1);
    const double a = idx.s[0] - 1.0;
    const double U = std::log(static_cast<double>(cutoff));
    double sum = 0, falling = 1, apow = a;
    for (unsigned i = 0; i <= j; ++i) {
        sum += falling * std::pow(1 + U, static_cast<double>(j - i)) / apow;
        falling *= static_cast<double>(j - i);
        apow *= a;
    }
    return std::exp(-a * U) * sum;
}

MzvResult mzv_detailed(const MzvIndex& idx, double tol) {
    idx.validate();
    if (!(tol >= 1e-10)) throw PreconditionError("tolerance must be at least 1e-10");
    std::uint64_t m = 2;
    while (mzv_tail_bound(idx, m) >= tol) {
        m *= 2;
        if (m > enumeration_budget())
            throw BudgetExceeded(idx.to_string() + " to tolerance " + std::to_string(tol) + " needs more than " +
                                 std::to_string(enumeration_budget()) + " terms");
    }
    return {mzv_truncated(idx, m), m, mzv_tail_bound(idx, m)};
}

double mzv(const MzvIndex& idx, double tol) { return mzv_detailed(idx, tol).value; }

std::uint64_t batch_seed(std::uint64_t master, std::uint64_t batch) {
    std::uint64_t z = master + (batch + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

McEstimate feynman_J(const graph::Graph& g, double D, std::uint64_t samples, std::uint64_t seed) {
    const double e = -D / 2;
    auto est = monte_carlo(g, samples, seed, [e](double psi) { return std::pow(psi, e); });
    est.warning = convergence_warning(g, D);
    return est;
}

McEstimate feynman_J_derivative(const graph::Graph& g, double D0, double h, std::uint64_t samples,
                                std::uint64_t seed) {
    if (!(h > 0)) throw PreconditionError("step must be positive");
    auto est = monte_carlo(g, samples, seed, [D0, h](double psi) {
        return (std::pow(psi, -(D0 + h) / 2) - std::pow(psi, -(D0 - h) / 2)) / (2 * h);
    });
    est.warning = convergence_warning(g, D0 + h);
    if (est.warning.empty()) est.warning = convergence_warning(g, D0 - h);
    return est;
}

double i_gamma_prefactor(const graph::Graph& g, double D) {
    const double edges = static_cast<double>(g.num_edges());
    if (edges == 0) throw PreconditionError("prefactor needs at least one edge");
    const double b1 = static_cast<double>(g.loop_number());
    const double arg = edges - b1 * D / 2;
    if (arg <= 0 && std::abs(arg - std::round(arg)) < 1e-12) {
        std::ostringstream os;
        os << "Gamma pole: |E| - b1 D/2 = " << std::round(arg) << " at D = " << D;
        throw PoleError(os.str());
    }
    return std::pow(std::numbers::pi, b1 * D / 2) * std::tgamma(arg) / std::tgamma(edges);
}

} // namespace motzeta::periods
