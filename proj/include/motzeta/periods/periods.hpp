#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "motzeta/graphzeta/graph.hpp"

namespace motzeta::periods {

/// (s_1, ..., s_k) with s_1 >= 2; the sum runs over n_1 > ... > n_k >= 1.
struct MzvIndex {
    std::vector<unsigned> s;

    /// Parses "2,1". Throws PreconditionError on bad input.
    static MzvIndex parse(const std::string& text);
    void validate() const;
    std::string to_string() const;
};

struct MzvResult {
    double value = 0;
    std::uint64_t cutoff = 0;  // n_1 <= cutoff
    double tail_bound = 0;
};

/// Sum with n_1 <= cutoff.
double mzv_truncated(const MzvIndex& idx, std::uint64_t cutoff);
/// Integral-comparison bound on the omitted terms n_1 > cutoff.
double mzv_tail_bound(const MzvIndex& idx, std::uint64_t cutoff);
/// Smallest power-of-two cutoff with tail bound below tol. Requires k <= 4,
/// tol >= 1e-10 and a cutoff within the enumeration budget.
MzvResult mzv_detailed(const MzvIndex& idx, double tol);
double mzv(const MzvIndex& idx, double tol);

struct McEstimate {
    double mean = 0;
    double standard_error = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t non_finite = 0;
    std::string warning;
    std::string convention;
};

/// Monte Carlo estimate of the integral of Psi^(-D/2) over the simplex with
/// volume normalized to 1; divide by (|E|-1)! for the Lebesgue measure.
/// Samples are drawn in fixed-size batches whose seeds derive from `seed`.
McEstimate feynman_J(const graph::Graph& g, double D, std::uint64_t samples, std::uint64_t seed);

/// Central difference (J(D0 + h) - J(D0 - h)) / 2h on common random numbers.
McEstimate feynman_J_derivative(const graph::Graph& g, double D0, double h, std::uint64_t samples, std::uint64_t seed);

/// pi^(b1 D/2) Gamma(|E| - b1 D/2) / Gamma(|E|). Throws PoleError when
/// |E| - b1 D/2 is a nonpositive integer.
double i_gamma_prefactor(const graph::Graph& g, double D);

/// Batch seed i of a master seed (splitmix64).
std::uint64_t batch_seed(std::uint64_t master, std::uint64_t batch);

} // namespace motzeta::periods
