#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "motzeta/config.hpp"
#include "motzeta/exactalg/multipoly.hpp"
#include "motzeta/graphzeta/graph.hpp"

namespace motzeta::graph {

struct CountRecord {
    std::uint64_t p = 0;
    std::uint64_t affine = 0;
    std::uint64_t projective = 0;
    std::string kernel;
};

enum class CountKernel { automatic, exhaustive, elimination };

struct CountOptions {
    CountKernel kernel = CountKernel::automatic;
    std::uint64_t budget = enumeration_budget();
    /// automatic uses the exhaustive kernel while p^(|E|-1) stays below this.
    std::uint64_t exhaustive_cutoff = std::uint64_t{1} << 16;
};

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> first_primes(std::size_t count);

/// #{x in F_p^n : f(x) = 0} by enumerating the first n-1 coordinates and
/// solving for the last one when f has degree <= 2 in it. Throws
/// BudgetExceeded when the enumeration would exceed `budget` points.
std::uint64_t count_zeros_exhaustive(const alg::MultiPoly& f, std::uint64_t p, std::uint64_t budget);

/// #{x in F_p^n : f(x) = 0 for every f in system} by exact variable
/// elimination with memoization; no enumeration of the ambient space.
std::uint64_t count_zeros_elimination(const std::vector<alg::MultiPoly>& system, std::uint64_t p);

/// Affine and projective point counts of the graph hypersurface Psi = 0.
/// For trees (Psi = 1) both counts are zero.
CountRecord count_points(const Graph& g, std::uint64_t p, const CountOptions& opts = {});

struct FitReport {
    enum class Status { polynomial, non_polynomial, inconclusive };
    Status status = Status::inconclusive;
    /// Ascending coefficients of the fitted affine count in p.
    std::vector<alg::BigRational> coeffs;
    std::vector<std::uint64_t> primes_used;
    std::vector<std::uint64_t> primes_held_out;
    std::optional<std::uint64_t> witness;
    std::vector<CountRecord> counts;
    std::string note;
};

std::string to_string(FitReport::Status s);

/// Interpolates the affine counts at the first |E|+1 primes and checks the
/// fit on every remaining prime. Requires |primes| >= |E| + 1 + holdout.
FitReport polynomiality_test(const Graph& g, const std::vector<std::uint64_t>& primes, std::size_t holdout = 3,
                             const CountOptions& opts = {});

/// Exact interpolating polynomial through (x_i, y_i), ascending coefficients.
std::vector<alg::BigRational> interpolate(const std::vector<alg::BigRational>& xs,
                                          const std::vector<alg::BigRational>& ys);
alg::BigRational evaluate_poly(const std::vector<alg::BigRational>& coeffs, const alg::BigRational& x);
/// "p^2", "p^3-p+1", ... in the variable p.
std::string poly_in_p(const std::vector<alg::BigRational>& coeffs);

} // namespace motzeta::graph
