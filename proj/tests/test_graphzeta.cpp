#include <doctest.h>

#include <cstdlib>

#include "gen.hpp"
#include "motzeta/error.hpp"
#include "motzeta/graphzeta/catalog.hpp"
#include "motzeta/graphzeta/count.hpp"

using namespace motzeta;
using namespace motzeta::graph;
using alg::BigRational;
using alg::MultiPoly;

namespace {

// Plain enumeration of F_p^n, no solving, no shortcuts.
std::uint64_t brute_force_zeros(const MultiPoly& f, std::uint64_t p) {
    const std::size_t n = f.num_vars();
    std::vector<std::uint64_t> x(n, 0);
    std::uint64_t zeros = 0;
    for (;;) {
        if (f.evaluate_mod(x, p) == 0) ++zeros;
        std::size_t i = 0;
        while (i < n && ++x[i] == p) x[i++] = 0;
        if (i == n) break;
    }
    return zeros;
}

MultiPoly psi_of(std::initializer_list<std::initializer_list<unsigned>> monomials, std::size_t n) {
    MultiPoly f(n);
    for (const auto& m : monomials) f.add_term(alg::Exponents(m), 1);
    return f;
}

} // namespace

TEST_CASE("graph invariants and validation") {
    Graph g(3, {{0, 1}, {1, 2}, {2, 0}, {0, 1}});
    CHECK(g.is_connected());
    CHECK(g.loop_number() == 2);
    CHECK_FALSE(g.is_bridge(1));
    Graph path(3, {{0, 1}, {1, 2}});
    CHECK(path.is_bridge(0));
    CHECK(path.loop_number() == 0);
    CHECK_THROWS_AS(Graph(2, {{1, 1}}), PreconditionError);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), PreconditionError);
    Graph split(4, {{0, 1}, {2, 3}});
    CHECK(split.num_components() == 2);
    CHECK_THROWS_AS(kirchhoff(split), PreconditionError);
}

TEST_CASE("Kirchhoff polynomial examples") {
    CHECK(kirchhoff(banana(2)).to_string() == "x1 + x2");
    CHECK(kirchhoff(cycle(3)).to_string() == "x1 + x2 + x3");
    CHECK(kirchhoff(banana(3)).to_string() == "x1*x2 + x1*x3 + x2*x3");
    CHECK(kirchhoff(banana(3)) == psi_of({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}, 3));
    CHECK(spanning_trees(complete(4)).size() == 16);
    CHECK(kirchhoff(Graph(1, {})).to_string() == "1");
}

TEST_CASE("catalog sizes match the known sequence of connected loopless multigraphs") {
    // OEIS A076864: 1, 1, 2, 5, 12, 33, 103
    const std::size_t expected[] = {1, 1, 2, 5, 12, 33, 103};
    for (std::size_t m = 0; m <= 6; ++m) {
        CAPTURE(m);
        CHECK(connected_multigraphs(m).size() == expected[m]);
    }
}

TEST_CASE("property: both Kirchhoff routes agree on the exhaustive catalog") {
    std::size_t checked = 0;
    for (const auto& ng : exhaustive_catalog(6)) {
        CAPTURE(ng.name);
        const auto a = kirchhoff_by_trees(ng.graph);
        const auto b = kirchhoff_by_determinant(ng.graph);
        REQUIRE(a == b);
        // degree b1 and unit coefficients
        REQUIRE(a.is_homogeneous());
        REQUIRE(a.degree() == static_cast<long>(ng.graph.loop_number()));
        for (const auto& [e, c] : a.terms()) REQUIRE(c == 1);
        ++checked;
    }
    CHECK(checked == 157);
}

TEST_CASE("property: bridges do not enter the Kirchhoff polynomial") {
    for (const auto& ng : exhaustive_catalog(5)) {
        const Graph& g = ng.graph;
        const auto psi = kirchhoff(g);
        for (std::size_t e = 0; e < g.num_edges(); ++e) {
            if (!g.is_bridge(e)) continue;
            CHECK_FALSE(psi.involves(e));
            // contracting a bridge: the same polynomial with x_e dropped
            std::vector<Edge> rest;
            const auto [u, v] = g.edges()[e];
            for (std::size_t k = 0; k < g.num_edges(); ++k) {
                if (k == e) continue;
                auto [a, b] = g.edges()[k];
                auto relabel = [&](std::size_t w) {
                    std::size_t r = w == v ? u : w;
                    return r > v ? r - 1 : r;
                };
                rest.emplace_back(relabel(a), relabel(b));
            }
            Graph contracted(g.num_vertices() - 1, rest);
            const auto small = kirchhoff(contracted);
            MultiPoly lifted(g.num_edges());
            for (const auto& [ex, c] : small.terms()) {
                alg::Exponents full;
                for (std::size_t k = 0, j = 0; k < g.num_edges(); ++k) full.push_back(k == e ? 0 : ex[j++]);
                lifted.add_term(full, c);
            }
            CHECK(lifted == psi);
        }
    }
}

TEST_CASE("count examples") {
    auto b3 = banana(3);
    CHECK(brute_force_zeros(kirchhoff(b3), 2) == 4);
    CHECK(count_points(b3, 2).affine == 4);
    auto r3 = count_points(b3, 3);
    CHECK(r3.affine == 9);
    CHECK(r3.projective == 4);
    CHECK(count_points(cycle(3), 5).affine == 25);
    CHECK_THROWS_AS(count_points(b3, 4), PreconditionError);
    CountOptions tight;
    tight.kernel = CountKernel::exhaustive;
    tight.budget = 100;
    CHECK_THROWS_AS(count_points(complete(4), 37, tight), BudgetExceeded);
}

TEST_CASE("property: kernels agree with brute force") {
    for (const auto& ng : exhaustive_catalog(5)) {
        if (ng.graph.loop_number() == 0) continue;
        const auto psi = kirchhoff(ng.graph);
        for (std::uint64_t p : {2u, 3u, 5u}) {
            if (ng.graph.num_edges() == 5 && p == 5) continue;
            CAPTURE(ng.name);
            CAPTURE(p);
            const std::uint64_t truth = brute_force_zeros(psi, p);
            CountOptions ex, el;
            ex.kernel = CountKernel::exhaustive;
            el.kernel = CountKernel::elimination;
            auto a = count_points(ng.graph, p, ex);
            auto b = count_points(ng.graph, p, el);
            REQUIRE(a.affine == truth);
            REQUIRE(b.affine == truth);
            REQUIRE(a.affine == 1 + (p - 1) * a.projective);
        }
    }
}

TEST_CASE("property: elimination kernel on random polynomial systems") {
    for (int i = 0; i < 150; ++i) {
        const std::size_t n = static_cast<std::size_t>(gen::integer(1, 4));
        std::vector<MultiPoly> sys;
        const long k = gen::integer(1, 3);
        for (long j = 0; j < k; ++j) sys.push_back(gen::multipoly(n, static_cast<int>(gen::integer(1, 4)), 2));
        for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
            std::uint64_t truth = 0;
            std::vector<std::uint64_t> x(n, 0);
            for (;;) {
                bool all = true;
                for (const auto& f : sys) all = all && f.evaluate_mod(x, p) == 0;
                if (all) ++truth;
                std::size_t t = 0;
                while (t < n && ++x[t] == p) x[t++] = 0;
                if (t == n) break;
            }
            CAPTURE(p);
            REQUIRE(count_zeros_elimination(sys, p) == truth);
            if (sys.size() == 1) REQUIRE(count_zeros_exhaustive(sys[0], p, 1u << 20) == truth);
        }
    }
}

TEST_CASE("interpolation") {
    std::vector<BigRational> xs{2, 3, 5, 7}, ys{4, 9, 25, 49};
    auto c = interpolate(xs, ys);
    CHECK(poly_in_p(c) == "p^2");
    CHECK(evaluate_poly(c, 11) == 121);
}

TEST_CASE("polynomiality test examples") {
    auto b3 = polynomiality_test(banana(3), {2, 3, 5, 7, 11, 13, 17, 19}, 3);
    CHECK(b3.status == FitReport::Status::polynomial);
    CHECK(poly_in_p(b3.coeffs) == "p^2");
    CHECK(b3.primes_held_out.size() >= 3);
    auto tri = polynomiality_test(cycle(3), first_primes(12), 3);
    CHECK(tri.status == FitReport::Status::polynomial);
    CHECK(poly_in_p(tri.coeffs) == "p^2");
    auto k4 = polynomiality_test(complete(4), first_primes(12), 4);
    CHECK(k4.status == FitReport::Status::polynomial);
    for (const auto& r : k4.counts) CHECK(r.affine == 1 + (r.p - 1) * r.projective);
    CHECK_THROWS_AS(polynomiality_test(complete(4), first_primes(8), 3), PreconditionError);
}

TEST_CASE("3-banana counts are p^2 for every prime up to 31") {
    for (std::uint64_t p : first_primes(11)) CHECK(count_points(banana(3), p).affine == p * p);
}

TEST_CASE("count kernels agree on an 8-edge graph at a small prime") {
    auto g = *builtin_graph("wheel4");
    CountOptions ex, el;
    ex.kernel = CountKernel::exhaustive;
    el.kernel = CountKernel::elimination;
    CHECK(count_points(g, 3, ex).affine == count_points(g, 3, el).affine);
}
