#include "motzeta/graphzeta/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "motzeta/error.hpp"

namespace motzeta::graph {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

} // namespace

std::size_t count_components(std::size_t vertices, const std::vector<Edge>& edges) {
    UnionFind uf(vertices);
    std::size_t comps = vertices;
    for (const auto& [u, v] : edges)
        if (uf.unite(u, v)) --comps;
    return comps;
}

Graph::Graph(std::size_t vertices, std::vector<Edge> edges) : vertices_(vertices), edges_(std::move(edges)) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto [u, v] = edges_[i];
        if (u >= vertices_ || v >= vertices_)
            throw PreconditionError("edge " + std::to_string(i) + " has an endpoint outside 0.." +
                                    std::to_string(vertices_ == 0 ? 0 : vertices_ - 1));
        if (u == v) throw PreconditionError("edge " + std::to_string(i) + " is a self-loop");
    }
    components_ = count_components(vertices_, edges_);
}

bool Graph::is_bridge(std::size_t edge) const {
    if (edge >= edges_.size()) throw PreconditionError("edge index out of range");
    return without_edge(edge).num_components() > components_;
}

Graph Graph::without_edge(std::size_t edge) const {
    if (edge >= edges_.size()) throw PreconditionError("edge index out of range");
    std::vector<Edge> e = edges_;
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(edge));
    return Graph(vertices_, std::move(e));
}

std::vector<std::vector<std::size_t>> spanning_trees(const Graph& g) {
    if (!g.is_connected()) throw PreconditionError("spanning trees need a connected graph");
    const std::size_t need = g.num_vertices() - 1;
    const std::size_t m = g.num_edges();
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> pick;
    // choose `need` edges out of m and keep the acyclic choices
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (pick.size() == need) {
            UnionFind uf(g.num_vertices());
            for (std::size_t e : pick)
                if (!uf.unite(g.edges()[e].first, g.edges()[e].second)) return;
            out.push_back(pick);
            return;
        }
        for (std::size_t e = start; e + (need - pick.size()) <= m; ++e) {
            pick.push_back(e);
            self(self, e + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

alg::MultiPoly kirchhoff_by_trees(const Graph& g) {
    const std::size_t m = g.num_edges();
    alg::MultiPoly psi(m);
    for (const auto& tree : spanning_trees(g)) {
        alg::Exponents e(m, 1);
        for (std::size_t i : tree) e[i] = 0;
        psi.add_term(e, 1);
    }
    return psi;
}

alg::MultiPoly kirchhoff_by_determinant(const Graph& g) {
    if (!g.is_connected()) throw PreconditionError("the Kirchhoff polynomial needs a connected graph");
    const std::size_t m = g.num_edges();
    const std::size_t n = g.num_vertices();
    if (n == 1) return alg::MultiPoly::constant(m, 1);
    // Reduced Laplacian: drop vertex 0.
    const std::size_t r = n - 1;
    std::vector<std::vector<alg::MultiPoly>> lap(r, std::vector<alg::MultiPoly>(r, alg::MultiPoly(m)));
    for (std::size_t e = 0; e < m; ++e) {
        const auto x = alg::MultiPoly::variable(m, e);
        const auto [u, v] = g.edges()[e];
        if (u > 0) lap[u - 1][u - 1] += x;
        if (v > 0) lap[v - 1][v - 1] += x;
        if (u > 0 && v > 0) {
            lap[u - 1][v - 1] -= x;
            lap[v - 1][u - 1] -= x;
        }
    }
    // Division-free determinant: dp[mask] = signed sum over injective row maps
    // of the first popcount(mask) rows onto the columns in mask.
    std::vector<alg::MultiPoly> dp(std::size_t{1} << r, alg::MultiPoly(m));
    std::vector<bool> live(dp.size(), false);
    dp[0] = alg::MultiPoly::constant(m, 1);
    live[0] = true;
    for (std::size_t mask = 0; mask < dp.size(); ++mask) {
        if (!live[mask] || dp[mask].is_zero()) continue;
        const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (row == r) continue;
        for (std::size_t col = 0; col < r; ++col) {
            if (mask & (std::size_t{1} << col)) continue;
            if (lap[row][col].is_zero()) continue;
            const std::size_t above = static_cast<std::size_t>(__builtin_popcountll(mask >> (col + 1)));
            alg::MultiPoly term = dp[mask] * lap[row][col];
            const std::size_t next = mask | (std::size_t{1} << col);
            if (above % 2) dp[next] -= term;
            else dp[next] += term;
            live[next] = true;
        }
    }
    const alg::MultiPoly& det = dp.back();
    alg::MultiPoly psi(m);
    for (const auto& [e, c] : det.terms()) {
        alg::Exponents flipped(m);
        for (std::size_t i = 0; i < m; ++i) {
            if (e[i] > 1) throw std::logic_error("matrix-tree determinant is not multilinear");
            flipped[i] = 1 - e[i];
        }
        psi.add_term(flipped, c);
    }
    return psi;
}

alg::MultiPoly kirchhoff(const Graph& g) {
    alg::MultiPoly a = kirchhoff_by_trees(g);
    alg::MultiPoly b = kirchhoff_by_determinant(g);
    if (!(a == b)) throw std::logic_error("Kirchhoff routes disagree: " + a.to_string() + " vs " + b.to_string());
    return a;
}

Graph canonical_form(const Graph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<Edge> best;
    bool first = true;
    std::vector<Edge> cur(g.num_edges());
    do {
        for (std::size_t i = 0; i < cur.size(); ++i) {
            auto [u, v] = g.edges()[i];
            u = perm[u];
            v = perm[v];
            cur[i] = u < v ? Edge{u, v} : Edge{v, u};
        }
        std::sort(cur.begin(), cur.end());
        if (first || cur < best) {
            best = cur;
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Graph(n, best);
}

} // namespace motzeta::graph
