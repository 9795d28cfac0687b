#include "motzeta/graphzeta/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace motzeta::graph {

Graph banana(std::size_t edges) { return Graph(2, std::vector<Edge>(edges, Edge{0, 1})); }

Graph cycle(std::size_t vertices) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < vertices; ++i) e.emplace_back(i, (i + 1) % vertices);
    return Graph(vertices, e);
}

Graph complete(std::size_t vertices) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < vertices; ++i)
        for (std::size_t j = i + 1; j < vertices; ++j) e.emplace_back(i, j);
    return Graph(vertices, e);
}

Graph wheel(std::size_t spokes) {
    std::vector<Edge> e;
    for (std::size_t i = 1; i <= spokes; ++i) {
        e.emplace_back(0, i);
        e.emplace_back(i, i % spokes + 1);
    }
    return Graph(spokes + 1, e);
}

std::vector<Graph> connected_multigraphs(std::size_t edges) {
    static std::mutex mu;
    static std::map<std::size_t, std::vector<Graph>> cache;
    std::lock_guard lock(mu);
    if (auto it = cache.find(edges); it != cache.end()) return it->second;
    std::vector<Graph> level{Graph(1, {})};
    for (std::size_t k = 1; k <= edges; ++k) {
        std::set<std::pair<std::size_t, std::vector<Edge>>> seen;
        std::vector<Graph> next;
        auto offer = [&](const Graph& g) {
            Graph c = canonical_form(g);
            if (seen.emplace(c.num_vertices(), c.edges()).second) next.push_back(c);
        };
        for (const auto& g : level) {
            const std::size_t n = g.num_vertices();
            for (std::size_t u = 0; u < n; ++u) {
                for (std::size_t v = u + 1; v < n; ++v) {
                    auto e = g.edges();
                    e.emplace_back(u, v);
                    offer(Graph(n, e));
                }
                auto e = g.edges();
                e.emplace_back(u, n);
                offer(Graph(n + 1, e));
            }
        }
        std::sort(next.begin(), next.end(), [](const Graph& a, const Graph& b) {
            if (a.num_vertices() != b.num_vertices()) return a.num_vertices() < b.num_vertices();
            return a.edges() < b.edges();
        });
        level = std::move(next);
        cache.emplace(k, level);
    }
    cache.emplace(0, std::vector<Graph>{Graph(1, {})});
    return level;
}

std::vector<NamedGraph> exhaustive_catalog(std::size_t max_edges) {
    std::vector<NamedGraph> out;
    for (std::size_t m = 0; m <= max_edges; ++m) {
        const auto gs = connected_multigraphs(m);
        for (std::size_t i = 0; i < gs.size(); ++i)
            out.push_back({"m" + std::to_string(m) + "_" + std::to_string(i), gs[i]});
    }
    return out;
}

std::vector<NamedGraph> named_graphs() {
    std::vector<NamedGraph> out;
    for (std::size_t k = 1; k <= 8; ++k) out.push_back({"banana" + std::to_string(k), banana(k)});
    out.push_back({"triangle", cycle(3)});
    for (std::size_t k = 4; k <= 8; ++k) out.push_back({"cycle" + std::to_string(k), cycle(k)});
    out.push_back({"k4", complete(4)});
    // K4 relatives with 7 and 8 edges
    auto k4 = complete(4).edges();
    {
        auto e = k4;
        e.emplace_back(0, 1);
        out.push_back({"k4_doubled_edge", Graph(4, e)});
    }
    {
        auto e = k4;
        e[0] = {0, 4};
        e.emplace_back(4, 1);
        out.push_back({"k4_subdivided", Graph(5, e)});
    }
    {
        auto e = k4;
        e.emplace_back(0, 1);
        e.emplace_back(2, 3);
        out.push_back({"k4_two_doubled", Graph(4, e)});
    }
    {
        auto e = k4;
        e.emplace_back(0, 4);
        e.emplace_back(4, 1);
        out.push_back({"k4_with_ear", Graph(5, e)});
    }
    out.push_back({"wheel4", wheel(4)});
    {
        std::vector<Edge> e;
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 3; b < 6; ++b) e.emplace_back(a, b);
        e.pop_back();
        out.push_back({"k33_minus_edge", Graph(6, e)});
    }
    {
        std::vector<Edge> e;
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 2; b < 6; ++b) e.emplace_back(a, b);
        out.push_back({"k24", Graph(6, e)});
    }
    out.push_back({"triangle_of_bananas", Graph(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 0}, {2, 0}, {0, 1}})});
    {
        auto e = k4;
        e.emplace_back(0, 1);
        e.emplace_back(0, 2);
        out.push_back({"k4_adjacent_doubled", Graph(4, e)});
    }
    out.push_back({"bubble_chain", Graph(4, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 3}, {2, 3}, {3, 0}})});
    out.push_back({"k4_pendant", Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}})});
    return out;
}

std::vector<NamedGraph> builtin_catalog() {
    std::vector<NamedGraph> out = exhaustive_catalog(6);
    for (auto& ng : named_graphs())
        if (ng.graph.num_edges() >= 7) out.push_back(std::move(ng));
    return out;
}

std::optional<Graph> builtin_graph(const std::string& name) {
    for (auto& ng : named_graphs())
        if (ng.name == name) return ng.graph;
    if (name.size() > 1 && name[0] == 'm') {
        for (auto& ng : exhaustive_catalog(6))
            if (ng.name == name) return ng.graph;
    }
    return std::nullopt;
}

} // namespace motzeta::graph
