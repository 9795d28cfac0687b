#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "motzeta/exactalg/multipoly.hpp"
#include "motzeta/exactalg/rational.hpp"

namespace motzeta::graph {

using Edge = std::pair<std::size_t, std::size_t>;

/// Loopless multigraph with stably indexed edges; edge e carries variable x_{e+1}.
class Graph {
public:
    Graph() = default;
    /// Throws PreconditionError on self-loops or out-of-range endpoints.
    Graph(std::size_t vertices, std::vector<Edge> edges);

    std::size_t num_vertices() const { return vertices_; }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::size_t num_components() const { return components_; }
    bool is_connected() const { return components_ == 1; }
    /// b1 = |E| - |V| + components.
    std::size_t loop_number() const { return edges_.size() + components_ - vertices_; }

    bool is_bridge(std::size_t edge) const;
    /// Same vertex set with one edge removed; later edges shift down by one.
    Graph without_edge(std::size_t edge) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t vertices_ = 0;
    std::vector<Edge> edges_;
    std::size_t components_ = 0;
};

std::size_t count_components(std::size_t vertices, const std::vector<Edge>& edges);

/// Edge index sets of all spanning trees, each sorted ascending.
std::vector<std::vector<std::size_t>> spanning_trees(const Graph& g);

/// sum over spanning trees T of prod_{e not in T} x_e, by tree enumeration.
alg::MultiPoly kirchhoff_by_trees(const Graph& g);
/// Same polynomial from the determinant of the x-weighted reduced Laplacian
/// followed by the involution x^a -> x^(1-a).
alg::MultiPoly kirchhoff_by_determinant(const Graph& g);
/// Both routes; throws std::logic_error if they ever disagree.
alg::MultiPoly kirchhoff(const Graph& g);

/// Canonical form up to vertex relabeling (and edge reordering).
Graph canonical_form(const Graph& g);

} // namespace motzeta::graph
