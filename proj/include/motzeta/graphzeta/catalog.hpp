#pragma once

#include <optional>
#include <string>
#include <vector>

#include "motzeta/graphzeta/graph.hpp"

namespace motzeta::graph {

struct NamedGraph {
    std::string name;
    Graph graph;
};

Graph banana(std::size_t edges);
Graph cycle(std::size_t vertices);
Graph complete(std::size_t vertices);
Graph wheel(std::size_t spokes);

/// Every connected loopless multigraph with exactly `edges` edges, one
/// representative per isomorphism class, in canonical form.
std::vector<Graph> connected_multigraphs(std::size_t edges);

/// Exhaustive list for 0..max_edges edges, named "m<E>_<k>".
std::vector<NamedGraph> exhaustive_catalog(std::size_t max_edges = 6);

/// Hand-picked graphs (bananas, cycles, K4 and relatives) up to 8 edges.
std::vector<NamedGraph> named_graphs();

/// Exhaustive catalog up to 6 edges plus the named graphs with 7 or 8 edges.
std::vector<NamedGraph> builtin_catalog();

std::optional<Graph> builtin_graph(const std::string& name);

} // namespace motzeta::graph
