#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "regpow/graph.hpp"

namespace regpow {

// Vertex pairs (u,v), u < v, in lexicographic order; bit k of an edge mask
// toggles the k-th pair.
std::vector<std::pair<int, int>> vertex_pairs(int r);
std::uint32_t edge_mask(const Graph& g);
Graph graph_from_edge_mask(int r, std::uint32_t mask);

// Minimum edge mask over all vertex relabelings; brute force over the r!
// permutations, fine for r <= 7.
std::uint32_t canonical_edge_mask(int r, std::uint32_t mask);

bool isomorphic(const Graph& a, const Graph& b);
bool has_induced_subgraph(const Graph& host, const Graph& pattern);

// All labeled graphs on exactly r vertices with at least one edge, in
// ascending edge-mask order. allow_isolated=false keeps only graphs of
// minimum degree >= 1; dedupe keeps one canonical representative per
// isomorphism class.
std::vector<Graph> enumerate_graphs(int r, bool allow_isolated, bool dedupe);

}  // namespace regpow
