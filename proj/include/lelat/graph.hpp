#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lelat/errors.hpp"

namespace lelat {

using Edge = std::pair<int, int>;

/// Immutable finite simple undirected graph on vertices 0..n-1.
/// Edges are normalized to u < v and kept in lexicographic order, so two
/// graphs on the same vertex indexing compare edge-for-edge.
class Graph {
public:
    Graph() = default;
    Graph(int n_vertices, std::vector<Edge> edges);

    int n_vertices() const { return n_; }
    int n_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const;
    int degree(int v) const;
    const std::vector<int>& degrees() const { return degree_; }
    int max_degree() const;
    int component_count() const;
    bool is_regular(int r) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> degree_;
};

/// Path on n vertices (n >= 1), edges i -- i+1.
Graph make_path(int n);

/// Cycle on n vertices (n >= 3), edges i -- (i+1) mod n.
Graph make_cycle(int n);

/// Cartesian product; vertex (u, w) maps to index u * h.n_vertices() + w.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Each edge is split by one new vertex; the k-th edge in sorted order gets
/// index n + k, so the output indexing is a pure function of the input.
Graph subdivision(const Graph& g);

/// Vertices of the output are the edges of the input in sorted order; two
/// are adjacent iff the edges share an endpoint.
Graph line_graph(const Graph& g);

/// Removes the listed edges (each must be present) keeping the vertex set.
Graph delete_edges(const Graph& g, const std::vector<Edge>& removed);

/// |E(g) xor E(h)| on a shared vertex indexing.
int edge_delta(const Graph& g, const Graph& h);

/// Fraction of vertices with equal degree in g and h. Requires the same
/// vertex count and E(h) subset of E(g).
double degree_agreement_fraction(const Graph& g, const Graph& h);

/// Erdos-Renyi G(n, p); edges drawn in lexicographic pair order so results
/// are a pure function of the generator state.
Graph random_graph(std::mt19937_64& rng, int n, double p);

/// Keeps each edge independently with probability keep_prob, same vertex set.
Graph random_spanning_subgraph(std::mt19937_64& rng, const Graph& g, double keep_prob);

/// Text form: header "n <count>", then one "u v" line per edge, sorted.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::istream& in);

}  // namespace lelat
