#pragma once

// Finite simple undirected graphs: dependency graphs, the Circ n family, and
// the occurrence-expanded graph built from a multiplicity vector.

#include <cstddef>
#include <utility>
#include <vector>

#include "linsds/matrix.hpp"
#include "linsds/schedule.hpp"

namespace linsds {

class Graph {
public:
    // Edges as unordered pairs; self-loops and duplicates are rejected.
    Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

    std::size_t vertex_count() const { return n_; }
    // Canonical edge list: (i, j) with i < j, sorted.
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

    bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * n_ + j]; }
    std::vector<std::size_t> neighbors(std::size_t v) const;
    std::size_t degree(std::size_t v) const;

    // The theorems implemented here hold componentwise, so disconnected
    // graphs are accepted; callers may surface this as a warning.
    bool is_connected() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    std::size_t n_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<char> adj_;
};

// Cycle graph on n >= 3 vertices with edges {i, (i+1) mod n}.
Graph circ(std::size_t n);

// Symmetric 0/1 matrix with zero diagonal, over the given field.
Matrix adjacency_matrix(const Graph& g, const FieldSpec& field);

// One vertex per (base vertex, occurrence) pair. Vertices of the expanded
// graph are grouped into contiguous blocks, one block per base vertex;
// expanded vertices are adjacent iff their base vertices are adjacent or
// equal, so each block induces a clique.
struct ExpandedGraph {
    Graph base;
    Graph graph;
    std::vector<std::size_t> phi;                              // expanded vertex -> base vertex
    std::vector<std::pair<std::size_t, std::size_t>> blocks;   // base vertex -> [offset, offset+len)
};

ExpandedGraph expand_graph(const Graph& g, const MultiplicityVector& mult);

} // namespace linsds
