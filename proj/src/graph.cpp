#include "linsds/graph.hpp"

#include <algorithm>
#include <string>

namespace linsds {

Graph::Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : n_(n), adj_(n * n, 0) {
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a >= n_ || b >= n_) {
            throw Error(errc::invalid_graph, "edge {" + std::to_string(a) + "," + std::to_string(b) +
                                                 "} out of range (n=" + std::to_string(n_) + ")");
        }
        if (a == b) {
            throw Error(errc::invalid_graph, "self-loop at vertex " + std::to_string(a));
        }
        if (a > b) std::swap(a, b);
        if (adj_[a * n_ + b]) {
            throw Error(errc::invalid_graph,
                        "duplicate edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
        }
        adj_[a * n_ + b] = adj_[b * n_ + a] = 1;
        edges_.emplace_back(a, b);
    }
    std::sort(edges_.begin(), edges_.end());
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < n_; ++u) {
        if (adjacent(v, u)) out.push_back(u);
    }
    return out;
}

std::size_t Graph::degree(std::size_t v) const { return neighbors(v).size(); }

bool Graph::is_connected() const {
    if (n_ == 0) return true;
    std::vector<char> visited(n_, 0);
    std::vector<std::size_t> stack{0};
    visited[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t u = 0; u < n_; ++u) {
            if (adjacent(v, u) && !visited[u]) {
                visited[u] = 1;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == n_;
}

Graph circ(std::size_t n) {
    if (n < 3) {
        throw Error(errc::too_small, "circ(n) needs n >= 3, got " + std::to_string(n));
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(n);
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Matrix adjacency_matrix(const Graph& g, const FieldSpec& field) {
    std::size_t n = g.vertex_count();
    Matrix m(field, n, n);
    for (auto [a, b] : g.edges()) {
        m.set(a, b, field.one());
        m.set(b, a, field.one());
    }
    return m;
}

ExpandedGraph expand_graph(const Graph& g, const MultiplicityVector& mult) {
    std::size_t n = g.vertex_count();
    if (mult.size() != n) {
        throw Error(errc::bad_multiplicity, "multiplicity vector has " + std::to_string(mult.size()) +
                                                " entries for a graph on " + std::to_string(n) +
                                                " vertices");
    }
    std::size_t m = mult.total();
    std::vector<std::size_t> phi;
    phi.reserve(m);
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    blocks.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        blocks.emplace_back(phi.size(), mult.counts()[v]);
        phi.insert(phi.end(), mult.counts()[v], v);
    }

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (phi[i] == phi[j] || g.adjacent(phi[i], phi[j])) edges.emplace_back(i, j);
        }
    }
    return ExpandedGraph{g, Graph(m, edges), std::move(phi), std::move(blocks)};
}

} // namespace linsds
