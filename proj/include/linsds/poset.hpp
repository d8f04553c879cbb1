#pragma once

// Finite posets stored as a closed boolean relation matrix, plus their
// incidence algebra: zeta and Moebius functions, chain-sum oracles for matrix
// powers, linear extensions, and the poset induced by an acyclic orientation
// of a dependency graph.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linsds/graph.hpp"
#include "linsds/matrix.hpp"

namespace linsds {

class Poset {
public:
    // Full relation matrix; reflexivity, antisymmetry and transitivity are
    // all verified.
    static Poset from_relation(std::size_t n, std::vector<char> leq);

    // Strict pairs (a, b) meaning a < b. The reflexive-transitive closure is
    // computed; a closure that breaks antisymmetry is rejected with the
    // offending pair named.
    static Poset from_strict_pairs(std::size_t n,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

    static Poset antichain(std::size_t n);
    static Poset chain(std::size_t n);

    std::size_t size() const { return n_; }
    bool leq(std::size_t i, std::size_t j) const { return leq_[i * n_ + j] != 0; }
    bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
    bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }

    std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const;

    // Sub-poset on the listed elements, in the listed order.
    Poset induced(const std::vector<std::size_t>& elements) const;
    // Relabelled copy: new element i is old element order[i].
    Poset reordered(const std::vector<std::size_t>& order) const;

    // Element names, s1..sn by default.
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    bool operator==(const Poset& other) const {
        return n_ == other.n_ && leq_ == other.leq_;
    }

private:
    Poset(std::size_t n, std::vector<char> leq);

    std::size_t n_;
    std::vector<char> leq_;
    std::vector<std::string> labels_;
};

// Orient each edge from the later-updated endpoint to the earlier-updated
// one, then take the induced partial order (later-updated vertices are
// smaller). pi must be a permutation of the vertices.
Poset poset_from_acyclic_orientation(const Graph& g, const std::vector<std::size_t>& pi);

// All topological orderings of the strict relation, lexicographically
// smallest first; `limit` truncates the enumeration.
std::vector<std::vector<std::size_t>> linear_extensions(
    const Poset& p, std::optional<std::size_t> limit = std::nullopt);

// A function on intervals of a poset, stored as the matrix with
// entry (i, j) = h(s_i, s_j) supported on i <= j only.
class IncidenceElement {
public:
    IncidenceElement(Poset poset, Matrix matrix); // verifies the support condition

    const Poset& poset() const { return poset_; }
    const Matrix& matrix() const { return matrix_; }
    const FieldSpec& field() const { return matrix_.field(); }

    bool operator==(const IncidenceElement& other) const {
        return poset_ == other.poset_ && matrix_ == other.matrix_;
    }

private:
    Poset poset_;
    Matrix matrix_;
};

// zeta(x, y) = 1 for all x <= y.
IncidenceElement zeta(const Poset& p, const FieldSpec& field);

// The convolution inverse of zeta, computed directly in the target field
// (over F_p this is the mod-p reduction of the integer Moebius values).
IncidenceElement moebius(const Poset& p, const FieldSpec& field);

IncidenceElement identity_element(const Poset& p, const FieldSpec& field);

// Convolution product; both operands must live on the same poset and field.
IncidenceElement incidence_mul(const IncidenceElement& h, const IncidenceElement& r);

// Entry (i, j) = sum over all weak (or strict) chains of length k from s_i
// to s_j of the product of h-values along the chain, by explicit chain
// enumeration. The brute-force reference for H^k and (H - Diag{H})^k.
Matrix chain_power_oracle(const IncidenceElement& h, std::size_t k, bool strict);

} // namespace linsds
