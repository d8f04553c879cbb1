#pragma once

// Linear sequential dynamical systems over permutation schedules: local
// matrices, the sequential-composition reference implementation, the closed
// formula (I - A_pi)^{-1}(A - A_pi), inversion, synthesis of an SDS from an
// arbitrary linear map via LU, and the Moebius function realized as an SDS.

#include <cstddef>
#include <optional>
#include <vector>

#include "linsds/graph.hpp"
#include "linsds/matrix.hpp"
#include "linsds/poset.hpp"
#include "linsds/schedule.hpp"

namespace linsds {

class LinearSDS {
public:
    // Coefficient matrix rows are the local functions; entry (i, j) must be
    // zero whenever i != j and the vertices are not adjacent (the offending
    // entry is reported). Diagonal entries are unrestricted.
    LinearSDS(Graph graph, Matrix coefficients, Schedule schedule);

    const Graph& graph() const { return graph_; }
    const Matrix& coefficients() const { return coefficients_; }
    const Schedule& schedule() const { return schedule_; }
    const FieldSpec& field() const { return coefficients_.field(); }
    std::size_t vertex_count() const { return graph_.vertex_count(); }

private:
    Graph graph_;
    Matrix coefficients_;
    Schedule schedule_;
};

// Identity with row i replaced by row i of the coefficient matrix.
Matrix local_matrix(const LinearSDS& sds, std::size_t vertex);

// Product of local matrices over an arbitrary vertex sequence, leftmost entry
// applied first. No schedule validation; empty sequences give the identity.
Matrix compose_sequence(const Matrix& coefficients, const std::vector<std::size_t>& word);

// The system map computed literally as the m-fold composition of local
// matrices. Works for permutation and word schedules alike; this is the
// ground-truth reference every closed formula is checked against.
Matrix compose_oracle(const LinearSDS& sds);

// Closed form (I - A_pi)^{-1}(A - A_pi) for permutation schedules.
Matrix system_matrix_perm(const LinearSDS& sds);

// Inverse system (G, B, reversed schedule) with B_ii = 1/a_ii and
// B_ij = -a_ij/a_ii. Requires a permutation schedule and a nowhere-zero
// diagonal, which characterizes invertibility.
LinearSDS invert_sds(const LinearSDS& sds);

// Builds an SDS whose system map equals t, via the pivot-free LU route:
// with t = L U, the coefficients are U + (I - L^{-1}) and the schedule is
// v_0 v_1 ... v_{n-1}. nullopt when t has no such factorization; callers can
// row-permute via lup_decompose and synthesize P t instead.
std::optional<LinearSDS> lu_synthesize(const Matrix& t);

// For h with unit diagonal, builds the SDS on the comparability graph whose
// system map is the matrix inverse of h (the Moebius matrix when h = zeta)
// and returns that map. The reversed schedule is the lexicographically
// smallest linear extension.
Matrix moebius_via_sds(const IncidenceElement& h);

// Coefficients of the parity system: each vertex sums its own state and its
// neighbors' states.
Matrix parity_coefficients(const Graph& g, const FieldSpec& field);

} // namespace linsds
