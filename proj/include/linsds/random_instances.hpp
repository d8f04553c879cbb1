#pragma once

// Seeded generators for property suites and the selftest command. All
// randomness flows through Rng, so instances are reproducible from a seed.

#include <cstdint>
#include <vector>

#include "linsds/graph.hpp"
#include "linsds/matrix.hpp"
#include "linsds/poset.hpp"
#include "linsds/rng.hpp"
#include "linsds/sds.hpp"

namespace linsds {

// Each pair becomes an edge with probability 1/2.
Graph random_graph(Rng& rng, std::size_t n);

// Small exact values: residues over F_p, integers in [-3, 3] over Q.
Scalar random_scalar(Rng& rng, const FieldSpec& field);
Matrix random_matrix(Rng& rng, const FieldSpec& field, std::size_t nrows, std::size_t ncols);

// Matrix supported on the graph's adjacency (free diagonal).
Matrix random_supported_matrix(Rng& rng, const Graph& g, const FieldSpec& field);

std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n);

// Word of the given length containing every vertex at least once.
Schedule random_word_schedule(Rng& rng, std::size_t n, std::size_t length);

// Random SDS over a random graph with an adjacency-supported matrix.
LinearSDS random_sds(Rng& rng, const FieldSpec& field, std::size_t n, bool permutation,
                     std::size_t word_length = 0);

// Unit lower triangular with random strictly-lower entries.
Matrix random_unit_lower(Rng& rng, const FieldSpec& field, std::size_t n);
// Upper triangular with nonzero diagonal.
Matrix random_invertible_upper(Rng& rng, const FieldSpec& field, std::size_t n);

// Random DAG closure on n elements, relabelled by a random permutation.
Poset random_poset(Rng& rng, std::size_t n);

// Random incidence element with nonzero-diagonal support values (so it is
// invertible and usable with the unit-diagonal constructions after scaling).
IncidenceElement random_incidence_element(Rng& rng, const Poset& p, const FieldSpec& field);

} // namespace linsds
