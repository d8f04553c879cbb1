#pragma once

// Exhaustive phase-space analysis over a prime field: the functional graph
// of the system map on all p^n states, its cycles, fixed points and tails.
// States are indexed lexicographically base p with vertex 0 as the most
// significant digit.

#include <cstdint>
#include <string>
#include <vector>

#include "linsds/sds.hpp"

namespace linsds {

inline constexpr std::uint64_t kDefaultMaxStates = std::uint64_t{1} << 20;

struct PhaseSpace {
    FieldSpec field = FieldSpec::prime(2);
    std::size_t dimension = 0;
    std::uint64_t state_count = 0;
    std::vector<std::uint64_t> successor;       // total on all states
    std::vector<std::vector<std::uint64_t>> cycles;
    std::vector<std::uint64_t> fixed_points;    // the 1-cycles, ascending
    std::size_t tail_depth = 0;                 // max distance from any state to its cycle
};

// Successors come from multiplying the (permutation or word) system matrix
// with each state vector; cycles from iterative pointer-chasing, no
// recursion. Requires a prime field and p^n <= max_states.
PhaseSpace enumerate_phase_space(const LinearSDS& sds,
                                 std::uint64_t max_states = kDefaultMaxStates);

// Fixed points as the kernel of (M - I), enumerated from a Gaussian basis.
// Cross-check for enumerate_phase_space; returns ascending state indices.
std::vector<std::uint64_t> fixed_points_algebraic(const LinearSDS& sds,
                                                  std::uint64_t max_states = kDefaultMaxStates);

// Digit vector of a state index, vertex 0 first.
std::vector<std::uint64_t> state_digits(std::uint64_t p, std::size_t n, std::uint64_t state);
std::string state_label(std::uint64_t p, std::size_t n, std::uint64_t state);

// One node per state labeled by its digit vector, one edge per successor.
std::string phase_space_dot(const PhaseSpace& ps);

} // namespace linsds
