#pragma once

// Update schedules: words over the vertex set in which every vertex appears
// at least once. A permutation schedule is the length-n special case.

#include <cstddef>
#include <vector>

#include "linsds/errors.hpp"

namespace linsds {

// Per-vertex occurrence counts (m_1, ..., m_n), each >= 1.
class MultiplicityVector {
public:
    explicit MultiplicityVector(std::vector<std::size_t> counts);

    const std::vector<std::size_t>& counts() const { return counts_; }
    std::size_t size() const { return counts_.size(); }
    std::size_t total() const { return total_; }

    bool operator==(const MultiplicityVector& other) const = default;

private:
    std::vector<std::size_t> counts_;
    std::size_t total_ = 0;
};

class Schedule {
public:
    // Word over vertices 0..vertex_count-1; every vertex must appear.
    Schedule(std::size_t vertex_count, std::vector<std::size_t> word);

    // Permutation schedule from an ordering of 0..n-1.
    static Schedule permutation(std::vector<std::size_t> order);

    std::size_t vertex_count() const { return vertex_count_; }
    const std::vector<std::size_t>& word() const { return word_; }
    std::size_t length() const { return word_.size(); }

    bool is_permutation() const { return word_.size() == vertex_count_; }
    Schedule reversed() const;
    MultiplicityVector multiplicities() const;

    bool operator==(const Schedule& other) const = default;

private:
    std::size_t vertex_count_;
    std::vector<std::size_t> word_;
};

} // namespace linsds
