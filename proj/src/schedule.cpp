#include "linsds/schedule.hpp"

#include <algorithm>
#include <string>

namespace linsds {

MultiplicityVector::MultiplicityVector(std::vector<std::size_t> counts)
    : counts_(std::move(counts)) {
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (counts_[i] == 0) {
            throw Error(errc::bad_multiplicity,
                        "multiplicity of vertex " + std::to_string(i) + " must be >= 1");
        }
        total_ += counts_[i];
    }
}

Schedule::Schedule(std::size_t vertex_count, std::vector<std::size_t> word)
    : vertex_count_(vertex_count), word_(std::move(word)) {
    if (vertex_count_ == 0) {
        throw Error(errc::invalid_schedule, "schedule needs at least one vertex");
    }
    std::vector<std::size_t> seen(vertex_count_, 0);
    for (std::size_t pos = 0; pos < word_.size(); ++pos) {
        if (word_[pos] >= vertex_count_) {
            throw Error(errc::invalid_schedule,
                        "schedule entry " + std::to_string(word_[pos]) + " at position " +
                            std::to_string(pos) + " is out of range (n=" +
                            std::to_string(vertex_count_) + ")");
        }
        ++seen[word_[pos]];
    }
    for (std::size_t v = 0; v < vertex_count_; ++v) {
        if (seen[v] == 0) {
            throw Error(errc::invalid_schedule,
                        "vertex " + std::to_string(v) + " never appears in the schedule");
        }
    }
}

Schedule Schedule::permutation(std::vector<std::size_t> order) {
    std::size_t n = order.size();
    Schedule sched(n, std::move(order));
    if (!sched.is_permutation()) {
        throw Error(errc::not_a_permutation, "order is not a permutation");
    }
    return sched;
}

Schedule Schedule::reversed() const {
    std::vector<std::size_t> rev(word_.rbegin(), word_.rend());
    return Schedule(vertex_count_, std::move(rev));
}

MultiplicityVector Schedule::multiplicities() const {
    std::vector<std::size_t> counts(vertex_count_, 0);
    for (std::size_t v : word_) ++counts[v];
    return MultiplicityVector(std::move(counts));
}

} // namespace linsds
