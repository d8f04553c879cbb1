#include "linsds/phase.hpp"

#include <algorithm>
#include <sstream>

#include "linsds/word_sds.hpp"

namespace linsds {

namespace {

struct StateSpace {
    std::uint64_t p = 0;
    std::size_t n = 0;
    std::uint64_t count = 0;
};

StateSpace checked_space(const LinearSDS& sds, std::uint64_t max_states) {
    if (!sds.field().is_prime_field()) {
        throw Error(errc::rational_field_unsupported,
                    "phase-space enumeration needs a finite field");
    }
    StateSpace space{sds.field().modulus(), sds.vertex_count(), 1};
    for (std::size_t i = 0; i < space.n; ++i) {
        if (space.count > max_states / space.p) {
            throw Error(errc::state_space_too_large,
                        "state space exceeds the budget of " + std::to_string(max_states) +
                            " states");
        }
        space.count *= space.p;
    }
    return space;
}

Matrix system_matrix(const LinearSDS& sds) {
    return sds.schedule().is_permutation() ? system_matrix_perm(sds) : system_matrix_word(sds);
}

// Residues of the system matrix, row-major, for the tight enumeration loop.
std::vector<std::uint64_t> residue_rows(const Matrix& m) {
    std::vector<std::uint64_t> out;
    out.reserve(m.nrows() * m.ncols());
    for (std::size_t i = 0; i < m.nrows(); ++i) {
        for (std::size_t j = 0; j < m.ncols(); ++j) out.push_back(m.at(i, j).residue());
    }
    return out;
}

std::uint64_t digits_to_state(const std::vector<std::uint64_t>& digits, std::uint64_t p) {
    std::uint64_t state = 0;
    for (std::uint64_t d : digits) state = state * p + d;
    return state;
}

} // namespace

std::vector<std::uint64_t> state_digits(std::uint64_t p, std::size_t n, std::uint64_t state) {
    std::vector<std::uint64_t> digits(n, 0);
    for (std::size_t i = n; i-- > 0;) {
        digits[i] = state % p;
        state /= p;
    }
    return digits;
}

std::string state_label(std::uint64_t p, std::size_t n, std::uint64_t state) {
    std::vector<std::uint64_t> digits = state_digits(p, n, state);
    std::string label;
    for (std::size_t i = 0; i < n; ++i) {
        if (p > 10 && i) label += ",";
        label += std::to_string(digits[i]);
    }
    return label;
}

PhaseSpace enumerate_phase_space(const LinearSDS& sds, std::uint64_t max_states) {
    StateSpace space = checked_space(sds, max_states);
    std::vector<std::uint64_t> m = residue_rows(system_matrix(sds));

    PhaseSpace ps;
    ps.field = sds.field();
    ps.dimension = space.n;
    ps.state_count = space.count;
    ps.successor.resize(space.count);

    std::vector<std::uint64_t> x(space.n), y(space.n);
    for (std::uint64_t state = 0; state < space.count; ++state) {
        x = state_digits(space.p, space.n, state);
        for (std::size_t i = 0; i < space.n; ++i) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < space.n; ++j) acc += m[i * space.n + j] * x[j];
            y[i] = acc % space.p;
        }
        ps.successor[state] = digits_to_state(y, space.p);
    }

    // Functional-graph decomposition with a color array; depths filled
    // backwards along each resolved path. No recursion.
    constexpr std::uint8_t kUnseen = 0, kOnPath = 1, kDone = 2;
    std::vector<std::uint8_t> color(space.count, kUnseen);
    std::vector<std::size_t> depth(space.count, 0);
    std::vector<std::uint64_t> path;
    for (std::uint64_t start = 0; start < space.count; ++start) {
        if (color[start] != kUnseen) continue;
        path.clear();
        std::uint64_t cur = start;
        while (color[cur] == kUnseen) {
            color[cur] = kOnPath;
            path.push_back(cur);
            cur = ps.successor[cur];
        }
        std::size_t base_depth = 0;
        std::size_t cycle_start = path.size();
        if (color[cur] == kOnPath) {
            // Found a new cycle: the tail of `path` from cur onward.
            auto it = std::find(path.begin(), path.end(), cur);
            cycle_start = static_cast<std::size_t>(it - path.begin());
            std::vector<std::uint64_t> cycle(path.begin() + static_cast<std::ptrdiff_t>(cycle_start),
                                             path.end());
            for (std::uint64_t s : cycle) depth[s] = 0;
            ps.cycles.push_back(std::move(cycle));
        } else {
            base_depth = depth[cur];
        }
        for (std::size_t t = cycle_start; t-- > 0;) {
            depth[path[t]] = base_depth + (cycle_start - t);
        }
        for (std::uint64_t s : path) color[s] = kDone;
        if (!path.empty()) {
            ps.tail_depth = std::max(ps.tail_depth, depth[path.front()]);
        }
    }

    for (const auto& cycle : ps.cycles) {
        if (cycle.size() == 1) ps.fixed_points.push_back(cycle.front());
    }
    std::sort(ps.fixed_points.begin(), ps.fixed_points.end());
    return ps;
}

std::vector<std::uint64_t> fixed_points_algebraic(const LinearSDS& sds, std::uint64_t max_states) {
    StateSpace space = checked_space(sds, max_states);
    Matrix m = system_matrix(sds);
    Matrix shifted = m - Matrix::identity(sds.field(), space.n);
    std::vector<std::vector<Scalar>> basis = kernel_basis(shifted);

    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (combos > max_states / space.p) {
            throw Error(errc::state_space_too_large,
                        "fixed-point set exceeds the budget of " + std::to_string(max_states) +
                            " states");
        }
        combos *= space.p;
    }

    std::vector<std::uint64_t> out;
    out.reserve(combos);
    std::vector<std::uint64_t> coeffs(basis.size(), 0);
    for (std::uint64_t c = 0; c < combos; ++c) {
        std::uint64_t rest = c;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            coeffs[b] = rest % space.p;
            rest /= space.p;
        }
        std::vector<std::uint64_t> digits(space.n, 0);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (coeffs[b] == 0) continue;
            for (std::size_t i = 0; i < space.n; ++i) {
                digits[i] = (digits[i] + coeffs[b] * basis[b][i].residue()) % space.p;
            }
        }
        out.push_back(digits_to_state(digits, space.p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string phase_space_dot(const PhaseSpace& ps) {
    std::uint64_t p = ps.field.modulus();
    std::ostringstream out;
    out << "digraph phase_space {\n";
    for (std::uint64_t s = 0; s < ps.state_count; ++s) {
        out << "  s" << s << " [label=\"" << state_label(p, ps.dimension, s) << "\"];\n";
    }
    for (std::uint64_t s = 0; s < ps.state_count; ++s) {
        out << "  s" << s << " -> s" << ps.successor[s] << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace linsds
