#pragma once

#include <stdexcept>
#include <string>

namespace linsds {

// Every failure mode the library can signal. CLI and bindings map these to
// structured reports; code() is stable, what() is human-readable.
enum class errc {
    division_by_zero,
    field_mismatch,
    dimension_mismatch,
    singular,
    not_a_permutation,
    not_nilpotent,
    not_invertible,
    too_small,
    bad_multiplicity,
    poset_mismatch,
    bad_diagonal,
    bad_cut,
    invalid_cut,
    invalid_partition,
    state_space_too_large,
    rational_field_unsupported,
    invalid_field,
    invalid_graph,
    invalid_poset,
    invalid_schedule,
    support_violation,
    invalid_input,
    verification_mismatch,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message, std::string pointer = {})
        : std::runtime_error(message), code_(code), pointer_(std::move(pointer)) {}

    errc code() const { return code_; }
    const char* code_name() const { return errc_name(code_); }

    // JSON pointer to the offending input field, when the error came from
    // parsing/validating external input. Empty otherwise.
    const std::string& pointer() const { return pointer_; }

private:
    errc code_;
    std::string pointer_;
};

} // namespace linsds
