#include "linsds/errors.hpp"

namespace linsds {

const char* errc_name(errc code) {
    switch (code) {
        case errc::division_by_zero: return "DivisionByZero";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::singular: return "Singular";
        case errc::not_a_permutation: return "NotAPermutation";
        case errc::not_nilpotent: return "NotNilpotent";
        case errc::not_invertible: return "NotInvertible";
        case errc::too_small: return "TooSmall";
        case errc::bad_multiplicity: return "BadMultiplicity";
        case errc::poset_mismatch: return "PosetMismatch";
        case errc::bad_diagonal: return "BadDiagonal";
        case errc::bad_cut: return "BadCut";
        case errc::invalid_cut: return "InvalidCut";
        case errc::invalid_partition: return "InvalidPartition";
        case errc::state_space_too_large: return "StateSpaceTooLarge";
        case errc::rational_field_unsupported: return "RationalFieldUnsupported";
        case errc::invalid_field: return "InvalidField";
        case errc::invalid_graph: return "InvalidGraph";
        case errc::invalid_poset: return "InvalidPoset";
        case errc::invalid_schedule: return "InvalidSchedule";
        case errc::support_violation: return "SupportViolation";
        case errc::invalid_input: return "InvalidInput";
        case errc::verification_mismatch: return "VerificationMismatch";
    }
    return "Unknown";
}

} // namespace linsds
