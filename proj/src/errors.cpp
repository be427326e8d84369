#include "riordan/errors.hpp"

namespace riordan {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::division_by_zero: return "DivisionByZero";
        case errc::context_mismatch: return "ContextMismatch";
        case errc::zero_scalar: return "ZeroScalar";
        case errc::not_a_unit: return "NotAUnit";
        case errc::inner_not_positive_order: return "InnerNotPositiveOrder";
        case errc::not_invertible: return "NotInvertible";
        case errc::not_unit_normalized: return "NotUnitNormalized";
        case errc::not_positive_order: return "NotPositiveOrder";
        case errc::rows_exceed_precision: return "RowsExceedPrecision";
        case errc::not_composable: return "NotComposable";
        case errc::bad_residue: return "BadResidue";
        case errc::not_a_root_of_unity: return "NotARootOfUnity";
        case errc::not_finite_order: return "NotFiniteOrder";
        case errc::spec_period_mismatch: return "SpecPeriodMismatch";
        case errc::theta_leading_zero: return "ThetaLeadingZero";
        case errc::substitution_not_positive_order: return "SubstitutionNotPositiveOrder";
        case errc::arity_mismatch: return "ArityMismatch";
        case errc::not_bi_invertible: return "NotBiInvertible";
        case errc::bad_leading_scalar: return "BadLeadingScalar";
        case errc::invalid_pair: return "InvalidPair";
        case errc::syntax_error: return "SyntaxError";
        case errc::domain_error: return "DomainError";
    }
    return "UnknownError";
}

} // namespace riordan
