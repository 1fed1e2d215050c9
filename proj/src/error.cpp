#include "shorttoric/error.hpp"

namespace shorttoric {

const char* errc_name(errc code) {
  switch (code) {
    case errc::invalid_argument: return "InvalidArgument";
    case errc::parse_error: return "ParseError";
    case errc::cycle_detected: return "CycleDetected";
    case errc::multiple_minima: return "MultipleMinima";
    case errc::rank_mismatch: return "RankMismatch";
    case errc::parameter_out_of_range: return "ParameterOutOfRange";
    case errc::not_graded: return "NotGraded";
    case errc::not_comparable: return "NotComparable";
    case errc::no_minimum: return "NoMinimum";
    case errc::eval_at_zero_with_negative_exponents: return "EvalAtZeroWithNegativeExponents";
    case errc::negative_exponent_present: return "NegativeExponentPresent";
    case errc::not_mult_symmetric: return "NotMultSymmetric";
    case errc::not_add_symmetric: return "NotAddSymmetric";
    case errc::kind_mismatch: return "KindMismatch";
    case errc::alphabet_mismatch: return "AlphabetMismatch";
    case errc::odd_e_word_present: return "OddEWordPresent";
    case errc::not_eulerian: return "NotEulerian";
    case errc::not_lower_eulerian: return "NotLowerEulerian";
    case errc::unexpected_parity: return "UnexpectedParity";
    case errc::not_simplicial: return "NotSimplicial";
    case errc::not_dual_simplicial: return "NotDualSimplicial";
    case errc::decomposition_mismatch: return "DecompositionMismatch";
    case errc::asymmetric_h_vector: return "AsymmetricHVector";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::consecutive_descents: return "ConsecutiveDescents";
    case errc::unknown_family: return "UnknownFamily";
    case errc::size_limit_exceeded: return "SizeLimitExceeded";
  }
  return "UnknownError";
}

}  // namespace shorttoric
