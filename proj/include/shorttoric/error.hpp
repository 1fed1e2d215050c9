#ifndef SHORTTORIC_ERROR_HPP
#define SHORTTORIC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace shorttoric {

enum class errc {
  invalid_argument,
  parse_error,
  cycle_detected,
  multiple_minima,
  rank_mismatch,
  parameter_out_of_range,
  not_graded,
  not_comparable,
  no_minimum,
  eval_at_zero_with_negative_exponents,
  negative_exponent_present,
  not_mult_symmetric,
  not_add_symmetric,
  kind_mismatch,
  alphabet_mismatch,
  odd_e_word_present,
  not_eulerian,
  not_lower_eulerian,
  unexpected_parity,
  not_simplicial,
  not_dual_simplicial,
  decomposition_mismatch,
  asymmetric_h_vector,
  index_out_of_range,
  consecutive_descents,
  unknown_family,
  size_limit_exceeded,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace shorttoric

#endif
