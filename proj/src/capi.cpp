#include "shorttoric.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "shorttoric/dual_simplicial.hpp"
#include "shorttoric/json_io.hpp"
#include "shorttoric/toric.hpp"
#include "shorttoric/verify.hpp"

using namespace shorttoric;

struct st_poset {
  Poset poset;
};

namespace {

thread_local std::string g_last_error;

st_status status_of(errc code) {
  switch (code) {
    case errc::invalid_argument: return ST_ERR_INVALID_ARGUMENT;
    case errc::parse_error: return ST_ERR_PARSE;
    case errc::cycle_detected: return ST_ERR_CYCLE_DETECTED;
    case errc::multiple_minima: return ST_ERR_MULTIPLE_MINIMA;
    case errc::rank_mismatch: return ST_ERR_RANK_MISMATCH;
    case errc::parameter_out_of_range: return ST_ERR_PARAMETER_OUT_OF_RANGE;
    case errc::not_graded: return ST_ERR_NOT_GRADED;
    case errc::not_comparable: return ST_ERR_NOT_COMPARABLE;
    case errc::no_minimum: return ST_ERR_NO_MINIMUM;
    case errc::eval_at_zero_with_negative_exponents:
      return ST_ERR_EVAL_AT_ZERO_WITH_NEGATIVE_EXPONENTS;
    case errc::negative_exponent_present: return ST_ERR_NEGATIVE_EXPONENT_PRESENT;
    case errc::not_mult_symmetric: return ST_ERR_NOT_MULT_SYMMETRIC;
    case errc::not_add_symmetric: return ST_ERR_NOT_ADD_SYMMETRIC;
    case errc::kind_mismatch: return ST_ERR_KIND_MISMATCH;
    case errc::alphabet_mismatch: return ST_ERR_ALPHABET_MISMATCH;
    case errc::odd_e_word_present: return ST_ERR_ODD_E_WORD_PRESENT;
    case errc::not_eulerian: return ST_ERR_NOT_EULERIAN;
    case errc::not_lower_eulerian: return ST_ERR_NOT_LOWER_EULERIAN;
    case errc::unexpected_parity: return ST_ERR_UNEXPECTED_PARITY;
    case errc::not_simplicial: return ST_ERR_NOT_SIMPLICIAL;
    case errc::not_dual_simplicial: return ST_ERR_NOT_DUAL_SIMPLICIAL;
    case errc::decomposition_mismatch: return ST_ERR_DECOMPOSITION_MISMATCH;
    case errc::asymmetric_h_vector: return ST_ERR_ASYMMETRIC_H_VECTOR;
    case errc::index_out_of_range: return ST_ERR_INDEX_OUT_OF_RANGE;
    case errc::consecutive_descents: return ST_ERR_CONSECUTIVE_DESCENTS;
    case errc::unknown_family: return ST_ERR_UNKNOWN_FAMILY;
    case errc::size_limit_exceeded: return ST_ERR_SIZE_LIMIT_EXCEEDED;
  }
  return ST_ERR_INTERNAL;
}

char* copy_text(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
st_status guarded(F&& body) {
  try {
    return body();
  } catch (const error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return ST_ERR_PARSE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ST_ERR_INTERNAL;
  }
}

json compute_invariant(const Poset& p, const std::string& what) {
  if (what == "flag-f") return flag_to_json(flag_f(p));
  if (what == "flag-h") return flag_to_json(h_from_f(flag_f(p)));
  if (what == "flag-L") return flag_to_json(L_from_f(flag_f(p)));
  if (what == "cd-index") return nc_to_json(cd_index(p));
  if (what == "toric-f") return laurent_to_json(stanley_f_g(p).f);
  if (what == "toric-g") return laurent_to_json(stanley_f_g(p).g);
  if (what == "toric-h") {
    json h = json::array();
    for (const auto& v : toric_h_vector(stanley_f_g(p))) {
      if (mpz_fits_slong_p(v.get_mpz_t()))
        h.push_back(v.get_si());
      else
        h.push_back(v.get_str());
    }
    return h;
  }
  if (what == "st") return laurent_to_json(st_recurrence(p).poly);
  fail(errc::invalid_argument, "unknown invariant " + what);
}

}  // namespace

const char* st_status_name(st_status status) {
  switch (status) {
    case ST_OK: return "OK";
    case ST_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case ST_ERR_PARSE: return "ParseError";
    case ST_ERR_CYCLE_DETECTED: return "CycleDetected";
    case ST_ERR_MULTIPLE_MINIMA: return "MultipleMinima";
    case ST_ERR_RANK_MISMATCH: return "RankMismatch";
    case ST_ERR_PARAMETER_OUT_OF_RANGE: return "ParameterOutOfRange";
    case ST_ERR_NOT_GRADED: return "NotGraded";
    case ST_ERR_NOT_COMPARABLE: return "NotComparable";
    case ST_ERR_NO_MINIMUM: return "NoMinimum";
    case ST_ERR_NO_RANK: return "NoRank";
    case ST_ERR_EVAL_AT_ZERO_WITH_NEGATIVE_EXPONENTS: return "EvalAtZeroWithNegativeExponents";
    case ST_ERR_NEGATIVE_EXPONENT_PRESENT: return "NegativeExponentPresent";
    case ST_ERR_NOT_MULT_SYMMETRIC: return "NotMultSymmetric";
    case ST_ERR_NOT_ADD_SYMMETRIC: return "NotAddSymmetric";
    case ST_ERR_KIND_MISMATCH: return "KindMismatch";
    case ST_ERR_ALPHABET_MISMATCH: return "AlphabetMismatch";
    case ST_ERR_ODD_E_WORD_PRESENT: return "OddEWordPresent";
    case ST_ERR_NOT_EULERIAN: return "NotEulerian";
    case ST_ERR_NOT_LOWER_EULERIAN: return "NotLowerEulerian";
    case ST_ERR_UNEXPECTED_PARITY: return "UnexpectedParity";
    case ST_ERR_NOT_SIMPLICIAL: return "NotSimplicial";
    case ST_ERR_NOT_DUAL_SIMPLICIAL: return "NotDualSimplicial";
    case ST_ERR_DECOMPOSITION_MISMATCH: return "DecompositionMismatch";
    case ST_ERR_ASYMMETRIC_H_VECTOR: return "AsymmetricHVector";
    case ST_ERR_INDEX_OUT_OF_RANGE: return "IndexOutOfRange";
    case ST_ERR_CONSECUTIVE_DESCENTS: return "ConsecutiveDescents";
    case ST_ERR_UNKNOWN_FAMILY: return "UnknownFamily";
    case ST_ERR_SIZE_LIMIT_EXCEEDED: return "SizeLimitExceeded";
    case ST_ERR_INTERNAL: return "InternalError";
  }
  return "UnknownStatus";
}

const char* st_last_error_message(void) { return g_last_error.c_str(); }

void st_text_free(char* text) { std::free(text); }

st_status st_poset_parse_json(const char* json_text, st_poset** out) {
  if (!json_text || !out) return ST_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    json j = json::parse(json_text);
    *out = new st_poset{poset_from_json(j)};
    return ST_OK;
  });
}

st_status st_poset_generate(const char* family, long param, st_poset** out) {
  if (!family || !out) return ST_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    std::string name = family;
    Poset p = [&] {
      if (name == "boolean") return boolean_algebra(static_cast<int>(param));
      if (name == "cube") return cube_lattice(static_cast<int>(param));
      if (name == "crosspolytope") return cross_polytope_lattice(static_cast<int>(param));
      if (name == "polygon") return polygon_lattice(static_cast<int>(param));
      if (name == "chain") return chain(static_cast<int>(param));
      fail(errc::unknown_family, "unknown family " + name);
    }();
    *out = new st_poset{std::move(p)};
    return ST_OK;
  });
}

st_status st_poset_dual(const st_poset* p, st_poset** out) {
  if (!p || !out) return ST_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = new st_poset{dual(p->poset)};
    return ST_OK;
  });
}

st_status st_poset_canonical_json(const st_poset* p, char** out_text) {
  if (!p || !out_text) return ST_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out_text = copy_text(poset_to_json(p->poset).dump(2));
    return *out_text ? ST_OK : ST_ERR_INTERNAL;
  });
}

long st_poset_size(const st_poset* p) { return p ? p->poset.size() : -1; }

long st_poset_rank(const st_poset* p) { return p ? p->poset.max_rank() : -1; }

void st_poset_free(st_poset* p) { delete p; }

st_status st_poset_compute(const st_poset* p, const char* what, char** out_json) {
  if (!p || !what || !out_json) return ST_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out_json = copy_text(compute_invariant(p->poset, what).dump());
    return *out_json ? ST_OK : ST_ERR_INTERNAL;
  });
}

st_status st_run_suite(const char* suite, long max_n, char** out_json, int* out_all_pass) {
  if (!suite || !out_json) return ST_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    std::string name = suite;
    json j;
    bool pass = true;
    if (name == "all") {
      j = json::array();
      for (const auto& s : suite_names()) {
        SuiteReport r = run_suite(s, static_cast<int>(max_n));
        pass = pass && r.all_pass();
        j.push_back(suite_report_to_json(r));
      }
    } else {
      SuiteReport r = run_suite(name, static_cast<int>(max_n));
      pass = r.all_pass();
      j = suite_report_to_json(r);
    }
    if (out_all_pass) *out_all_pass = pass ? 1 : 0;
    *out_json = copy_text(j.dump(2));
    return *out_json ? ST_OK : ST_ERR_INTERNAL;
  });
}

st_status st_full_report(long max_n, char** out_json, int* out_all_pass) {
  if (!out_json) return ST_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    json j = full_report(static_cast<int>(max_n));
    if (out_all_pass) *out_all_pass = j.at("passed").get<bool>() ? 1 : 0;
    *out_json = copy_text(j.dump(2));
    return *out_json ? ST_OK : ST_ERR_INTERNAL;
  });
}
