#ifndef FINTOP_ERROR_HPP
#define FINTOP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fintop {

enum class Errc {
  missing_empty_or_full,
  not_closed_under_union,
  not_closed_under_intersection,
  not_reflexive,
  not_transitive,
  bound_exceeded,
  size_budget_exceeded,
  not_parallel,
  not_composable,
  not_an_embedding,
  not_in_subcategory,
  continuity_violation,
  syntax_error,
  unknown_space,
  unknown_map,
  unknown_context,
  unknown_suite,
  invalid_argument,
  internal_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace fintop

#endif
