#ifndef MATCHMONOID_ERRORS_HPP
#define MATCHMONOID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace matchmonoid {

// Every recoverable failure carries one of these codes. The CLI maps them to
// exit codes; the library never exits.
enum class Errc {
  cycle_detected,
  no_minimum,
  no_maximum,
  not_graded,
  bad_parameter,
  not_comparable,
  empty_subset,
  not_atoms,
  empty_factor_list,
  cap_exceeded,
  poset_mismatch,
  not_in_or_k,
  not_idempotent,
  not_special,
  too_small,
  too_large,
  not_eulerian,
  not_in_image,
  closure_budget_exceeded,
  unknown_claim,
  parse_error,
  io_error,
  timeout,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace matchmonoid

#endif
