#ifndef CYCLECOUNT_ERRORS_HPP
#define CYCLECOUNT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cyclecount {

enum class errc {
  duplicate_edge,
  index_out_of_range,
  overflow_detected,
  too_large,
  unsupported_length,
  resource_limit,
  inconsistent_parameters,
  girth_too_small,
  non_divisible_trace,
  budget_exceeded,
  infeasible_spec,
  retries_exhausted,
  malformed_header,
  degree_mismatch,
  inconsistent_adjacency,
  malformed_line,
};

const char* errc_name(errc c) noexcept;

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw error(code, msg);
}

}  // namespace cyclecount

#endif
