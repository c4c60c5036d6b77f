#ifndef NPSVM_ERRORS_HPP
#define NPSVM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace npsvm {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid user-supplied configuration (penalty parameters, solver settings, ...).
struct config_error : error {
  using error::error;
};

// Malformed input data; carries the 1-based line number when known.
struct parse_error : error {
  std::size_t line = 0;
  parse_error(std::size_t line_no, const std::string& what)
      : error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
  explicit parse_error(const std::string& what) : error(what) {}
};

// Numerical failure inside the solver (factorization breakdown, non-finite iterates).
struct solver_error : error {
  using error::error;
};

}  // namespace npsvm

#endif
