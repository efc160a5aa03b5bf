#pragma once

#include <stdexcept>
#include <string>

namespace grslab {

enum class ErrorCode {
  domain = 1,        // argument outside an operator domain or function domain
  pole,              // Pochhammer pole reached in a terminating series
  magnitude,         // value not representable in double precision
  numeric,           // iterative solver failed to converge
  structure,         // incompatible representations, grids or bases
  resolution,        // discretization too coarse for the requested check
  grammar,           // malformed function expression
  not_j_orthonormal, // sign sequence requested on a non J-orthonormal family
  io,
  usage,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

} // namespace grslab
