#pragma once

#include <stdexcept>
#include <string>

namespace evclust {

enum class Errc {
  schema,            // malformed input document
  mass,              // masses do not sum to one, or are negative
  unknown_atom,      // label not declared in the frame
  total_conflict,    // Dempster normalization impossible (k = 1)
  no_feasible_r,     // prior puts no mass on any realisable cluster count
  domain,            // conflict-variation formula outside its domain
  too_large,         // guard rail on an exponential computation
  invalid_argument,
  io,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace evclust
