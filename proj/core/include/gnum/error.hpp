#pragma once

#include <stdexcept>
#include <string>

namespace gnum {

enum class Errc {
  spacing_mismatch,
  invalid_prime_measure,
  not_normalized,
  non_invertible,
  domain,
  unsupported,
  budget_exceeded,
  divergence_domain,
  invalid_spec,
  validation,
  unknown_name,
  io,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gnum
