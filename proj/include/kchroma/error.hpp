#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kchroma {

enum class Errc {
  invalid_argument,
  not_prime,
  degree_out_of_range,
  not_a_subfield_degree,
  duplicate_element,
  set_too_large,
  not_disjoint,
  too_large,
  not_regular,
  no_prime_in_interval,
  arithmetic_mismatch,
  subfield_too_small,
  not_a_clique,
};

std::string_view to_string(Errc code) noexcept;

/// Library-wide exception. Every precondition failure surfaces as an Error
/// whose code() identifies which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace kchroma
