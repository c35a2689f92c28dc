#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace halidon {

/// Failure categories raised by the library. The CLI maps these onto exit codes.
enum class Errc {
  invalid_argument,
  not_a_unit,
  modulus_mismatch,
  non_coprime_moduli,
  factorization_timeout,
  index_not_supported,
  not_a_divisor,
  length_mismatch,
  bad_prime,
  not_coprime,
  unsupported_symbol,
  code_out_of_range,
  alphabet_too_large,
  unknown_unit,
  ambiguous_unit,
  non_injective_table,
  invalid_omega,
  search_exhausted,
  malformed_file,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::not_a_unit: return "NotAUnit";
    case Errc::modulus_mismatch: return "ModulusMismatch";
    case Errc::non_coprime_moduli: return "NonCoprimeModuli";
    case Errc::factorization_timeout: return "FactorizationTimeout";
    case Errc::index_not_supported: return "IndexNotSupported";
    case Errc::not_a_divisor: return "NotADivisor";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::bad_prime: return "BadPrime";
    case Errc::not_coprime: return "NotCoprime";
    case Errc::unsupported_symbol: return "UnsupportedSymbol";
    case Errc::code_out_of_range: return "CodeOutOfRange";
    case Errc::alphabet_too_large: return "AlphabetTooLarge";
    case Errc::unknown_unit: return "UnknownUnit";
    case Errc::ambiguous_unit: return "AmbiguousUnit";
    case Errc::non_injective_table: return "NonInjectiveTable";
    case Errc::invalid_omega: return "InvalidOmega";
    case Errc::search_exhausted: return "SearchExhausted";
    case Errc::malformed_file: return "MalformedFile";
  }
  return "Unknown";
}

/// True for failures that come from the mathematics of the inputs (a non-unit,
/// a root that does not exist, a search that ran dry) rather than from
/// malformed input.
constexpr bool is_mathematical(Errc code) noexcept {
  switch (code) {
    case Errc::not_a_unit:
    case Errc::non_coprime_moduli:
    case Errc::factorization_timeout:
    case Errc::index_not_supported:
    case Errc::not_a_divisor:
    case Errc::not_coprime:
    case Errc::code_out_of_range:
    case Errc::alphabet_too_large:
    case Errc::unknown_unit:
    case Errc::ambiguous_unit:
    case Errc::invalid_omega:
    case Errc::search_exhausted:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

  Errc code() const noexcept { return code_; }
  /// Message without the error-name prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace halidon
