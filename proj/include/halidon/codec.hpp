#pragma once

/**
 * @file codec.hpp
 * @brief The 40-symbol alphabet, padding into blocks, and unit-assignment
 *        tables for RSA-HGR.
 *
 * Codes: '0'-'9' -> 0-9, 'A'-'Z' -> 10-35, blank -> 36, ':' -> 37,
 * '.' -> 38, '-' -> 39. Lowercase letters are folded to uppercase.
 *
 * Table file:
 *
 *     HGR-TABLE v1
 *     n=<decimal>
 *     0=<unit>
 *     ...
 *     Z=<unit>
 *     SPACE=<unit>
 *     COLON=<unit>
 *     PERIOD=<unit>
 *     HYPHEN=<unit>
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "halidon/core_arith.hpp"
#include "halidon/text_format.hpp"

namespace halidon {

using Code = std::uint32_t;

inline constexpr std::size_t kAlphabetSize = 40;
inline constexpr std::string_view kAlphabet = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ :.-";
inline constexpr Code kBlankCode = 36;

inline std::optional<Code> code_of(char symbol) {
  if (symbol >= 'a' && symbol <= 'z') symbol = static_cast<char>(symbol - 'a' + 'A');
  auto pos = kAlphabet.find(symbol);
  if (pos == std::string_view::npos) return std::nullopt;
  return static_cast<Code>(pos);
}

inline char symbol_of(Code code) {
  if (code >= kAlphabetSize) throw Error(Errc::code_out_of_range, std::to_string(code) + " is not in 0..39");
  return kAlphabet[code];
}

/// Key names used by the table file, in code order.
inline std::string table_key(Code code) {
  switch (code) {
    case 36: return "SPACE";
    case 37: return "COLON";
    case 38: return "PERIOD";
    case 39: return "HYPHEN";
    default: return std::string(1, symbol_of(code));
  }
}

namespace detail {

inline std::string describe_char(char c) {
  auto u = static_cast<unsigned char>(c);
  if (u >= 0x20 && u < 0x7f) return "'" + std::string(1, c) + "'";
  return "byte 0x" + std::string(1, "0123456789abcdef"[u >> 4]) + "0123456789abcdef"[u & 15];
}

}  // namespace detail

inline std::vector<Code> text_to_codes(std::string_view text) {
  std::vector<Code> codes;
  codes.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto code = code_of(text[i]);
    if (!code) {
      throw Error(Errc::unsupported_symbol,
                  detail::describe_char(text[i]) + " at position " + std::to_string(i) + " is not in the alphabet");
    }
    codes.push_back(*code);
  }
  return codes;
}

inline std::string codes_to_text(std::span<const Code> codes) {
  std::string text;
  text.reserve(codes.size());
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (codes[i] >= kAlphabetSize) {
      throw Error(Errc::code_out_of_range,
                  "code " + std::to_string(codes[i]) + " at position " + std::to_string(i) + " is not in 0..39");
    }
    text.push_back(kAlphabet[codes[i]]);
  }
  return text;
}

/// Splits into blocks of m, padding the last with blanks. Empty input gives a
/// single blank block.
inline std::vector<std::vector<Code>> pad_and_block(std::span<const Code> codes, std::size_t m) {
  if (m == 0) throw Error(Errc::invalid_argument, "block length must be positive");
  std::vector<std::vector<Code>> blocks;
  std::size_t count = codes.empty() ? 1 : (codes.size() + m - 1) / m;
  for (std::size_t b = 0; b < count; ++b) {
    std::vector<Code> block(m, kBlankCode);
    std::size_t start = b * m;
    std::size_t stop = std::min(codes.size(), start + m);
    std::copy(codes.begin() + static_cast<std::ptrdiff_t>(start), codes.begin() + static_cast<std::ptrdiff_t>(stop),
              block.begin());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

inline std::string strip_trailing_blanks(std::string text) {
  while (!text.empty() && text.back() == ' ') text.pop_back();
  return text;
}

/// Symbol -> unit of Z_n. Tables produced by gen_unit_table or read from a
/// file are injective; `allow_duplicates` exists for published tables that
/// reuse a unit, which encode fine but cannot always be decoded.
template <ModularInteger Int = Natural>
class UnitAssignment {
 public:
  using Units = std::array<Int, kAlphabetSize>;

  static UnitAssignment from_units(Int n, Units units) {
    UnitAssignment table(std::move(n), std::move(units));
    if (auto dup = table.first_duplicate()) {
      throw Error(Errc::non_injective_table, "symbols " + table_key(dup->first) + " and " + table_key(dup->second) +
                                                 " share unit " + to_decimal(table.units_[dup->first]));
    }
    return table;
  }

  static UnitAssignment allow_duplicates(Int n, Units units) { return UnitAssignment(std::move(n), std::move(units)); }

  const Int& modulus() const noexcept { return n_; }
  const Units& units() const noexcept { return units_; }
  const Int& unit_for(Code code) const {
    symbol_of(code);
    return units_[code];
  }
  bool injective() const { return !first_duplicate(); }

  /// Codes assigned to `unit`, ascending (empty when absent).
  std::vector<Code> codes_for(const Int& unit) const {
    std::vector<Code> codes;
    auto [lo, hi] = reverse_.equal_range(unit);
    for (auto it = lo; it != hi; ++it) codes.push_back(it->second);
    std::sort(codes.begin(), codes.end());
    return codes;
  }

  friend bool operator==(const UnitAssignment& a, const UnitAssignment& b) {
    return a.n_ == b.n_ && a.units_ == b.units_;
  }

 private:
  UnitAssignment(Int n, Units units) : n_(std::move(n)), units_(std::move(units)) {
    if (n_ < 2) throw Error(Errc::invalid_argument, "modulus must be at least 2");
    for (Code c = 0; c < kAlphabetSize; ++c) {
      if (!(units_[c] < n_) || halidon::gcd(units_[c], n_) != 1) {
        throw Error(Errc::not_a_unit,
                    "value " + to_decimal(units_[c]) + " for " + table_key(c) + " is not a unit modulo " + to_decimal(n_));
      }
      reverse_.emplace(units_[c], c);
    }
  }

  std::optional<std::pair<Code, Code>> first_duplicate() const {
    for (Code c = 0; c < kAlphabetSize; ++c) {
      auto codes = codes_for(units_[c]);
      if (codes.size() > 1) return std::pair{codes[0], codes[1]};
    }
    return std::nullopt;
  }

  Int n_;
  Units units_;
  std::multimap<Int, Code> reverse_;
};

namespace detail {

/// phi(n) >= 40 without factoring: phi(n) >= sqrt(n / 2), so only small n
/// need counting.
template <ModularInteger Int>
bool has_at_least_alphabet_units(const Int& n) {
  if (n >= from_u64<Int>(3200)) return true;
  std::uint64_t small = *integer_traits<Int>::to_u64(n);
  std::size_t units = 0;
  for (std::uint64_t x = 1; x < small; ++x)
    if (std::gcd(x, small) == 1) ++units;
  return units >= kAlphabetSize;
}

}  // namespace detail

/// Draws 40 distinct units uniformly, assigning them in symbol order.
template <ModularInteger Int>
UnitAssignment<Int> gen_unit_table(const Int& n, std::uint64_t seed) {
  if (n < 2) throw Error(Errc::invalid_argument, "modulus must be at least 2");
  if (!detail::has_at_least_alphabet_units(n))
    throw Error(Errc::alphabet_too_large, "Z_" + to_decimal(n) + " has fewer than 40 units");
  std::mt19937_64 rng(seed);
  typename UnitAssignment<Int>::Units units;
  std::size_t filled = 0;
  while (filled < kAlphabetSize) {
    Int candidate = random_below(rng, n);
    if (halidon::gcd(candidate, n) != 1) continue;
    if (std::find(units.begin(), units.begin() + static_cast<std::ptrdiff_t>(filled), candidate) !=
        units.begin() + static_cast<std::ptrdiff_t>(filled))
      continue;
    units[filled++] = candidate;
  }
  return UnitAssignment<Int>::from_units(n, std::move(units));
}

template <ModularInteger Int>
std::vector<Int> apply_table(std::span<const Code> codes, const UnitAssignment<Int>& table) {
  std::vector<Int> lambdas;
  lambdas.reserve(codes.size());
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (codes[i] >= kAlphabetSize) {
      throw Error(Errc::unsupported_symbol,
                  "code " + std::to_string(codes[i]) + " at position " + std::to_string(i) + " has no table entry");
    }
    lambdas.push_back(table.unit_for(codes[i]));
  }
  return lambdas;
}

template <ModularInteger Int>
std::vector<Int> apply_table(std::string_view text, const UnitAssignment<Int>& table) {
  auto codes = text_to_codes(text);
  return apply_table<Int>(std::span<const Code>(codes), table);
}

/// Inverse of apply_table. Throws UnknownUnit for a value outside the table
/// and AmbiguousUnit for a value shared by several symbols.
template <ModularInteger Int>
std::string unapply_table(std::span<const Int> lambdas, const UnitAssignment<Int>& table) {
  std::string text;
  text.reserve(lambdas.size());
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    auto codes = table.codes_for(lambdas[i]);
    if (codes.empty()) {
      throw Error(Errc::unknown_unit,
                  "value " + to_decimal(lambdas[i]) + " at position " + std::to_string(i) + " is not in the table");
    }
    if (codes.size() > 1) {
      throw Error(Errc::ambiguous_unit, "value " + to_decimal(lambdas[i]) + " at position " + std::to_string(i) +
                                            " is assigned to both " + table_key(codes[0]) + " and " +
                                            table_key(codes[1]));
    }
    text.push_back(kAlphabet[codes.front()]);
  }
  return text;
}

// ---------------------------------------------------------------------------
// Table file
// ---------------------------------------------------------------------------

inline constexpr std::string_view kTableHeader = "HGR-TABLE v1";

template <ModularInteger Int>
void write_unit_table(std::ostream& out, const UnitAssignment<Int>& table) {
  out << kTableHeader << '\n' << "n=" << to_decimal(table.modulus()) << '\n';
  for (Code c = 0; c < kAlphabetSize; ++c) out << table_key(c) << '=' << to_decimal(table.units()[c]) << '\n';
}

template <ModularInteger Int = Natural>
UnitAssignment<Int> read_unit_table(std::istream& in) {
  detail::LineReader reader(in);
  reader.expect_exact(kTableHeader);
  Int n = reader.natural_field<Int>("n");
  if (n < 2) reader.fail("n must be at least 2");
  typename UnitAssignment<Int>::Units units;
  for (Code c = 0; c < kAlphabetSize; ++c) units[c] = reader.natural_field<Int>(table_key(c));
  reader.expect_end();
  try {
    return UnitAssignment<Int>::from_units(n, std::move(units));
  } catch (const Error& err) {
    throw Error(Errc::malformed_file, err.what());
  }
}

}  // namespace halidon
