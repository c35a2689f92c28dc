#pragma once

/**
 * @file protocol.hpp
 * @brief Two-stage sessions: RSA carries a secret root of unity w, then the
 *        message blocks are encrypted with it.
 *
 * RSA-DFT sends the DFT of each block of symbol codes. RSA-HGR maps symbols
 * to units through a table, reads the block as a lambda spectrum and sends the
 * group-ring coefficients that produce it.
 *
 * Ciphertext file (LF line endings):
 *
 *     RSA-DFT v1          (or RSA-HGR v1)
 *     n=<decimal>
 *     m=<decimal>
 *     c=<decimal>
 *     block=<r_1> <r_2> ... <r_m>
 *     ...
 */

#include <cstdint>
#include <istream>
#include <ostream>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "halidon/codec.hpp"
#include "halidon/core_arith.hpp"
#include "halidon/dft.hpp"
#include "halidon/group_ring.hpp"
#include "halidon/halidon_analysis.hpp"
#include "halidon/rsa_core.hpp"
#include "halidon/text_format.hpp"

namespace halidon {

enum class Scheme { rsa_dft, rsa_hgr };

constexpr std::string_view scheme_name(Scheme s) { return s == Scheme::rsa_dft ? "RSA-DFT" : "RSA-HGR"; }

template <ModularInteger Int, Scheme S>
struct Ciphertext {
  static constexpr Scheme scheme = S;

  Int n;
  std::uint64_t m = 1;
  Int c;                             ///< RSA encryption of w
  std::vector<std::vector<Int>> blocks;  ///< spectra (DFT) or coefficients (HGR)

  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

template <ModularInteger Int = Natural>
using CiphertextDFT = Ciphertext<Int, Scheme::rsa_dft>;
template <ModularInteger Int = Natural>
using CiphertextHGR = Ciphertext<Int, Scheme::rsa_hgr>;

template <ModularInteger Int>
struct OmegaChoice {
  Residue<Int> omega;
  Int c;
};

inline constexpr std::uint64_t kDefaultOmegaBudget = 1'000'000;

/// Samples residues until one is a primitive m-th root of unity. Needs only
/// the public key: the criterion does not use the factorization of n.
template <ModularInteger Int>
OmegaChoice<Int> choose_omega(const RsaPublicKey<Int>& pub, std::uint64_t seed,
                              std::uint64_t budget = kDefaultOmegaBudget) {
  if (pub.m < 2) throw Error(Errc::index_not_supported, "the key's index m must be at least 2");
  PrimitiveRootTest<Int> test(pub.n, pub.m);
  std::mt19937_64 rng(seed);
  for (std::uint64_t attempt = 0; attempt < budget; ++attempt) {
    Int candidate = random_below(rng, pub.n);
    if (!test(candidate)) continue;
    Residue<Int> omega(candidate, pub.n);
    return {omega, rsa_encrypt(pub, omega).value()};
  }
  throw Error(Errc::search_exhausted, "no primitive " + std::to_string(pub.m) + "-th root of unity found in " +
                                          std::to_string(budget) + " samples");
}

template <ModularInteger Int>
Residue<Int> recover_omega(const RsaPrivateKey<Int>& priv, const Int& c) {
  if (!(c < priv.n)) throw Error(Errc::invalid_argument, "c must be reduced modulo n");
  Residue<Int> omega = rsa_decrypt(priv, Residue<Int>(c, priv.n));
  if (!is_primitive_root_of_unity(priv.n, priv.m, omega.value())) {
    throw Error(Errc::invalid_omega, "c decrypts to " + to_decimal(omega.value()) + ", which is not a primitive " +
                                         std::to_string(priv.m) + "-th root of unity");
  }
  return omega;
}

namespace detail {

template <ModularInteger Int>
HalidonRing<Int> session_ring(const Int& n, std::uint64_t m, const Residue<Int>& omega,
                              std::optional<Factorization<Int>> f = std::nullopt) {
  if (omega.modulus() != n) throw Error(Errc::modulus_mismatch, "w is not a residue modulo n");
  return HalidonRing<Int>::certify(n, m, omega.value(), std::move(f));
}

template <ModularInteger Int>
std::vector<Int> codes_as_residues(const std::vector<Code>& codes) {
  std::vector<Int> out;
  out.reserve(codes.size());
  for (Code c : codes) out.push_back(from_u64<Int>(c));
  return out;
}

template <ModularInteger Int, Scheme S>
HalidonRing<Int> decryption_ring(const RsaPrivateKey<Int>& priv, const Ciphertext<Int, S>& ct) {
  if (ct.n != priv.n) throw Error(Errc::modulus_mismatch, "ciphertext modulus differs from the key's n");
  if (ct.m != priv.m) throw Error(Errc::length_mismatch, "ciphertext block length differs from the key's m");
  Residue<Int> omega = recover_omega(priv, ct.c);
  return HalidonRing<Int>::certify(priv.n, priv.m, omega.value(), priv.factorization);
}

inline std::string finish_text(std::string text, bool keep_padding) {
  return keep_padding ? text : strip_trailing_blanks(std::move(text));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// RSA-DFT
// ---------------------------------------------------------------------------

template <ModularInteger Int>
CiphertextDFT<Int> dft_encrypt_message(const RsaPublicKey<Int>& pub, const Residue<Int>& omega,
                                       std::string_view text) {
  auto ring = detail::session_ring(pub.n, pub.m, omega);
  auto codes = text_to_codes(text);
  CiphertextDFT<Int> ct{pub.n, pub.m, rsa_encrypt(pub, omega).value(), {}};
  for (const auto& block : pad_and_block(codes, pub.m)) {
    ResidueVector<Int> x(pub.n, detail::codes_as_residues<Int>(block));
    ct.blocks.push_back(dft_forward(ring, x).values());
  }
  return ct;
}

/// Inverse transform of every block; a value outside 0..39 means the key or
/// the ciphertext is wrong and aborts with its block and position.
template <ModularInteger Int>
std::string dft_decrypt_message(const RsaPrivateKey<Int>& priv, const CiphertextDFT<Int>& ct,
                                bool keep_padding = false) {
  auto ring = detail::decryption_ring(priv, ct);
  const Int limit = from_u64<Int>(kAlphabetSize);
  std::string text;
  for (std::size_t b = 0; b < ct.blocks.size(); ++b) {
    auto x = dft_inverse(ring, ResidueVector<Int>(ct.n, ct.blocks[b]));
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!(x[i] < limit)) {
        throw Error(Errc::code_out_of_range, "block " + std::to_string(b + 1) + ", position " +
                                                 std::to_string(i + 1) + ": decrypted value " + to_decimal(x[i]) +
                                                 " is not a symbol code (wrong key?)");
      }
      text.push_back(kAlphabet[*integer_traits<Int>::to_u64(x[i])]);
    }
  }
  return detail::finish_text(std::move(text), keep_padding);
}

// ---------------------------------------------------------------------------
// RSA-HGR
// ---------------------------------------------------------------------------

template <ModularInteger Int>
CiphertextHGR<Int> hgr_encrypt_message(const RsaPublicKey<Int>& pub, const Residue<Int>& omega,
                                       const UnitAssignment<Int>& table, std::string_view text) {
  if (table.modulus() != pub.n) throw Error(Errc::modulus_mismatch, "table modulus differs from the key's n");
  auto ring = detail::session_ring(pub.n, pub.m, omega);
  auto codes = text_to_codes(text);
  CiphertextHGR<Int> ct{pub.n, pub.m, rsa_encrypt(pub, omega).value(), {}};
  for (const auto& block : pad_and_block(codes, pub.m)) {
    LambdaVector<Int> lambdas(pub.n, apply_table<Int>(std::span<const Code>(block), table));
    ct.blocks.push_back(coeffs_of_lambda(lambdas, ring).coeffs());
  }
  return ct;
}

/// Lambda spectrum of every ciphertext block, before the table lookup.
template <ModularInteger Int>
std::vector<LambdaVector<Int>> hgr_decrypt_lambdas(const RsaPrivateKey<Int>& priv, const CiphertextHGR<Int>& ct) {
  auto ring = detail::decryption_ring(priv, ct);
  std::vector<LambdaVector<Int>> out;
  out.reserve(ct.blocks.size());
  for (const auto& block : ct.blocks) out.push_back(lambda_of(GroupRingElement<Int>(ring, block)));
  return out;
}

template <ModularInteger Int>
std::string hgr_decrypt_message(const RsaPrivateKey<Int>& priv, const UnitAssignment<Int>& table,
                                const CiphertextHGR<Int>& ct, bool keep_padding = false) {
  if (table.modulus() != priv.n) throw Error(Errc::modulus_mismatch, "table modulus differs from the key's n");
  auto spectra = hgr_decrypt_lambdas(priv, ct);
  std::string text;
  for (std::size_t b = 0; b < spectra.size(); ++b) {
    try {
      text += unapply_table<Int>(std::span<const Int>(spectra[b].values()), table);
    } catch (const Error& err) {
      throw Error(err.code(), "block " + std::to_string(b + 1) + ": " + err.detail());
    }
  }
  return detail::finish_text(std::move(text), keep_padding);
}

// ---------------------------------------------------------------------------
// Ciphertext files
// ---------------------------------------------------------------------------

template <Scheme S>
std::string ciphertext_header() {
  return std::string(scheme_name(S)) + " v1";
}

template <ModularInteger Int, Scheme S>
void write_ciphertext(std::ostream& out, const Ciphertext<Int, S>& ct) {
  out << ciphertext_header<S>() << '\n'
      << "n=" << to_decimal(ct.n) << '\n'
      << "m=" << ct.m << '\n'
      << "c=" << to_decimal(ct.c) << '\n';
  for (const auto& block : ct.blocks) out << "block=" << detail::join_decimal(block) << '\n';
}

template <ModularInteger Int, Scheme S>
Ciphertext<Int, S> read_ciphertext(std::istream& in) {
  detail::LineReader reader(in);
  const std::string expected = ciphertext_header<S>();
  std::string header = reader.require_line(expected);
  if (header != expected) {
    const std::string prefix = std::string(scheme_name(S)) + " v";
    if (header.compare(0, prefix.size(), prefix) == 0)
      reader.fail("unsupported version '" + header + "', expected '" + expected + "'");
    reader.fail("expected '" + expected + "', found '" + header + "'");
  }

  Ciphertext<Int, S> ct;
  ct.n = reader.natural_field<Int>("n");
  if (ct.n < 3) reader.fail("n must be at least 3");
  ct.m = reader.u64_field("m");
  if (ct.m == 0) reader.fail("m must be positive");
  ct.c = reader.natural_field<Int>("c");
  if (!(ct.c < ct.n)) reader.fail("c must be smaller than n");

  while (auto line = reader.next()) {
    const std::string_view prefix = "block=";
    if (line->compare(0, prefix.size(), prefix) != 0) reader.fail("expected 'block=...', found '" + *line + "'");
    auto values = detail::parse_decimal_list<Int>(std::string_view(*line).substr(prefix.size()));
    if (!values) reader.fail("block is not a list of decimals separated by single spaces");
    if (values->size() != ct.m) {
      reader.fail("block has " + std::to_string(values->size()) + " entries, expected " + std::to_string(ct.m));
    }
    for (const Int& v : *values)
      if (!(v < ct.n)) reader.fail("entry " + to_decimal(v) + " is not reduced modulo n");
    ct.blocks.push_back(std::move(*values));
  }
  if (ct.blocks.empty()) reader.fail("ciphertext has no blocks");
  return ct;
}

template <ModularInteger Int = Natural>
CiphertextDFT<Int> read_dft_ciphertext(std::istream& in) {
  return read_ciphertext<Int, Scheme::rsa_dft>(in);
}

template <ModularInteger Int = Natural>
CiphertextHGR<Int> read_hgr_ciphertext(std::istream& in) {
  return read_ciphertext<Int, Scheme::rsa_hgr>(in);
}

}  // namespace halidon
