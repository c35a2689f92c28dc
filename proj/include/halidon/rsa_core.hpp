#pragma once

/**
 * @file rsa_core.hpp
 * @brief Multi-prime RSA used to transport the secret root of unity.
 *
 * n = prod p_i^e_i with odd distinct primes, d = e^-1 mod phi(n). The scalar
 * round trip x -> x^e -> x^(ed) returns x for every unit x; for non-units it
 * only holds when n is squarefree (n = 9, x = 3 is a counterexample). The
 * protocols only ever encrypt units.
 *
 * Key files:
 *
 *     HALIDON-RSA PUBLIC v1        HALIDON-RSA PRIVATE v1
 *     n=<decimal>                  n=<decimal>
 *     e=<decimal>                  d=<decimal>
 *     m=<decimal>                  phi=<decimal>
 *                                  m=<decimal>
 *                                  factors=<p1>^<e1>,<p2>^<e2>,...
 */

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "halidon/core_arith.hpp"
#include "halidon/halidon_analysis.hpp"
#include "halidon/text_format.hpp"

namespace halidon {

template <ModularInteger Int = Natural>
struct RsaPublicKey {
  Int n;
  Int e;
  std::uint64_t m = 1;

  friend bool operator==(const RsaPublicKey&, const RsaPublicKey&) = default;
};

template <ModularInteger Int = Natural>
struct RsaPrivateKey {
  Int n;
  Int d;
  Int phi;
  Factorization<Int> factorization;
  std::uint64_t m = 1;

  friend bool operator==(const RsaPrivateKey&, const RsaPrivateKey&) = default;
};

template <ModularInteger Int = Natural>
struct KeyPair {
  RsaPublicKey<Int> pub;
  RsaPrivateKey<Int> priv;
};

/// Builds a key from chosen primes. Without `e`, the smallest e >= 3 coprime
/// to phi(n) is used; without `m`, the maximal index psi(n).
template <ModularInteger Int>
KeyPair<Int> keygen(std::span<const Int> primes, std::span<const unsigned> exponents,
                    std::optional<Int> e = std::nullopt, std::optional<std::uint64_t> m = std::nullopt) {
  if (primes.empty()) throw Error(Errc::invalid_argument, "at least one prime is required");
  if (primes.size() != exponents.size())
    throw Error(Errc::invalid_argument, "primes and exponents differ in length");

  std::vector<PrimePower<Int>> pairs;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const Int& p = primes[i];
    if (integer_traits<Int>::mod_u64(p, 2) == 0) throw Error(Errc::bad_prime, to_decimal(p) + " is not an odd prime");
    if (!is_probable_prime(p)) throw Error(Errc::bad_prime, to_decimal(p) + " is not prime");
    if (exponents[i] == 0) throw Error(Errc::invalid_argument, "exponents must be at least 1");
    for (const auto& seen : pairs)
      if (seen.prime == p) throw Error(Errc::bad_prime, to_decimal(p) + " is repeated");
    pairs.push_back({p, exponents[i]});
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.prime < b.prime; });
  Factorization<Int> f = Factorization<Int>::from_pairs(std::move(pairs));

  Int n = f.value();
  Int phi = euler_phi(f);
  Int psi = halidon_psi(f);

  std::uint64_t index;
  if (m) {
    if (*m == 0 || integer_traits<Int>::mod_u64(psi, *m) != 0)
      throw Error(Errc::index_not_supported, std::to_string(*m) + " does not divide psi(n) = " + to_decimal(psi));
    index = *m;
  } else {
    auto small = integer_traits<Int>::to_u64(psi);
    if (!small) throw Error(Errc::index_not_supported, "psi(n) does not fit in 64 bits; pass m explicitly");
    index = *small;
  }

  Int pub_exp;
  if (e) {
    pub_exp = *e;
    if (halidon::gcd(pub_exp, phi) != 1)
      throw Error(Errc::not_coprime, "e = " + to_decimal(pub_exp) + " shares a factor with phi(n)");
  } else {
    pub_exp = 3;
    while (halidon::gcd(pub_exp, phi) != 1) pub_exp += 1;
  }
  Int d = mod_inverse(Int(pub_exp % phi), phi);

  return {RsaPublicKey<Int>{n, pub_exp, index}, RsaPrivateKey<Int>{n, d, phi, f, index}};
}

template <ModularInteger Int>
Residue<Int> rsa_encrypt(const RsaPublicKey<Int>& pub, const Residue<Int>& x) {
  if (x.modulus() != pub.n) throw Error(Errc::modulus_mismatch, "plaintext is not a residue modulo n");
  return mod_pow(x, pub.e);
}

template <ModularInteger Int>
Residue<Int> rsa_decrypt(const RsaPrivateKey<Int>& priv, const Residue<Int>& c) {
  if (c.modulus() != priv.n) throw Error(Errc::modulus_mismatch, "ciphertext is not a residue modulo n");
  return mod_pow(c, priv.d);
}

// ---------------------------------------------------------------------------
// Key files
// ---------------------------------------------------------------------------

inline constexpr std::string_view kPublicKeyHeader = "HALIDON-RSA PUBLIC v1";
inline constexpr std::string_view kPrivateKeyHeader = "HALIDON-RSA PRIVATE v1";

template <ModularInteger Int>
void write_public_key(std::ostream& out, const RsaPublicKey<Int>& pub) {
  out << kPublicKeyHeader << '\n'
      << "n=" << to_decimal(pub.n) << '\n'
      << "e=" << to_decimal(pub.e) << '\n'
      << "m=" << pub.m << '\n';
}

template <ModularInteger Int>
void write_private_key(std::ostream& out, const RsaPrivateKey<Int>& priv) {
  out << kPrivateKeyHeader << '\n'
      << "n=" << to_decimal(priv.n) << '\n'
      << "d=" << to_decimal(priv.d) << '\n'
      << "phi=" << to_decimal(priv.phi) << '\n'
      << "m=" << priv.m << '\n'
      << "factors=" << priv.factorization.to_string() << '\n';
}

template <ModularInteger Int = Natural>
RsaPublicKey<Int> read_public_key(std::istream& in) {
  detail::LineReader reader(in);
  reader.expect_exact(kPublicKeyHeader);
  RsaPublicKey<Int> pub;
  pub.n = reader.natural_field<Int>("n");
  if (pub.n < 3) reader.fail("n must be at least 3");
  pub.e = reader.natural_field<Int>("e");
  pub.m = reader.u64_field("m");
  if (pub.m == 0) reader.fail("m must be positive");
  reader.expect_end();
  return pub;
}

namespace detail {

template <ModularInteger Int>
Factorization<Int> parse_factors(LineReader& reader, const std::string& text) {
  std::vector<PrimePower<Int>> pairs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(pos, end - pos);
    std::size_t caret = item.find('^');
    if (caret == std::string::npos) reader.fail("factor '" + item + "' is not of the form p^e");
    auto p = parse_decimal<Int>(item.substr(0, caret));
    auto e = parse_decimal<std::uint64_t>(item.substr(caret + 1));
    if (!p || !e || *e == 0 || *e > 0xffffffffULL) reader.fail("factor '" + item + "' is not of the form p^e");
    pairs.push_back({*p, static_cast<unsigned>(*e)});
    pos = end + 1;
  }
  try {
    return Factorization<Int>::from_pairs(std::move(pairs));
  } catch (const Error& err) {
    reader.fail(err.what());
  }
}

}  // namespace detail

template <ModularInteger Int = Natural>
RsaPrivateKey<Int> read_private_key(std::istream& in) {
  detail::LineReader reader(in);
  reader.expect_exact(kPrivateKeyHeader);
  Int n = reader.natural_field<Int>("n");
  if (n < 3) reader.fail("n must be at least 3");
  Int d = reader.natural_field<Int>("d");
  Int phi = reader.natural_field<Int>("phi");
  std::uint64_t m = reader.u64_field("m");
  if (m == 0) reader.fail("m must be positive");
  Factorization<Int> f = detail::parse_factors<Int>(reader, reader.field("factors"));
  if (f.value() != n) reader.fail("factors do not multiply to n");
  if (euler_phi(f) != phi) reader.fail("phi does not match the factorization");
  reader.expect_end();
  return RsaPrivateKey<Int>{n, d, phi, f, m};
}

}  // namespace halidon
