#pragma once

/**
 * @file core_arith.hpp
 * @brief Modular arithmetic and number-theory primitives.
 *
 * Every algorithm is a template over an unsigned integer type that has an
 * `integer_traits` specialisation. Two are provided:
 *
 *  - `Natural` (GMP `mpz_class`): arbitrary precision, used by the protocol
 *    layer and the CLI.
 *  - `std::uint64_t`: a fast path for exhaustive tests and small moduli.
 *    Products are taken in 128 bits, so any modulus below 2^64 is safe; the
 *    product of moduli handed to `crt_combine` must itself fit.
 *
 * Generic code here never binds gmpxx expressions with `auto`.
 */

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <charconv>
#include <concepts>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "halidon/error.hpp"

namespace halidon {

using Natural = mpz_class;

template <class T>
struct integer_traits;

namespace detail {

inline bool is_canonical_decimal(std::string_view text) {
  if (text.empty()) return false;
  if (!std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return false;
  return text.size() == 1 || text.front() != '0';
}

}  // namespace detail

template <>
struct integer_traits<std::uint64_t> {
  using signed_type = __int128;

  static std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
  }

  static std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
      if (exp & 1) result = mul_mod(result, base, m);
      base = mul_mod(base, base, m);
      exp >>= 1;
    }
    return result;
  }

  static std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }
  static std::uint64_t mod_u64(std::uint64_t a, std::uint64_t m) { return a % m; }
  static std::size_t bit_width(std::uint64_t v) { return static_cast<std::size_t>(std::bit_width(v)); }
  static std::uint64_t from_u64(std::uint64_t v) { return v; }
  static std::optional<std::uint64_t> to_u64(std::uint64_t v) { return v; }

  static signed_type to_signed(std::uint64_t v) { return static_cast<signed_type>(v); }
  static std::uint64_t from_signed_mod(signed_type s, std::uint64_t m) {
    signed_type r = s % static_cast<signed_type>(m);
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
  }

  static std::uint64_t random_bits(std::mt19937_64& rng, std::size_t bits) {
    if (bits == 0) return 0;
    std::uint64_t word = rng();
    return bits >= 64 ? word : word & ((std::uint64_t{1} << bits) - 1);
  }

  static std::string to_string(std::uint64_t v) { return std::to_string(v); }

  static std::optional<std::uint64_t> parse(std::string_view text) {
    if (!detail::is_canonical_decimal(text)) return std::nullopt;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
    return value;
  }
};

template <>
struct integer_traits<mpz_class> {
  using signed_type = mpz_class;
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "LP64 platform expected");

  static mpz_class mul_mod(const mpz_class& a, const mpz_class& b, const mpz_class& m) {
    mpz_class r = a * b;
    r %= m;
    return r;
  }

  static mpz_class pow_mod(const mpz_class& base, const mpz_class& exp, const mpz_class& m) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return r;
  }

  static mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }

  static std::uint64_t mod_u64(const mpz_class& a, std::uint64_t m) {
    return mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(m));
  }

  static std::size_t bit_width(const mpz_class& v) {
    return sgn(v) == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
  }

  static mpz_class from_u64(std::uint64_t v) { return mpz_class(static_cast<unsigned long>(v)); }

  static std::optional<std::uint64_t> to_u64(const mpz_class& v) {
    if (sgn(v) < 0 || !mpz_fits_ulong_p(v.get_mpz_t())) return std::nullopt;
    return static_cast<std::uint64_t>(v.get_ui());
  }

  static mpz_class to_signed(const mpz_class& v) { return v; }
  static mpz_class from_signed_mod(const mpz_class& s, const mpz_class& m) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), s.get_mpz_t(), m.get_mpz_t());
    return r;
  }

  static mpz_class random_bits(std::mt19937_64& rng, std::size_t bits) {
    if (bits == 0) return 0;
    std::vector<std::uint64_t> words((bits + 63) / 64);
    for (auto& w : words) w = rng();
    if (std::size_t extra = bits % 64; extra != 0)
      words.back() &= (std::uint64_t{1} << extra) - 1;
    mpz_class r;
    // least-significant word first
    mpz_import(r.get_mpz_t(), words.size(), -1, sizeof(std::uint64_t), 0, 0, words.data());
    return r;
  }

  static std::string to_string(const mpz_class& v) { return v.get_str(); }

  static std::optional<mpz_class> parse(std::string_view text) {
    if (!detail::is_canonical_decimal(text)) return std::nullopt;
    return mpz_class(std::string(text), 10);
  }
};

/// Integer types the algorithms accept.
template <class T>
concept ModularInteger = std::regular<T> && requires(const T& a, std::mt19937_64& rng) {
  typename integer_traits<T>::signed_type;
  { integer_traits<T>::mul_mod(a, a, a) } -> std::convertible_to<T>;
  { integer_traits<T>::pow_mod(a, a, a) } -> std::convertible_to<T>;
  { integer_traits<T>::random_bits(rng, std::size_t{}) } -> std::convertible_to<T>;
};

template <ModularInteger Int>
Int from_u64(std::uint64_t v) {
  return integer_traits<Int>::from_u64(v);
}

template <ModularInteger Int>
std::string to_decimal(const Int& v) {
  return integer_traits<Int>::to_string(v);
}

/// Parses a canonical decimal (digits only, no sign, no leading zeros).
template <ModularInteger Int>
std::optional<Int> parse_decimal(std::string_view text) {
  return integer_traits<Int>::parse(text);
}

template <ModularInteger Int>
Int gcd(const Int& a, const Int& b) {
  return integer_traits<Int>::gcd(a, b);
}

// ---------------------------------------------------------------------------
// Raw modular operations on representatives in [0, m).
// ---------------------------------------------------------------------------

template <ModularInteger Int>
Int mod_add(const Int& a, const Int& b, const Int& m) {
  Int gap = m - b;
  if (a >= gap) return Int(a - gap);
  return Int(a + b);
}

template <ModularInteger Int>
Int mod_sub(const Int& a, const Int& b, const Int& m) {
  if (a >= b) return Int(a - b);
  return Int(m - (b - a));
}

template <ModularInteger Int>
Int mod_mul(const Int& a, const Int& b, const Int& m) {
  return integer_traits<Int>::mul_mod(a, b, m);
}

template <ModularInteger Int>
Int mod_pow(const Int& base, const Int& exp, const Int& m) {
  return integer_traits<Int>::pow_mod(base, exp, m);
}

/// Extended Euclid: g = gcd(a, b) = s*a + t*b.
template <ModularInteger Int>
struct ExtGcd {
  using Signed = typename integer_traits<Int>::signed_type;
  Int g;
  Signed s;
  Signed t;
};

template <ModularInteger Int>
ExtGcd<Int> ext_gcd(const Int& a, const Int& b) {
  using Traits = integer_traits<Int>;
  using Signed = typename Traits::signed_type;
  if (a == 0 && b == 0) throw Error(Errc::invalid_argument, "ext_gcd(0, 0) is undefined");

  Signed old_r = Traits::to_signed(a), r = Traits::to_signed(b);
  Signed old_s = 1, s = 0;
  Signed old_t = 0, t = 1;
  while (r != 0) {
    Signed q = old_r / r;
    Signed tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  return {static_cast<Int>(old_r), old_s, old_t};
}

/// Inverse of `a` modulo `m`; throws NotAUnit when gcd(a, m) != 1.
template <ModularInteger Int>
Int mod_inverse(const Int& a, const Int& m) {
  if (m < 2) throw Error(Errc::invalid_argument, "modulus must be at least 2");
  Int reduced = a % m;
  ExtGcd<Int> eg = ext_gcd(reduced, m);
  if (eg.g != 1) {
    throw Error(Errc::not_a_unit,
                to_decimal(reduced) + " is not invertible modulo " + to_decimal(m) +
                    " (gcd " + to_decimal(eg.g) + ")");
  }
  return integer_traits<Int>::from_signed_mod(eg.s, m);
}

/// Uniform draw from [0, bound) by rejection on the bit length of `bound`.
/// Only std::mt19937_64 output is consumed, so sequences are reproducible
/// across standard libraries.
template <ModularInteger Int>
Int random_below(std::mt19937_64& rng, const Int& bound) {
  if (bound == 0) throw Error(Errc::invalid_argument, "random_below(0)");
  Int top = bound - 1;
  std::size_t bits = integer_traits<Int>::bit_width(top);
  for (;;) {
    Int candidate = integer_traits<Int>::random_bits(rng, bits);
    if (candidate < bound) return candidate;
  }
}

// ---------------------------------------------------------------------------
// Residue: a value that carries its modulus.
// ---------------------------------------------------------------------------

template <ModularInteger Int = Natural>
class Residue {
 public:
  /// Reduces `value` modulo `modulus`. The modulus must be at least 2.
  Residue(const Int& value, const Int& modulus) : modulus_(modulus) {
    if (modulus_ < 2) throw Error(Errc::invalid_argument, "modulus must be at least 2");
    value_ = value % modulus_;
  }

  const Int& value() const noexcept { return value_; }
  const Int& modulus() const noexcept { return modulus_; }

  friend bool operator==(const Residue&, const Residue&) = default;

  friend Residue operator+(const Residue& a, const Residue& b) {
    check_same(a, b);
    return Residue(mod_add(a.value_, b.value_, a.modulus_), a.modulus_, unchecked{});
  }
  friend Residue operator-(const Residue& a, const Residue& b) {
    check_same(a, b);
    return Residue(mod_sub(a.value_, b.value_, a.modulus_), a.modulus_, unchecked{});
  }
  friend Residue operator*(const Residue& a, const Residue& b) {
    check_same(a, b);
    return Residue(mod_mul(a.value_, b.value_, a.modulus_), a.modulus_, unchecked{});
  }

 private:
  struct unchecked {};
  Residue(Int value, Int modulus, unchecked) : value_(std::move(value)), modulus_(std::move(modulus)) {}

  static void check_same(const Residue& a, const Residue& b) {
    if (a.modulus_ != b.modulus_) {
      throw Error(Errc::modulus_mismatch,
                  "moduli " + to_decimal(a.modulus_) + " and " + to_decimal(b.modulus_));
    }
  }

  Int value_;
  Int modulus_;
};

template <ModularInteger Int>
Residue<Int> mod_pow(const Residue<Int>& base, const Int& exp) {
  return Residue<Int>(mod_pow(base.value(), exp, base.modulus()), base.modulus());
}

template <ModularInteger Int>
Residue<Int> mod_inverse(const Residue<Int>& a) {
  return Residue<Int>(mod_inverse(a.value(), a.modulus()), a.modulus());
}

// ---------------------------------------------------------------------------
// Primality
// ---------------------------------------------------------------------------

namespace detail {

inline constexpr std::uint64_t kMillerRabinBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

/// One Miller-Rabin witness round with n - 1 = d * 2^s, d odd.
template <ModularInteger Int>
bool passes_witness(const Int& n, const Int& d, unsigned s, const Int& a) {
  Int n_minus_1 = n - 1;
  Int x = mod_pow(a, d, n);
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = mod_mul(x, x, n);
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace detail

/// Miller-Rabin. Deterministic below 2^64 (bases 2..37); above, the same
/// fixed bases plus `rounds` bases drawn from a fixed-seed generator, for an
/// error probability of at most 4^-rounds.
template <ModularInteger Int>
bool is_probable_prime(const Int& n, unsigned rounds = 40) {
  if (n < 2) return false;
  for (std::uint64_t p : detail::kMillerRabinBases) {
    if (n == from_u64<Int>(p)) return true;
    if (integer_traits<Int>::mod_u64(n, p) == 0) return false;
  }

  Int d = n - 1;
  unsigned s = 0;
  while (integer_traits<Int>::mod_u64(d, 2) == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t base : detail::kMillerRabinBases) {
    if (!detail::passes_witness(n, d, s, from_u64<Int>(base))) return false;
  }
  if (integer_traits<Int>::to_u64(n)) return true;

  std::mt19937_64 rng(0x6a09e667f3bcc908ULL);
  Int span = n - 3;  // bases in [2, n - 2]
  for (unsigned i = 0; i < rounds; ++i) {
    Int a = random_below(rng, span);
    a += 2;
    if (!detail::passes_witness(n, d, s, a)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Factorization
// ---------------------------------------------------------------------------

template <ModularInteger Int>
struct PrimePower {
  Int prime;
  unsigned exponent = 1;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

template <ModularInteger Int>
class FactorizationBuilder;

/// Canonical factorization: primes strictly ascending, exponents >= 1.
template <ModularInteger Int = Natural>
class Factorization {
 public:
  /// Validates primality, ordering and exponents.
  static Factorization from_pairs(std::vector<PrimePower<Int>> pairs) {
    if (pairs.empty()) throw Error(Errc::invalid_argument, "factorization must have at least one prime");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (pairs[i].exponent == 0)
        throw Error(Errc::invalid_argument, "exponent of " + to_decimal(pairs[i].prime) + " is zero");
      if (!is_probable_prime(pairs[i].prime))
        throw Error(Errc::bad_prime, to_decimal(pairs[i].prime) + " is not prime");
      if (i > 0 && !(pairs[i - 1].prime < pairs[i].prime))
        throw Error(Errc::invalid_argument, "primes must be strictly ascending");
    }
    return Factorization(std::move(pairs));
  }

  const std::vector<PrimePower<Int>>& factors() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }

  Int value() const {
    Int n = 1;
    for (const auto& [p, e] : pairs_)
      for (unsigned i = 0; i < e; ++i) n *= p;
    return n;
  }

  bool is_even() const { return !pairs_.empty() && pairs_.front().prime == 2; }

  bool is_squarefree() const {
    return std::all_of(pairs_.begin(), pairs_.end(), [](const auto& pp) { return pp.exponent == 1; });
  }

  /// "p1^e1,p2^e2,..." as used by the private-key file.
  std::string to_string() const {
    std::string out;
    for (const auto& [p, e] : pairs_) {
      if (!out.empty()) out += ',';
      out += to_decimal(p) + '^' + std::to_string(e);
    }
    return out;
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  template <ModularInteger>
  friend class FactorizationBuilder;

  explicit Factorization(std::vector<PrimePower<Int>> pairs) : pairs_(std::move(pairs)) {}

  std::vector<PrimePower<Int>> pairs_;
};

/// Accumulates prime factors in any order and produces the canonical form.
template <ModularInteger Int>
class FactorizationBuilder {
 public:
  void add(const Int& prime, unsigned exponent = 1) { pairs_.push_back({prime, exponent}); }

  Factorization<Int> build() && {
    std::sort(pairs_.begin(), pairs_.end(), [](const auto& a, const auto& b) { return a.prime < b.prime; });
    std::vector<PrimePower<Int>> merged;
    for (auto& pp : pairs_) {
      if (!merged.empty() && merged.back().prime == pp.prime)
        merged.back().exponent += pp.exponent;
      else
        merged.push_back(std::move(pp));
    }
    return Factorization<Int>(std::move(merged));
  }

 private:
  std::vector<PrimePower<Int>> pairs_;
};

struct FactorOptions {
  /// Total Pollard-rho iterations allowed across one factorize() call.
  std::uint64_t rho_budget = 10'000'000;
  std::uint64_t trial_limit = 1'000'000;
};

namespace detail {

/// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd
/// composite `n`, consuming `budget`.
template <ModularInteger Int>
Int pollard_brent(const Int& n, std::mt19937_64& rng, std::uint64_t& budget) {
  constexpr std::uint64_t kBatch = 128;
  for (;;) {
    Int c = random_below(rng, Int(n - 1));
    c += 1;
    Int y = random_below(rng, n);
    Int x, ys;
    Int g = 1, q = 1;
    std::uint64_t r = 1;
    auto step = [&](const Int& v) { return mod_add(mod_mul(v, v, n), c, n); };

    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        std::uint64_t limit = std::min(kBatch, r - k);
        if (budget < limit) throw Error(Errc::factorization_timeout, "rho iteration budget exhausted");
        budget -= limit;
        for (std::uint64_t i = 0; i < limit; ++i) {
          y = step(y);
          Int diff = x > y ? Int(x - y) : Int(y - x);
          q = mod_mul(q, diff, n);
        }
        g = halidon::gcd(q, n);
        k += limit;
      }
      r *= 2;
    }
    if (g == n) {
      // batch overshot: replay one step at a time
      do {
        ys = step(ys);
        Int diff = x > ys ? Int(x - ys) : Int(ys - x);
        g = halidon::gcd(diff, n);
      } while (g == 1);
    }
    if (g != n) return g;
    // cycle closed on n itself; retry with a new constant
  }
}

template <ModularInteger Int>
void split_composite(const Int& n, FactorizationBuilder<Int>& out, std::mt19937_64& rng,
                     std::uint64_t& budget) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out.add(n);
    return;
  }
  Int f = pollard_brent(n, rng, budget);
  split_composite(f, out, rng, budget);
  split_composite(Int(n / f), out, rng, budget);
}

}  // namespace detail

/// Trial division up to `trial_limit`, then Pollard rho (Brent) with
/// Miller-Rabin on the cofactors. Throws FactorizationTimeout when the rho
/// budget runs out.
template <ModularInteger Int>
Factorization<Int> factorize(const Int& n, const FactorOptions& options = {}) {
  if (n < 2) throw Error(Errc::invalid_argument, "factorize requires n >= 2");
  FactorizationBuilder<Int> builder;
  Int rest = n;

  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (integer_traits<Int>::mod_u64(rest, p) == 0) {
      rest /= from_u64<Int>(p);
      ++e;
    }
    if (e > 0) builder.add(from_u64<Int>(p), e);
  };

  strip(2);
  for (std::uint64_t p = 3; p <= options.trial_limit; p += 2) {
    Int square = from_u64<Int>(p);
    square *= from_u64<Int>(p);
    if (square > rest) break;
    strip(p);
  }

  if (rest > 1) {
    std::mt19937_64 rng(0xbb67ae8584caa73bULL);
    std::uint64_t budget = options.rho_budget;
    detail::split_composite(rest, builder, rng, budget);
  }
  return std::move(builder).build();
}

/// Euler's totient from a factorization: prod p^(e-1) (p - 1).
template <ModularInteger Int>
Int euler_phi(const Factorization<Int>& f) {
  Int phi = 1;
  for (const auto& [p, e] : f.factors()) {
    phi *= Int(p - 1);
    for (unsigned i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

/// Chinese remaindering over pairwise coprime moduli.
template <ModularInteger Int>
Residue<Int> crt_combine(std::span<const Residue<Int>> parts) {
  if (parts.empty()) throw Error(Errc::invalid_argument, "crt_combine needs at least one residue");
  Int x = parts.front().value();
  Int modulus = parts.front().modulus();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const Int& m2 = parts[i].modulus();
    if (halidon::gcd(modulus, m2) != 1) {
      throw Error(Errc::non_coprime_moduli,
                  "moduli " + to_decimal(modulus) + " and " + to_decimal(m2) + " share a factor");
    }
    // x' = x + modulus * ((r2 - x) * modulus^-1 mod m2)
    Int inv = mod_inverse(Int(modulus % m2), m2);
    Int delta = mod_sub(parts[i].value(), Int(x % m2), m2);
    Int t = mod_mul(delta, inv, m2);
    x += modulus * t;
    modulus *= m2;
  }
  return Residue<Int>(x, modulus);
}

/// Multiplicative order of a unit, found by peeling prime factors off the
/// group exponent phi(n).
template <ModularInteger Int>
Int multiplicative_order(const Residue<Int>& a, const Factorization<Int>& modulus_factors,
                         const FactorOptions& options = {}) {
  const Int& n = a.modulus();
  if (halidon::gcd(a.value(), n) != 1)
    throw Error(Errc::not_a_unit, to_decimal(a.value()) + " is not a unit modulo " + to_decimal(n));

  // phi(n) = prod p^(e-1) (p-1); factor it from the pieces.
  FactorizationBuilder<Int> phi_builder;
  for (const auto& [p, e] : modulus_factors.factors()) {
    if (e > 1) phi_builder.add(p, e - 1);
    if (p > 2) {
      auto part = factorize(Int(p - 1), options);
      for (const auto& pp : part.factors()) phi_builder.add(pp.prime, pp.exponent);
    }
  }
  Int order = euler_phi(modulus_factors);
  if (order == 1) return order;
  Factorization<Int> phi_factors = std::move(phi_builder).build();
  for (const auto& [q, e] : phi_factors.factors()) {
    for (unsigned i = 0; i < e; ++i) {
      Int candidate = order / q;
      if (mod_pow(a.value(), candidate, n) != 1) break;
      order = candidate;
    }
  }
  return order;
}

template <ModularInteger Int>
Int multiplicative_order(const Residue<Int>& a, const FactorOptions& options = {}) {
  return multiplicative_order(a, factorize(a.modulus(), options), options);
}

}  // namespace halidon
