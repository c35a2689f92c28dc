#pragma once

/**
 * @file halidon_analysis.hpp
 * @brief Primitive m-th roots of unity in Z_n and the halidon structure of Z_n.
 *
 * Z_n carries a primitive m-th root of unity w (with m invertible) exactly
 * when m divides p - 1 for every prime p | n, n odd; the largest such m is
 * psi(n) = gcd(p_i - 1). Roots are built per prime power and glued together
 * with the CRT. A root w is recognised without factoring n: w^m = 1, m is a
 * unit, and w^(m/q) - 1 is a unit for every prime q | m.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "halidon/core_arith.hpp"

namespace halidon {

/// Distinct prime divisors of m, ascending.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t m) {
  std::vector<std::uint64_t> primes;
  if (m < 2) return primes;
  auto f = factorize<std::uint64_t>(m);
  for (const auto& pp : f.factors()) primes.push_back(pp.prime);
  return primes;
}

inline std::uint64_t totient(std::uint64_t m) {
  if (m < 2) return 1;
  return euler_phi(factorize<std::uint64_t>(m));
}

/// Criterion for "w is a primitive m-th root of unity in Z_n and m is a unit",
/// with the prime divisors of m computed once.
template <ModularInteger Int = Natural>
class PrimitiveRootTest {
 public:
  PrimitiveRootTest(Int n, std::uint64_t m) : n_(std::move(n)), m_(m), m_as_int_(from_u64<Int>(m)) {
    if (n_ < 2) throw Error(Errc::invalid_argument, "modulus must be at least 2");
    if (m_ == 0) throw Error(Errc::invalid_argument, "index m must be positive");
    m_is_unit_ = halidon::gcd(Int(m_as_int_ % n_), n_) == 1;
    for (std::uint64_t q : prime_divisors(m_)) cofactors_.push_back(from_u64<Int>(m_ / q));
  }

  bool operator()(const Int& w) const {
    if (!(w < n_)) throw Error(Errc::invalid_argument, "candidate root must be reduced modulo n");
    if (!m_is_unit_) return false;
    if (mod_pow(w, m_as_int_, n_) != 1) return false;
    // w^d - 1 is a unit for every proper divisor d of m iff it is for the
    // maximal ones m/q, since w^d - 1 divides w^(kd) - 1.
    for (const Int& d : cofactors_) {
      Int shifted = mod_sub(mod_pow(w, d, n_), Int(1), n_);
      if (halidon::gcd(shifted, n_) != 1) return false;
    }
    return true;
  }

  const Int& modulus() const noexcept { return n_; }
  std::uint64_t index() const noexcept { return m_; }

 private:
  Int n_;
  std::uint64_t m_;
  Int m_as_int_;
  bool m_is_unit_ = false;
  std::vector<Int> cofactors_;
};

template <ModularInteger Int>
bool is_primitive_root_of_unity(const Int& n, std::uint64_t m, const Int& w) {
  return PrimitiveRootTest<Int>(n, m)(w);
}

/// psi(n): 1 for even n, otherwise gcd(p_i - 1) over the prime divisors.
template <ModularInteger Int>
Int halidon_psi(const Factorization<Int>& f) {
  if (f.is_even()) return Int(1);
  Int g = 0;
  for (const auto& pp : f.factors()) g = halidon::gcd(g, Int(pp.prime - 1));
  return g;
}

/// Z_n together with a certified primitive m-th root of unity.
template <ModularInteger Int = Natural>
class HalidonRing {
 public:
  /// Throws InvalidOmega when omega fails the criterion. The factorization is
  /// optional: a party holding only the public n can still certify omega.
  static HalidonRing certify(const Int& n, std::uint64_t m, const Int& omega,
                             std::optional<Factorization<Int>> factorization = std::nullopt) {
    if (factorization && factorization->value() != n)
      throw Error(Errc::invalid_argument, "factorization does not match n");
    if (!is_primitive_root_of_unity(n, m, omega)) {
      throw Error(Errc::invalid_omega, to_decimal(omega) + " is not a primitive " + std::to_string(m) +
                                           "-th root of unity modulo " + to_decimal(n));
    }
    return HalidonRing(n, m, omega, std::move(factorization));
  }

  const Int& n() const noexcept { return n_; }
  std::uint64_t m() const noexcept { return m_; }
  const Int& omega() const noexcept { return omega_; }
  const Int& m_inverse() const noexcept { return m_inverse_; }
  const Int& omega_inverse() const noexcept { return omega_inverse_; }
  const std::optional<Factorization<Int>>& factorization() const noexcept { return factorization_; }

  /// omega^0 .. omega^(m-1).
  std::vector<Int> omega_powers() const {
    std::vector<Int> powers;
    powers.reserve(m_);
    Int p = 1;
    for (std::uint64_t i = 0; i < m_; ++i) {
      powers.push_back(p);
      p = mod_mul(p, omega_, n_);
    }
    return powers;
  }

  friend bool operator==(const HalidonRing& a, const HalidonRing& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.omega_ == b.omega_;
  }

 private:
  HalidonRing(Int n, std::uint64_t m, Int omega, std::optional<Factorization<Int>> factorization)
      : n_(std::move(n)), m_(m), omega_(std::move(omega)), factorization_(std::move(factorization)) {
    m_inverse_ = mod_inverse(Int(from_u64<Int>(m_) % n_), n_);
    omega_inverse_ = mod_inverse(omega_, n_);
  }

  Int n_;
  std::uint64_t m_;
  Int omega_;
  Int m_inverse_;
  Int omega_inverse_;
  std::optional<Factorization<Int>> factorization_;
};

class RootStrategy {
 public:
  static RootStrategy deterministic() { return RootStrategy(false, 0); }
  static RootStrategy random(std::uint64_t seed) { return RootStrategy(true, seed); }

  bool is_random() const noexcept { return random_; }
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  RootStrategy(bool random, std::uint64_t seed) : random_(random), seed_(seed) {}
  bool random_;
  std::uint64_t seed_;
};

template <ModularInteger Int>
struct RootSearchReport {
  Int n;
  Int m_max;
  std::uint64_t m = 1;
  std::vector<Int> roots;  ///< ascending
  bool exhaustive = false;
  std::optional<Int> count_expected;
};

template <ModularInteger Int>
struct MaxIndex {
  Int m_max;
  Residue<Int> witness;
};

/// w^(p^(k-1)) mod p^k: carries a root of order m | p - 1 from Z_p to Z_{p^k}.
template <ModularInteger Int>
Residue<Int> lift_prime_power_root(const Int& p, unsigned k, const Int& w_mod_p) {
  if (k == 0) throw Error(Errc::invalid_argument, "prime power exponent must be positive");
  Int modulus = 1, exponent = 1;
  for (unsigned i = 0; i < k; ++i) modulus *= p;
  for (unsigned i = 1; i < k; ++i) exponent *= p;
  return Residue<Int>(mod_pow(Int(w_mod_p % modulus), exponent, modulus), modulus);
}

namespace detail {

/// Above this many roots the product set is not materialised.
inline constexpr std::uint64_t kRootEnumerationCap = 1'000'000;

inline std::uint64_t saturating_power(std::uint64_t base, std::size_t exponent) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

template <ModularInteger Int>
void require_supported_index(const Factorization<Int>& f, std::uint64_t m) {
  if (m == 0) throw Error(Errc::invalid_argument, "index m must be positive");
  if (m == 1) return;
  if (f.is_even())
    throw Error(Errc::index_not_supported, "even n only admits the trivial index m = 1");
  Int psi = halidon_psi(f);
  if (integer_traits<Int>::mod_u64(psi, m) != 0) {
    throw Error(Errc::index_not_supported,
                std::to_string(m) + " does not divide psi(n) = " + to_decimal(psi));
  }
}

/// Smallest h = x^((p-1)/m), x = 2, 3, ..., whose order modulo p is exactly m.
template <ModularInteger Int>
Int element_of_order(const Int& p, std::uint64_t m, const std::vector<std::uint64_t>& m_primes) {
  if (m == 1) return Int(1);
  Int exponent = Int(p - 1) / from_u64<Int>(m);
  for (Int x = 2; x < p; ++x) {
    Int h = mod_pow(x, exponent, p);
    bool full = std::all_of(m_primes.begin(), m_primes.end(), [&](std::uint64_t q) {
      return mod_pow(h, from_u64<Int>(m / q), p) != 1;
    });
    if (full) return h;
  }
  throw Error(Errc::index_not_supported, "no element of order " + std::to_string(m) + " modulo " + to_decimal(p));
}

/// Exponents j in [1, m] with gcd(j, m) = 1.
inline std::vector<std::uint64_t> unit_exponents(std::uint64_t m) {
  std::vector<std::uint64_t> js;
  for (std::uint64_t j = 1; j <= m; ++j)
    if (std::gcd(j, m) == 1) js.push_back(j);
  return js;
}

/// All primitive m-th roots modulo one prime power, ascending.
template <ModularInteger Int>
std::vector<Int> prime_power_roots(const PrimePower<Int>& pp, std::uint64_t m,
                                   const std::vector<std::uint64_t>& m_primes) {
  Int h = element_of_order(pp.prime, m, m_primes);
  std::vector<Int> roots;
  for (std::uint64_t j : unit_exponents(m)) {
    Int r = mod_pow(h, from_u64<Int>(j), pp.prime);
    roots.push_back(lift_prime_power_root(pp.prime, pp.exponent, r).value());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Weights c_i with x = sum r_i c_i (mod n) reconstructing x from x mod q_i.
template <ModularInteger Int>
std::vector<Int> crt_weights(const Factorization<Int>& f, std::vector<Int>& prime_power_moduli) {
  Int n = f.value();
  std::vector<Int> weights;
  prime_power_moduli.clear();
  for (const auto& [p, e] : f.factors()) {
    Int q = 1;
    for (unsigned i = 0; i < e; ++i) q *= p;
    prime_power_moduli.push_back(q);
    Int cofactor = n / q;
    if (q == n) {
      weights.push_back(Int(1));
    } else {
      Int inv = mod_inverse(Int(cofactor % q), q);
      weights.push_back(Int(cofactor * inv % n));
    }
  }
  return weights;
}

template <ModularInteger Int>
std::vector<Int> all_roots(const Factorization<Int>& f, std::uint64_t m) {
  Int n = f.value();
  auto m_primes = prime_divisors(m);
  std::vector<Int> moduli;
  std::vector<Int> weights = crt_weights(f, moduli);
  std::vector<Int> combined{Int(0)};
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::vector<Int> local = prime_power_roots(f.factors()[i], m, m_primes);
    std::vector<Int> next;
    next.reserve(combined.size() * local.size());
    for (const Int& partial : combined)
      for (const Int& r : local) next.push_back(mod_add(partial, mod_mul(r, weights[i], n), n));
    combined = std::move(next);
  }
  std::sort(combined.begin(), combined.end());
  return combined;
}

/// Scans below this density (roots per residue) are refused.
inline constexpr double kMinScanDensityLog2 = -24.0;

/// log2 of the fraction of residues modulo n that are primitive m-th roots.
template <ModularInteger Int>
double root_density_log2(const Factorization<Int>& f, std::uint64_t m) {
  double phi_m = std::log2(static_cast<double>(totient(m)));
  double total = 0;
  for (const auto& pp : f.factors()) {
    double bits = static_cast<double>(integer_traits<Int>::bit_width(pp.prime));
    total += phi_m - bits * pp.exponent;
  }
  return total;
}

/// Ascending scan with the root criterion, stopping after `limit` hits.
template <ModularInteger Int>
std::vector<Int> scan_roots(const Int& n, std::uint64_t m, std::size_t limit) {
  PrimitiveRootTest<Int> test(n, m);
  std::vector<Int> found;
  for (Int w = 1; w < n && found.size() < limit; ++w)
    if (test(w)) found.push_back(w);
  return found;
}

}  // namespace detail

/// phi(m)^k when every p_i = m t_i + 1 with the t_i pairwise coprime;
/// nullopt when those hypotheses do not hold.
template <ModularInteger Int>
std::optional<Int> expected_root_count(const Factorization<Int>& f, std::uint64_t m) {
  if (m == 0) return std::nullopt;
  std::vector<Int> ts;
  for (const auto& pp : f.factors()) {
    Int pm1 = pp.prime - 1;
    if (integer_traits<Int>::mod_u64(pm1, m) != 0) return std::nullopt;
    ts.push_back(Int(pm1 / from_u64<Int>(m)));
  }
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = i + 1; j < ts.size(); ++j)
      if (halidon::gcd(ts[i], ts[j]) != 1) return std::nullopt;
  Int count = 1;
  Int phi_m = from_u64<Int>(totient(m));
  for (std::size_t i = 0; i < ts.size(); ++i) count *= phi_m;
  return count;
}

/// Number of primitive m-th roots modulo n: phi(m)^k for a supported index
/// (each prime power contributes the phi(m) elements of order m), else 0.
template <ModularInteger Int>
Int primitive_root_count(const Factorization<Int>& f, std::uint64_t m) {
  if (m == 0) throw Error(Errc::invalid_argument, "index m must be positive");
  if (m == 1) return Int(1);
  if (f.is_even() || integer_traits<Int>::mod_u64(halidon_psi(f), m) != 0) return Int(0);
  Int count = 1;
  for (std::size_t i = 0; i < f.size(); ++i) count *= from_u64<Int>(totient(m));
  return count;
}

/// A primitive m-th root modulo n. Deterministic strategy yields the smallest
/// root; random strategy is uniform over all roots for a given seed.
template <ModularInteger Int>
Residue<Int> find_primitive_root(const Factorization<Int>& f, std::uint64_t m, const RootStrategy& strategy) {
  detail::require_supported_index(f, m);
  Int n = f.value();
  if (m == 1) return Residue<Int>(Int(1), n);

  if (strategy.is_random()) {
    std::mt19937_64 rng(strategy.seed());
    auto m_primes = prime_divisors(m);
    std::vector<Residue<Int>> parts;
    for (const auto& pp : f.factors()) {
      Int h = detail::element_of_order(pp.prime, m, m_primes);
      std::uint64_t j;
      do {
        j = 1 + random_below<std::uint64_t>(rng, m);
      } while (std::gcd(j, m) != 1);
      Int r = mod_pow(h, from_u64<Int>(j), pp.prime);
      parts.push_back(lift_prime_power_root(pp.prime, pp.exponent, r));
    }
    return crt_combine<Int>(parts);
  }

  std::uint64_t total = detail::saturating_power(totient(m), f.size());
  if (total <= detail::kRootEnumerationCap) return Residue<Int>(detail::all_roots(f, m).front(), n);
  if (detail::root_density_log2(f, m) >= detail::kMinScanDensityLog2)
    return Residue<Int>(detail::scan_roots(n, m, 1).front(), n);
  // Too many roots to list and too sparse to scan: the smallest one is out of
  // reach, so fall back to the canonical per-prime roots glued by the CRT.
  auto m_primes = prime_divisors(m);
  std::vector<Residue<Int>> parts;
  for (const auto& pp : f.factors())
    parts.push_back(lift_prime_power_root(pp.prime, pp.exponent, detail::element_of_order(pp.prime, m, m_primes)));
  return crt_combine<Int>(parts);
}

/// Lists primitive m-th roots modulo n in ascending order, up to `limit`.
template <ModularInteger Int>
RootSearchReport<Int> enumerate_primitive_roots(const Factorization<Int>& f, std::uint64_t m,
                                                std::optional<std::size_t> limit = std::nullopt) {
  if (m == 0) throw Error(Errc::invalid_argument, "index m must be positive");
  RootSearchReport<Int> report;
  report.n = f.value();
  report.m_max = halidon_psi(f);
  report.m = m;
  report.count_expected = expected_root_count(f, m);

  bool supported = m == 1 || (!f.is_even() && integer_traits<Int>::mod_u64(report.m_max, m) == 0);
  if (!supported) {
    report.exhaustive = true;
    return report;
  }

  std::uint64_t total = detail::saturating_power(totient(m), f.size());
  if (total <= detail::kRootEnumerationCap) {
    report.roots = m == 1 ? std::vector<Int>{Int(1)} : detail::all_roots(f, m);
    if (limit && report.roots.size() > *limit) report.roots.resize(*limit);
    report.exhaustive = report.roots.size() == total;
    return report;
  }
  if (!limit) {
    throw Error(Errc::search_exhausted,
                "root set has more than " + std::to_string(detail::kRootEnumerationCap) + " elements; pass a limit");
  }
  if (detail::root_density_log2(f, m) < detail::kMinScanDensityLog2)
    throw Error(Errc::search_exhausted, "roots are too sparse for an ascending scan");
  report.roots = detail::scan_roots(report.n, m, *limit);
  report.exhaustive = false;
  return report;
}

template <ModularInteger Int>
RootSearchReport<Int> enumerate_primitive_roots(const Int& n, std::uint64_t m,
                                                std::optional<std::size_t> limit = std::nullopt,
                                                const FactorOptions& options = {}) {
  return enumerate_primitive_roots(factorize(n, options), m, limit);
}

/// The same ring viewed with index k | m: root omega^(m/k).
template <ModularInteger Int>
HalidonRing<Int> divisor_index_root(const HalidonRing<Int>& ring, std::uint64_t k) {
  if (k < 2 || ring.m() % k != 0) {
    throw Error(Errc::not_a_divisor, std::to_string(k) + " is not a divisor > 1 of " + std::to_string(ring.m()));
  }
  Int omega = mod_pow(ring.omega(), from_u64<Int>(ring.m() / k), ring.n());
  return HalidonRing<Int>::certify(ring.n(), k, omega, ring.factorization());
}

/// (psi(n), smallest primitive psi(n)-th root); (1, 1) for even n.
template <ModularInteger Int>
MaxIndex<Int> max_index_and_witness(const Factorization<Int>& f) {
  Int psi = halidon_psi(f);
  auto small = integer_traits<Int>::to_u64(psi);
  if (!small) throw Error(Errc::index_not_supported, "psi(n) does not fit in 64 bits");
  return {psi, find_primitive_root(f, *small, RootStrategy::deterministic())};
}

template <ModularInteger Int>
MaxIndex<Int> max_index_and_witness(const Int& n, const FactorOptions& options = {}) {
  return max_index_and_witness(factorize(n, options));
}

}  // namespace halidon
