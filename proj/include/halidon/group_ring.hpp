#pragma once

/**
 * @file group_ring.hpp
 * @brief The group ring Z_n[C_m] over a halidon ring, seen through its
 *        lambda spectrum.
 *
 * An element u = sum alpha_i g^(i-1) (i = 1..m) has spectrum
 *
 *     lambda_r = sum_i alpha_{m-i+2} w^((i-1)(r-1)),    r = 1..m,
 *
 * with alpha_{m+1} read as alpha_1. Synthesis runs the other way:
 *
 *     alpha_r = m^-1 sum_j lambda_j w^((j-1)(r-1)).
 *
 * The spectrum is multiplicative, so u is a unit (an idempotent) exactly
 * when every lambda_r is. Storage below is 0-based: coeffs()[i] = alpha_{i+1}.
 */

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "halidon/dft.hpp"

namespace halidon {

struct lambda_vector_tag {};
template <ModularInteger Int = Natural>
using LambdaVector = TaggedResidues<Int, lambda_vector_tag>;

struct coefficient_tag {};

template <ModularInteger Int = Natural>
class GroupRingElement {
 public:
  using Coefficients = TaggedResidues<Int, coefficient_tag>;

  GroupRingElement(HalidonRing<Int> ring, std::vector<Int> coeffs)
      : ring_(std::move(ring)), coeffs_(ring_.n(), std::move(coeffs)) {
    if (coeffs_.size() != ring_.m()) {
      throw Error(Errc::length_mismatch, "group ring element needs " + std::to_string(ring_.m()) +
                                             " coefficients, got " + std::to_string(coeffs_.size()));
    }
  }

  static GroupRingElement zero(const HalidonRing<Int>& ring) {
    return GroupRingElement(ring, std::vector<Int>(ring.m(), Int(0)));
  }

  static GroupRingElement identity(const HalidonRing<Int>& ring) { return generator_power(ring, 0); }

  /// g^k for the distinguished generator g.
  static GroupRingElement generator_power(const HalidonRing<Int>& ring, std::uint64_t k) {
    std::vector<Int> c(ring.m(), Int(0));
    c[k % ring.m()] = 1;
    return GroupRingElement(ring, std::move(c));
  }

  const HalidonRing<Int>& ring() const noexcept { return ring_; }
  const std::vector<Int>& coeffs() const noexcept { return coeffs_.values(); }
  const Coefficients& coefficient_vector() const noexcept { return coeffs_; }

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
  }

 private:
  HalidonRing<Int> ring_;
  Coefficients coeffs_;
};

template <ModularInteger Int>
LambdaVector<Int> lambda_of(const GroupRingElement<Int>& u) {
  const auto& ring = u.ring();
  const std::uint64_t m = ring.m();
  // Reverse-index the coefficients (alpha_{m-i+2} with wraparound), then evaluate.
  std::vector<Int> reversed(m);
  for (std::uint64_t i = 0; i < m; ++i) reversed[i] = u.coeffs()[(m - i) % m];
  return LambdaVector<Int>(ring.n(), detail::vandermonde_apply<Int>(reversed, ring.omega_powers(), ring.n(), +1));
}

template <ModularInteger Int>
GroupRingElement<Int> coeffs_of_lambda(const LambdaVector<Int>& lambdas, const HalidonRing<Int>& ring) {
  detail::require_ring_shape(ring, lambdas);
  std::vector<Int> alpha = detail::vandermonde_apply<Int>(lambdas.values(), ring.omega_powers(), ring.n(), +1);
  for (Int& a : alpha) a = mod_mul(a, ring.m_inverse(), ring.n());
  return GroupRingElement<Int>(ring, std::move(alpha));
}

template <ModularInteger Int>
bool is_unit(const GroupRingElement<Int>& u) {
  const Int& n = u.ring().n();
  auto lambdas = lambda_of(u);
  for (const Int& l : lambdas.values())
    if (halidon::gcd(l, n) != 1) return false;
  return true;
}

template <ModularInteger Int>
bool is_idempotent(const GroupRingElement<Int>& u) {
  const Int& n = u.ring().n();
  auto lambdas = lambda_of(u);
  for (const Int& l : lambdas.values())
    if (mod_mul(l, l, n) != l) return false;
  return true;
}

/// Product in Z_n[C_m]: cyclic convolution of the coefficient vectors.
template <ModularInteger Int>
GroupRingElement<Int> multiply(const GroupRingElement<Int>& u, const GroupRingElement<Int>& v) {
  if (!(u.ring() == v.ring())) throw Error(Errc::modulus_mismatch, "elements belong to different group rings");
  auto product = cyclic_convolution(u.coefficient_vector(), v.coefficient_vector());
  return GroupRingElement<Int>(u.ring(), product.values());
}

/// Inverse of a unit: invert every lambda_r, then synthesise with the
/// reversed index and reversed twiddle, beta_r = m^-1 sum_j
/// lambda^-1_{m-j+2} w^(m^2 - (j-1)(r-1)). Both reversals cancel, giving
/// beta_r = m^-1 sum_j lambda_j^-1 w^((j-1)(r-1)).
template <ModularInteger Int>
GroupRingElement<Int> invert_unit(const GroupRingElement<Int>& u) {
  const auto& ring = u.ring();
  const Int& n = ring.n();
  const std::uint64_t m = ring.m();
  LambdaVector<Int> lambdas = lambda_of(u);

  std::vector<Int> inverses;
  inverses.reserve(m);
  for (std::uint64_t r = 0; r < m; ++r) {
    if (halidon::gcd(lambdas[r], n) != 1) {
      throw Error(Errc::not_a_unit, "lambda[" + std::to_string(r + 1) + "] = " + to_decimal(lambdas[r]) +
                                        " is not a unit, so the element has no inverse");
    }
    inverses.push_back(mod_inverse(lambdas[r], n));
  }

  std::vector<Int> reversed(m);
  for (std::uint64_t j = 0; j < m; ++j) reversed[j] = inverses[(m - j) % m];
  std::vector<Int> beta = detail::vandermonde_apply<Int>(reversed, ring.omega_powers(), n, -1);
  for (Int& b : beta) b = mod_mul(b, ring.m_inverse(), n);
  return GroupRingElement<Int>(ring, std::move(beta));
}

}  // namespace halidon
