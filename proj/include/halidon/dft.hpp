#pragma once

/**
 * @file dft.hpp
 * @brief Discrete Fourier Transform and cyclic convolution over a halidon ring.
 *
 * F_j = sum_i f_i w^(ij) is the evaluation of f(x) = sum f_i x^i at w^j, and
 * f_i = m^-1 sum_j F_j w^(-ij) inverts it. Both are the direct O(m^2) double
 * loop over a table of the m powers of w; the block lengths used by the
 * cryptosystems (m = 202 = 2 * 101, say) leave little to gain from a radix
 * split.
 */

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "halidon/core_arith.hpp"
#include "halidon/halidon_analysis.hpp"

namespace halidon {

/// A vector of residues sharing one modulus. `Tag` keeps coefficient vectors,
/// spectra and lambda vectors from being mixed up by accident.
template <ModularInteger Int, class Tag>
class TaggedResidues {
 public:
  /// Every entry must already be reduced modulo `modulus`.
  TaggedResidues(Int modulus, std::vector<Int> values) : modulus_(std::move(modulus)), values_(std::move(values)) {
    if (modulus_ < 2) throw Error(Errc::invalid_argument, "modulus must be at least 2");
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (!(values_[i] < modulus_)) {
        throw Error(Errc::invalid_argument, "entry " + std::to_string(i) + " (" + to_decimal(values_[i]) +
                                                ") is not reduced modulo " + to_decimal(modulus_));
      }
    }
  }

  static TaggedResidues zeros(Int modulus, std::size_t length) {
    return TaggedResidues(std::move(modulus), std::vector<Int>(length, Int(0)));
  }

  const Int& modulus() const noexcept { return modulus_; }
  const std::vector<Int>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  const Int& operator[](std::size_t i) const { return values_[i]; }

  friend bool operator==(const TaggedResidues&, const TaggedResidues&) = default;

 private:
  Int modulus_;
  std::vector<Int> values_;
};

struct residue_vector_tag {};
template <ModularInteger Int = Natural>
using ResidueVector = TaggedResidues<Int, residue_vector_tag>;

namespace detail {

template <ModularInteger Int, class Tag>
void require_ring_shape(const HalidonRing<Int>& ring, const TaggedResidues<Int, Tag>& v) {
  if (v.size() != ring.m()) {
    throw Error(Errc::length_mismatch,
                "vector length " + std::to_string(v.size()) + " differs from index m = " + std::to_string(ring.m()));
  }
  if (v.modulus() != ring.n())
    throw Error(Errc::modulus_mismatch, "vector modulus differs from ring modulus");
}

template <ModularInteger Int, class Tag>
void require_same_shape(const TaggedResidues<Int, Tag>& a, const TaggedResidues<Int, Tag>& b) {
  if (a.size() != b.size()) throw Error(Errc::length_mismatch, "vectors have different lengths");
  if (a.modulus() != b.modulus()) throw Error(Errc::modulus_mismatch, "vectors have different moduli");
}

/// out_j = sum_i in_i * powers[(sign * i * j) mod m]. `sign` is +1 or -1.
template <ModularInteger Int>
std::vector<Int> vandermonde_apply(std::span<const Int> in, const std::vector<Int>& powers, const Int& n,
                                   int sign) {
  const std::uint64_t m = powers.size();
  std::vector<Int> out(m, Int(0));
  for (std::uint64_t j = 0; j < m; ++j) {
    Int acc = 0;
    std::uint64_t step = 0;  // (i * j) mod m, advanced incrementally
    for (std::uint64_t i = 0; i < m; ++i) {
      std::uint64_t e = sign > 0 ? step : (step == 0 ? 0 : m - step);
      acc = mod_add(acc, mod_mul(in[i], powers[e], n), n);
      step += j;
      if (step >= m) step -= m;
    }
    out[j] = std::move(acc);
  }
  return out;
}

}  // namespace detail

template <ModularInteger Int>
ResidueVector<Int> dft_forward(const HalidonRing<Int>& ring, const ResidueVector<Int>& f) {
  detail::require_ring_shape(ring, f);
  return ResidueVector<Int>(ring.n(), detail::vandermonde_apply<Int>(f.values(), ring.omega_powers(), ring.n(), +1));
}

template <ModularInteger Int>
ResidueVector<Int> dft_inverse(const HalidonRing<Int>& ring, const ResidueVector<Int>& spectrum) {
  detail::require_ring_shape(ring, spectrum);
  std::vector<Int> f = detail::vandermonde_apply<Int>(spectrum.values(), ring.omega_powers(), ring.n(), -1);
  for (Int& x : f) x = mod_mul(x, ring.m_inverse(), ring.n());
  return ResidueVector<Int>(ring.n(), std::move(f));
}

/// h_l = sum_{j + k = l mod m} f_j g_k, i.e. f * g mod (x^m - 1).
template <ModularInteger Int, class Tag>
TaggedResidues<Int, Tag> cyclic_convolution(const TaggedResidues<Int, Tag>& f, const TaggedResidues<Int, Tag>& g) {
  detail::require_same_shape(f, g);
  const std::size_t m = f.size();
  const Int& n = f.modulus();
  std::vector<Int> h(m, Int(0));
  for (std::size_t j = 0; j < m; ++j) {
    if (f[j] == 0) continue;
    for (std::size_t k = 0; k < m; ++k) {
      std::size_t l = j + k < m ? j + k : j + k - m;
      h[l] = mod_add(h[l], mod_mul(f[j], g[k], n), n);
    }
  }
  return TaggedResidues<Int, Tag>(n, std::move(h));
}

template <ModularInteger Int>
ResidueVector<Int> convolve(const HalidonRing<Int>& ring, const ResidueVector<Int>& f, const ResidueVector<Int>& g) {
  detail::require_ring_shape(ring, f);
  detail::require_ring_shape(ring, g);
  return cyclic_convolution(f, g);
}

template <ModularInteger Int, class Tag>
TaggedResidues<Int, Tag> pointwise_mul(const TaggedResidues<Int, Tag>& a, const TaggedResidues<Int, Tag>& b) {
  detail::require_same_shape(a, b);
  std::vector<Int> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(mod_mul(a[i], b[i], a.modulus()));
  return TaggedResidues<Int, Tag>(a.modulus(), std::move(out));
}

}  // namespace halidon
