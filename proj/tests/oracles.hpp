#pragma once

// Slow, obviously-correct reference computations on machine integers. None
// of these call into the library.

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 n) { return static_cast<u64>(static_cast<u128>(a) * b % n); }

inline u64 powmod(u64 b, u64 e, u64 n) {
  u64 r = 1 % n;
  for (u64 i = 0; i < e; ++i) r = mulmod(r, b % n, n);
  return r;
}

/// Square-and-multiply, for exponents too large for the loop above.
inline u64 fastpow(u64 b, u64 e, u64 n) {
  u64 r = 1 % n;
  b %= n;
  for (; e; e >>= 1, b = mulmod(b, b, n))
    if (e & 1) r = mulmod(r, b, n);
  return r;
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::pair<u64, unsigned>> factor(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) n /= d, ++e;
    if (e) out.push_back({d, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

inline u64 phi(u64 n) {
  u64 count = 0;
  for (u64 x = 1; x <= n; ++x)
    if (std::gcd(x, n) == 1) ++count;
  return count;
}

inline u64 psi(u64 n) {
  if (n % 2 == 0) return 1;
  u64 g = 0;
  for (auto [p, e] : factor(n)) g = std::gcd(g, p - 1);
  return g == 0 ? 1 : g;
}

inline u64 order(u64 a, u64 n) {
  u64 x = a % n;
  for (u64 k = 1; k <= n; ++k, x = mulmod(x, a, n))
    if (x == 1 % n) return k;
  return 0;
}

inline u64 inverse(u64 a, u64 n) {
  for (u64 x = 1; x < n; ++x)
    if (mulmod(a, x, n) == 1) return x;
  return 0;
}

/// Defining property: w^m = 1, m a unit, and sum_r w^(rk) = 0 for 0 < k < m.
inline bool is_root(u64 n, u64 m, u64 w) {
  if (std::gcd(m % n, n) != 1) return false;
  if (powmod(w, m, n) != 1 % n) return false;
  for (u64 k = 1; k < m; ++k) {
    u64 step = powmod(w, k, n), term = 1 % n, sum = 0;
    for (u64 r = 0; r < m; ++r) {
      sum = (sum + term) % n;
      term = mulmod(term, step, n);
    }
    if (sum != 0) return false;
  }
  return true;
}

/// Equivalent form: w^m = 1, m a unit, and w^d - 1 a unit for every proper
/// divisor d of m. Cheap enough to scan whole rings with large m.
inline bool is_root_by_divisors(u64 n, u64 m, u64 w) {
  if (std::gcd(m % n, n) != 1) return false;
  if (fastpow(w, m, n) != 1 % n) return false;
  auto bad = [&](u64 d) { return d < m && std::gcd((fastpow(w, d, n) + n - 1) % n, n) != 1; };
  for (u64 d = 1; d * d <= m; ++d)
    if (m % d == 0 && (bad(d) || bad(m / d))) return false;
  return true;
}

inline std::vector<u64> roots(u64 n, u64 m) {
  std::vector<u64> out;
  for (u64 w = 0; w < n; ++w)
    if (is_root(n, m, w)) out.push_back(w);
  return out;
}

/// x with x = r_i mod q_i, by trying every candidate.
inline u64 crt(const std::vector<u64>& r, const std::vector<u64>& q) {
  u64 total = 1;
  for (u64 x : q) total *= x;
  for (u64 x = 0; x < total; ++x) {
    bool ok = true;
    for (std::size_t i = 0; i < q.size() && ok; ++i) ok = x % q[i] == r[i];
    if (ok) return x;
  }
  return total;
}

/// F_j = sum_i f_i w^(ij), every power recomputed from scratch.
inline std::vector<u64> dft(u64 n, u64 w, const std::vector<u64>& f) {
  std::vector<u64> out(f.size());
  for (u64 j = 0; j < f.size(); ++j) {
    u64 acc = 0;
    for (u64 i = 0; i < f.size(); ++i) acc = (acc + mulmod(f[i], fastpow(w, i * j, n), n)) % n;
    out[j] = acc;
  }
  return out;
}

/// Polynomial product, then fold x^k onto x^(k mod m).
inline std::vector<u64> cyclic_conv(u64 n, const std::vector<u64>& a, const std::vector<u64>& b) {
  std::vector<u64> full(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) full[i + j] = (full[i + j] + mulmod(a[i], b[j], n)) % n;
  std::vector<u64> out(a.size(), 0);
  for (std::size_t k = 0; k < full.size(); ++k) out[k % a.size()] = (out[k % a.size()] + full[k]) % n;
  return out;
}

/// lambda_r = sum_{i=1..m} alpha_{m-i+2} w^((i-1)(r-1)), alpha_{m+1} = alpha_1,
/// written with 1-based indices as stated.
inline std::vector<u64> lambda(u64 n, u64 w, const std::vector<u64>& alpha0) {
  const u64 m = alpha0.size();
  auto alpha = [&](u64 k) { return alpha0[(k == m + 1 ? 1 : k) - 1]; };
  std::vector<u64> out(m);
  for (u64 r = 1; r <= m; ++r) {
    u64 acc = 0;
    for (u64 i = 1; i <= m; ++i) acc = (acc + mulmod(alpha(m - i + 2), fastpow(w, (i - 1) * (r - 1), n), n)) % n;
    out[r - 1] = acc;
  }
  return out;
}

/// beta_r = m^-1 sum_j lambda^-1_{m-j+2} w^(m^2 - (j-1)(r-1)), 1-based, with
/// lambda_{m+1} read as lambda_1.
inline std::vector<u64> inverse_by_formula(u64 n, u64 w, const std::vector<u64>& lambdas) {
  const u64 m = lambdas.size();
  auto lam = [&](u64 k) { return lambdas[(k == m + 1 ? 1 : k) - 1]; };
  u64 m_inv = inverse(m % n, n);
  std::vector<u64> out(m);
  for (u64 r = 1; r <= m; ++r) {
    u64 acc = 0;
    for (u64 j = 1; j <= m; ++j) {
      u64 e = (m * m - (j - 1) * (r - 1) % (m * m)) % (m * m);
      acc = (acc + mulmod(inverse(lam(m - j + 2), n), fastpow(w, e, n), n)) % n;
    }
    out[r - 1] = mulmod(acc, m_inv, n);
  }
  return out;
}

/// Number of idempotents of Z_n.
inline u64 idempotents(u64 n) {
  u64 count = 0;
  for (u64 x = 0; x < n; ++x)
    if (mulmod(x, x, n) == x) ++count;
  return count;
}

}  // namespace oracle
