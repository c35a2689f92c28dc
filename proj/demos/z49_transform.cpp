// Transform, inverse transform and convolution theorem in Z_49 with w = 19.

#include <iostream>

#include "halidon/halidon.hpp"

using namespace halidon;

static void print(const char* label, const std::vector<Natural>& v) {
  std::cout << label;
  for (const auto& x : v) std::cout << ' ' << x;
  std::cout << '\n';
}

int main() {
  Natural n = 49;
  auto roots = enumerate_primitive_roots(n, 6);
  print("primitive 6th roots mod 49:", roots.roots);

  auto ring = HalidonRing<Natural>::certify(n, 6, Natural(19));
  ResidueVector<Natural> f(n, {2, 1, 2, 3, 5, 10});
  auto spectrum = dft_forward(ring, f);
  print("f        =", f.values());
  print("DFT f    =", spectrum.values());
  print("IDFT     =", dft_inverse(ring, spectrum).values());

  ResidueVector<Natural> g(n, {1, 0, 0, 0, 0, 48});
  auto lhs = dft_forward(ring, convolve(ring, f, g));
  auto rhs = pointwise_mul(spectrum, dft_forward(ring, g));
  print("DFT(f*g) =", lhs.values());
  print("DFT f.g  =", rhs.values());
  return lhs == rhs ? 0 : 1;
}
