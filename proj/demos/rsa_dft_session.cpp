// A full RSA-DFT session on n = 607 * 809 with m = 202.

#include <iostream>

#include "halidon/halidon.hpp"

using namespace halidon;

int main() {
  std::vector<Natural> primes{607, 809};
  std::vector<unsigned> exps{1, 1};
  auto keys = keygen<Natural>(primes, exps, Natural(361123));
  std::cout << "public key: n=" << keys.pub.n << " e=" << keys.pub.e << " m=" << keys.pub.m << '\n';

  // Bob picks a secret root and sends it under RSA.
  auto choice = choose_omega(keys.pub, 2024);
  std::cout << "Bob: omega=" << choice.omega.value() << " c=" << choice.c << '\n';

  std::string message = "MEET ME AT THE STATION AT 10:45.";
  auto ct = dft_encrypt_message(keys.pub, choice.omega, message);
  write_ciphertext(std::cout, ct);

  // Alice recovers the root with d and inverts the transform.
  std::cout << "Alice: omega=" << recover_omega(keys.priv, ct.c).value() << '\n';
  std::string plain = dft_decrypt_message(keys.priv, ct);
  std::cout << "Alice reads: " << plain << '\n';
  return plain == message ? 0 : 1;
}
