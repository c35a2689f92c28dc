// RSA-HGR with a generated table: the message becomes a lambda spectrum and
// travels as group-ring coefficients.

#include <iostream>

#include "halidon/halidon.hpp"

using namespace halidon;

int main() {
  std::vector<Natural> primes{607, 809};
  std::vector<unsigned> exps{1, 1};
  auto keys = keygen<Natural>(primes, exps);
  auto table = gen_unit_table(keys.pub.n, 7);
  std::cout << "table: A=" << table.unit_for(*code_of('A')) << " B=" << table.unit_for(*code_of('B')) << " ...\n";

  auto choice = choose_omega(keys.pub, 99);
  std::string message = "AN IMMINENT ATTACK ON YOU WILL HAPPEN TOMORROW EVENING AT 5:30 PM.";
  auto ct = hgr_encrypt_message(keys.pub, choice.omega, table, message);
  std::cout << "first coefficients:";
  for (std::size_t i = 0; i < 6; ++i) std::cout << ' ' << ct.blocks[0][i];
  std::cout << " ...\n";

  std::string plain = hgr_decrypt_message(keys.priv, table, ct);
  std::cout << "decrypted: " << plain << '\n';
  return plain == message ? 0 : 1;
}
