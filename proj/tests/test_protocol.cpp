#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "halidon/protocol.hpp"
#include "oracles.hpp"

using namespace halidon;
using u64 = std::uint64_t;

namespace {

KeyPair<Natural> fixture_keys() {
  std::vector<Natural> primes{Natural(fixtures::kP), Natural(fixtures::kQ)};
  std::vector<unsigned> exps{1, 1};
  return keygen<Natural>(primes, exps, Natural(fixtures::kE));
}

Residue<Natural> fixture_omega() { return Residue<Natural>(Natural(fixtures::kOmega), Natural(fixtures::kN)); }

UnitAssignment<Natural> published_table() {
  UnitAssignment<Natural>::Units units;
  for (std::size_t i = 0; i < units.size(); ++i) units[i] = Natural(fixtures::kHgrTable[i]);
  return UnitAssignment<Natural>::allow_duplicates(Natural(fixtures::kN), units);
}

template <class F>
Errc failure(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::invalid_argument;
}

std::string random_text(std::mt19937_64& rng, std::size_t max_len) {
  std::string s(rng() % (max_len + 1), ' ');
  for (auto& ch : s) ch = kAlphabet[rng() % kAlphabetSize];
  return s;
}

}  // namespace

TEST(Omega, ChooseOnToyKeyFindsOneOfTheTwoRoots) {
  std::vector<u64> primes{7};
  std::vector<unsigned> exps{2};
  auto keys = keygen<u64>(primes, exps, u64{5});
  ASSERT_EQ(keys.pub.m, 6u);
  for (u64 seed = 0; seed < 50; ++seed) {
    auto choice = choose_omega(keys.pub, seed);
    EXPECT_TRUE(choice.omega.value() == 19 || choice.omega.value() == 31) << choice.omega.value();
    EXPECT_EQ(choice.c, oracle::fastpow(choice.omega.value(), 5, 49));
    EXPECT_EQ(recover_omega(keys.priv, choice.c), choice.omega);
    EXPECT_EQ(choose_omega(keys.pub, seed).omega, choice.omega);
  }
}

TEST(Omega, UnsupportedIndexAndExhaustedBudget) {
  RsaPublicKey<u64> pub{91, 5, 1};
  EXPECT_EQ(failure([&] { choose_omega(pub, 1); }), Errc::index_not_supported);
  auto keys = fixture_keys();
  EXPECT_EQ(failure([&] { choose_omega(keys.pub, 1, 0); }), Errc::search_exhausted);
}

TEST(Omega, RecoverPublishedSessionKey) {
  auto keys = fixture_keys();
  EXPECT_EQ(recover_omega(keys.priv, Natural(fixtures::kC)).value(), fixtures::kOmega);
  Natural c1 = rsa_encrypt(keys.pub, Residue<Natural>(Natural(1), keys.pub.n)).value();
  EXPECT_EQ(failure([&] { recover_omega(keys.priv, c1); }), Errc::invalid_omega);
  EXPECT_EQ(failure([&] { recover_omega(keys.priv, keys.pub.n); }), Errc::invalid_argument);
  auto choice = choose_omega(keys.pub, 77);
  EXPECT_TRUE(oracle::is_root(fixtures::kN, fixtures::kM, choice.omega.value().get_ui()));
}

TEST(DftScheme, PublishedCiphertextEnds) {
  auto keys = fixture_keys();
  auto ct = dft_encrypt_message(keys.pub, fixture_omega(), fixtures::kDftMessage);
  EXPECT_EQ(ct.c, fixtures::kC);
  ASSERT_EQ(ct.blocks.size(), 1u);
  ASSERT_EQ(ct.blocks[0].size(), 202u);
  for (std::size_t i = 0; i < fixtures::kDftCipherPrefix.size(); ++i)
    EXPECT_EQ(ct.blocks[0][i], fixtures::kDftCipherPrefix[i]) << i;
  for (std::size_t i = 0; i < fixtures::kDftCipherSuffix.size(); ++i)
    EXPECT_EQ(ct.blocks[0][202 - fixtures::kDftCipherSuffix.size() + i], fixtures::kDftCipherSuffix[i]) << i;
  EXPECT_EQ(dft_decrypt_message(keys.priv, ct), fixtures::kDftMessage);
  auto padded = dft_decrypt_message(keys.priv, ct, true);
  EXPECT_EQ(padded.size(), 202u);
  EXPECT_EQ(padded.substr(0, 101), fixtures::kDftMessage);
}

TEST(DftScheme, MatchesDirectTransformOfCodes) {
  auto keys = fixture_keys();
  auto ct = dft_encrypt_message(keys.pub, fixture_omega(), "HELLO");
  std::vector<u64> codes(202, 36);
  for (std::size_t i = 0; i < 5; ++i) codes[i] = *code_of("HELLO"[i]);
  auto expected = oracle::dft(fixtures::kN, fixtures::kOmega, codes);
  for (std::size_t j = 0; j < 202; ++j) EXPECT_EQ(ct.blocks[0][j], expected[j]);
}

TEST(DftScheme, WrongKeyIsDetected) {
  auto keys = fixture_keys();
  auto ct = dft_encrypt_message(keys.pub, fixture_omega(), fixtures::kDftMessage);
  // The other primitive root in the same ring decrypts to garbage.
  auto other = choose_omega(keys.pub, 4);
  ASSERT_NE(other.omega, fixture_omega());
  ct.c = other.c;
  try {
    dft_decrypt_message(keys.priv, ct);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::code_out_of_range);
    EXPECT_NE(std::string(e.what()).find("block 1"), std::string::npos) << e.what();
  }
}

TEST(HgrScheme, PublishedCoefficientsAndSpectrum) {
  auto keys = fixture_keys();
  auto table = published_table();
  auto ct = hgr_encrypt_message(keys.pub, fixture_omega(), table, fixtures::kHgrMessage);
  ASSERT_EQ(ct.blocks.size(), 1u);
  for (std::size_t i = 0; i < 202; ++i) EXPECT_EQ(ct.blocks[0][i], fixtures::kHgrCoefficients[i]) << i;
  auto spectra = hgr_decrypt_lambdas(keys.priv, ct);
  ASSERT_EQ(spectra.size(), 1u);
  for (std::size_t i = 0; i < 202; ++i) EXPECT_EQ(spectra[0][i], fixtures::kHgrLambdas[i]) << i;
  // The published table gives L and N one unit, so decryption stops at "AN".
  try {
    hgr_decrypt_message(keys.priv, table, ct);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ambiguous_unit);
    EXPECT_EQ(e.detail().rfind("block 1: value 52853 at position 1", 0), 0u) << e.what();
  }
}

TEST(HgrScheme, InjectiveTableRoundTripAndTampering) {
  auto keys = fixture_keys();
  auto table = gen_unit_table(keys.pub.n, 12);
  auto ct = hgr_encrypt_message(keys.pub, fixture_omega(), table, fixtures::kHgrMessage);
  EXPECT_EQ(hgr_decrypt_message(keys.priv, table, ct), fixtures::kHgrMessage);
  auto tampered = ct;
  tampered.blocks[0][7] = (tampered.blocks[0][7] + 1) % keys.pub.n;
  EXPECT_EQ(failure([&] { hgr_decrypt_message(keys.priv, table, tampered); }), Errc::unknown_unit);
  auto foreign = gen_unit_table(Natural(491069), 1);
  EXPECT_EQ(failure([&] { hgr_decrypt_message(keys.priv, foreign, ct); }), Errc::modulus_mismatch);
}

TEST(HgrScheme, DualToTheDftOfTheReversedCoefficients) {
  // lambda_r = sum_i a_{-i} w^{ir}: re-indexing the coefficients turns the
  // group-ring spectrum into an ordinary transform.
  auto keys = fixture_keys();
  auto table = gen_unit_table(keys.pub.n, 3);
  auto ct = hgr_encrypt_message(keys.pub, fixture_omega(), table, "DUALITY CHECK");
  std::vector<u64> reversed(202);
  for (std::size_t i = 0; i < 202; ++i) reversed[i] = ct.blocks[0][(202 - i) % 202].get_ui();
  auto spectrum = oracle::dft(fixtures::kN, fixtures::kOmega, reversed);
  auto expected = apply_table<Natural>(std::string_view(strip_trailing_blanks("DUALITY CHECK")), table);
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(spectrum[i], expected[i]);
  for (std::size_t i = expected.size(); i < 202; ++i) EXPECT_EQ(spectrum[i], table.unit_for(kBlankCode));
}

TEST(HgrScheme, CoefficientsAreScaledTransformOfTheSpectrum) {
  std::mt19937_64 rng(31);
  for (auto [p, q] : {std::pair<u64, u64>{31, 61}, {11, 31}, {607, 809}}) {
    std::vector<u64> primes{p, q};
    std::vector<unsigned> exps{1, 1};
    auto keys = keygen<u64>(primes, exps);
    auto choice = choose_omega(keys.pub, rng());
    auto ring = HalidonRing<u64>::certify(keys.pub.n, keys.pub.m, choice.omega.value());
    auto table = gen_unit_table(keys.pub.n, rng());
    auto ct = hgr_encrypt_message(keys.pub, choice.omega, table, random_text(rng, keys.pub.m));
    auto lambdas = hgr_decrypt_lambdas(keys.priv, ct);
    auto spectrum = dft_forward(ring, ResidueVector<u64>(keys.pub.n, lambdas[0].values()));
    for (std::size_t i = 0; i < keys.pub.m; ++i)
      EXPECT_EQ(ct.blocks[0][i], oracle::mulmod(ring.m_inverse(), spectrum[i], keys.pub.n));
  }
}

TEST(Sessions, EdgeMessages) {
  auto keys = fixture_keys();
  auto table = gen_unit_table(keys.pub.n, 8);
  for (std::string text : {std::string(), std::string("   "), std::string(202, 'Z'), std::string(203, '-')}) {
    auto d = dft_encrypt_message(keys.pub, fixture_omega(), text);
    auto h = hgr_encrypt_message(keys.pub, fixture_omega(), table, text);
    EXPECT_EQ(d.blocks.size(), std::max<std::size_t>(1, (text.size() + 201) / 202));
    EXPECT_EQ(dft_decrypt_message(keys.priv, d), strip_trailing_blanks(text));
    EXPECT_EQ(hgr_decrypt_message(keys.priv, table, h), strip_trailing_blanks(text));
  }
  EXPECT_EQ(failure([&] { dft_encrypt_message(keys.pub, fixture_omega(), "a_b"); }), Errc::unsupported_symbol);
  auto bad_omega = Residue<Natural>(Natural(2), keys.pub.n);
  EXPECT_EQ(failure([&] { dft_encrypt_message(keys.pub, bad_omega, "X"); }), Errc::invalid_omega);
}

TEST(Sessions, RandomKeysAndMessagesRoundTrip) {
  std::mt19937_64 rng(2024);
  // (p, q) pairs with gcd(p - 1, q - 1) > 2 so that the index is interesting.
  const std::vector<std::pair<u64, u64>> pairs = {{607, 809}, {31, 61}, {101, 151}, {97, 193}, {241, 401}};
  for (int t = 0; t < 50; ++t) {
    auto [p, q] = pairs[t % pairs.size()];
    std::vector<u64> primes{p, q};
    std::vector<unsigned> exps{1, static_cast<unsigned>(1 + t % 2)};
    auto keys = keygen<u64>(primes, exps);
    auto choice = choose_omega(keys.pub, rng());
    auto table = gen_unit_table(keys.pub.n, rng());
    std::string text = random_text(rng, 300);
    auto d = dft_encrypt_message(keys.pub, choice.omega, text);
    auto h = hgr_encrypt_message(keys.pub, choice.omega, table, text);
    EXPECT_EQ(dft_decrypt_message(keys.priv, d, true).substr(0, text.size()), text);
    EXPECT_EQ(hgr_decrypt_message(keys.priv, table, h, true).substr(0, text.size()), text);
  }
}

TEST(CiphertextFile, RoundTripBothSchemes) {
  auto keys = fixture_keys();
  auto d = dft_encrypt_message(keys.pub, fixture_omega(), std::string(300, 'Q'));
  std::stringstream ds;
  write_ciphertext(ds, d);
  EXPECT_EQ(ds.str().rfind("RSA-DFT v1\nn=491063\nm=202\nc=142638\nblock=", 0), 0u);
  EXPECT_EQ(read_dft_ciphertext(ds), d);
  auto h = hgr_encrypt_message(keys.pub, fixture_omega(), gen_unit_table(keys.pub.n, 2), "X");
  std::stringstream hs;
  write_ciphertext(hs, h);
  EXPECT_EQ(read_hgr_ciphertext(hs), h);
  std::istringstream wrong_scheme(ds.str());
  EXPECT_EQ(failure([&] { read_hgr_ciphertext(wrong_scheme); }), Errc::malformed_file);
}

TEST(CiphertextFile, RejectsMalformedInput) {
  auto read = [](std::string text) {
    return [text] {
      std::istringstream in(text);
      read_dft_ciphertext<u64>(in);
    };
  };
  const std::string head = "RSA-DFT v1\nn=49\nm=6\nc=31\n";
  EXPECT_NO_THROW(read(head + "block=1 2 3 4 5 6\n")());
  EXPECT_EQ(failure(read(head)), Errc::malformed_file);
  EXPECT_EQ(failure(read(head + "block=1 2 3 4 5\n")), Errc::malformed_file);
  EXPECT_EQ(failure(read(head + "block=1 2 3 4 5 49\n")), Errc::malformed_file);
  EXPECT_EQ(failure(read(head + "block=1  2 3 4 5 6\n")), Errc::malformed_file);
  EXPECT_EQ(failure(read(head + "blocks=1 2 3 4 5 6\n")), Errc::malformed_file);
  EXPECT_EQ(failure(read("RSA-DFT v1\nn=49\nm=6\nc=49\nblock=1 2 3 4 5 6\n")), Errc::malformed_file);
  EXPECT_EQ(failure(read("RSA-DFT v1\nn=49\nm=0\nc=1\n")), Errc::malformed_file);
  try {
    read("RSA-DFT v2\nn=49\nm=6\nc=31\nblock=1 2 3 4 5 6\n")();
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("unsupported version"), std::string::npos) << e.what();
  }
}

TEST(CiphertextFile, KeyMismatchIsReported) {
  auto keys = fixture_keys();
  auto ct = dft_encrypt_message(keys.pub, fixture_omega(), "X");
  auto other = ct;
  other.m = 101;
  EXPECT_EQ(failure([&] { dft_decrypt_message(keys.priv, other); }), Errc::length_mismatch);
  other = ct;
  other.n = Natural(491069);
  EXPECT_EQ(failure([&] { dft_decrypt_message(keys.priv, other); }), Errc::modulus_mismatch);
}
