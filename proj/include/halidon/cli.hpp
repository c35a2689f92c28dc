#pragma once

/**
 * @file cli.hpp
 * @brief The `halidon` command line: analysis, raw transforms, keys and the
 *        two cryptosystems.
 *
 * Exit status: 0 on success, 2 for usage and validation errors, 3 when the
 * mathematics says no (not a unit, invalid root, search exhausted, ...).
 * Results go to the output stream or an `-o` file, diagnostics to the error
 * stream. Vectors are quoted lists of decimals separated by single spaces.
 */

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "halidon/halidon.hpp"
#include "halidon/text_format.hpp"

namespace halidon::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMath = 3;

/// Roots printed by `analyze`.
inline constexpr std::size_t kAnalyzeRootLimit = 100;

namespace detail {

using halidon::detail::join_decimal;
using halidon::detail::parse_decimal_list;

inline Natural parse_natural(const std::string& text, const std::string& what) {
  auto value = parse_decimal<Natural>(text);
  if (!value) throw Error(Errc::invalid_argument, what + " must be a non-negative decimal, got '" + text + "'");
  return *value;
}

inline std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  auto value = parse_decimal<std::uint64_t>(text);
  if (!value) throw Error(Errc::invalid_argument, what + " must be a decimal below 2^64, got '" + text + "'");
  return *value;
}

inline std::vector<Natural> parse_vector(const std::string& text, const std::string& what) {
  auto values = parse_decimal_list<Natural>(text);
  if (!values) throw Error(Errc::invalid_argument, what + " must be decimals separated by single spaces");
  return *values;
}

template <class T>
std::vector<T> parse_comma_list(const std::string& text, const std::string& what) {
  std::vector<T> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto value = parse_decimal<T>(item);
    if (!value) throw Error(Errc::invalid_argument, what + " must be comma-separated decimals, got '" + text + "'");
    out.push_back(*value);
  }
  if (out.empty() || text.back() == ',')
    throw Error(Errc::invalid_argument, what + " must be comma-separated decimals, got '" + text + "'");
  return out;
}

inline std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::invalid_argument, "cannot open '" + path + "' for reading");
  return in;
}

inline std::string slurp(const std::string& path) {
  auto in = open_in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// Writes through `write(stream)` to `path`, or to `out` when no path is given.
template <class F>
void emit(const std::string& path, std::ostream& out, F&& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::invalid_argument, "cannot open '" + path + "' for writing");
  write(file);
  if (!file.flush()) throw Error(Errc::invalid_argument, "failed writing '" + path + "'");
}

inline FactorOptions factor_options() {
  FactorOptions options;
  if (const char* budget = std::getenv("HALIDON_FACTOR_BUDGET"))
    options.rho_budget = parse_u64(budget, "HALIDON_FACTOR_BUDGET");
  return options;
}

/// Explicit seed, or fresh entropy reported on the error stream.
inline std::uint64_t resolve_seed(const std::string& text, bool deterministic, std::ostream& err) {
  if (!text.empty()) return parse_u64(text, "--seed");
  if (deterministic) throw Error(Errc::invalid_argument, "--seed is required with --deterministic");
  std::random_device device;
  std::uint64_t seed = (std::uint64_t{device()} << 32) | device();
  err << "seed=" << seed << '\n';
  return seed;
}

inline RsaPublicKey<Natural> load_public(const std::string& path) {
  auto in = open_in(path);
  return read_public_key<Natural>(in);
}

inline RsaPrivateKey<Natural> load_private(const std::string& path) {
  auto in = open_in(path);
  return read_private_key<Natural>(in);
}

inline UnitAssignment<Natural> load_table(const std::string& path) {
  auto in = open_in(path);
  return read_unit_table<Natural>(in);
}

inline std::string join_natural(const std::vector<Natural>& values) { return join_decimal(values); }

struct Options {
  bool deterministic = false;

  std::string n, m, omega, vec, vec_a, vec_b;
  std::string seed, count;
  bool all = false, random = false;

  std::string primes, exps, pub_exp, key_m, out;
  std::string pub, priv, c, table, in, text;
  bool keep_padding = false, reuse_omega = false, has_text = false;
  std::string gr_action;
};

inline void print_ring_vector(std::ostream& out, const std::vector<Natural>& values) {
  out << join_natural(values) << '\n';
}

inline HalidonRing<Natural> ring_from(const Options& o) {
  return HalidonRing<Natural>::certify(parse_natural(o.n, "--n"), parse_u64(o.m, "--m"),
                                       parse_natural(o.omega, "--omega"));
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

inline void cmd_analyze(const Options& o, std::ostream& out) {
  Natural n = parse_natural(o.n, "n");
  if (n < 2) throw Error(Errc::invalid_argument, "n must be at least 2");
  auto f = factorize(n, factor_options());
  auto max = max_index_and_witness(f);
  std::uint64_t psi = *integer_traits<Natural>::to_u64(max.m_max);
  auto report = enumerate_primitive_roots(f, psi, kAnalyzeRootLimit);
  Natural total = primitive_root_count(f, psi);

  out << "n=" << to_decimal(n) << '\n'
      << "factors=" << f.to_string() << '\n'
      << "psi=" << psi << '\n'
      << "type=" << (psi == 1 ? "trivial" : "nontrivial") << " halidon ring\n"
      << "witness=" << to_decimal(max.witness.value()) << '\n'
      << "roots=" << join_natural(report.roots) << (Natural(report.roots.size()) < total ? " ..." : "") << '\n'
      << "root_count=" << to_decimal(total) << '\n';
}

inline void cmd_find_omega(const Options& o, std::ostream& out, std::ostream& err) {
  Natural n = parse_natural(o.n, "n");
  if (n < 2) throw Error(Errc::invalid_argument, "n must be at least 2");
  std::uint64_t m = parse_u64(o.m, "m");
  auto f = factorize(n, factor_options());
  if (o.random) {
    std::uint64_t seed = resolve_seed(o.seed, o.deterministic, err);
    out << to_decimal(find_primitive_root(f, m, RootStrategy::random(seed)).value()) << '\n';
  } else if (o.all) {
    auto report = enumerate_primitive_roots(f, m);
    out << join_natural(report.roots) << '\n';
  } else if (!o.count.empty()) {
    auto report = enumerate_primitive_roots(f, m, static_cast<std::size_t>(parse_u64(o.count, "--count")));
    out << join_natural(report.roots) << '\n';
  } else {
    out << to_decimal(find_primitive_root(f, m, RootStrategy::deterministic()).value()) << '\n';
  }
}

inline void cmd_keygen(const Options& o, std::ostream& out) {
  auto primes = parse_comma_list<Natural>(o.primes, "--primes");
  std::vector<unsigned> exps(primes.size(), 1);
  if (!o.exps.empty()) {
    auto parsed = parse_comma_list<std::uint64_t>(o.exps, "--exps");
    if (parsed.size() != primes.size())
      throw Error(Errc::invalid_argument, "--exps needs one exponent per prime");
    for (std::size_t i = 0; i < parsed.size(); ++i) {
      if (parsed[i] > 64) throw Error(Errc::invalid_argument, "exponents above 64 are not supported");
      exps[i] = static_cast<unsigned>(parsed[i]);
    }
  }
  std::optional<Natural> e;
  if (!o.pub_exp.empty()) e = parse_natural(o.pub_exp, "--pub-exp");
  std::optional<std::uint64_t> m;
  if (!o.key_m.empty()) m = parse_u64(o.key_m, "--m");

  auto keys = keygen<Natural>(primes, exps, e, m);
  const std::string dir = o.out.empty() ? "." : o.out;
  emit(dir + "/public.key", out, [&](std::ostream& s) { write_public_key(s, keys.pub); });
  emit(dir + "/private.key", out, [&](std::ostream& s) { write_private_key(s, keys.priv); });
  out << "n=" << to_decimal(keys.pub.n) << '\n'
      << "e=" << to_decimal(keys.pub.e) << '\n'
      << "m=" << keys.pub.m << '\n';
}

inline void cmd_choose_omega(const Options& o, std::ostream& out, std::ostream& err) {
  auto pub = load_public(o.pub);
  auto choice = choose_omega(pub, resolve_seed(o.seed, o.deterministic, err));
  out << "omega=" << to_decimal(choice.omega.value()) << '\n' << "c=" << to_decimal(choice.c) << '\n';
}

inline void cmd_recover_omega(const Options& o, std::ostream& out) {
  auto priv = load_private(o.priv);
  out << "omega=" << to_decimal(recover_omega(priv, parse_natural(o.c, "--c")).value()) << '\n';
}

inline void cmd_dft(const Options& o, std::ostream& out, bool inverse) {
  auto ring = ring_from(o);
  ResidueVector<Natural> v(ring.n(), parse_vector(o.vec, "--vec"));
  auto result = inverse ? dft_inverse(ring, v) : dft_forward(ring, v);
  print_ring_vector(out, result.values());
}

inline void cmd_conv(const Options& o, std::ostream& out) {
  Natural n = parse_natural(o.n, "--n");
  std::uint64_t m = parse_u64(o.m, "--m");
  ResidueVector<Natural> a(n, parse_vector(o.vec_a, "--vec-a"));
  ResidueVector<Natural> b(n, parse_vector(o.vec_b, "--vec-b"));
  if (a.size() != m || b.size() != m)
    throw Error(Errc::length_mismatch, "both vectors must have length m = " + std::to_string(m));
  print_ring_vector(out, cyclic_convolution(a, b).values());
}

inline void cmd_gr(const Options& o, std::ostream& out) {
  auto ring = ring_from(o);
  auto values = parse_vector(o.vec, "--vec");
  if (o.gr_action == "encode") {
    LambdaVector<Natural> lambdas(ring.n(), std::move(values));
    print_ring_vector(out, coeffs_of_lambda(lambdas, ring).coeffs());
    return;
  }
  GroupRingElement<Natural> u(ring, std::move(values));
  if (o.gr_action == "decode") {
    print_ring_vector(out, lambda_of(u).values());
  } else if (o.gr_action == "invert") {
    print_ring_vector(out, invert_unit(u).coeffs());
  } else {
    out << "unit=" << (is_unit(u) ? "yes" : "no") << '\n'
        << "idempotent=" << (is_idempotent(u) ? "yes" : "no") << '\n';
  }
}

inline void cmd_hgr_table(const Options& o, std::ostream& out, std::ostream& err) {
  auto pub = load_public(o.pub);
  auto table = gen_unit_table(pub.n, resolve_seed(o.seed, o.deterministic, err));
  emit(o.out, out, [&](std::ostream& s) { write_unit_table(s, table); });
}

inline std::string message_text(const Options& o) {
  if (o.in.empty() && !o.has_text) throw Error(Errc::invalid_argument, "give the message with --in FILE or --text TEXT");
  std::string text = o.in.empty() ? o.text : slurp(o.in);
  // A file normally ends with one newline; it is not part of the message.
  if (!o.in.empty() && !text.empty() && text.back() == '\n') text.pop_back();
  return text;
}

inline Residue<Natural> session_omega(const Options& o, const RsaPublicKey<Natural>& pub, std::ostream& err) {
  if (o.omega.empty()) return choose_omega(pub, resolve_seed(o.seed, o.deterministic, err)).omega;
  if (!o.reuse_omega) {
    err << "warning: a fixed --omega makes every message share one key; "
           "omit it for a fresh root or pass --reuse-omega\n";
  }
  Natural w = parse_natural(o.omega, "--omega");
  if (!(w < pub.n)) throw Error(Errc::invalid_argument, "--omega must be below n");
  return Residue<Natural>(w, pub.n);
}

inline void cmd_encrypt(const Options& o, std::ostream& out, std::ostream& err, Scheme scheme) {
  auto pub = load_public(o.pub);
  std::string text = message_text(o);
  auto omega = session_omega(o, pub, err);
  if (scheme == Scheme::rsa_dft) {
    auto ct = dft_encrypt_message(pub, omega, text);
    emit(o.out, out, [&](std::ostream& s) { write_ciphertext(s, ct); });
  } else {
    auto ct = hgr_encrypt_message(pub, omega, load_table(o.table), text);
    emit(o.out, out, [&](std::ostream& s) { write_ciphertext(s, ct); });
  }
}

inline void cmd_decrypt(const Options& o, std::ostream& out, Scheme scheme) {
  auto priv = load_private(o.priv);
  auto in = open_in(o.in);
  std::string text;
  if (scheme == Scheme::rsa_dft) {
    text = dft_decrypt_message(priv, read_dft_ciphertext<Natural>(in), o.keep_padding);
  } else {
    auto table = load_table(o.table);
    text = hgr_decrypt_message(priv, table, read_hgr_ciphertext<Natural>(in), o.keep_padding);
  }
  emit(o.out, out, [&](std::ostream& s) { s << text << '\n'; });
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  detail::Options o;
  CLI::App app{"Halidon rings, number-theoretic DFT and the RSA-DFT / RSA-HGR cryptosystems", "halidon"};
  app.require_subcommand(1);
  app.add_flag("--deterministic", o.deterministic, "Require --seed for every randomized operation");

  auto* analyze = app.add_subcommand("analyze", "Maximal index, witness root and root census of Z_n");
  analyze->add_option("n", o.n, "Modulus")->required();

  auto* find = app.add_subcommand("find-omega", "Primitive m-th roots of unity modulo n");
  find->add_option("n", o.n, "Modulus")->required();
  find->add_option("m", o.m, "Index")->required();
  auto* all = find->add_flag("--all", o.all, "List every root");
  auto* count = find->add_option("--count", o.count, "List the K smallest roots");
  auto* random = find->add_flag("--random", o.random, "One uniformly random root");
  find->add_option("--seed", o.seed, "Seed for --random");
  all->excludes(count, random);
  count->excludes(random);

  auto* kg = app.add_subcommand("keygen", "Generate an RSA key pair from chosen primes");
  kg->add_option("--primes", o.primes, "Odd primes p1,p2,...")->required();
  kg->add_option("--exps", o.exps, "Exponents e1,e2,... (default all 1)");
  kg->add_option("--pub-exp", o.pub_exp, "Public exponent (default smallest valid >= 3)");
  kg->add_option("--m", o.key_m, "Block length / index (default psi(n))");
  kg->add_option("-o", o.out, "Output directory")->required();

  auto* choose = app.add_subcommand("choose-omega", "Pick a secret root and encrypt it");
  choose->add_option("--pub", o.pub, "Public key file")->required();
  choose->add_option("--seed", o.seed, "Seed");

  auto* recover = app.add_subcommand("recover-omega", "Decrypt and validate a transported root");
  recover->add_option("--priv", o.priv, "Private key file")->required();
  recover->add_option("--c", o.c, "Encrypted root")->required();

  auto add_ring_options = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Modulus")->required();
    sub->add_option("--m", o.m, "Index")->required();
    sub->add_option("--omega", o.omega, "Primitive m-th root of unity")->required();
    sub->add_option("--vec", o.vec, "Input vector")->required();
  };
  auto* dft = app.add_subcommand("dft", "Forward transform");
  add_ring_options(dft);
  auto* idft = app.add_subcommand("idft", "Inverse transform");
  add_ring_options(idft);

  auto* conv = app.add_subcommand("conv", "Cyclic convolution modulo x^m - 1");
  conv->add_option("--n", o.n, "Modulus")->required();
  conv->add_option("--m", o.m, "Length")->required();
  conv->add_option("--vec-a", o.vec_a, "First vector")->required();
  conv->add_option("--vec-b", o.vec_b, "Second vector")->required();

  auto* gr = app.add_subcommand("gr", "Group ring Z_n[C_m]: encode lambdas, decode, invert, check");
  gr->add_option("action", o.gr_action, "encode | decode | invert | check")
      ->required()
      ->check(CLI::IsMember({"encode", "decode", "invert", "check"}));
  add_ring_options(gr);

  auto* table = app.add_subcommand("hgr-table", "Generate a symbol-to-unit table");
  table->add_option("--pub", o.pub, "Public key file")->required();
  table->add_option("--seed", o.seed, "Seed");
  table->add_option("-o", o.out, "Output file");

  std::vector<CLI::Option*> text_options;
  auto add_encrypt_options = [&](CLI::App* sub, bool needs_table) {
    sub->add_option("--pub", o.pub, "Public key file")->required();
    sub->add_option("--omega", o.omega, "Fixed root (default: fresh root from --seed)");
    sub->add_option("--seed", o.seed, "Seed for a fresh root");
    sub->add_flag("--reuse-omega", o.reuse_omega, "Acknowledge a fixed --omega");
    if (needs_table) sub->add_option("--table", o.table, "Table file")->required();
    auto* in = sub->add_option("--in", o.in, "Message file");
    auto* text = sub->add_option("--text", o.text, "Message text");
    in->excludes(text);
    text_options.push_back(text);
    sub->add_option("-o", o.out, "Ciphertext file");
  };
  auto* dft_enc = app.add_subcommand("dft-encrypt", "RSA-DFT encryption");
  add_encrypt_options(dft_enc, false);
  auto* hgr_enc = app.add_subcommand("hgr-encrypt", "RSA-HGR encryption");
  add_encrypt_options(hgr_enc, true);

  auto add_decrypt_options = [&](CLI::App* sub, bool needs_table) {
    sub->add_option("--priv", o.priv, "Private key file")->required();
    if (needs_table) sub->add_option("--table", o.table, "Table file")->required();
    sub->add_option("--in", o.in, "Ciphertext file")->required();
    sub->add_flag("--keep-padding", o.keep_padding, "Keep trailing pad blanks");
    sub->add_option("-o", o.out, "Plaintext file");
  };
  auto* dft_dec = app.add_subcommand("dft-decrypt", "RSA-DFT decryption");
  add_decrypt_options(dft_dec, false);
  auto* hgr_dec = app.add_subcommand("hgr-decrypt", "RSA-HGR decryption");
  add_decrypt_options(hgr_dec, true);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  for (auto* opt : text_options) o.has_text = o.has_text || opt->count() > 0;

  try {
    if (analyze->parsed()) detail::cmd_analyze(o, out);
    else if (find->parsed()) detail::cmd_find_omega(o, out, err);
    else if (kg->parsed()) detail::cmd_keygen(o, out);
    else if (choose->parsed()) detail::cmd_choose_omega(o, out, err);
    else if (recover->parsed()) detail::cmd_recover_omega(o, out);
    else if (dft->parsed()) detail::cmd_dft(o, out, false);
    else if (idft->parsed()) detail::cmd_dft(o, out, true);
    else if (conv->parsed()) detail::cmd_conv(o, out);
    else if (gr->parsed()) detail::cmd_gr(o, out);
    else if (table->parsed()) detail::cmd_hgr_table(o, out, err);
    else if (dft_enc->parsed()) detail::cmd_encrypt(o, out, err, Scheme::rsa_dft);
    else if (hgr_enc->parsed()) detail::cmd_encrypt(o, out, err, Scheme::rsa_hgr);
    else if (dft_dec->parsed()) detail::cmd_decrypt(o, out, Scheme::rsa_dft);
    else if (hgr_dec->parsed()) detail::cmd_decrypt(o, out, Scheme::rsa_hgr);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_mathematical(e.code()) ? kExitMath : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace halidon::cli
