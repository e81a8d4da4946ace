#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"search and certify class-number divisibility witnesses for "
               "the cyclic-field pair construction"};
  app.require_subcommand(1);

  std::uint64_t p = 0, q = 0, scan_bound = 0;
  long long m0 = 0, n0 = 0;
  std::vector<std::uint64_t> qs;
  bool emit_tables = false;
  std::string out_file, suite;

  auto* unit = app.add_subcommand("unit", "fundamental unit of Q(sqrt(p))");
  unit->add_option("p", p, "prime = 5 (mod 8)")->required();

  auto* search = app.add_subcommand(
      "search", "scan residue classes passing both certificate conditions");
  search->add_option("p", p, "prime = 5 (mod 8)")->required();
  search->add_option("--q", qs, "auxiliary primes")->required();
  search->add_flag("--emit-tables", emit_tables,
                   "print aligned residue-class and witness tables");
  search->add_option("--scan-bound", scan_bound,
                     "cap on the scan modulus (default 10^7)");

  auto* certify =
      app.add_subcommand("certify", "check one (m0, n0, q) witness and emit "
                                    "the certificate document");
  certify->add_option("p", p, "prime = 5 (mod 8)")->required();
  certify->add_option("m0", m0, "odd index")->required();
  certify->add_option("n0", n0, "odd index")->required();
  certify->add_option("q", q, "auxiliary prime")->required();
  certify->add_option("--out", out_file, "also write the document to a file");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("p", p, "prime = 5 (mod 8)")->required();
  verify
      ->add_option("--suite", suite,
                   "identities | gauss | lemma47 | curves | periods")
      ->required();

  auto* disc = app.add_subcommand(
      "disc", "radicand D(m,n) with its small prime factors");
  disc->add_option("p", p, "prime = 5 (mod 8)")->required();
  disc->add_option("m", m0, "odd index")->required();
  disc->add_option("n", n0, "odd index")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (unit->parsed()) return cycert::cli::cmd_unit(p, std::cout);
  if (search->parsed())
    return cycert::cli::cmd_search(p, qs, emit_tables, scan_bound, std::cout);
  if (certify->parsed())
    return cycert::cli::cmd_certify(p, m0, n0, q, out_file, std::cout);
  if (verify->parsed()) return cycert::cli::cmd_verify(p, suite, std::cout);
  if (disc->parsed()) return cycert::cli::cmd_disc(p, m0, n0, std::cout);
  return 2;
}
