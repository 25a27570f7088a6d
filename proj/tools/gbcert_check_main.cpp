// Standalone trusted checker: the same code path as `gbcert check`, linked
// without the search engine.

#include <CLI11.hpp>

#include <iostream>

#include "check_command.hpp"
#include "gbcert/wire.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Check a Groebner-basis certificate"};
  std::string cert_path = "-";
  app.add_option("cert", cert_path, "certificate or result envelope JSON (default: stdin)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : gbcert::cli::kUsage;
  }
  try {
    return gbcert::cli::run_check(gbcert::cli::read_input(cert_path), std::cout);
  } catch (const gbcert::Error& e) {
    std::cout << gbcert::dump_json(gbcert::encode_result(gbcert::error_envelope(e.code(), e.what())))
              << '\n';
    return gbcert::cli::kUsage;
  }
}
