#include "check_command.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <ostream>

#include "gbcert/checker.hpp"
#include "gbcert/wire.hpp"

namespace gbcert::cli {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::MalformedJson, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int run_check(const std::string& text, std::ostream& out) {
  Certificate cert;
  try {
    Json doc = parse_json(text);
    if (doc.is_object() && doc.contains("status")) {
      ResultEnvelope env = decode_result(doc);
      if (!env.certificate) throw Error(Errc::MalformedJson, "envelope carries no certificate");
      cert = std::move(*env.certificate);
    } else {
      cert = decode_certificate(doc);
    }
  } catch (const Error& e) {
    out << dump_json(encode_result(error_envelope(e.code(), e.what()))) << '\n';
    return kUsage;
  }
  CheckReport report = check_certificate(cert);
  out << dump_json(encode_report(report)) << '\n';
  return report.accepted ? kPositive : kRejected;
}

}  // namespace gbcert::cli
