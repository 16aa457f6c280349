#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gkz/job.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in)
    throw gkz::Error(gkz::ErrorCode::parse_error,
                     "cannot open input file \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Characteristic polynomial of the monodromy at infinity of "
      "A-hypergeometric functions, from the point configuration and the "
      "parameter"};

  std::string input_path = "-";
  std::string j0_arg;
  gkz::JobOptions options;

  app.add_option("--input", input_path,
                 "JSON input file; \"-\" or omitted reads stdin");
  app.add_option("--j0", j0_arg,
                 "1-based coordinate index or \"all\" (overrides the file)");
  app.add_flag("--expand", options.expand,
               "include dense polynomial coefficients");
  app.add_option("--digits", options.digits,
                 "significant digits for floating output (default 15)");
  app.add_flag("--zeta", options.zeta, "include the zeta-form factors");
  app.add_flag("--force", options.force,
               "evaluate despite resonance; output is not certified");
  app.add_option("--format", options.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--check", options.check,
               "run internal invariant assertions on the result");
  CLI11_PARSE(app, argc, argv);

  try {
    if (options.digits < 1 || options.digits > 17)
      throw gkz::Error(gkz::ErrorCode::parse_error,
                       "--digits must be between 1 and 17");
    nlohmann::json input;
    try {
      input = nlohmann::json::parse(read_input(input_path));
    } catch (const nlohmann::json::parse_error& e) {
      throw gkz::Error(gkz::ErrorCode::parse_error,
                       std::string("invalid JSON: ") + e.what());
    }
    gkz::JobSpec spec = gkz::parse_job(input);
    spec.options = options;
    if (!j0_arg.empty()) {
      if (j0_arg == "all") {
        spec.j0.reset();
      } else {
        try {
          spec.j0 = std::stoi(j0_arg);
        } catch (const std::exception&) {
          throw gkz::Error(gkz::ErrorCode::parse_error,
                           "--j0 expects an index or \"all\"");
        }
      }
    }

    gkz::JobReport report = gkz::run_job(spec);
    if (options.format == "json")
      std::cout << gkz::render_json(report, spec).dump(2) << "\n";
    else
      std::cout << gkz::render_text(report, spec);
    return report.exit_code;
  } catch (const gkz::Error& e) {
    std::cerr << gkz::error_code_name(e.code()) << ": " << e.what() << "\n";
    return e.code() == gkz::ErrorCode::resonant_parameter ? 2 : 1;
  }
}
