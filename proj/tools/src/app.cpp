#include "apnkit_cli/app.hpp"

#include <algorithm>
#include <fstream>
#include <functional>

#include "CLI11.hpp"
#include "apnkit/error.hpp"
#include "apnkit/function_spec.hpp"
#include "apnkit_cli/checks.hpp"
#include "apnkit_cli/commands.hpp"
#include "apnkit_cli/render.hpp"

namespace apnkit::cli {
namespace {

Format parse_format(const std::string& s) {
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  return Format::kText;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int print_checks(const std::string& suite, const std::vector<Check>& checks, Format format, std::ostream& out) {
  const auto failed = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; });
  switch (format) {
    case Format::kJson: {
      json doc;
      doc["suite"] = suite;
      json arr = json::array();
      for (const auto& c : checks) {
        json j;
        j["criterion"] = c.criterion;
        j["tag"] = c.tag;
        j["instance"] = c.instance;
        j["expected"] = c.expected;
        j["measured"] = c.measured;
        j["verdict"] = c.pass ? "PASS" : "FAIL";
        arr.push_back(std::move(j));
      }
      doc["checks"] = std::move(arr);
      doc["passed"] = static_cast<std::int64_t>(checks.size()) - failed;
      doc["failed"] = failed;
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::kCsv:
      out << "criterion,tag,instance,expected,measured,verdict\n";
      for (const auto& c : checks) {
        out << c.criterion << "," << csv_field(c.tag) << "," << csv_field(c.instance) << "," << csv_field(c.expected)
            << "," << csv_field(c.measured) << "," << (c.pass ? "PASS" : "FAIL") << "\n";
      }
      break;
    case Format::kText:
      for (const auto& c : checks) {
        out << (c.pass ? "PASS" : "FAIL") << "  [" << c.criterion << "] " << c.tag << "  " << c.instance
            << "  expected=" << c.expected << "  measured=" << c.measured << "\n";
      }
      out << "# " << checks.size() << " checks, " << failed << " failed\n";
      break;
  }
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Differential analysis of functions over GF(2^n)", "apnkit"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string modulus;
  std::string format = "text";
  std::string out_path;
  std::string suite = "all";
  SuiteOptions opts;

  const auto add_io = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", out_path, "write to this file instead of stdout");
    sub->add_option("--jobs", cfg.jobs, "worker threads (0 = all cores)");
  };
  const auto add_analysis = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "field degree")->required()->check(CLI::Range(2, 16));
    sub->add_option("--modulus", modulus, "irreducible modulus as hex, e.g. 0x13");
    sub->add_option("--func", cfg.func, "inverse | power:d | gold:t | do:i,j,c;... | modinv:a,b,... | table:path");
    sub->add_flag("--hex", cfg.hex, "label elements in hex instead of z^k");
    sub->add_flag("--stream", cfg.stream, "per-row streaming mode for large n");
    sub->add_flag("--force", cfg.force, "allow full enumeration above n=12");
    add_io(sub);
  };

  std::map<std::string, std::function<void(const RunConfig&, std::ostream&)>> commands = {
      {"diffsquare", cmd_diffsquare}, {"ddt", cmd_ddt},     {"spectra", cmd_spectra},
      {"defect", cmd_defect},         {"flats", cmd_flats}, {"report", cmd_report},
  };
  const std::map<std::string, std::string> help = {
      {"diffsquare", "difference square D_aG(x), rows a, columns in canonical order"},
      {"ddt", "difference distribution table and its spectrum"},
      {"spectra", "row and column spectra"},
      {"defect", "D-value, APN-defect and per-row partitions"},
      {"flats", "vanishing flats"},
      {"report", "combined summary"},
  };
  for (const auto& [name, fn] : commands) {
    auto* sub = app.add_subcommand(name, help.at(name));
    add_analysis(sub);
    if (name == "spectra") sub->add_flag("--jwr", cfg.jwr, "also count violating triples");
    if (name == "spectra" || name == "flats") {
      sub->add_flag("--jwr-override", cfg.jwr_override, "allow triple enumeration above n=8");
    }
    if (name == "flats") {
      sub->add_option("--method", cfg.method, "square | jwr")->check(CLI::IsMember({"square", "jwr"}));
    }
  }
  auto* verify = app.add_subcommand("verify", "run the check suites");
  verify->add_option("--suite", suite, "examples | power | f0a | identities | all")
      ->check(CLI::IsMember({"examples", "power", "f0a", "identities", "all"}));
  verify->add_option("--n-max", opts.n_max, "upper n for exhaustive sweeps")->check(CLI::Range(3, 12));
  verify->add_option("--samples", opts.samples, "random tables per n");
  verify->add_option("--seed", opts.seed, "seed for random tables and sampled parameters");
  add_io(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "error: cannot open " << out_path << " for writing\n";
      return kExitUsage;
    }
  }
  std::ostream& sink = out_path.empty() ? out : file;
  cfg.format = parse_format(format);

  try {
    if (verify->parsed()) {
      opts.jobs = cfg.jobs;
      const auto s = *suite_from_string(suite);
      return print_checks(suite, run_suite(s, opts), cfg.format, sink);
    }
    if (!modulus.empty()) cfg.modulus = parse_hex(modulus);
    for (const auto& [name, fn] : commands) {
      if (app.got_subcommand(name)) {
        fn(cfg, sink);
        break;
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  sink.flush();
  return kExitOk;
}

}  // namespace apnkit::cli
