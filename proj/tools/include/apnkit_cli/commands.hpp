#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace apnkit::cli {

enum class Format { kText, kJson, kCsv };

struct RunConfig {
  unsigned n = 0;
  std::optional<std::uint32_t> modulus;
  std::string func = "inverse";
  Format format = Format::kText;
  unsigned jobs = 0;
  bool stream = false;
  bool force = false;
  bool hex = false;
  bool jwr = false;           // spectra: also count violating triples
  bool jwr_override = false;  // lift the n <= 8 cap on triple enumeration
  std::string method = "square";  // flats: square | jwr
};

// Full enumeration above this degree needs --force (or --stream where offered).
inline constexpr unsigned kFullLimit = 12;
inline constexpr unsigned kJwrLimit = 8;

void cmd_diffsquare(const RunConfig& cfg, std::ostream& out);
void cmd_ddt(const RunConfig& cfg, std::ostream& out);
void cmd_spectra(const RunConfig& cfg, std::ostream& out);
void cmd_defect(const RunConfig& cfg, std::ostream& out);
void cmd_flats(const RunConfig& cfg, std::ostream& out);
void cmd_report(const RunConfig& cfg, std::ostream& out);

}  // namespace apnkit::cli
