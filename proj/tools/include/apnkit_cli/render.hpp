#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "apnkit/field.hpp"

namespace apnkit::cli {

using json = nlohmann::ordered_json;

std::string hex_string(std::uint32_t v);

// "0", "1", "z^k" by default; "0x.." in hex mode.
class Labeler {
 public:
  Labeler(FieldPtr field, bool hex) : field_(std::move(field)), hex_(hex) {}

  std::string operator()(Element x) const;
  std::vector<std::string> all(std::span<const Element> xs) const;
  json array(std::span<const Element> xs) const;

 private:
  FieldPtr field_;
  bool hex_;
};

std::string join(std::span<const std::string> parts, std::string_view sep);

}  // namespace apnkit::cli
