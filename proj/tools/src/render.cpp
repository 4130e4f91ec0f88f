#include "apnkit_cli/render.hpp"

#include <charconv>

namespace apnkit::cli {

std::string hex_string(std::uint32_t v) {
  char buf[16];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, 16);
  (void)ec;
  return "0x" + std::string(buf, end);
}

std::string Labeler::operator()(Element x) const {
  if (hex_) return hex_string(x);
  if (x == 0) return "0";
  if (x == 1) return "1";
  return "z^" + std::to_string(field_->log(x));
}

std::vector<std::string> Labeler::all(std::span<const Element> xs) const {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (Element x : xs) out.push_back((*this)(x));
  return out;
}

json Labeler::array(std::span<const Element> xs) const {
  json out = json::array();
  for (Element x : xs) out.push_back((*this)(x));
  return out;
}

std::string join(std::span<const std::string> parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace apnkit::cli
