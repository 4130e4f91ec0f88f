#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "apnkit/field.hpp"
#include "apnkit/functions.hpp"

namespace apnkit {

/// Builds a function from a textual description:
///   inverse | power:<d> | gold:<t> | do:<i>,<j>,<hex>[;<i>,<j>,<hex>...]
///   | modinv:<hex>,<hex>[,<hex>...] | table:<path>
/// Hex values may carry a 0x prefix. Table files hold q hex values, one per
/// line, in canonical order; blank lines and lines starting with # are skipped.
/// Throws InvalidSpec on syntax errors.
FuncTable parse_function(const FieldPtr& field, std::string_view spec);

FuncTable read_table(const FieldPtr& field, std::istream& in);

/// Parses a hex element ("1f" or "0x1f"); throws InvalidSpec.
std::uint32_t parse_hex(std::string_view s);

}  // namespace apnkit
