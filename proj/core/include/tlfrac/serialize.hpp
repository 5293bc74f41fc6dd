#pragma once

#include <string>

#include "tlfrac/dyadic.hpp"

namespace tlfrac {

/// JSON object {"H": float, "f0": float, "f1": float, "levels": [[...],...]}.
/// Floats are printed in shortest round-trip form, so serialize/parse is
/// bit-exact.
std::string expansion_to_json(const HolderExpansion& x);

/// Inverse of expansion_to_json. Throws std::invalid_argument on malformed
/// input or level arrays of the wrong length.
HolderExpansion expansion_from_json(const std::string& text);

void save_expansion(const HolderExpansion& x, const std::string& path);
HolderExpansion load_expansion(const std::string& path);

}  // namespace tlfrac
