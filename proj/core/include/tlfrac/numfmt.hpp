#pragma once

#include <string>

namespace tlfrac {

/// Shortest decimal representation that round-trips to the same double
/// (std::to_chars). Used for every CSV / JSON-adjacent number we emit, so
/// identical runs produce byte-identical files.
std::string format_shortest(double v);

/// Fixed 17 significant digits, the printing convention of the CLI scalars.
std::string format_sig17(double v);

}  // namespace tlfrac
