#pragma once

#include <iosfwd>

namespace multiplane::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotGeneral = 1;
inline constexpr int kExitInvalidInput = 2;

/// Entry point of the multiplane tool. JSON goes to `out` (or to the -o
/// file), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace multiplane::cli
