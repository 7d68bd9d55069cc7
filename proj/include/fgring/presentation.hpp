#pragma once

#include <string_view>

#include "fgring/spectrum.hpp"

namespace fgring {

/// Parses `ring Z[v1,...,vn] / (g1, ..., gm)`. The forms `ring Z`,
/// `ring Z[x]` and `/ (0)` are accepted. Errors are ParseError with line and
/// column; unknown and duplicate variable names are errors.
RingPresentation parse_presentation(std::string_view text);

}  // namespace fgring
