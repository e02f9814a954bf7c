#pragma once

#include <string>

namespace sz {

// Round-trip double formatting (%.17g) with "-inf"/"inf" tokens, used by all
// text emitters so output is byte-reproducible across runs.
std::string fmt_g17(double x);

// Compact formatting (%g) for labels such as gamma column headers.
std::string fmt_label(double x);

}  // namespace sz
