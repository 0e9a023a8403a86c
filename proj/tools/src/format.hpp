#pragma once

#include <string>

namespace spinpair::cli {

/// 17 significant digits, '.' separator, no locale. NaN becomes "".
std::string format_real(double x);

}  // namespace spinpair::cli
