#include "format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace spinpair::cli {

std::string format_real(double x) {
  if (std::isnan(x)) return {};
  // Signed zero would make otherwise equal rows differ.
  if (x == 0.0) x = 0.0;
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                 std::chars_format::general, 17);
  return {buf.data(), res.ptr};
}

}  // namespace spinpair::cli
