#include "ramsum/wide_int.hpp"

#include <algorithm>

namespace ramsum {

std::string to_string(WideInt v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  // Work with negative values so the minimum representable value is safe.
  std::string digits;
  WideInt r = negative ? v : -v;
  while (r != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(r % 10)));
    r /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

}  // namespace ramsum
