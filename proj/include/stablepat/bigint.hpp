#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace stablepat {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Stirling number of the second kind S(s, k), exact.
inline BigInt stirling2(int s, int k) {
  if (s < 0 || k < 0) return 0;
  // row-by-row recurrence S(i, j) = j S(i-1, j) + S(i-1, j-1)
  std::vector<BigInt> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= s; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

}  // namespace stablepat
