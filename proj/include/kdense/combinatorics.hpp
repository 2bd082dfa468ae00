#pragma once

#include <cstdint>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>

#include "kdense/error.hpp"

namespace kdense {

using u128 = unsigned __int128;

// Exact binomial coefficient. Returns 0 when r < 0 or r > n.
// Throws OverflowError if the result does not fit in 64 bits.
inline std::uint64_t binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  u128 c = 1;
  for (std::int64_t i = 0; i < r; ++i) {
    // c * (n - i) / (i + 1) stays integral at every step.
    c = c * static_cast<u128>(n - i) / static_cast<u128>(i + 1);
    if (c > std::numeric_limits<std::uint64_t>::max())
      throw OverflowError("binomial(" + std::to_string(n) + ", " + std::to_string(r) +
                          ") exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(c);
}

inline std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return {s.rbegin(), s.rend()};
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (b > std::numeric_limits<std::uint64_t>::max() - a)
    throw OverflowError("64-bit counter overflow");
  return a + b;
}

// An exact k-clique density |C_k(S)| / |S|.
struct Density {
  std::uint64_t count = 0;
  std::uint64_t size = 0;

  double value() const {
    return size == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(size);
  }

  // Rendered with two decimals, rounding half up on the exact rational.
  std::string to_fixed2() const {
    if (size == 0) return "0.00";
    u128 scaled = static_cast<u128>(count) * 100;
    u128 q = scaled / size;
    u128 rem = scaled % size;
    if (rem * 2 >= size) ++q;
    std::string whole = to_string(q / 100);
    auto frac = static_cast<unsigned>(q % 100);
    std::ostringstream os;
    os << whole << '.' << std::setw(2) << std::setfill('0') << frac;
    return os.str();
  }
};

// Empty sets compare as density zero.
inline int compare(const Density& a, const Density& b) {
  if (a.size == 0 || b.size == 0) {
    bool az = a.size == 0 || a.count == 0;
    bool bz = b.size == 0 || b.count == 0;
    if (az && bz) return 0;
    if (az) return -1;
    if (bz) return 1;
  }
  u128 lhs = static_cast<u128>(a.count) * b.size;
  u128 rhs = static_cast<u128>(b.count) * a.size;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

inline bool operator<(const Density& a, const Density& b) { return compare(a, b) < 0; }
inline bool operator==(const Density& a, const Density& b) { return compare(a, b) == 0; }

}  // namespace kdense
