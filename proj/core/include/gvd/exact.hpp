#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>

namespace gvd {

// Exact arc length / distance with a deterministic lexicographic tiebreak.
//
// A value represents base + eta * tie for an infinitesimal eta > 0.
// Comparison is lexicographic on (base, tie); addition is componentwise.
// Tiebreak words drawn for arcs are confined to 96 bits so that sums and
// differences of up to 2^31 of them stay well inside a signed 128-bit
// accumulator.
struct Exact {
  std::int64_t base = 0;
  __int128 tie = 0;

  constexpr Exact() = default;
  constexpr Exact(std::int64_t b, __int128 t) : base(b), tie(t) {}
  static constexpr Exact from_base(std::int64_t b) { return Exact{b, 0}; }

  friend constexpr bool operator==(const Exact& a, const Exact& b) {
    return a.base == b.base && a.tie == b.tie;
  }
  friend constexpr bool operator!=(const Exact& a, const Exact& b) { return !(a == b); }
  friend constexpr bool operator<(const Exact& a, const Exact& b) {
    return a.base != b.base ? a.base < b.base : a.tie < b.tie;
  }
  friend constexpr bool operator>(const Exact& a, const Exact& b) { return b < a; }
  friend constexpr bool operator<=(const Exact& a, const Exact& b) { return !(b < a); }
  friend constexpr bool operator>=(const Exact& a, const Exact& b) { return !(a < b); }

  friend constexpr Exact operator+(const Exact& a, const Exact& b) {
    return Exact{a.base + b.base, a.tie + b.tie};
  }
  friend constexpr Exact operator-(const Exact& a, const Exact& b) {
    return Exact{a.base - b.base, a.tie - b.tie};
  }
  constexpr Exact operator-() const { return Exact{-base, -tie}; }
  Exact& operator+=(const Exact& o) {
    base += o.base;
    tie += o.tie;
    return *this;
  }
  Exact& operator-=(const Exact& o) {
    base -= o.base;
    tie -= o.tie;
    return *this;
  }

  std::string to_string() const;
};

// Unreached marker for distance labels. Strictly larger than any real
// distance; arithmetic on it is never performed by the library.
inline constexpr Exact kUnreached{std::numeric_limits<std::int64_t>::max(), 0};

inline constexpr bool is_unreached(const Exact& d) { return d.base == kUnreached.base; }

inline const Exact& max(const Exact& a, const Exact& b) { return a < b ? b : a; }
inline const Exact& min(const Exact& a, const Exact& b) { return b < a ? b : a; }

}  // namespace gvd
