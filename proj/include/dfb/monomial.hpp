#pragma once

#include <array>
#include <cstdint>
#include <functional>

namespace dfb {

constexpr int kMaxVars = 10;

/// Exponent vector with its cached weighted degree.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::int32_t w = 0;

  bool operator==(const Monomial& o) const { return w == o.w && e == o.e; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  bool is_one() const { return w == 0 && e == std::array<std::uint16_t, kMaxVars>{}; }

  bool divides(const Monomial& o) const {
    if (w > o.w) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] + o.e[i]);
    r.w = w + o.w;
    return r;
  }

  // Caller guarantees o divides *this.
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] - o.e[i]);
    r.w = w - o.w;
    return r;
  }

  // The weight of the lcm depends on the variable weights, which only the
  // ring knows; see PolyRing::lcm.

  bool coprime(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }
};

/// Weighted degree reverse lexicographic comparison: returns >0 if a > b.
inline int compare_degrevlex(const Monomial& a, const Monomial& b) {
  if (a.w != b.w) return a.w > b.w ? 1 : -1;
  for (int i = kMaxVars - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  return 0;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : m.e) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

}  // namespace dfb
