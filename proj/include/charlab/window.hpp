#pragma once

#include <algorithm>
#include <limits>

namespace charlab {

// Exponents are tracked in half-units throughout (q_half = 2 * exponent).
inline constexpr int kInf2 = std::numeric_limits<int>::max() / 4;

// Knowledge window of a truncated series.  Coefficients with exponent in
// [lo2, hi2] are exact.  floor_known: no terms below lo2 at all.  ceil_known:
// no terms above hi2.  Both flags set means the object is the whole series.
struct Window {
  int lo2 = 0;
  int hi2 = 0;
  bool floor_known = true;
  bool ceil_known = true;

  static Window entire(int lo2, int hi2) { return {lo2, hi2, true, true}; }
  static Window truncated(int lo2, int hi2) { return {lo2, hi2, true, false}; }

  bool is_entire() const { return floor_known && ceil_known; }
  bool empty() const { return lo2 > hi2; }

  // Effective knowledge interval (flags extend it to +-infinity).
  int known_lo() const { return floor_known ? -kInf2 : lo2; }
  int known_hi() const { return ceil_known ? kInf2 : hi2; }
  // Support bounds.
  int support_lo() const { return floor_known ? lo2 : -kInf2; }
  int support_hi() const { return ceil_known ? hi2 : kInf2; }

  Window negated() const { return {-hi2, -lo2, ceil_known, floor_known}; }

  friend Window add_windows(const Window& a, const Window& b) {
    Window r;
    r.floor_known = a.floor_known && b.floor_known;
    r.ceil_known = a.ceil_known && b.ceil_known;
    int klo = std::max(a.known_lo(), b.known_lo());
    int khi = std::min(a.known_hi(), b.known_hi());
    r.lo2 = r.floor_known ? std::min(a.lo2, b.lo2) : klo;
    r.hi2 = r.ceil_known ? std::max(a.hi2, b.hi2) : khi;
    return r;
  }

  friend Window mul_windows(const Window& a, const Window& b) {
    auto clamp_add = [](int x, int y) {
      if (x >= kInf2 || y >= kInf2) return kInf2;
      if (x <= -kInf2 || y <= -kInf2) return -kInf2;
      return x + y;
    };
    Window r;
    r.floor_known = a.floor_known && b.floor_known;
    r.ceil_known = a.ceil_known && b.ceil_known;
    // pollution from the four unknown regions
    int hi = kInf2, lo = -kInf2;
    if (!a.ceil_known) hi = std::min(hi, clamp_add(a.hi2, b.support_lo()));
    if (!b.ceil_known) hi = std::min(hi, clamp_add(b.hi2, a.support_lo()));
    if (!a.floor_known) lo = std::max(lo, clamp_add(a.lo2, b.support_hi()));
    if (!b.floor_known) lo = std::max(lo, clamp_add(b.lo2, a.support_hi()));
    r.lo2 = r.floor_known ? clamp_add(a.lo2, b.lo2) : lo;
    r.hi2 = r.ceil_known ? clamp_add(a.hi2, b.hi2) : hi;
    return r;
  }
};

}  // namespace charlab
