#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "topo/error.hpp"

namespace topo {

using Point = unsigned;
using Mask = std::uint32_t;

/// Carriers are index sets {0, .., n-1}. The cap keeps every "for all
/// subsets" scan a flat table of at most 2^16 entries.
inline constexpr unsigned kMaxCarrier = 16;

constexpr Mask mask_bit(Point p) noexcept { return Mask{1} << p; }
constexpr Mask full_mask(unsigned n) noexcept { return (Mask{1} << n) - 1; }
constexpr bool mask_subset(Mask a, Mask b) noexcept { return (a & ~b) == 0; }
constexpr bool mask_contains(Mask m, Point p) noexcept {
  return ((m >> p) & 1u) != 0;
}

inline void check_carrier(unsigned n) {
  if (n == 0) throw Error(Errc::EmptyCarrier, "carrier must have at least one point");
  if (n > kMaxCarrier)
    throw Error(Errc::CarrierTooLarge,
                "carrier of " + std::to_string(n) + " points exceeds the cap of " +
                    std::to_string(kMaxCarrier));
}

/// Subset of a fixed finite carrier, stored as a characteristic vector.
/// Set algebra is total within one carrier; mixing carriers raises
/// CarrierMismatch. Instances are immutable values.
class PointSet {
 public:
  PointSet(unsigned carrier_size, Mask bits) : n_(carrier_size), bits_(bits) {
    check_carrier(carrier_size);
    if (!mask_subset(bits, full_mask(n_)))
      throw Error(Errc::PointOutOfRange,
                  "set bits fall outside the carrier of " + std::to_string(n_) +
                      " points");
  }

  static PointSet empty(unsigned n) { return PointSet(n, 0); }
  static PointSet full(unsigned n) { return PointSet(n, full_mask(n)); }
  static PointSet singleton(unsigned n, Point p) {
    check_point(n, p);
    return PointSet(n, mask_bit(p));
  }
  static PointSet of(unsigned n, std::initializer_list<Point> pts) {
    Mask m = 0;
    for (Point p : pts) {
      check_point(n, p);
      m |= mask_bit(p);
    }
    return PointSet(n, m);
  }

  unsigned carrier_size() const noexcept { return n_; }
  Mask bits() const noexcept { return bits_; }
  bool is_empty() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept { return bits_ == full_mask(n_); }
  unsigned size() const noexcept { return unsigned(std::popcount(bits_)); }

  bool contains(Point p) const {
    check_point(n_, p);
    return mask_contains(bits_, p);
  }

  bool subset_of(const PointSet& o) const {
    check_same(o);
    return mask_subset(bits_, o.bits_);
  }
  bool intersects(const PointSet& o) const {
    check_same(o);
    return (bits_ & o.bits_) != 0;
  }

  PointSet united(const PointSet& o) const {
    check_same(o);
    return PointSet(n_, bits_ | o.bits_);
  }
  PointSet intersected(const PointSet& o) const {
    check_same(o);
    return PointSet(n_, bits_ & o.bits_);
  }
  PointSet minus(const PointSet& o) const {
    check_same(o);
    return PointSet(n_, bits_ & ~o.bits_);
  }
  PointSet complemented() const { return PointSet(n_, full_mask(n_) & ~bits_); }

  std::vector<Point> points() const {
    std::vector<Point> out;
    out.reserve(size());
    for (Mask m = bits_; m != 0; m &= m - 1)
      out.push_back(Point(std::countr_zero(m)));
    return out;
  }

  /// Rendered as "{0,2}"; used in diagnostics.
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (Point p : points()) {
      if (!first) s += ',';
      s += std::to_string(p);
      first = false;
    }
    return s + "}";
  }

  friend bool operator==(const PointSet& a, const PointSet& b) noexcept {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const PointSet& a, const PointSet& b) noexcept {
    return !(a == b);
  }

 private:
  static void check_point(unsigned n, Point p) {
    check_carrier(n);
    if (p >= n)
      throw Error(Errc::PointOutOfRange,
                  "point " + std::to_string(p) + " outside carrier of " +
                      std::to_string(n) + " points");
  }
  void check_same(const PointSet& o) const {
    if (n_ != o.n_)
      throw Error(Errc::CarrierMismatch,
                  "operands live on carriers of " + std::to_string(n_) + " and " +
                      std::to_string(o.n_) + " points");
  }

  unsigned n_;
  Mask bits_;
};

}  // namespace topo
