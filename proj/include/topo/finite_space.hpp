#pragma once

#include <vector>

#include "topo/point_set.hpp"

namespace topo {

/// Finite topological space: a validated family of open sets over the
/// carrier {0, .., n-1}, with the closed family and the minimal-neighbourhood
/// table precomputed at construction.
///
/// min_nbhd(x) is the intersection of all opens containing x; on a finite
/// space it is itself open and is the smallest neighbourhood of x, which
/// collapses every "for all opens containing x" quantifier to a single test.
///
/// Opens are stored sorted ascending by characteristic vector; two spaces
/// compare equal iff they have the same carrier and the same open family.
class FiniteSpace {
 public:
  unsigned carrier_size() const noexcept { return n_; }
  const std::vector<Mask>& open_masks() const noexcept { return opens_; }
  const std::vector<Mask>& closed_masks() const noexcept { return closeds_; }
  const std::vector<Mask>& min_nbhd_table() const noexcept { return min_nbhd_; }

  /// Closure of the minimal neighbourhood, per point. Cached because the
  /// theta operators evaluate it for every point of every argument.
  const std::vector<Mask>& cl_min_nbhd_table() const noexcept {
    return cl_min_nbhd_;
  }

  std::size_t open_count() const noexcept { return opens_.size(); }
  PointSet open_at(std::size_t i) const { return PointSet(n_, opens_.at(i)); }
  std::vector<PointSet> opens() const;

  bool is_open_mask(Mask m) const noexcept;
  bool is_closed_mask(Mask m) const noexcept;

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) noexcept {
    return a.n_ == b.n_ && a.opens_ == b.opens_;
  }
  friend bool operator!=(const FiniteSpace& a, const FiniteSpace& b) noexcept {
    return !(a == b);
  }

 private:
  FiniteSpace() = default;
  friend FiniteSpace make_space_from_masks(unsigned n, std::vector<Mask> opens);

  unsigned n_ = 0;
  std::vector<Mask> opens_;       // sorted ascending
  std::vector<Mask> closeds_;     // complements of opens, sorted ascending
  std::vector<Mask> min_nbhd_;    // indexed by point
  std::vector<Mask> cl_min_nbhd_; // indexed by point
};

/// Validates and canonicalizes an open family. Requirements: 1 <= n <= cap,
/// every member within the carrier, the empty set and the carrier present,
/// the family closed under pairwise union and intersection. Violations raise
/// MissingEmptyOrFull / NotClosedUnderUnion / NotClosedUnderIntersection,
/// naming a violating pair where applicable.
FiniteSpace make_space_from_masks(unsigned n, std::vector<Mask> opens);
FiniteSpace make_space(unsigned n, const std::vector<PointSet>& opens);

FiniteSpace discrete_space(unsigned n);
FiniteSpace indiscrete_space(unsigned n);

/// x lies in closure(A) iff min_nbhd(x) meets A.
Mask closure_mask(const FiniteSpace& s, Mask a);
/// Largest open inside A; computed as the complement of closure(complement).
Mask interior_mask(const FiniteSpace& s, Mask a);

PointSet closure(const FiniteSpace& s, const PointSet& a);
PointSet interior(const FiniteSpace& s, const PointSet& a);
PointSet minimal_nbhd(const FiniteSpace& s, Point x);

/// Raises CarrierMismatch unless a lives on the carrier of s.
void check_carrier_match(const FiniteSpace& s, const PointSet& a);

}  // namespace topo
