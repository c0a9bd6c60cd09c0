#pragma once

#include <vector>

#include "topo/point_set.hpp"

namespace topo {

/// Ideal on a finite carrier. Every ideal on a finite set is principal: it is
/// the full powerset of its largest member M (the generator), so membership
/// is a single subset test A <= M.
class Ideal {
 public:
  Ideal(unsigned carrier_size, Mask generator)
      : n_(carrier_size), gen_(generator) {
    check_carrier(carrier_size);
    if (!mask_subset(generator, full_mask(n_)))
      throw Error(Errc::PointOutOfRange, "generator falls outside the carrier");
  }

  static Ideal trivial(unsigned n) { return Ideal(n, 0); }
  static Ideal powerset(unsigned n) { return Ideal(n, full_mask(n)); }

  unsigned carrier_size() const noexcept { return n_; }
  Mask generator_mask() const noexcept { return gen_; }
  PointSet generator() const { return PointSet(n_, gen_); }

  bool contains_mask(Mask a) const noexcept { return mask_subset(a, gen_); }

  /// The member family P(generator), materialized on demand.
  std::vector<PointSet> members() const;
  std::size_t member_count() const noexcept {
    return std::size_t{1} << std::popcount(gen_);
  }

  friend bool operator==(const Ideal& a, const Ideal& b) noexcept {
    return a.n_ == b.n_ && a.gen_ == b.gen_;
  }
  friend bool operator!=(const Ideal& a, const Ideal& b) noexcept {
    return !(a == b);
  }

 private:
  unsigned n_;
  Mask gen_;
};

Ideal make_ideal(unsigned n, const PointSet& generator);

/// Validates an explicitly listed member family (must contain the empty set,
/// be down-closed and union-closed; violations raise MissingEmpty /
/// NotDownClosed / NotUnionClosed) and collapses it to its generator.
Ideal make_ideal(unsigned n, const std::vector<PointSet>& members);

bool ideal_contains(const Ideal& ideal, const PointSet& a);

}  // namespace topo
