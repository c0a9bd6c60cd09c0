#pragma once

#include <cstdint>
#include <vector>

#include "topo/finite_space.hpp"
#include "topo/ideal.hpp"

namespace topo {

/// Exhaustive topology enumeration is capped here; the universe beyond it is
/// reachable only through the seeded sampler.
inline constexpr unsigned kMaxExhaustivePoints = 5;

/// Quantification bounds for the verifier. sample_budget == 0 means
/// exhaustive; a positive budget keeps roughly that many instances by
/// striding the canonical enumeration order, deterministically.
struct UniverseBounds {
  unsigned max_domain_points = 3;
  unsigned max_codomain_points = 3;
  bool include_ideals = true;
  std::uint64_t sample_budget = 0;
};

/// All labeled topologies on {0, .., n-1}, in canonical order: each open
/// family sorted ascending by characteristic vector, families ordered
/// lexicographically. Enumerates minimal-neighbourhood tables (U[x]
/// containing x with y in U[x] implying U[y] <= U[x]); each valid table is
/// the min_nbhd table of exactly one topology, whose opens are the sets O
/// with U[x] <= O for every x in O.
std::vector<FiniteSpace> enumerate_topologies(unsigned n);

/// All 2^n ideals on the carrier, ordered by ascending generator
/// characteristic vector.
std::vector<Ideal> enumerate_ideals(unsigned n);

/// The ny^nx assignment tables from an nx-point carrier to an ny-point
/// carrier, in lexicographic order of (f(0), .., f(nx-1)), addressable by
/// index so scans can be sharded deterministically.
class MapRange {
 public:
  MapRange(unsigned nx, unsigned ny);
  std::uint64_t size() const noexcept { return count_; }
  std::vector<Point> at(std::uint64_t index) const;

 private:
  unsigned nx_;
  unsigned ny_;
  std::uint64_t count_;
};

MapRange enumerate_maps(unsigned nx, unsigned ny);

/// Deterministic sampled generation for carriers beyond the exhaustive cap:
/// draws minimal-neighbourhood tables from a fixed-seed generator and
/// repairs them to validity by transitive closure. Sampling is with
/// replacement; the same (n, count) always yields the same spaces.
std::vector<FiniteSpace> sample_topologies(unsigned n, std::size_t count);

}  // namespace topo
