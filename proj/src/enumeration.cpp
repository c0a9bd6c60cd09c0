#include "topo/enumeration.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace topo {

namespace {

bool valid_nbhd_table(const std::vector<Mask>& tbl, unsigned n) {
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y)
      if (mask_contains(tbl[x], y) && !mask_subset(tbl[y], tbl[x]))
        return false;
  return true;
}

std::vector<Mask> opens_of_table(const std::vector<Mask>& tbl, unsigned n) {
  std::vector<Mask> opens;
  const std::size_t count = std::size_t{1} << n;
  for (std::size_t om = 0; om < count; ++om) {
    const Mask o = Mask(om);
    bool open = true;
    for (Point x = 0; x < n && open; ++x)
      if (mask_contains(o, x)) open = mask_subset(tbl[x], o);
    if (open) opens.push_back(o);
  }
  return opens;
}

}  // namespace

std::vector<FiniteSpace> enumerate_topologies(unsigned n) {
  check_carrier(n);
  if (n > kMaxExhaustivePoints)
    throw Error(Errc::BoundTooLarge,
                "exhaustive enumeration is capped at " +
                    std::to_string(kMaxExhaustivePoints) +
                    " points; use the sampler beyond that");

  std::vector<std::vector<Mask>> families;
  std::vector<Mask> tbl(n);

  // Odometer over all tables with x in U[x]; each digit ranges over the
  // 2^(n-1) masks containing its point.
  const std::size_t digits = std::size_t{1} << (n - 1);
  std::vector<std::size_t> digit(n, 0);
  auto table_of_digit = [&](Point x, std::size_t d) {
    // Spread the n-1 free bits of d around the fixed bit x.
    const Mask low = Mask(d) & (mask_bit(x) - 1);
    const Mask high = (Mask(d) & ~(mask_bit(x) - 1)) << 1;
    return low | high | mask_bit(x);
  };
  while (true) {
    for (Point x = 0; x < n; ++x) tbl[x] = table_of_digit(x, digit[x]);
    if (valid_nbhd_table(tbl, n)) families.push_back(opens_of_table(tbl, n));

    Point pos = 0;
    while (pos < n && ++digit[pos] == digits) digit[pos++] = 0;
    if (pos == n) break;
  }

  std::sort(families.begin(), families.end());
  std::vector<FiniteSpace> out;
  out.reserve(families.size());
  for (auto& fam : families)
    out.push_back(make_space_from_masks(n, std::move(fam)));
  return out;
}

std::vector<Ideal> enumerate_ideals(unsigned n) {
  check_carrier(n);
  std::vector<Ideal> out;
  out.reserve(std::size_t{1} << n);
  for (Mask g = 0; g <= full_mask(n); ++g) out.emplace_back(n, g);
  return out;
}

MapRange::MapRange(unsigned nx, unsigned ny) : nx_(nx), ny_(ny) {
  check_carrier(nx);
  check_carrier(ny);
  count_ = 1;
  for (unsigned i = 0; i < nx; ++i) {
    if (count_ > (std::uint64_t{1} << 62) / ny)
      throw Error(Errc::BoundTooLarge, "too many assignment tables to index");
    count_ *= ny;
  }
}

std::vector<Point> MapRange::at(std::uint64_t index) const {
  if (index >= count_)
    throw Error(Errc::PointOutOfRange,
                "assignment index " + std::to_string(index) + " out of range");
  std::vector<Point> f(nx_);
  // f(0) is the most significant digit, so ascending index is lexicographic
  // ascending on assignment tuples.
  for (unsigned i = nx_; i-- > 0;) {
    f[i] = Point(index % ny_);
    index /= ny_;
  }
  return f;
}

MapRange enumerate_maps(unsigned nx, unsigned ny) { return MapRange(nx, ny); }

std::vector<FiniteSpace> sample_topologies(unsigned n, std::size_t count) {
  check_carrier(n);
  // Fixed seed: sampled universes must be reproducible run to run.
  std::mt19937_64 rng(0x746f706f73616d70ULL ^ (std::uint64_t(n) << 32));
  std::uniform_int_distribution<Mask> dist(0, full_mask(n));

  std::vector<FiniteSpace> out;
  out.reserve(count);
  std::vector<Mask> tbl(n);
  for (std::size_t k = 0; k < count; ++k) {
    for (Point x = 0; x < n; ++x) tbl[x] = dist(rng) | mask_bit(x);
    // Repair to validity: saturate y in U[x] => U[y] <= U[x]. Masks only
    // grow, so this terminates.
    bool changed = true;
    while (changed) {
      changed = false;
      for (Point x = 0; x < n; ++x)
        for (Point y = 0; y < n; ++y)
          if (mask_contains(tbl[x], y) && !mask_subset(tbl[y], tbl[x])) {
            tbl[x] |= tbl[y];
            changed = true;
          }
    }
    out.push_back(make_space_from_masks(n, opens_of_table(tbl, n)));
  }
  return out;
}

}  // namespace topo
