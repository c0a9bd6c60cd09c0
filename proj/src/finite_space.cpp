#include "topo/finite_space.hpp"

#include <algorithm>
#include <cassert>

namespace topo {

namespace {

std::string pair_text(unsigned n, Mask a, Mask b) {
  return PointSet(n, a).to_string() + " and " + PointSet(n, b).to_string();
}

}  // namespace

std::vector<PointSet> FiniteSpace::opens() const {
  std::vector<PointSet> out;
  out.reserve(opens_.size());
  for (Mask m : opens_) out.emplace_back(n_, m);
  return out;
}

bool FiniteSpace::is_open_mask(Mask m) const noexcept {
  return std::binary_search(opens_.begin(), opens_.end(), m);
}

bool FiniteSpace::is_closed_mask(Mask m) const noexcept {
  return std::binary_search(closeds_.begin(), closeds_.end(), m);
}

FiniteSpace make_space_from_masks(unsigned n, std::vector<Mask> opens) {
  check_carrier(n);
  const Mask full = full_mask(n);
  for (Mask m : opens)
    if (!mask_subset(m, full))
      throw Error(Errc::PointOutOfRange,
                  "open set " + std::to_string(m) +
                      " falls outside the carrier of " + std::to_string(n) +
                      " points");

  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());

  if (opens.empty() || opens.front() != 0 || opens.back() != full)
    throw Error(Errc::MissingEmptyOrFull,
                "the family must contain the empty set and the whole carrier");

  // Membership bitmap makes the pairwise closure check O(|F|^2) with O(1)
  // probes; a family holding every subset needs no pair scan at all.
  if (opens.size() < (std::size_t{1} << n)) {
    std::vector<bool> present(std::size_t{1} << n, false);
    for (Mask m : opens) present[m] = true;
    for (std::size_t i = 0; i < opens.size(); ++i) {
      for (std::size_t j = i + 1; j < opens.size(); ++j) {
        const Mask u = opens[i] | opens[j];
        if (!present[u])
          throw Error(Errc::NotClosedUnderUnion,
                      "union of opens " + pair_text(n, opens[i], opens[j]) +
                          " is missing");
        const Mask v = opens[i] & opens[j];
        if (!present[v])
          throw Error(Errc::NotClosedUnderIntersection,
                      "intersection of opens " +
                          pair_text(n, opens[i], opens[j]) + " is missing");
      }
    }
  }

  FiniteSpace s;
  s.n_ = n;
  s.opens_ = std::move(opens);

  s.closeds_.reserve(s.opens_.size());
  for (Mask m : s.opens_) s.closeds_.push_back(full & ~m);
  std::sort(s.closeds_.begin(), s.closeds_.end());

  s.min_nbhd_.assign(n, full);
  for (Mask m : s.opens_)
    for (Point x = 0; x < n; ++x)
      if (mask_contains(m, x)) s.min_nbhd_[x] &= m;

  // The minimal neighbourhood is a finite intersection of opens, hence open.
  for (Point x = 0; x < n; ++x) assert(s.is_open_mask(s.min_nbhd_[x]));

  s.cl_min_nbhd_.resize(n);
  for (Point x = 0; x < n; ++x)
    s.cl_min_nbhd_[x] = closure_mask(s, s.min_nbhd_[x]);

  return s;
}

FiniteSpace make_space(unsigned n, const std::vector<PointSet>& opens) {
  std::vector<Mask> masks;
  masks.reserve(opens.size());
  for (const PointSet& p : opens) {
    if (p.carrier_size() != n)
      throw Error(Errc::CarrierMismatch,
                  "open set declared on a carrier of " +
                      std::to_string(p.carrier_size()) + " points, expected " +
                      std::to_string(n));
    masks.push_back(p.bits());
  }
  return make_space_from_masks(n, std::move(masks));
}

FiniteSpace discrete_space(unsigned n) {
  check_carrier(n);
  std::vector<Mask> opens(std::size_t{1} << n);
  for (std::size_t m = 0; m < opens.size(); ++m) opens[m] = Mask(m);
  return make_space_from_masks(n, std::move(opens));
}

FiniteSpace indiscrete_space(unsigned n) {
  check_carrier(n);
  return make_space_from_masks(n, {0, full_mask(n)});
}

Mask closure_mask(const FiniteSpace& s, Mask a) {
  Mask r = 0;
  const auto& nb = s.min_nbhd_table();
  for (Point x = 0; x < s.carrier_size(); ++x)
    if ((nb[x] & a) != 0) r |= mask_bit(x);
  return r;
}

Mask interior_mask(const FiniteSpace& s, Mask a) {
  const Mask full = full_mask(s.carrier_size());
  return full & ~closure_mask(s, full & ~a);
}

void check_carrier_match(const FiniteSpace& s, const PointSet& a) {
  if (a.carrier_size() != s.carrier_size())
    throw Error(Errc::CarrierMismatch,
                "set lives on a carrier of " + std::to_string(a.carrier_size()) +
                    " points, space has " + std::to_string(s.carrier_size()));
}

PointSet closure(const FiniteSpace& s, const PointSet& a) {
  check_carrier_match(s, a);
  return PointSet(s.carrier_size(), closure_mask(s, a.bits()));
}

PointSet interior(const FiniteSpace& s, const PointSet& a) {
  check_carrier_match(s, a);
  return PointSet(s.carrier_size(), interior_mask(s, a.bits()));
}

PointSet minimal_nbhd(const FiniteSpace& s, Point x) {
  if (x >= s.carrier_size())
    throw Error(Errc::PointOutOfRange,
                "point " + std::to_string(x) + " outside carrier of " +
                    std::to_string(s.carrier_size()) + " points");
  return PointSet(s.carrier_size(), s.min_nbhd_table()[x]);
}

}  // namespace topo
