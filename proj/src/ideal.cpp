#include "topo/ideal.hpp"

namespace topo {

std::vector<PointSet> Ideal::members() const {
  std::vector<PointSet> out;
  out.reserve(member_count());
  // Submask walk: descends through all subsets of the generator.
  Mask sub = gen_;
  while (true) {
    out.emplace_back(n_, sub);
    if (sub == 0) break;
    sub = (sub - 1) & gen_;
  }
  return out;
}

Ideal make_ideal(unsigned n, const PointSet& generator) {
  if (generator.carrier_size() != n)
    throw Error(Errc::CarrierMismatch,
                "generator lives on a carrier of " +
                    std::to_string(generator.carrier_size()) +
                    " points, expected " + std::to_string(n));
  return Ideal(n, generator.bits());
}

Ideal make_ideal(unsigned n, const std::vector<PointSet>& members) {
  check_carrier(n);
  std::vector<Mask> ms;
  ms.reserve(members.size());
  Mask gen = 0;
  bool has_empty = false;
  for (const PointSet& p : members) {
    if (p.carrier_size() != n)
      throw Error(Errc::CarrierMismatch,
                  "member declared on a carrier of " +
                      std::to_string(p.carrier_size()) + " points, expected " +
                      std::to_string(n));
    ms.push_back(p.bits());
    gen |= p.bits();
    has_empty |= p.bits() == 0;
  }
  if (!has_empty)
    throw Error(Errc::MissingEmpty, "an ideal must contain the empty set");

  std::vector<bool> present(std::size_t{1} << n, false);
  for (Mask m : ms) present[m] = true;

  for (Mask m : ms) {
    // Down-closure: every subset of a member is a member.
    Mask sub = m;
    while (sub != 0) {
      sub = (sub - 1) & m;
      if (!present[sub])
        throw Error(Errc::NotDownClosed,
                    "member " + PointSet(n, m).to_string() + " has subset " +
                        PointSet(n, sub).to_string() + " outside the family");
    }
  }
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (!present[ms[i] | ms[j]])
        throw Error(Errc::NotUnionClosed,
                    "union of members " + PointSet(n, ms[i]).to_string() +
                        " and " + PointSet(n, ms[j]).to_string() +
                        " is outside the family");

  // A validated family is the powerset of the union of its members.
  return Ideal(n, gen);
}

bool ideal_contains(const Ideal& ideal, const PointSet& a) {
  if (a.carrier_size() != ideal.carrier_size())
    throw Error(Errc::CarrierMismatch,
                "set lives on a carrier of " + std::to_string(a.carrier_size()) +
                    " points, ideal has " +
                    std::to_string(ideal.carrier_size()));
  return ideal.contains_mask(a.bits());
}

}  // namespace topo
