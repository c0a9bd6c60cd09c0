#include "topo/operators.hpp"

#include <string>

namespace topo {

namespace {

void check_ideal_match(const FiniteSpace& s, const Ideal& i) {
  if (i.carrier_size() != s.carrier_size())
    throw Error(Errc::CarrierMismatch,
                "ideal lives on a carrier of " +
                    std::to_string(i.carrier_size()) + " points, space has " +
                    std::to_string(s.carrier_size()));
}

/// Wraps the scan-and-validate construction of a derived topology. The scan
/// keeps exactly the fixed sets of the given predicate; the validating
/// constructor is kept as a safety net and must never fire.
template <typename Pred>
FiniteSpace derived_topology(const FiniteSpace& s, Pred&& is_member) {
  const std::size_t count = std::size_t{1} << s.carrier_size();
  std::vector<Mask> opens;
  for (std::size_t m = 0; m < count; ++m)
    if (is_member(Mask(m))) opens.push_back(Mask(m));
  try {
    return make_space_from_masks(s.carrier_size(), std::move(opens));
  } catch (const Error& e) {
    throw Error(Errc::InternalInvariantViolation,
                std::string("derived family failed topology validation: ") +
                    e.what());
  }
}

}  // namespace

Mask theta_interior_mask(const FiniteSpace& s, Mask a) {
  // x qualifies iff Cl(U) <= A for some open U containing x. Closure is
  // monotone, so the minimal neighbourhood is the best candidate.
  Mask r = 0;
  const auto& clmin = s.cl_min_nbhd_table();
  for (Point x = 0; x < s.carrier_size(); ++x)
    if (mask_contains(a, x) && mask_subset(clmin[x], a)) r |= mask_bit(x);
  return r;
}

PointSet theta_interior(const FiniteSpace& s, const PointSet& a) {
  check_carrier_match(s, a);
  return PointSet(s.carrier_size(), theta_interior_mask(s, a.bits()));
}

Mask theta_closure_mask(const FiniteSpace& s, Mask a) {
  Mask r = 0;
  const auto& clmin = s.cl_min_nbhd_table();
  for (Point x = 0; x < s.carrier_size(); ++x)
    if ((clmin[x] & a) != 0) r |= mask_bit(x);
  return r;
}

PointSet theta_closure(const FiniteSpace& s, const PointSet& a) {
  check_carrier_match(s, a);
  return PointSet(s.carrier_size(), theta_closure_mask(s, a.bits()));
}

FiniteSpace tau_theta(const FiniteSpace& s) {
  return derived_topology(
      s, [&](Mask m) { return theta_interior_mask(s, m) == m; });
}

PointSet tau_theta_interior(const FiniteSpace& s, const PointSet& a) {
  check_carrier_match(s, a);
  return PointSet(s.carrier_size(),
                  interior_mask(tau_theta(s), a.bits()));
}

Mask local_function_mask(const FiniteSpace& s, const Ideal& i, Mask a) {
  Mask r = 0;
  const auto& nb = s.min_nbhd_table();
  for (Point x = 0; x < s.carrier_size(); ++x)
    if (!i.contains_mask(a & nb[x])) r |= mask_bit(x);
  return r;
}

PointSet local_function(const FiniteSpace& s, const Ideal& i,
                        const PointSet& a) {
  check_carrier_match(s, a);
  check_ideal_match(s, i);
  return PointSet(s.carrier_size(), local_function_mask(s, i, a.bits()));
}

Mask star_closure_mask(const FiniteSpace& s, const Ideal& i, Mask a) {
  return a | local_function_mask(s, i, a);
}

PointSet star_closure(const FiniteSpace& s, const Ideal& i, const PointSet& a) {
  check_carrier_match(s, a);
  check_ideal_match(s, i);
  return PointSet(s.carrier_size(), star_closure_mask(s, i, a.bits()));
}

FiniteSpace tau_star(const FiniteSpace& s, const Ideal& i) {
  check_ideal_match(s, i);
  const Mask full = full_mask(s.carrier_size());
  return derived_topology(s, [&](Mask m) {
    const Mask c = full & ~m;
    return star_closure_mask(s, i, c) == c;
  });
}

Mask gamma_mask(const FiniteSpace& s, const Ideal& i, Mask a) {
  Mask r = 0;
  const auto& clmin = s.cl_min_nbhd_table();
  for (Point x = 0; x < s.carrier_size(); ++x)
    if (!i.contains_mask(clmin[x] & a)) r |= mask_bit(x);
  return r;
}

PointSet gamma(const FiniteSpace& s, const Ideal& i, const PointSet& a) {
  check_carrier_match(s, a);
  check_ideal_match(s, i);
  return PointSet(s.carrier_size(), gamma_mask(s, i, a.bits()));
}

Mask psi_gamma_mask(const FiniteSpace& s, const Ideal& i, Mask a) {
  const Mask full = full_mask(s.carrier_size());
  return full & ~gamma_mask(s, i, full & ~a);
}

PointSet psi_gamma(const FiniteSpace& s, const Ideal& i, const PointSet& a) {
  check_carrier_match(s, a);
  check_ideal_match(s, i);
  return PointSet(s.carrier_size(), psi_gamma_mask(s, i, a.bits()));
}

FiniteSpace sigma(const FiniteSpace& s, const Ideal& i) {
  check_ideal_match(s, i);
  return derived_topology(
      s, [&](Mask m) { return mask_subset(m, psi_gamma_mask(s, i, m)); });
}

ClSequence cl_sequence(const FiniteSpace& s, const Ideal& i,
                       const PointSet& a) {
  check_carrier_match(s, a);
  check_ideal_match(s, i);
  const unsigned n = s.carrier_size();

  ClSequence seq;
  Mask cur = a.bits();
  seq.stages.emplace_back(n, cur);
  // The chain grows strictly until it stabilizes, so it stabilizes within
  // carrier_size steps; the guard can only fire on a broken Gamma.
  for (std::size_t k = 0; k <= n; ++k) {
    const Mask next = cur | gamma_mask(s, i, cur);
    seq.stages.emplace_back(n, next);
    if (next == cur) {
      seq.stabilized_at = k;
      return seq;
    }
    cur = next;
  }
  throw Error(Errc::NonStabilization,
              "closure recursion failed to stabilize within " +
                  std::to_string(n) + " steps");
}

Mask sigma_closure_mask(const FiniteSpace& s, const Ideal& i, Mask a) {
  Mask cur = a;
  for (unsigned k = 0; k <= s.carrier_size(); ++k) {
    const Mask next = cur | gamma_mask(s, i, cur);
    if (next == cur) return cur;
    cur = next;
  }
  throw Error(Errc::NonStabilization,
              "closure recursion failed to stabilize within " +
                  std::to_string(s.carrier_size()) + " steps");
}

PointSet sigma_closure(const FiniteSpace& s, const Ideal& i,
                       const PointSet& a) {
  check_carrier_match(s, a);
  check_ideal_match(s, i);
  return PointSet(s.carrier_size(), sigma_closure_mask(s, i, a.bits()));
}

}  // namespace topo
