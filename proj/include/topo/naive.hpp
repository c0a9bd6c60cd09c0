#pragma once

#include <span>

#include "topo/finite_space.hpp"
#include "topo/ideal.hpp"

namespace topo::naive {

// Reference implementations that evaluate every quantifier by scanning the
// open family directly, never consulting the precomputed
// minimal-neighbourhood table. They are deliberately slow and deliberately
// independent of the optimized routes: the test suite compares the two on
// every input, and the verifier re-certifies every reported witness against
// these before publishing it.

Mask closure_mask(const FiniteSpace& s, Mask a);
Mask interior_mask(const FiniteSpace& s, Mask a);
Mask theta_closure_mask(const FiniteSpace& s, Mask a);
Mask theta_interior_mask(const FiniteSpace& s, Mask a);
Mask local_function_mask(const FiniteSpace& s, const Ideal& i, Mask a);
Mask star_closure_mask(const FiniteSpace& s, const Ideal& i, Mask a);
Mask gamma_mask(const FiniteSpace& s, const Ideal& i, Mask a);
Mask psi_gamma_mask(const FiniteSpace& s, const Ideal& i, Mask a);
Mask sigma_closure_mask(const FiniteSpace& s, const Ideal& i, Mask a);

FiniteSpace tau_theta(const FiniteSpace& s);
FiniteSpace tau_star(const FiniteSpace& s, const Ideal& i);
FiniteSpace sigma(const FiniteSpace& s, const Ideal& i);

// Continuity predicates straight from the pointwise definitions, with both
// the existential and the universal neighbourhood quantifiers scanned over
// the full open families.

bool is_continuous(const FiniteSpace& x, const FiniteSpace& y,
                   std::span<const Point> f);
bool is_weakly_continuous(const FiniteSpace& x, const FiniteSpace& y,
                          std::span<const Point> f);
bool is_theta_continuous(const FiniteSpace& x, const FiniteSpace& y,
                         std::span<const Point> f);
bool is_faintly_continuous(const FiniteSpace& x, const FiniteSpace& y,
                           std::span<const Point> f);
bool is_tau_theta_continuous(const FiniteSpace& x, const FiniteSpace& y,
                             std::span<const Point> f);

/// Quantifies over every member of the codomain ideal rather than testing
/// the generators.
bool ideal_compatible(std::span<const Point> f, unsigned nx, unsigned ny,
                      const Ideal& ix, const Ideal& iy);

}  // namespace topo::naive
