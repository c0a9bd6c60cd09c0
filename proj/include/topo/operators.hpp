#pragma once

#include <cstddef>
#include <vector>

#include "topo/finite_space.hpp"
#include "topo/ideal.hpp"

namespace topo {

// Closure-type operators on a finite space S, optionally relative to an
// ideal I. Mask-level overloads skip PointSet construction; the PointSet
// overloads validate carriers and are the public currency.

/// theta-interior: points x of A with Cl(U) <= A for some open U containing
/// x. On a finite space the minimal neighbourhood is that U when any works.
Mask theta_interior_mask(const FiniteSpace& s, Mask a);
PointSet theta_interior(const FiniteSpace& s, const PointSet& a);

/// theta-closure: points x whose every open neighbourhood U has Cl(U)
/// meeting A. Not idempotent in general.
Mask theta_closure_mask(const FiniteSpace& s, Mask a);
PointSet theta_closure(const FiniteSpace& s, const PointSet& a);

/// The topology of theta-open sets (U with theta_interior(U) = U). Every
/// theta-open set is open, so this is a coarsening of S.
FiniteSpace tau_theta(const FiniteSpace& s);

/// Interior taken inside tau_theta(S). Distinct from the pointwise
/// theta_interior: the two agree exactly on their common fixpoints.
PointSet tau_theta_interior(const FiniteSpace& s, const PointSet& a);

/// Local function A*: points x with A n U outside the ideal for every open
/// U containing x. With the trivial ideal this is the closure.
Mask local_function_mask(const FiniteSpace& s, const Ideal& i, Mask a);
PointSet local_function(const FiniteSpace& s, const Ideal& i, const PointSet& a);

/// Cl*(A) = A u A*, the closure of the *-topology.
Mask star_closure_mask(const FiniteSpace& s, const Ideal& i, Mask a);
PointSet star_closure(const FiniteSpace& s, const Ideal& i, const PointSet& a);

/// The *-topology: sets whose complement is Cl*-fixed. Refines S.
FiniteSpace tau_star(const FiniteSpace& s, const Ideal& i);

/// Local closure function Gamma(A): points x with Cl(U) n A outside the
/// ideal for every open U containing x. Gamma is in general incomparable
/// with its argument and not idempotent.
Mask gamma_mask(const FiniteSpace& s, const Ideal& i, Mask a);
PointSet gamma(const FiniteSpace& s, const Ideal& i, const PointSet& a);

/// psi_Gamma(A): complement of Gamma(complement of A).
Mask psi_gamma_mask(const FiniteSpace& s, const Ideal& i, Mask a);
PointSet psi_gamma(const FiniteSpace& s, const Ideal& i, const PointSet& a);

/// The sigma topology: sets A with A <= psi_Gamma(A). A set F is
/// sigma-closed iff Gamma(F) <= F. Contains tau_theta(S) for every ideal.
FiniteSpace sigma(const FiniteSpace& s, const Ideal& i);

/// Stages of the recursion CL^0 = A, CL^{k+1} = CL^k u Gamma(CL^k). The
/// chain is recorded through the first repeated stage, so the last two
/// entries are always equal; stabilized_at is the index of the first stage
/// equal to its successor and never exceeds the carrier size.
struct ClSequence {
  std::vector<PointSet> stages;
  std::size_t stabilized_at = 0;

  const PointSet& fixpoint() const { return stages.back(); }
};

ClSequence cl_sequence(const FiniteSpace& s, const Ideal& i, const PointSet& a);

/// The stabilized value of the recursion: the sigma-closure of A, equal to
/// the intersection of all sigma-closed supersets of A.
Mask sigma_closure_mask(const FiniteSpace& s, const Ideal& i, Mask a);
PointSet sigma_closure(const FiniteSpace& s, const Ideal& i, const PointSet& a);

}  // namespace topo
