#include <algorithm>
#include <vector>

#include "support.hpp"
#include "topo/enumeration.hpp"
#include "topo/naive.hpp"
#include "topo/operators.hpp"

using namespace topo;

namespace {

const PointSet kA = PointSet::singleton(3, 0);
const PointSet kAC = PointSet::of(3, {0, 2});

// Intersection of the sigma-closed supersets of a, with sigma built by the
// reference route. This is the independent description of the stabilized
// recursion value.
Mask sigma_closed_hull(const FiniteSpace& s, const Ideal& i, Mask a) {
  const FiniteSpace sig = naive::sigma(s, i);
  Mask hull = full_mask(s.carrier_size());
  for (Mask c : sig.closed_masks())
    if (mask_subset(a, c)) hull &= c;
  return hull;
}

}  // namespace

TEST_CASE("theta interior and theta closure on the fixture") {
  const FiniteSpace y = fixtures::y3();
  CHECK(theta_interior(y, kAC) == kA);
  CHECK(theta_interior(y, PointSet::full(3)) == PointSet::full(3));
  CHECK(theta_interior(y, kA) == PointSet::empty(3));

  CHECK(theta_closure(y, kA) == kAC);
  CHECK(theta_closure(y, PointSet::singleton(3, 2)) == PointSet::full(3));

  // Not idempotent: applying it twice to {a} grows past {a,c}.
  CHECK(theta_closure(y, kAC) == PointSet::full(3));
}

TEST_CASE("theta operators are dual and tau_theta is a coarsening") {
  for (unsigned n = 1; n <= 3; ++n) {
    for (const FiniteSpace& s : enumerate_topologies(n)) {
      const Mask full = full_mask(n);
      for (Mask a = 0; a <= full; ++a)
        CHECK(theta_closure_mask(s, full & ~a) ==
              (full & ~theta_interior_mask(s, a)));

      const FiniteSpace tt = tau_theta(s);
      for (Mask u : tt.open_masks()) {
        CHECK(s.is_open_mask(u));
        // On a finite carrier the complement of a theta-open set is again
        // theta-open, so tau_theta is closed under complement.
        CHECK(tt.is_open_mask(full & ~u));
      }
    }
  }
}

TEST_CASE("tau_theta of the fixture collapses to the indiscrete topology") {
  const FiniteSpace y = fixtures::y3();
  CHECK(tau_theta(y).open_masks() == std::vector<Mask>{0, 7});

  // Pointwise theta interior and interior inside tau_theta disagree on
  // {a,c}: the first keeps the open point a, the second sees no theta-open
  // set below {a,c} at all.
  CHECK(theta_interior(y, kAC) == kA);
  CHECK(tau_theta_interior(y, kAC) == PointSet::empty(3));
  CHECK(tau_theta_interior(y, PointSet::full(3)) == PointSet::full(3));
}

TEST_CASE("local function golden values") {
  const FiniteSpace y = fixtures::y3();
  const Ideal pa(3, 0b001);  // powerset of {a}
  CHECK(local_function(y, pa, kA) == PointSet::empty(3));
  CHECK(star_closure(y, pa, kA) == kA);
  CHECK(local_function(y, Ideal::trivial(3), kA) == kAC);

  CHECK(tau_star(y, pa).open_masks() == std::vector<Mask>{0, 1, 2, 3, 6, 7});
}

TEST_CASE("local closure function golden values") {
  const FiniteSpace y = fixtures::y3();
  const Ideal pc(3, 0b100);  // powerset of {c}
  CHECK(gamma(y, pc, kA) == kAC);
  CHECK(psi_gamma(y, pc, PointSet::of(3, {0, 1})) == PointSet::full(3));
  CHECK(psi_gamma(y, pc, kAC) == kA);
  CHECK(sigma(y, pc).open_masks() == std::vector<Mask>{0, 1, 2, 3, 7});
}

TEST_CASE("trivial ideal collapses the ideal operators") {
  for (unsigned n = 1; n <= 3; ++n) {
    for (const FiniteSpace& s : enumerate_topologies(n)) {
      const Ideal triv = Ideal::trivial(n);
      for (Mask a = 0; a <= full_mask(n); ++a) {
        CHECK(local_function_mask(s, triv, a) == closure_mask(s, a));
        CHECK(star_closure_mask(s, triv, a) == closure_mask(s, a));
        CHECK(gamma_mask(s, triv, a) == theta_closure_mask(s, a));
        CHECK(psi_gamma_mask(s, triv, a) == theta_interior_mask(s, a));
      }
      CHECK(tau_star(s, triv) == s);
      CHECK(sigma(s, triv) == tau_theta(s));
    }
  }
}

TEST_CASE("powerset ideal collapses the ideal operators") {
  for (unsigned n = 1; n <= 3; ++n) {
    for (const FiniteSpace& s : enumerate_topologies(n)) {
      const Ideal all = Ideal::powerset(n);
      for (Mask a = 0; a <= full_mask(n); ++a) {
        CHECK(local_function_mask(s, all, a) == 0);
        CHECK(gamma_mask(s, all, a) == 0);
        CHECK(star_closure_mask(s, all, a) == a);
        CHECK(psi_gamma_mask(s, all, a) == full_mask(n));
      }
      CHECK(tau_star(s, all) == discrete_space(n));
      CHECK(sigma(s, all) == discrete_space(n));
    }
  }
}

TEST_CASE("gamma is neither increasing nor decreasing nor idempotent") {
  bool grows = false, shrinks = false, moves_again = false;
  for (const FiniteSpace& s : enumerate_topologies(3)) {
    for (const Ideal& i : enumerate_ideals(3)) {
      for (Mask a = 0; a <= 7; ++a) {
        const Mask g = gamma_mask(s, i, a);
        if ((g & ~a) != 0) grows = true;
        if ((a & ~g) != 0) shrinks = true;
        if (gamma_mask(s, i, g) != g) moves_again = true;
      }
    }
  }
  CHECK(grows);
  CHECK(shrinks);
  CHECK(moves_again);
}

TEST_CASE("sigma contains tau_theta and tau_star refines the space") {
  for (unsigned n = 1; n <= 3; ++n) {
    for (const FiniteSpace& s : enumerate_topologies(n)) {
      for (const Ideal& i : enumerate_ideals(n)) {
        const FiniteSpace sig = sigma(s, i);
        const FiniteSpace theta = tau_theta(s);
        for (Mask u : theta.open_masks()) CHECK(sig.is_open_mask(u));
        const FiniteSpace star = tau_star(s, i);
        for (Mask u : s.open_masks()) CHECK(star.is_open_mask(u));
      }
    }
  }
}

TEST_CASE("recursion stages on the fixture") {
  const FiniteSpace y = fixtures::y3();
  const ClSequence seq = cl_sequence(y, Ideal::trivial(3), kA);
  REQUIRE(seq.stages.size() == 4);
  CHECK(seq.stages[0] == kA);
  CHECK(seq.stages[1] == kAC);
  CHECK(seq.stages[2] == PointSet::full(3));
  CHECK(seq.stages[3] == PointSet::full(3));
  CHECK(seq.stabilized_at == 2);
  CHECK(seq.fixpoint() == PointSet::full(3));
  CHECK(sigma_closure(y, Ideal::trivial(3), kA) == PointSet::full(3));
}

TEST_CASE("recursion invariants across every small instance") {
  for (unsigned n = 1; n <= 3; ++n) {
    for (const FiniteSpace& s : enumerate_topologies(n)) {
      for (const Ideal& i : enumerate_ideals(n)) {
        for (Mask a = 0; a <= full_mask(n); ++a) {
          const ClSequence seq = cl_sequence(s, i, PointSet(n, a));
          REQUIRE(seq.stages.size() == seq.stabilized_at + 2);
          CHECK(seq.stabilized_at <= n);
          for (std::size_t k = 0; k + 1 < seq.stages.size(); ++k) {
            CHECK(seq.stages[k].subset_of(seq.stages[k + 1]));
            if (k + 1 < seq.stabilized_at)
              CHECK(seq.stages[k] != seq.stages[k + 1]);
          }
          CHECK(seq.stages[seq.stabilized_at] ==
                seq.stages[seq.stabilized_at + 1]);
          CHECK(seq.fixpoint().bits() == sigma_closure_mask(s, i, a));
          CHECK(seq.fixpoint().bits() == sigma_closed_hull(s, i, a));
        }
      }
    }
  }
}

TEST_CASE("optimized operators agree with the reference route") {
  for (unsigned n = 1; n <= 3; ++n) {
    for (const FiniteSpace& s : enumerate_topologies(n)) {
      for (Mask a = 0; a <= full_mask(n); ++a) {
        CHECK(closure_mask(s, a) == naive::closure_mask(s, a));
        CHECK(interior_mask(s, a) == naive::interior_mask(s, a));
        CHECK(theta_closure_mask(s, a) == naive::theta_closure_mask(s, a));
        CHECK(theta_interior_mask(s, a) == naive::theta_interior_mask(s, a));
      }
      CHECK(tau_theta(s) == naive::tau_theta(s));
      for (const Ideal& i : enumerate_ideals(n)) {
        for (Mask a = 0; a <= full_mask(n); ++a) {
          CHECK(local_function_mask(s, i, a) ==
                naive::local_function_mask(s, i, a));
          CHECK(star_closure_mask(s, i, a) ==
                naive::star_closure_mask(s, i, a));
          CHECK(gamma_mask(s, i, a) == naive::gamma_mask(s, i, a));
          CHECK(psi_gamma_mask(s, i, a) == naive::psi_gamma_mask(s, i, a));
          CHECK(sigma_closure_mask(s, i, a) ==
                naive::sigma_closure_mask(s, i, a));
        }
        CHECK(tau_star(s, i) == naive::tau_star(s, i));
        CHECK(sigma(s, i) == naive::sigma(s, i));
      }
    }
  }
}

TEST_CASE("operators reject mismatched carriers") {
  const FiniteSpace y = fixtures::y3();
  CHECK_ERRC(theta_interior(y, PointSet::full(2)), Errc::CarrierMismatch);
  CHECK_ERRC(gamma(y, Ideal::trivial(2), kA), Errc::CarrierMismatch);
  CHECK_ERRC(local_function(y, Ideal::trivial(3), PointSet::full(2)),
             Errc::CarrierMismatch);
  CHECK_ERRC(cl_sequence(y, Ideal::trivial(2), kA), Errc::CarrierMismatch);
}
