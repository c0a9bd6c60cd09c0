#include <vector>

#include "support.hpp"
#include "topo/enumeration.hpp"
#include "topo/naive.hpp"
#include "topo/operators.hpp"

using namespace topo;

TEST_CASE("space map validation and set transport") {
  const SpaceMap f = fixtures::example_map();
  CHECK(f(0) == 0);
  CHECK(f(1) == 1);
  CHECK_ERRC(f(2), Errc::PointOutOfRange);

  CHECK(f.image(PointSet::singleton(2, 0)) == PointSet::singleton(3, 0));
  CHECK(f.image(PointSet::full(2)) == PointSet::of(3, {0, 1}));
  CHECK(f.preimage(PointSet::singleton(3, 2)) == PointSet::empty(2));
  CHECK(f.preimage(PointSet::of(3, {0, 2})) == PointSet::singleton(2, 0));

  CHECK_ERRC(SpaceMap(fixtures::x2(), fixtures::y3(), {0}),
             Errc::CarrierMismatch);
  CHECK_ERRC(SpaceMap(fixtures::x2(), fixtures::y3(), {0, 3}),
             Errc::PointOutOfRange);
}

TEST_CASE("the two point into three point example map") {
  // p maps to the open point a, q to the open point b. The preimage of {a}
  // is {p}, which is not open, and no neighbourhood fix exists at p; yet
  // both theta topologies collapse enough for the faint notions to hold.
  const ContinuityReport r = classify(fixtures::example_map());
  CHECK(!r.continuous);
  CHECK(!r.weakly_continuous);
  CHECK(!r.theta_continuous);
  CHECK(r.faintly_continuous);
  CHECK(r.tau_theta_continuous);
  CHECK(!r.ideal_results.has_value());
}

TEST_CASE("the swap self map of the two point space") {
  const FiniteSpace x = fixtures::x2();
  const ContinuityReport r = classify(SpaceMap(x, x, {1, 0}));
  CHECK(!r.continuous);
  CHECK(r.weakly_continuous);
  CHECK(r.theta_continuous);
  CHECK(r.faintly_continuous);
  CHECK(r.tau_theta_continuous);
}

TEST_CASE("identity and constant maps are continuous") {
  for (unsigned n = 1; n <= 3; ++n) {
    for (const FiniteSpace& s : enumerate_topologies(n)) {
      std::vector<Point> id(n);
      for (Point p = 0; p < n; ++p) id[p] = p;
      const ContinuityReport r = classify(SpaceMap(s, s, id));
      CHECK(r.continuous);
      CHECK(r.weakly_continuous);
      CHECK(r.theta_continuous);
      CHECK(r.faintly_continuous);
      CHECK(r.tau_theta_continuous);
    }
  }
  const FiniteSpace x = fixtures::x2();
  const FiniteSpace y = fixtures::y3();
  for (Point t = 0; t < 3; ++t)
    CHECK(classify(SpaceMap(x, y, {t, t})).continuous);
}

TEST_CASE("every notion agrees with the reference predicates") {
  for (unsigned nx = 1; nx <= 3; ++nx) {
    for (unsigned ny = 1; ny <= 3; ++ny) {
      const auto xs = enumerate_topologies(nx);
      const auto ys = enumerate_topologies(ny);
      const MapRange maps = enumerate_maps(nx, ny);
      for (const FiniteSpace& x : xs) {
        for (const FiniteSpace& y : ys) {
          for (std::uint64_t mi = 0; mi < maps.size(); ++mi) {
            const std::vector<Point> f = maps.at(mi);
            CHECK(is_continuous(x, y, f) == naive::is_continuous(x, y, f));
            CHECK(is_weakly_continuous(x, y, f) ==
                  naive::is_weakly_continuous(x, y, f));
            CHECK(is_theta_continuous(x, y, f) ==
                  naive::is_theta_continuous(x, y, f));
            CHECK(is_faintly_continuous(x, y, f) ==
                  naive::is_faintly_continuous(x, y, f));
            CHECK(is_tau_theta_continuous(x, y, f) ==
                  naive::is_tau_theta_continuous(x, y, f));
          }
        }
      }
    }
  }
}

TEST_CASE("classified reports respect the implication diagram") {
  for (unsigned nx = 1; nx <= 2; ++nx) {
    for (unsigned ny = 1; ny <= 2; ++ny) {
      const MapRange maps = enumerate_maps(nx, ny);
      for (const FiniteSpace& x : enumerate_topologies(nx)) {
        for (const FiniteSpace& y : enumerate_topologies(ny)) {
          for (std::uint64_t mi = 0; mi < maps.size(); ++mi) {
            const ContinuityReport r = classify(SpaceMap(x, y, maps.at(mi)));
            if (r.continuous) {
              CHECK(r.weakly_continuous);
              CHECK(r.theta_continuous);
            }
            if (r.theta_continuous) {
              CHECK(r.weakly_continuous);
              CHECK(r.tau_theta_continuous);
            }
            if (r.weakly_continuous) CHECK(r.faintly_continuous);
            if (r.tau_theta_continuous) CHECK(r.faintly_continuous);
          }
        }
      }
    }
  }
}

TEST_CASE("ideal compatibility is the generator preimage test") {
  const SpaceMap f = fixtures::example_map();
  // Preimage of {a} is {p}: compatible only when the domain ideal absorbs it.
  CHECK(ideal_compatible(f, Ideal(2, 0b01), Ideal(3, 0b001)));
  CHECK(!ideal_compatible(f, Ideal::trivial(2), Ideal(3, 0b001)));
  CHECK(ideal_compatible(f, Ideal::trivial(2), Ideal(3, 0b100)));
  CHECK(ideal_compatible(f, Ideal::trivial(2), Ideal::trivial(3)));
  CHECK_ERRC(ideal_compatible(f, Ideal::trivial(3), Ideal::trivial(3)),
             Errc::CarrierMismatch);

  for (unsigned nx = 1; nx <= 2; ++nx) {
    for (unsigned ny = 1; ny <= 2; ++ny) {
      const MapRange maps = enumerate_maps(nx, ny);
      for (std::uint64_t mi = 0; mi < maps.size(); ++mi) {
        const std::vector<Point> g = maps.at(mi);
        for (const Ideal& ix : enumerate_ideals(nx))
          for (const Ideal& iy : enumerate_ideals(ny))
            CHECK(ideal_compatible(g, nx, ny, ix, iy) ==
                  naive::ideal_compatible(g, nx, ny, ix, iy));
      }
    }
  }
}

TEST_CASE("ideal aware classification matches spaces built by hand") {
  for (const FiniteSpace& x : enumerate_topologies(2)) {
    for (const FiniteSpace& y : enumerate_topologies(2)) {
      const MapRange maps = enumerate_maps(2, 2);
      for (std::uint64_t mi = 0; mi < maps.size(); ++mi) {
        const SpaceMap f(x, y, maps.at(mi));
        for (const Ideal& ix : enumerate_ideals(2)) {
          for (const Ideal& iy : enumerate_ideals(2)) {
            const ContinuityReport r = classify(f, ix, iy);
            REQUIRE(r.ideal_results.has_value());
            const IdealResults& ir = *r.ideal_results;
            CHECK(ir.ideal_compatible ==
                  naive::ideal_compatible(f.assignment(), 2, 2, ix, iy));
            CHECK(ir.tau_star_to_sigma_continuous ==
                  naive::is_continuous(naive::tau_star(x, ix),
                                       naive::sigma(y, iy), f.assignment()));
            CHECK(ir.sigma_to_sigma_continuous ==
                  naive::is_continuous(naive::sigma(x, ix),
                                       naive::sigma(y, iy), f.assignment()));
          }
        }
      }
    }
  }
}
