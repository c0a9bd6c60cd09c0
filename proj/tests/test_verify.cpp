#include <cstdint>
#include <string>
#include <vector>

#include "support.hpp"
#include "topo/documents.hpp"
#include "topo/enumeration.hpp"
#include "topo/naive.hpp"
#include "topo/verify.hpp"

using namespace topo;

namespace {

UniverseBounds bounds(unsigned nx, unsigned ny, bool ideals = true,
                      std::uint64_t budget = 0) {
  UniverseBounds b;
  b.max_domain_points = nx;
  b.max_codomain_points = ny;
  b.include_ideals = ideals;
  b.sample_budget = budget;
  return b;
}

// Reference count of maps between all space pairs within the bounds; every
// implication claim quantifies over exactly this universe.
std::uint64_t map_universe_size(unsigned max_n) {
  std::uint64_t total = 0;
  for (unsigned nx = 1; nx <= max_n; ++nx) {
    for (unsigned ny = 1; ny <= max_n; ++ny) {
      std::uint64_t per_pair = 1;
      for (unsigned i = 0; i < nx; ++i) per_pair *= ny;
      total += std::uint64_t(enumerate_topologies(nx).size()) *
               enumerate_topologies(ny).size() * per_pair;
    }
  }
  return total;
}

bool naive_notion(Notion n, const FiniteSpace& x, const FiniteSpace& y,
                  const std::vector<Point>& f) {
  switch (n) {
    case Notion::Continuous: return naive::is_continuous(x, y, f);
    case Notion::Weak: return naive::is_weakly_continuous(x, y, f);
    case Notion::Theta: return naive::is_theta_continuous(x, y, f);
    case Notion::Faint: return naive::is_faintly_continuous(x, y, f);
    case Notion::TauTheta: return naive::is_tau_theta_continuous(x, y, f);
  }
  return false;
}

}  // namespace

TEST_CASE("theorem and notion names round trip") {
  for (TheoremId id : kAllTheorems) {
    const auto back = theorem_from_name(theorem_name(id));
    REQUIRE(back.has_value());
    CHECK(*back == id);
  }
  CHECK(!theorem_from_name("TC1").has_value());
  CHECK(!theorem_from_name("").has_value());

  for (Notion n : kAllNotions) {
    const auto back = notion_from_name(notion_name(n));
    REQUIRE(back.has_value());
    CHECK(*back == n);
  }
  CHECK(!notion_from_name("weakly").has_value());
}

TEST_CASE("claim parsing") {
  const Claim c = parse_claim("weak=>theta");
  REQUIRE(c.implication.has_value());
  CHECK(c.implication->first == Notion::Weak);
  CHECK(c.implication->second == Notion::Theta);
  CHECK(!c.theorem_without_compatibility.has_value());

  const Claim spaced = parse_claim(" tau-theta => faint ");
  REQUIRE(spaced.implication.has_value());
  CHECK(spaced.implication->first == Notion::TauTheta);
  CHECK(spaced.implication->second == Notion::Faint);

  for (const char* text : {"TC1A-no-compat", "TC1B-no-compat",
                           "TTC2A-no-compat", "TTC2B-no-compat",
                           "TW1A-no-compat", "TW1B-no-compat",
                           "TTC2C-no-compat", "TW2-no-compat"}) {
    const Claim k = parse_claim(text);
    CHECK(k.theorem_without_compatibility.has_value());
    CHECK(!k.implication.has_value());
  }

  CHECK_ERRC(parse_claim("weak"), Errc::UsageError);
  CHECK_ERRC(parse_claim("weakly=>theta"), Errc::UsageError);
  CHECK_ERRC(parse_claim("weak=>"), Errc::UsageError);
  CHECK_ERRC(parse_claim(""), Errc::UsageError);
  // The compatibility hypothesis can only be dropped from theorems that
  // have one.
  CHECK_ERRC(parse_claim("JH_XSTAR-no-compat"), Errc::UsageError);
  CHECK_ERRC(parse_claim("WEAK_IMPLIES_FAINT-no-compat"), Errc::UsageError);
}

TEST_CASE("verification bounds are validated") {
  CHECK_ERRC(check_theorem(TheoremId::TC1A, bounds(0, 2)), Errc::EmptyCarrier);
  CHECK_ERRC(check_theorem(TheoremId::TC1A, bounds(2, 6)), Errc::BoundTooLarge);
  CHECK_ERRC(mine_counterexample(parse_claim("weak=>theta"), bounds(6, 2)),
             Errc::BoundTooLarge);
}

TEST_CASE("every statement holds on the two point exhaustive universe") {
  // instances_checked counts everything a sequential canonical scan visits,
  // hypothesis failures included, so it doubles as a universe-size pin.
  const struct {
    TheoremId id;
    std::uint64_t instances;
  } expected[] = {
      {TheoremId::TC1A, 4360},
      {TheoremId::TC1B, 4424},
      {TheoremId::TTC2A, 4360},
      {TheoremId::TTC2B, 4360},
      {TheoremId::TTC2C, 1124},
      {TheoremId::TC1_COROLLARY_THETA_IMPLIES_TAUTHETA, 77},
      {TheoremId::TW1A, 4360},
      {TheoremId::TW1B, 4424},
      {TheoremId::TW2, 1124},
      {TheoremId::WEAK_IMPLIES_FAINT, 77},
      {TheoremId::CONT_IMPLIES_TAUTHETA, 77},
      {TheoremId::TAUTHETA_IMPLIES_FAINT, 77},
      {TheoremId::THETA_IMPLIES_FAINT, 77},
      {TheoremId::WC_FINITE_COROLLARY, 77},
      {TheoremId::JH_XSTAR, 290},
      {TheoremId::CLOSURESIGMA_A_E, 68},
      {TheoremId::PROP_141_EQUIV, 77},
  };
  for (const auto& row : expected) {
    const VerificationReport r = check_theorem(row.id, bounds(2, 2), 2);
    CHECK_MESSAGE(!r.violated(), theorem_name(row.id));
    CHECK_MESSAGE(r.instances_checked == row.instances, theorem_name(row.id));
    CHECK(r.theorem == row.id);
  }
  CHECK(map_universe_size(2) == 77);
}

TEST_CASE("restricting to the trivial ideal shrinks the universe") {
  const VerificationReport r =
      check_theorem(TheoremId::TC1A, bounds(2, 2, false), 2);
  CHECK(!r.violated());
  CHECK(r.instances_checked == 290);
}

TEST_CASE("the deepest set level statement survives three points") {
  const VerificationReport r = check_theorem(TheoremId::TC1A, bounds(3, 3), 4);
  CHECK(!r.violated());
  CHECK(r.instances_checked == 12008040);
}

TEST_CASE("sampling strides the canonical order deterministically") {
  const VerificationReport r =
      check_theorem(TheoremId::TC1A, bounds(2, 2, true, 100), 2);
  CHECK(!r.violated());
  // 4360 instances at stride 43 leave 102 scan positions.
  CHECK(r.instances_checked == 102);

  const VerificationReport again =
      check_theorem(TheoremId::TC1A, bounds(2, 2, true, 100), 7);
  CHECK(again.instances_checked == r.instances_checked);
}

TEST_CASE("mining the missing arrow from tau-theta to theta") {
  const Claim claim = parse_claim("tau-theta=>theta");
  const MineResult r = mine_counterexample(claim, bounds(2, 3), 2);
  REQUIRE(r.witness.has_value());
  const Witness& w = *r.witness;
  CHECK(w.canonical_index == 419);
  CHECK(r.instances_checked == 420);

  REQUIRE(w.domain.has_value());
  REQUIRE(w.codomain.has_value());
  REQUIRE(w.map.has_value());
  CHECK(w.domain->open_masks() == std::vector<Mask>{0, 1, 3});
  CHECK(w.codomain->open_masks() == std::vector<Mask>{0, 1, 2, 3, 7});
  CHECK(*w.map == std::vector<Point>{0, 1});
  CHECK(!w.ideal_domain.has_value());
  CHECK(!w.subset.has_value());

  CHECK(naive::is_tau_theta_continuous(*w.domain, *w.codomain, *w.map));
  CHECK(!naive::is_theta_continuous(*w.domain, *w.codomain, *w.map));
  CHECK(recertify(claim, w));

  Witness corrupted = w;
  corrupted.map = std::vector<Point>{0, 0};
  CHECK(!recertify(claim, corrupted));
}

TEST_CASE("mining weak versus theta needs three points on both sides") {
  const Claim claim = parse_claim("weak=>theta");
  CHECK(!mine_counterexample(claim, bounds(2, 2), 2).witness.has_value());

  const MineResult r = mine_counterexample(claim, bounds(3, 3), 4);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->canonical_index == 5421);
  CHECK(r.instances_checked == 5422);
  CHECK(recertify(claim, *r.witness));
}

TEST_CASE("an implication that holds reports a full scan") {
  const MineResult r =
      mine_counterexample(parse_claim("continuous=>weak"), bounds(2, 2), 2);
  CHECK(!r.witness.has_value());
  CHECK(r.instances_checked == 77);
}

TEST_CASE("dropping compatibility breaks the ideal statements immediately") {
  const Claim claim = parse_claim("TC1A-no-compat");
  const MineResult r = mine_counterexample(claim, bounds(1, 1), 1);
  REQUIRE(r.witness.has_value());
  const Witness& w = *r.witness;
  CHECK(w.canonical_index == 3);
  CHECK(r.instances_checked == 4);
  REQUIRE(w.ideal_domain.has_value());
  REQUIRE(w.ideal_codomain.has_value());
  REQUIRE(w.subset.has_value());
  CHECK(w.ideal_domain->generator_mask() == 0);
  CHECK(w.ideal_codomain->generator_mask() == 1);
  CHECK(w.subset->bits() == 1);
  CHECK(!w.subset_on_codomain);

  // The relaxed claim reproduces; the theorem proper does not, because its
  // compatibility hypothesis fails on this instance.
  CHECK(recertify(claim, w));
  CHECK(!recertify(TheoremId::TC1A, w));

  const MineResult tw =
      mine_counterexample(parse_claim("TW1A-no-compat"), bounds(1, 1), 1);
  REQUIRE(tw.witness.has_value());
  CHECK(recertify(parse_claim("TW1A-no-compat"), *tw.witness));
}

TEST_CASE("implication matrix on two points matches the reference scan") {
  const ImplicationMatrix m = implication_matrix(bounds(2, 2), 2);
  CHECK(m.maps_checked == 77);

  bool expected[5][5];
  for (unsigned p = 0; p < 5; ++p)
    for (unsigned q = 0; q < 5; ++q) expected[p][q] = true;
  for (unsigned nx = 1; nx <= 2; ++nx) {
    for (unsigned ny = 1; ny <= 2; ++ny) {
      const MapRange maps = enumerate_maps(nx, ny);
      for (const FiniteSpace& x : enumerate_topologies(nx)) {
        for (const FiniteSpace& y : enumerate_topologies(ny)) {
          for (std::uint64_t mi = 0; mi < maps.size(); ++mi) {
            const std::vector<Point> f = maps.at(mi);
            bool flag[5];
            for (unsigned k = 0; k < 5; ++k)
              flag[k] = naive_notion(kAllNotions[k], x, y, f);
            for (unsigned p = 0; p < 5; ++p)
              for (unsigned q = 0; q < 5; ++q)
                if (flag[p] && !flag[q]) expected[p][q] = false;
          }
        }
      }
    }
  }
  for (unsigned p = 0; p < 5; ++p) {
    for (unsigned q = 0; q < 5; ++q) {
      const MatrixEntry& e = m.entries[p][q];
      const std::string arrow = std::string(notion_name(kAllNotions[p])) +
                                " -> " + notion_name(kAllNotions[q]);
      CHECK_MESSAGE(e.holds == expected[p][q], arrow);
      CHECK(e.witness.has_value() == !e.holds);
      if (e.witness) {
        Claim c;
        c.implication = std::pair{kAllNotions[p], kAllNotions[q]};
        CHECK(recertify(c, *e.witness));
      }
    }
  }
}

TEST_CASE("implication matrix on three points") {
  const ImplicationMatrix m = implication_matrix(bounds(3, 3), 4);
  CHECK(m.maps_checked == 24872);

  // Rows and columns in notion order: continuous, weak, theta, faint,
  // tau-theta.
  const bool expected[5][5] = {
      {true, true, true, true, true},
      {false, true, false, true, true},
      {false, true, true, true, true},
      {false, false, false, true, true},
      {false, false, false, true, true},
  };
  const std::uint64_t witness_index[5][5] = {
      {0, 0, 0, 0, 0},
      {381, 0, 5421, 0, 0},
      {381, 0, 0, 0, 0},
      {381, 419, 419, 0, 0},
      {381, 419, 419, 0, 0},
  };
  for (unsigned p = 0; p < 5; ++p) {
    for (unsigned q = 0; q < 5; ++q) {
      const MatrixEntry& e = m.entries[p][q];
      const std::string arrow = std::string(notion_name(kAllNotions[p])) +
                                " -> " + notion_name(kAllNotions[q]);
      CHECK_MESSAGE(e.holds == expected[p][q], arrow);
      if (!expected[p][q]) {
        REQUIRE(e.witness.has_value());
        CHECK(e.witness->canonical_index == witness_index[p][q]);
      }
    }
  }

  // The two holding arrows that exist only at finite scale carry a note.
  CHECK(!m.entries[1][4].note.empty());
  CHECK(!m.entries[3][4].note.empty());
  CHECK(m.entries[0][1].note.empty());
  CHECK(m.entries[2][4].note.empty());
}

TEST_CASE("reports do not depend on the worker count") {
  const VerificationReport one = check_theorem(TheoremId::TW1B, bounds(2, 2), 1);
  const VerificationReport eight =
      check_theorem(TheoremId::TW1B, bounds(2, 2), 8);
  CHECK(one.instances_checked == eight.instances_checked);
  CHECK(one.violated() == eight.violated());

  const Claim claim = parse_claim("tau-theta=>theta");
  const MineResult a = mine_counterexample(claim, bounds(2, 3), 1);
  const MineResult b = mine_counterexample(claim, bounds(2, 3), 8);
  REQUIRE(a.witness.has_value());
  REQUIRE(b.witness.has_value());
  CHECK(dump_document(witness_to_json(*a.witness)) ==
        dump_document(witness_to_json(*b.witness)));
}
