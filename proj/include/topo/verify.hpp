#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "topo/continuity.hpp"
#include "topo/enumeration.hpp"
#include "topo/operators.hpp"

namespace topo {

/// Closed list of machine-checked claims.
enum class TheoremId {
  TC1A,  // theta-continuous + compatible: f[Gamma(A)] <= Gamma(f[A])
  TC1B,  // theta-continuous + compatible: Gamma(f^-1[B]) <= f^-1[Gamma(B)]
  TTC2A, // same hypotheses: f[CL^k(A)] <= CL^k(f[A]) stage by stage
  TTC2B, // same hypotheses: f[Cl_sigma(A)] <= Cl_sigma(f[A])
  TTC2C, // same hypotheses: continuous between the sigma topologies
  TC1_COROLLARY_THETA_IMPLIES_TAUTHETA,
  TW1A,  // weakly continuous + compatible: f[A*] <= Gamma(f[A])
  TW1B,  // weakly continuous + compatible: (f^-1[B])* <= f^-1[Gamma(B)]
  TW2,   // weakly continuous + compatible: continuous tau*_X -> sigma_Y
  WEAK_IMPLIES_FAINT,
  CONT_IMPLIES_TAUTHETA,
  TAUTHETA_IMPLIES_FAINT,
  THETA_IMPLIES_FAINT,
  WC_FINITE_COROLLARY,  // weakly continuous implies tau_theta-continuous
                        // whenever domain or codomain is finite
  JH_XSTAR,  // X = X*: theta-continuity from tau and from tau* coincide
  CLOSURESIGMA_A_E,  // the five clauses of the CL^alpha recursion statement
  PROP_141_EQUIV,    // the four continuity characterizations agree
};

inline constexpr std::array<TheoremId, 17> kAllTheorems = {
    TheoremId::TC1A,
    TheoremId::TC1B,
    TheoremId::TTC2A,
    TheoremId::TTC2B,
    TheoremId::TTC2C,
    TheoremId::TC1_COROLLARY_THETA_IMPLIES_TAUTHETA,
    TheoremId::TW1A,
    TheoremId::TW1B,
    TheoremId::TW2,
    TheoremId::WEAK_IMPLIES_FAINT,
    TheoremId::CONT_IMPLIES_TAUTHETA,
    TheoremId::TAUTHETA_IMPLIES_FAINT,
    TheoremId::THETA_IMPLIES_FAINT,
    TheoremId::WC_FINITE_COROLLARY,
    TheoremId::JH_XSTAR,
    TheoremId::CLOSURESIGMA_A_E,
    TheoremId::PROP_141_EQUIV,
};

const char* theorem_name(TheoremId id) noexcept;
std::optional<TheoremId> theorem_from_name(std::string_view name) noexcept;

/// The five continuity notions, in report order.
enum class Notion { Continuous = 0, Weak = 1, Theta = 2, Faint = 3, TauTheta = 4 };
inline constexpr std::array<Notion, 5> kAllNotions = {
    Notion::Continuous, Notion::Weak, Notion::Theta, Notion::Faint,
    Notion::TauTheta};
const char* notion_name(Notion n) noexcept;
std::optional<Notion> notion_from_name(std::string_view name) noexcept;

/// A fully materialized violating instance. Fields not meaningful for the
/// claim's shape are absent (single-space claims carry no codomain or map).
/// canonical_index is the instance's ordinal in the canonical enumeration
/// order; the verifier always returns the smallest one, so reports are
/// independent of scheduling. Witnesses are self-certifying: the verifier
/// re-evaluates each one with the naive reference operators before
/// returning it.
struct Witness {
  std::optional<FiniteSpace> domain;
  std::optional<FiniteSpace> codomain;
  std::optional<std::vector<Point>> map;
  std::optional<Ideal> ideal_domain;
  std::optional<Ideal> ideal_codomain;
  std::optional<PointSet> subset;
  bool subset_on_codomain = false;
  std::string violated_clause;
  std::uint64_t canonical_index = 0;
};

/// instances_checked counts the instances a sequential scan in canonical
/// order inspects: the whole universe (hypothesis failures included) when no
/// violation exists, canonical_index + 1 when one does. Elapsed time is
/// carried here but never serialized into reports, which must be
/// byte-identical across thread counts.
struct VerificationReport {
  TheoremId theorem;
  UniverseBounds universe;
  std::uint64_t instances_checked = 0;
  std::optional<Witness> witness;
  std::chrono::duration<double> elapsed{0};

  bool violated() const noexcept { return witness.has_value(); }
};

VerificationReport check_theorem(TheoremId id, const UniverseBounds& bounds,
                                 unsigned jobs = 1);

/// A minable claim: either an implication between two notions, or a theorem
/// from the closed list with its ideal-compatibility hypothesis dropped.
struct Claim {
  std::optional<std::pair<Notion, Notion>> implication;
  std::optional<TheoremId> theorem_without_compatibility;
  std::string text;
};

/// Accepts "P=>Q" over {continuous, weak, theta, faint, tau-theta} and
/// "<ID>-no-compat" for the ideal theorems. Raises UsageError otherwise.
Claim parse_claim(std::string_view text);

struct MineResult {
  Claim claim;
  UniverseBounds bounds;
  std::uint64_t instances_checked = 0;
  std::optional<Witness> witness;
  std::chrono::duration<double> elapsed{0};
};

MineResult mine_counterexample(const Claim& claim, const UniverseBounds& bounds,
                               unsigned jobs = 1);

struct MatrixEntry {
  bool holds = false;
  std::optional<Witness> witness;
  std::string note;  // set on implications that are artifacts of finiteness
};

struct ImplicationMatrix {
  std::array<std::array<MatrixEntry, 5>, 5> entries;  // [premise][conclusion]
  UniverseBounds bounds;
  std::uint64_t maps_checked = 0;
  std::chrono::duration<double> elapsed{0};
};

ImplicationMatrix implication_matrix(const UniverseBounds& bounds,
                                     unsigned jobs = 1);

/// Re-evaluates a witness with the naive reference implementations. True
/// means the violation reproduces (hypotheses hold, conclusion fails).
bool recertify(TheoremId id, const Witness& w);
bool recertify(const Claim& claim, const Witness& w);

}  // namespace topo
