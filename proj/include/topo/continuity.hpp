#pragma once

#include <optional>
#include <span>
#include <vector>

#include "topo/finite_space.hpp"
#include "topo/ideal.hpp"

namespace topo {

Mask image_mask(std::span<const Point> f, Mask a);
Mask preimage_mask(std::span<const Point> f, Mask b);

/// Total map between two finite spaces, stored as an assignment table
/// indexed by domain point.
class SpaceMap {
 public:
  SpaceMap(FiniteSpace domain, FiniteSpace codomain,
           std::vector<Point> assignment);

  const FiniteSpace& domain() const noexcept { return domain_; }
  const FiniteSpace& codomain() const noexcept { return codomain_; }
  const std::vector<Point>& assignment() const noexcept { return f_; }
  Point operator()(Point x) const;

  PointSet image(const PointSet& a) const;
  PointSet preimage(const PointSet& b) const;

 private:
  FiniteSpace domain_;
  FiniteSpace codomain_;
  std::vector<Point> f_;
};

/// Preimage characterization: every codomain open pulls back to an open.
bool is_continuous(const FiniteSpace& x, const FiniteSpace& y,
                   std::span<const Point> f);

/// For every point x and codomain open V containing f(x),
/// f[min_nbhd(x)] <= Cl(V).
bool is_weakly_continuous(const FiniteSpace& x, const FiniteSpace& y,
                          std::span<const Point> f);

/// For every point x and codomain open V containing f(x), some domain open
/// U containing x has f[Cl(U)] <= Cl(V). The existential over U is evaluated
/// against every open neighbourhood of x; the test suite pins the agreement
/// of this scan with the single-candidate minimal-neighbourhood variant.
bool is_theta_continuous(const FiniteSpace& x, const FiniteSpace& y,
                         std::span<const Point> f);

/// Continuous as a map from X into tau_theta(Y).
bool is_faintly_continuous(const FiniteSpace& x, const FiniteSpace& y,
                           std::span<const Point> f);

/// Continuous as a map from tau_theta(X) into tau_theta(Y).
bool is_tau_theta_continuous(const FiniteSpace& x, const FiniteSpace& y,
                             std::span<const Point> f);

/// Preimage of every codomain ideal member belongs to the domain ideal;
/// for principal ideals this is one subset test on the generators.
bool ideal_compatible(std::span<const Point> f, unsigned nx, unsigned ny,
                      const Ideal& ix, const Ideal& iy);
bool ideal_compatible(const SpaceMap& f, const Ideal& ix, const Ideal& iy);

struct IdealResults {
  bool ideal_compatible = false;
  bool tau_star_to_sigma_continuous = false;
  bool sigma_to_sigma_continuous = false;
};

/// One flag per continuity notion. classify() enforces the implication
/// diagram on the result (continuous forces every other flag; theta forces
/// weakly, tau_theta and faintly; weakly and tau_theta each force faintly);
/// a report violating an arrow raises InternalInvariantViolation.
struct ContinuityReport {
  bool continuous = false;
  bool weakly_continuous = false;
  bool theta_continuous = false;
  bool faintly_continuous = false;
  bool tau_theta_continuous = false;
  std::optional<IdealResults> ideal_results;
};

ContinuityReport classify(const SpaceMap& f);
ContinuityReport classify(const SpaceMap& f, const Ideal& ideal_domain,
                          const Ideal& ideal_codomain);

}  // namespace topo
