#include "topo/continuity.hpp"

#include <cassert>
#include <string>

#ifndef NDEBUG
#include "topo/naive.hpp"
#endif

#include "topo/operators.hpp"

namespace topo {

Mask image_mask(std::span<const Point> f, Mask a) {
  Mask r = 0;
  for (std::size_t x = 0; x < f.size(); ++x)
    if (mask_contains(a, Point(x))) r |= mask_bit(f[x]);
  return r;
}

Mask preimage_mask(std::span<const Point> f, Mask b) {
  Mask r = 0;
  for (std::size_t x = 0; x < f.size(); ++x)
    if (mask_contains(b, f[x])) r |= mask_bit(Point(x));
  return r;
}

SpaceMap::SpaceMap(FiniteSpace domain, FiniteSpace codomain,
                   std::vector<Point> assignment)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      f_(std::move(assignment)) {
  if (f_.size() != domain_.carrier_size())
    throw Error(Errc::CarrierMismatch,
                "assignment covers " + std::to_string(f_.size()) +
                    " points, domain has " +
                    std::to_string(domain_.carrier_size()));
  for (Point y : f_)
    if (y >= codomain_.carrier_size())
      throw Error(Errc::PointOutOfRange,
                  "assignment target " + std::to_string(y) +
                      " outside codomain of " +
                      std::to_string(codomain_.carrier_size()) + " points");
}

Point SpaceMap::operator()(Point x) const {
  if (x >= f_.size())
    throw Error(Errc::PointOutOfRange,
                "point " + std::to_string(x) + " outside domain");
  return f_[x];
}

PointSet SpaceMap::image(const PointSet& a) const {
  check_carrier_match(domain_, a);
  return PointSet(codomain_.carrier_size(), image_mask(f_, a.bits()));
}

PointSet SpaceMap::preimage(const PointSet& b) const {
  check_carrier_match(codomain_, b);
  return PointSet(domain_.carrier_size(), preimage_mask(f_, b.bits()));
}

namespace {

#ifndef NDEBUG
// The preimage characterization is equivalent to three set-function
// characterizations; cross-checked on small carriers in debug builds.
bool continuity_set_characterizations_agree(const FiniteSpace& x,
                                            const FiniteSpace& y,
                                            std::span<const Point> f,
                                            bool expected) {
  if (x.carrier_size() > 8 || y.carrier_size() > 8) return true;
  const std::size_t nxs = std::size_t{1} << x.carrier_size();
  const std::size_t nys = std::size_t{1} << y.carrier_size();
  bool c = true, d = true, e = true;
  for (std::size_t a = 0; a < nxs && c; ++a)
    c = mask_subset(image_mask(f, closure_mask(x, Mask(a))),
                    closure_mask(y, image_mask(f, Mask(a))));
  for (std::size_t b = 0; b < nys && (d && e); ++b) {
    d = d && mask_subset(closure_mask(x, preimage_mask(f, Mask(b))),
                         preimage_mask(f, closure_mask(y, Mask(b))));
    e = e && mask_subset(preimage_mask(f, interior_mask(y, Mask(b))),
                         interior_mask(x, preimage_mask(f, Mask(b))));
  }
  return c == expected && d == expected && e == expected;
}
#endif

}  // namespace

bool is_continuous(const FiniteSpace& x, const FiniteSpace& y,
                   std::span<const Point> f) {
  bool ok = true;
  for (Mask v : y.open_masks())
    if (!x.is_open_mask(preimage_mask(f, v))) {
      ok = false;
      break;
    }
  assert(continuity_set_characterizations_agree(x, y, f, ok));
  return ok;
}

bool is_weakly_continuous(const FiniteSpace& x, const FiniteSpace& y,
                          std::span<const Point> f) {
  const auto& nb = x.min_nbhd_table();
  for (Point p = 0; p < x.carrier_size(); ++p) {
    const Mask img = image_mask(f, nb[p]);
    for (Mask v : y.open_masks())
      if (mask_contains(v, f[p]) && !mask_subset(img, closure_mask(y, v)))
        return false;
  }
  return true;
}

bool is_theta_continuous(const FiniteSpace& x, const FiniteSpace& y,
                         std::span<const Point> f) {
  // The existential over U scans every open neighbourhood of p rather than
  // committing to min_nbhd(p); the tests pin the two routes against each
  // other.
  for (Point p = 0; p < x.carrier_size(); ++p)
    for (Mask v : y.open_masks()) {
      if (!mask_contains(v, f[p])) continue;
      const Mask clv = closure_mask(y, v);
      bool found = false;
      for (Mask u : x.open_masks())
        if (mask_contains(u, p) &&
            mask_subset(image_mask(f, closure_mask(x, u)), clv)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

bool is_faintly_continuous(const FiniteSpace& x, const FiniteSpace& y,
                           std::span<const Point> f) {
  return is_continuous(x, tau_theta(y), f);
}

bool is_tau_theta_continuous(const FiniteSpace& x, const FiniteSpace& y,
                             std::span<const Point> f) {
  return is_continuous(tau_theta(x), tau_theta(y), f);
}

bool ideal_compatible(std::span<const Point> f, unsigned nx, unsigned ny,
                      const Ideal& ix, const Ideal& iy) {
  if (ix.carrier_size() != nx || iy.carrier_size() != ny)
    throw Error(Errc::CarrierMismatch, "ideal carriers do not match the map");
  // Principal reduction: the preimage of the codomain generator must belong
  // to the domain ideal; every other member is dominated by the generator.
  const bool ok =
      ix.contains_mask(preimage_mask(f, iy.generator_mask()));
#ifndef NDEBUG
  assert(ok == naive::ideal_compatible(f, nx, ny, ix, iy));
#endif
  return ok;
}

bool ideal_compatible(const SpaceMap& f, const Ideal& ix, const Ideal& iy) {
  return ideal_compatible(f.assignment(), f.domain().carrier_size(),
                          f.codomain().carrier_size(), ix, iy);
}

namespace {

void enforce_arrows(const ContinuityReport& r) {
  const bool ok =
      (!r.continuous || (r.weakly_continuous && r.theta_continuous &&
                         r.faintly_continuous && r.tau_theta_continuous)) &&
      (!r.theta_continuous || (r.weakly_continuous && r.tau_theta_continuous &&
                               r.faintly_continuous)) &&
      (!r.weakly_continuous || r.faintly_continuous) &&
      (!r.tau_theta_continuous || r.faintly_continuous);
  if (!ok)
    throw Error(Errc::InternalInvariantViolation,
                "continuity report violates the implication diagram");
}

}  // namespace

ContinuityReport classify(const SpaceMap& f) {
  const FiniteSpace& x = f.domain();
  const FiniteSpace& y = f.codomain();
  const auto& a = f.assignment();
  const FiniteSpace theta_x = tau_theta(x);
  const FiniteSpace theta_y = tau_theta(y);

  ContinuityReport r;
  r.continuous = is_continuous(x, y, a);
  r.weakly_continuous = is_weakly_continuous(x, y, a);
  r.theta_continuous = is_theta_continuous(x, y, a);
  r.faintly_continuous = is_continuous(x, theta_y, a);
  r.tau_theta_continuous = is_continuous(theta_x, theta_y, a);
  enforce_arrows(r);
  return r;
}

ContinuityReport classify(const SpaceMap& f, const Ideal& ideal_domain,
                          const Ideal& ideal_codomain) {
  ContinuityReport r = classify(f);
  const auto& a = f.assignment();
  IdealResults ir;
  ir.ideal_compatible = ideal_compatible(f, ideal_domain, ideal_codomain);
  const FiniteSpace sigma_y = sigma(f.codomain(), ideal_codomain);
  ir.tau_star_to_sigma_continuous =
      is_continuous(tau_star(f.domain(), ideal_domain), sigma_y, a);
  ir.sigma_to_sigma_continuous =
      is_continuous(sigma(f.domain(), ideal_domain), sigma_y, a);
  r.ideal_results = ir;
  return r;
}

}  // namespace topo
