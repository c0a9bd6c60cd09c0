#include "topo/naive.hpp"

#include <string>

namespace topo::naive {

namespace {

Mask image_of(std::span<const Point> f, Mask a) {
  Mask r = 0;
  for (std::size_t x = 0; x < f.size(); ++x)
    if (mask_contains(a, Point(x))) r |= mask_bit(f[x]);
  return r;
}

template <typename Pred>
FiniteSpace scan_topology(const FiniteSpace& s, Pred&& keep) {
  std::vector<Mask> opens;
  const std::size_t count = std::size_t{1} << s.carrier_size();
  for (std::size_t m = 0; m < count; ++m)
    if (keep(Mask(m))) opens.push_back(Mask(m));
  try {
    return make_space_from_masks(s.carrier_size(), std::move(opens));
  } catch (const Error& e) {
    throw Error(Errc::InternalInvariantViolation,
                std::string("derived family failed topology validation: ") +
                    e.what());
  }
}

}  // namespace

Mask closure_mask(const FiniteSpace& s, Mask a) {
  // x belongs iff every open containing x meets A.
  Mask r = 0;
  for (Point x = 0; x < s.carrier_size(); ++x) {
    bool in = true;
    for (Mask u : s.open_masks())
      if (mask_contains(u, x) && (u & a) == 0) {
        in = false;
        break;
      }
    if (in) r |= mask_bit(x);
  }
  return r;
}

Mask interior_mask(const FiniteSpace& s, Mask a) {
  // Union of all opens inside A.
  Mask r = 0;
  for (Mask u : s.open_masks())
    if (mask_subset(u, a)) r |= u;
  return r;
}

Mask theta_closure_mask(const FiniteSpace& s, Mask a) {
  Mask r = 0;
  for (Point x = 0; x < s.carrier_size(); ++x) {
    bool in = true;
    for (Mask u : s.open_masks())
      if (mask_contains(u, x) && (naive::closure_mask(s, u) & a) == 0) {
        in = false;
        break;
      }
    if (in) r |= mask_bit(x);
  }
  return r;
}

Mask theta_interior_mask(const FiniteSpace& s, Mask a) {
  Mask r = 0;
  for (Point x = 0; x < s.carrier_size(); ++x) {
    if (!mask_contains(a, x)) continue;
    for (Mask u : s.open_masks())
      if (mask_contains(u, x) && mask_subset(naive::closure_mask(s, u), a)) {
        r |= mask_bit(x);
        break;
      }
  }
  return r;
}

Mask local_function_mask(const FiniteSpace& s, const Ideal& i, Mask a) {
  Mask r = 0;
  for (Point x = 0; x < s.carrier_size(); ++x) {
    bool in = true;
    for (Mask u : s.open_masks())
      if (mask_contains(u, x) && i.contains_mask(a & u)) {
        in = false;
        break;
      }
    if (in) r |= mask_bit(x);
  }
  return r;
}

Mask star_closure_mask(const FiniteSpace& s, const Ideal& i, Mask a) {
  return a | naive::local_function_mask(s, i, a);
}

Mask gamma_mask(const FiniteSpace& s, const Ideal& i, Mask a) {
  Mask r = 0;
  for (Point x = 0; x < s.carrier_size(); ++x) {
    bool in = true;
    for (Mask u : s.open_masks())
      if (mask_contains(u, x) &&
          i.contains_mask(naive::closure_mask(s, u) & a)) {
        in = false;
        break;
      }
    if (in) r |= mask_bit(x);
  }
  return r;
}

Mask psi_gamma_mask(const FiniteSpace& s, const Ideal& i, Mask a) {
  const Mask full = full_mask(s.carrier_size());
  return full & ~naive::gamma_mask(s, i, full & ~a);
}

Mask sigma_closure_mask(const FiniteSpace& s, const Ideal& i, Mask a) {
  // Intersection of the sigma-closed supersets (Gamma(F) <= F, F >= A);
  // deliberately not the fixpoint iteration the optimized route uses.
  const std::size_t count = std::size_t{1} << s.carrier_size();
  Mask r = full_mask(s.carrier_size());
  for (std::size_t fm = 0; fm < count; ++fm) {
    const Mask f = Mask(fm);
    if (mask_subset(a, f) && mask_subset(naive::gamma_mask(s, i, f), f))
      r &= f;
  }
  return r;
}

FiniteSpace tau_theta(const FiniteSpace& s) {
  return scan_topology(
      s, [&](Mask m) { return naive::theta_interior_mask(s, m) == m; });
}

FiniteSpace tau_star(const FiniteSpace& s, const Ideal& i) {
  const Mask full = full_mask(s.carrier_size());
  return scan_topology(s, [&](Mask m) {
    const Mask c = full & ~m;
    return naive::star_closure_mask(s, i, c) == c;
  });
}

FiniteSpace sigma(const FiniteSpace& s, const Ideal& i) {
  return scan_topology(
      s, [&](Mask m) { return mask_subset(m, naive::psi_gamma_mask(s, i, m)); });
}

bool is_continuous(const FiniteSpace& x, const FiniteSpace& y,
                   std::span<const Point> f) {
  for (Point p = 0; p < x.carrier_size(); ++p)
    for (Mask v : y.open_masks()) {
      if (!mask_contains(v, f[p])) continue;
      bool found = false;
      for (Mask u : x.open_masks())
        if (mask_contains(u, p) && mask_subset(image_of(f, u), v)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

bool is_weakly_continuous(const FiniteSpace& x, const FiniteSpace& y,
                          std::span<const Point> f) {
  for (Point p = 0; p < x.carrier_size(); ++p)
    for (Mask v : y.open_masks()) {
      if (!mask_contains(v, f[p])) continue;
      const Mask clv = naive::closure_mask(y, v);
      bool found = false;
      for (Mask u : x.open_masks())
        if (mask_contains(u, p) && mask_subset(image_of(f, u), clv)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

bool is_theta_continuous(const FiniteSpace& x, const FiniteSpace& y,
                         std::span<const Point> f) {
  for (Point p = 0; p < x.carrier_size(); ++p)
    for (Mask v : y.open_masks()) {
      if (!mask_contains(v, f[p])) continue;
      const Mask clv = naive::closure_mask(y, v);
      bool found = false;
      for (Mask u : x.open_masks())
        if (mask_contains(u, p) &&
            mask_subset(image_of(f, naive::closure_mask(x, u)), clv)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

bool is_faintly_continuous(const FiniteSpace& x, const FiniteSpace& y,
                           std::span<const Point> f) {
  return naive::is_continuous(x, naive::tau_theta(y), f);
}

bool is_tau_theta_continuous(const FiniteSpace& x, const FiniteSpace& y,
                             std::span<const Point> f) {
  return naive::is_continuous(naive::tau_theta(x), naive::tau_theta(y), f);
}

bool ideal_compatible(std::span<const Point> f, unsigned nx, unsigned ny,
                      const Ideal& ix, const Ideal& iy) {
  if (ix.carrier_size() != nx || iy.carrier_size() != ny)
    throw Error(Errc::CarrierMismatch, "ideal carriers do not match the map");
  Mask sub = iy.generator_mask();
  while (true) {
    Mask pre = 0;
    for (std::size_t p = 0; p < f.size(); ++p)
      if (mask_contains(sub, f[p])) pre |= mask_bit(Point(p));
    if (!ix.contains_mask(pre)) return false;
    if (sub == 0) break;
    sub = (sub - 1) & iy.generator_mask();
  }
  return true;
}

}  // namespace topo::naive
