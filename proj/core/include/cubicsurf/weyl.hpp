#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cubicsurf/catalog.hpp"
#include "cubicsurf/divisor.hpp"

namespace cubicsurf {

/// An integer 7x7 matrix acting on divisor-class coordinates.  Group
/// elements preserve the intersection form and fix K (equivalently H);
/// entries of W(E6) elements in this basis fit comfortably in int8.
struct WeylElement {
  std::array<std::int8_t, 49> m{};  // row-major

  static WeylElement identity();
  /// Reflection s_v(D) = D + (D.v) v for a root v (v.v = -2).
  static WeylElement reflection(const DivisorClass& root);

  DivisorClass apply(const DivisorClass& d) const;
  WeylElement compose(const WeylElement& other) const;  // (*this) after other
  bool preserves(const IntersectionForm& form) const;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const;
};

/// s_alpha(D) = D + (D.alpha) alpha.  Throws std::domain_error unless alpha
/// is a root.
DivisorClass reflect(const DivisorClass& alpha, const DivisorClass& d);

/// Canonical root basis: alpha_0 = l - b1 - b2 - b3, alpha_i = b_i - b_{i+1}.
const std::array<DivisorClass, 6>& simple_roots();

/// Closure of the six simple reflections under composition; exactly 51840
/// elements.  Computed once and cached.  If a cache directory was set (and
/// holds a valid dump) the closure is loaded from disk instead; a missing or
/// stale cache file is never an error.
const std::vector<WeylElement>& weyl_group();

/// Must be called before the first weyl_group() use to take effect.
void set_group_cache_dir(const std::string& dir);

/// Cache file primitives behind weyl_group(): a versioned binary dump of the
/// closure.  Loading validates the header, the element count and that every
/// matrix preserves the form and fixes K; anything off yields an empty
/// vector (the cache is advisory, never authoritative).
bool store_group_cache_file(const std::string& path, const std::vector<WeylElement>& elems);
std::vector<WeylElement> load_group_cache_file(const std::string& path);

/// W-orbit by breadth-first closure under the six generators (no need for
/// the full group).
std::vector<DivisorClass> orbit(const DivisorClass& d);

/// Orbit of a sixer under the member-wise action.
std::vector<Sixer> sixer_orbit(const Sixer& s);

/// The root attached to a sixer: w = (-2*kappa + v1 + ... + v6)/3 computed in
/// the e-basis (here kappa has the coordinates of H under the identity
/// marking l <-> e0, b_i <-> e_i).  The quotient is checked to be integral
/// and a root; anything else throws std::logic_error.
DivisorClass sixer_root(const Sixer& s);

}  // namespace cubicsurf
