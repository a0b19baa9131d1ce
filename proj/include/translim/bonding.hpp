// The bonding maps f^b_a : X_b -> X_a for a <= b, their surjectivity
// sections, and checkers for the identity and composition laws.
//
// project() follows the two-case rule:
//   Case I  (target <= a1):  x maps to (target, a2).
//   Case II (target >  a1):  with j the least pair position (1-based
//           pairs, j in 1..n-1) whose odd entry is >= target, x maps to
//           (a1, ..., a(2j), target, a(2j+2)).
// The boundary sits at "target <= odd entry": that is what makes
// f^a_a the identity and keeps the maps closed under composition.

#pragma once

#include <optional>

#include "translim/ordinal.hpp"
#include "translim/point.hpp"

namespace translim {

/// A source/target pair naming the bonding map f^source_target.
/// Only maps downward: target <= source.
class MapSpec {
 public:
  MapSpec(Ordinal source, Ordinal target);

  const Ordinal& source() const noexcept { return source_; }
  const Ordinal& target() const noexcept { return target_; }

 private:
  Ordinal source_;
  Ordinal target_;
};

/// Applies f^source_target to x.  Requires x in X_source; the result is
/// a valid point in X_target.
Point project(const MapSpec& spec, const Point& x);

/// A right inverse for project((beta -> alpha)) on x in X_alpha: appends
/// the pair (beta, gamma), with gamma defaulting to beta + 1.  Returns x
/// itself when beta == alpha.  Requires alpha <= beta and gamma > beta.
Point section(const Ordinal& alpha, const Ordinal& beta, const Point& x,
              const std::optional<Ordinal>& gamma = std::nullopt);

/// f^alpha_alpha(x) == x.  Requires x in X_alpha.
bool check_identity(const Ordinal& alpha, const Point& x);

/// f^beta_alpha(f^gamma_beta(x)) == f^gamma_alpha(x) for
/// alpha <= beta <= gamma and x in X_gamma.
bool check_composition(const Ordinal& alpha, const Ordinal& beta,
                       const Ordinal& gamma, const Point& x);

}  // namespace translim
