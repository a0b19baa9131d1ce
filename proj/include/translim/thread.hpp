// Finite-fragment laboratory for partial threads of the inverse system:
// compatible families over finite index sets, order/length profiles,
// the order-is-a-function-of-length lemma, an exhaustive small-universe
// oracle, and a seeded random law suite over arbitrary (including
// transfinite) pools.
//
// A full thread would pick one point per index across all of [0, w1)
// with every bonding map matching; only its finite restrictions are
// representable, and those already exhibit the obstruction: each
// member's order strictly exceeds its index, and the order depends only
// on the length, a natural number.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "translim/bonding.hpp"
#include "translim/ordinal.hpp"
#include "translim/point.hpp"

namespace translim {

/// Finite ordered map from index ordinals to points of that index;
/// nonempty, each value a member of X_key.
class Family {
 public:
  explicit Family(std::map<Ordinal, Point> entries);

  const std::map<Ordinal, Point>& entries() const noexcept { return entries_; }
  const Point& at(const Ordinal& key) const;
  const Ordinal& max_key() const noexcept { return entries_.rbegin()->first; }
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::map<Ordinal, Point> entries_;
};

struct ProfileRow {
  Ordinal index;
  std::size_t length;
  Ordinal order;
};

/// The family {a -> f^gamma_a(top) : a in indices}.  Requires top in
/// X_gamma and every index <= gamma; the result is always compatible.
Family project_family(const Ordinal& gamma, const Point& top,
                      const std::vector<Ordinal>& indices);

/// True iff project((b -> a), f[b]) == f[a] for every key pair a <= b.
bool is_compatible(const Family& f);

/// Extends a compatible family one key upward by lifting the top member
/// with section(); throws std::invalid_argument on an incompatible
/// input or beta <= max key.  The result is compatible again.
Family extend_family(const Family& f, const Ordinal& beta,
                     const std::optional<Ordinal>& gamma = std::nullopt);

/// One row per key, in key order.  Every row has index < order.
std::vector<ProfileRow> order_length_profile(const Family& f);

/// In a compatible family all members are projections of the top
/// member, so any two members of equal length share their order.
/// Returns that check; throws std::invalid_argument if the family is
/// not compatible (the lemma presupposes a common top).
bool check_order_function_of_length(const Family& f);

/// Every valid point whose entries lie in the pool, in deterministic
/// order (odd-entry chains by subset counting order, completions by
/// position).  Works for any pool; finite pools give finite counts.
std::vector<Point> enumerate_points(const std::vector<Ordinal>& pool);

struct CheckResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_counterexample;  // empty when no failure

  bool passed() const noexcept { return failures == 0; }
};

struct OracleReport {
  std::uint64_t point_count = 0;  // structural enumeration
  std::uint64_t recount = 0;      // independent prefix-extension count
  std::vector<CheckResult> checks;

  bool passed() const noexcept;
};

/// Brute-force verification over a finite pool: enumerates every valid
/// point two independent ways, sweeps the validator against literally
/// transcribed conditions, and checks the identity, composition,
/// section round-trip, well-formedness, length-monotonicity and
/// order/length-lemma properties exhaustively.  Counterexamples are
/// reported, never thrown.
OracleReport exhaustive_oracle(const std::vector<Ordinal>& pool);

struct LawSuiteReport {
  std::vector<CheckResult> checks;
  bool passed() const noexcept;
};

/// Seeded random checks of the identity, composition and section
/// round-trip laws, `samples` cases each, over an arbitrary ordinal
/// pool (transfinite elements welcome).
LawSuiteReport run_law_suite(const std::vector<Ordinal>& pool,
                             std::uint64_t samples, std::uint64_t seed);

}  // namespace translim
