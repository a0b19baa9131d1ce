// Points: finite even-length ordinal sequences (a1, a2, ..., a2n)
// subject to three conditions, checked in this order:
//   (i)   a1 < a2;
//   (ii)  a(2i-1) < a(2i+2) for 0 < i < n;
//   (iii) a(2i+1) < a(2i+2) for 0 <= i < n, and a(2i+1) is neither
//         below nor equal to a(2j+1) for 0 <= j < i < n.
// The set X_a collects the points whose index (second-to-last entry)
// is a.  Condition (ii) follows from (i) and (iii) over the total
// ordinal order; it is still checked separately so diagnostics name
// the condition that actually failed.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "translim/ordinal.hpp"

namespace translim {

enum class PointDefect {
  empty,               // no entries at all
  odd_length,          // entry count not even
  condition_i,         // a1 < a2 fails
  condition_ii,        // a(2i-1) < a(2i+2) fails
  condition_iii_pair,  // a(2i+1) < a(2i+2) fails
  condition_iii_chain, // a(2i+1) below or equal to an earlier odd entry
};

/// Reported with the paper-and-pencil entry numbering: `position` is
/// the 1-based number of the left-hand entry of the first failed
/// comparison (the entry count itself for length defects).
class PointError : public std::runtime_error {
 public:
  PointError(PointDefect defect, std::size_t position, const std::string& what);
  PointDefect defect() const noexcept { return defect_; }
  std::size_t position() const noexcept { return position_; }

 private:
  PointDefect defect_;
  std::size_t position_;
};

class Point {
 public:
  /// Validates and wraps; throws PointError naming the first violated
  /// condition.  Conditions are checked in the order (i), (ii), (iii).
  static Point make(std::vector<Ordinal> entries);

  /// Non-throwing classification of an arbitrary entry sequence.
  static std::optional<PointError> check(const std::vector<Ordinal>& entries);

  const std::vector<Ordinal>& entries() const noexcept { return entries_; }

  /// a(2n-1), the second-to-last entry.
  const Ordinal& index() const noexcept { return entries_[entries_.size() - 2]; }
  /// a(2n), the last entry.  Always above index().
  const Ordinal& order() const noexcept { return entries_.back(); }
  /// n, the number of entry pairs.
  std::size_t length() const noexcept { return entries_.size() / 2; }

  /// Text form "(0, w, 1, w*2)".
  std::string str() const;

 private:
  explicit Point(std::vector<Ordinal> entries) : entries_(std::move(entries)) {}

  std::vector<Ordinal> entries_;
};

bool operator==(const Point& a, const Point& b);
bool operator!=(const Point& a, const Point& b);
std::ostream& operator<<(std::ostream& os, const Point& p);

/// Membership in X_a: does p have index a?
bool is_member(const Point& p, const Ordinal& a);

/// Syntax only: "(" ordinal ("," ordinal)* ")", whitespace insensitive.
/// Throws ParseError; performs no point validation.
std::vector<Ordinal> parse_point_entries(std::string_view text);

/// parse_point_entries + Point::make.
Point parse_point(std::string_view text);

std::string format_point(const Point& p);

/// One structural shape of X_target members: the strictly increasing
/// chain of odd-position entries, ending at the target index.
class Schema {
 public:
  explicit Schema(std::vector<Ordinal> chain);  // nonempty, strictly increasing

  const std::vector<Ordinal>& chain() const noexcept { return chain_; }
  const Ordinal& target() const noexcept { return chain_.back(); }

  /// Symbolic point form with letter placeholders for the free even
  /// slots, e.g. chain [0, 2] renders as "(0, a, 2, b)".
  std::string form() const;

 private:
  std::vector<Ordinal> chain_;
};

bool operator==(const Schema& a, const Schema& b);

/// All strictly increasing chains over {0, ..., k} ending at k: exactly
/// 2^k schemas, ordered by the subset of {0, ..., k-1} they pass
/// through, in binary counting order (bit i of the counter selects i).
/// Rejects non-finite k and k > 24 (the enumeration is exponential).
std::vector<Schema> enumerate_schemas(const Ordinal& k);

/// Seed-deterministic random valid point with the given index: the odd
/// entries are a uniformly chosen chain through the pool elements below
/// `index`, each even entry uniform among pool elements above its odd
/// neighbour.  Throws std::invalid_argument if the pool lacks `index`
/// or has nothing above it.
Point sample_point(const Ordinal& index, const std::vector<Ordinal>& pool,
                   std::uint64_t seed);

}  // namespace translim
