// Exact arithmetic and total ordering for countable ordinals below
// epsilon_0, kept in Cantor normal form, together with a small text
// grammar, a parser and a canonical formatter.
//
// An ordinal is the finite sum  w^e1*c1 + w^e2*c2 + ... + w^ek*ck  with
// strictly decreasing ordinal exponents e1 > e2 > ... > ek and positive
// integer coefficients.  The empty sum is 0.  The representation is
// canonical: two ordinals are equal iff their term sequences are
// identical, so structural equality decides value equality.
//
// The first uncountable ordinal w1 has no value-level representation
// here; it only bounds the intended index universe [0, w1) from above.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace translim {

/// Arbitrary-precision non-negative integer (CNF coefficients, finite parts).
using Nat = mpz_class;

/// Three-valued outcome of comparing two ordinals.
enum class Comparison { LT, EQ, GT };

/// Thrown on malformed ordinal or point text.  `position` is the
/// 0-based byte offset of the offending character in the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class Ordinal {
 public:
  struct Term;

  Ordinal();  // zero
  Ordinal(const Ordinal& other);
  Ordinal(Ordinal&& other) noexcept;
  Ordinal& operator=(const Ordinal& other);
  Ordinal& operator=(Ordinal&& other) noexcept;
  ~Ordinal();

  /// The finite ordinal n.  Throws std::invalid_argument for negative n.
  static Ordinal natural(const Nat& n);
  static Ordinal omega();

  bool is_zero() const noexcept;
  /// True for 0, 1, 2, ...: at most one term, with exponent 0.
  bool is_finite() const noexcept;
  /// The value of a finite ordinal; throws std::domain_error otherwise.
  Nat finite_value() const;

  /// CNF terms, strictly decreasing in exponent.  Empty for zero.
  const std::vector<Term>& terms() const noexcept;

  /// Canonical text form, parse(str()) reproduces the value exactly.
  std::string str() const;

 private:
  friend Ordinal add(const Ordinal&, const Ordinal&);
  friend Ordinal multiply(const Ordinal&, const Ordinal&);
  friend Ordinal power_of_omega(const Ordinal&);

  explicit Ordinal(std::vector<Term> terms);  // trusted canonical input

  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  Nat coefficient;  // >= 1
};

/// Lexicographic CNF comparison: leading exponents first, then
/// coefficients, then the remainders.  A total order.
Comparison compare(const Ordinal& a, const Ordinal& b);

/// The finite ordinal n (empty sum for 0, single term w^0*n otherwise).
Ordinal from_natural(const Nat& n);

/// a + 1.
Ordinal successor(const Ordinal& a);

/// Ordinal addition.  Not commutative: terms of `a` below the leading
/// exponent of `b` are absorbed, e.g. 1 + w = w but w + 1 > w.
Ordinal add(const Ordinal& a, const Ordinal& b);

/// Ordinal multiplication, left-distributive over the CNF of `b`.
Ordinal multiply(const Ordinal& a, const Ordinal& b);

/// The single-term ordinal w^e.
Ordinal power_of_omega(const Ordinal& e);

/// Parses the grammar
///   ordinal := term ('+' term)*
///   term    := 'w' ('^' atom)? ('*' nat)?  |  nat
///   atom    := nat | 'w' | '(' ordinal ')'
///   nat     := [0-9]+
/// Whitespace insensitive.  The result is canonical: non-canonical
/// input such as "1 + w" is normalized by evaluating with add().
/// Explicit zero coefficients ("w*0") are rejected.
Ordinal parse_ordinal(std::string_view text);

/// Parses one ordinal expression starting at `pos`; on return `pos` is
/// just past the last consumed character.  Building block for parsers
/// of larger grammars that embed ordinals (see point.hpp).
Ordinal parse_ordinal_at(std::string_view text, std::size_t& pos);

/// Canonical rendering: terms in strictly decreasing exponent order,
/// "w^(E)*C" with "^1" and "*1" elided, bare exponents for naturals and
/// plain w, single spaces around '+'.  parse_ordinal(format_ordinal(a)) == a.
std::string format_ordinal(const Ordinal& a);

/// Structural invariant check: strictly decreasing exponents, all
/// coefficients >= 1, recursively.  Every reachable Ordinal satisfies
/// this; exposed so tests can assert it on operation results.
bool is_canonical(const Ordinal& a);

bool operator==(const Ordinal& a, const Ordinal& b);
bool operator!=(const Ordinal& a, const Ordinal& b);
bool operator<(const Ordinal& a, const Ordinal& b);
bool operator<=(const Ordinal& a, const Ordinal& b);
bool operator>(const Ordinal& a, const Ordinal& b);
bool operator>=(const Ordinal& a, const Ordinal& b);

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }
inline Ordinal operator*(const Ordinal& a, const Ordinal& b) { return multiply(a, b); }

std::ostream& operator<<(std::ostream& os, const Ordinal& a);
std::ostream& operator<<(std::ostream& os, Comparison c);

}  // namespace translim
