#include "translim/ordinal.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace translim {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error("syntax error at position " + std::to_string(position) +
                         ": " + what),
      position_(position) {}

Ordinal::Ordinal() = default;
Ordinal::Ordinal(const Ordinal& other) = default;
Ordinal::Ordinal(Ordinal&& other) noexcept = default;
Ordinal& Ordinal::operator=(const Ordinal& other) = default;
Ordinal& Ordinal::operator=(Ordinal&& other) noexcept = default;
Ordinal::~Ordinal() = default;

Ordinal::Ordinal(std::vector<Term> terms) : terms_(std::move(terms)) {}

Ordinal Ordinal::natural(const Nat& n) {
  if (n < 0) throw std::invalid_argument("ordinal: negative natural " + n.get_str());
  if (n == 0) return Ordinal();
  std::vector<Term> terms;
  terms.push_back(Term{Ordinal(), n});
  return Ordinal(std::move(terms));
}

Ordinal Ordinal::omega() {
  std::vector<Term> terms;
  terms.push_back(Term{natural(1), 1});
  return Ordinal(std::move(terms));
}

bool Ordinal::is_zero() const noexcept { return terms_.empty(); }

bool Ordinal::is_finite() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

Nat Ordinal::finite_value() const {
  if (!is_finite()) throw std::domain_error("ordinal " + str() + " is not finite");
  return terms_.empty() ? Nat(0) : terms_[0].coefficient;
}

const std::vector<Ordinal::Term>& Ordinal::terms() const noexcept { return terms_; }

std::string Ordinal::str() const { return format_ordinal(*this); }

Comparison compare(const Ordinal& a, const Ordinal& b) {
  const auto& at = a.terms();
  const auto& bt = b.terms();
  const std::size_t common = std::min(at.size(), bt.size());
  for (std::size_t i = 0; i < common; ++i) {
    Comparison ce = compare(at[i].exponent, bt[i].exponent);
    if (ce != Comparison::EQ) return ce;
    int cc = cmp(at[i].coefficient, bt[i].coefficient);
    if (cc != 0) return cc < 0 ? Comparison::LT : Comparison::GT;
  }
  if (at.size() == bt.size()) return Comparison::EQ;
  return at.size() < bt.size() ? Comparison::LT : Comparison::GT;
}

Ordinal from_natural(const Nat& n) { return Ordinal::natural(n); }

Ordinal successor(const Ordinal& a) { return add(a, from_natural(1)); }

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ordinal& lead = b.terms_.front().exponent;
  std::vector<Ordinal::Term> out;
  std::size_t keep = 0;
  while (keep < a.terms_.size() &&
         compare(a.terms_[keep].exponent, lead) == Comparison::GT) {
    out.push_back(a.terms_[keep]);
    ++keep;
  }
  out.insert(out.end(), b.terms_.begin(), b.terms_.end());
  // A term of `a` with the same leading exponent merges; everything
  // else below it is absorbed.
  if (keep < a.terms_.size() &&
      compare(a.terms_[keep].exponent, lead) == Comparison::EQ) {
    out[keep].coefficient += a.terms_[keep].coefficient;
  }
  return Ordinal(std::move(out));
}

Ordinal multiply(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  Ordinal acc;
  const Ordinal::Term& lead = a.terms_.front();
  for (const Ordinal::Term& bt : b.terms_) {
    if (bt.exponent.is_zero()) {
      // a * d for finite d scales the leading coefficient only.
      std::vector<Ordinal::Term> scaled = a.terms_;
      scaled.front().coefficient = lead.coefficient * bt.coefficient;
      acc = add(acc, Ordinal(std::move(scaled)));
    } else {
      std::vector<Ordinal::Term> single;
      single.push_back(Ordinal::Term{add(lead.exponent, bt.exponent), bt.coefficient});
      acc = add(acc, Ordinal(std::move(single)));
    }
  }
  return acc;
}

Ordinal power_of_omega(const Ordinal& e) {
  std::vector<Ordinal::Term> terms;
  terms.push_back(Ordinal::Term{e, 1});
  return Ordinal(std::move(terms));
}

bool is_canonical(const Ordinal& a) {
  const auto& terms = a.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient < 1) return false;
    if (!is_canonical(terms[i].exponent)) return false;
    if (i + 1 < terms.size() &&
        compare(terms[i].exponent, terms[i + 1].exponent) != Comparison::GT) {
      return false;
    }
  }
  return true;
}

bool operator==(const Ordinal& a, const Ordinal& b) {
  return compare(a, b) == Comparison::EQ;
}
bool operator!=(const Ordinal& a, const Ordinal& b) { return !(a == b); }
bool operator<(const Ordinal& a, const Ordinal& b) {
  return compare(a, b) == Comparison::LT;
}
bool operator<=(const Ordinal& a, const Ordinal& b) {
  return compare(a, b) != Comparison::GT;
}
bool operator>(const Ordinal& a, const Ordinal& b) {
  return compare(a, b) == Comparison::GT;
}
bool operator>=(const Ordinal& a, const Ordinal& b) {
  return compare(a, b) != Comparison::LT;
}

namespace {

bool at_end(std::string_view text, std::size_t pos) { return pos >= text.size(); }

void skip_ws(std::string_view text, std::size_t& pos) {
  while (pos < text.size() &&
         std::isspace(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
}

bool is_digit(std::string_view text, std::size_t pos) {
  return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
}

Nat parse_nat(std::string_view text, std::size_t& pos) {
  if (!is_digit(text, pos)) throw ParseError("expected a number", pos);
  std::string digits;
  while (is_digit(text, pos)) digits.push_back(text[pos++]);
  return Nat(digits, 10);
}

Ordinal parse_atom(std::string_view text, std::size_t& pos);

// term := 'w' ('^' atom)? ('*' nat)? | nat
Ordinal parse_term(std::string_view text, std::size_t& pos) {
  skip_ws(text, pos);
  if (at_end(text, pos)) throw ParseError("expected 'w' or a number", pos);
  if (text[pos] != 'w') {
    return from_natural(parse_nat(text, pos));
  }
  ++pos;
  Ordinal exponent = from_natural(1);
  std::size_t probe = pos;
  skip_ws(text, probe);
  if (!at_end(text, probe) && text[probe] == '^') {
    pos = probe + 1;
    exponent = parse_atom(text, pos);
  }
  Nat coefficient = 1;
  probe = pos;
  skip_ws(text, probe);
  if (!at_end(text, probe) && text[probe] == '*') {
    pos = probe + 1;
    skip_ws(text, pos);
    std::size_t nat_pos = pos;
    coefficient = parse_nat(text, pos);
    if (coefficient == 0) throw ParseError("coefficient must be positive", nat_pos);
  }
  return multiply(power_of_omega(exponent), from_natural(coefficient));
}

// atom := nat | 'w' | '(' ordinal ')'
Ordinal parse_atom(std::string_view text, std::size_t& pos) {
  skip_ws(text, pos);
  if (at_end(text, pos)) throw ParseError("expected an exponent", pos);
  if (text[pos] == '(') {
    ++pos;
    Ordinal inner = parse_ordinal_at(text, pos);
    skip_ws(text, pos);
    if (at_end(text, pos) || text[pos] != ')') throw ParseError("expected ')'", pos);
    ++pos;
    return inner;
  }
  if (text[pos] == 'w') {
    ++pos;
    return Ordinal::omega();
  }
  return from_natural(parse_nat(text, pos));
}

}  // namespace

Ordinal parse_ordinal_at(std::string_view text, std::size_t& pos) {
  Ordinal result = parse_term(text, pos);
  for (;;) {
    std::size_t probe = pos;
    skip_ws(text, probe);
    if (at_end(text, probe) || text[probe] != '+') break;
    pos = probe + 1;
    result = add(result, parse_term(text, pos));
  }
  return result;
}

Ordinal parse_ordinal(std::string_view text) {
  std::size_t pos = 0;
  skip_ws(text, pos);
  Ordinal result = parse_ordinal_at(text, pos);
  skip_ws(text, pos);
  if (!at_end(text, pos)) throw ParseError("unexpected trailing input", pos);
  return result;
}

std::string format_ordinal(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Ordinal::Term& term : a.terms()) {
    if (!first) out += " + ";
    first = false;
    const Ordinal& e = term.exponent;
    if (e.is_zero()) {
      out += term.coefficient.get_str();
      continue;
    }
    out += 'w';
    if (e != from_natural(1)) {
      out += '^';
      // Bare exponents only where the grammar's atom allows them.
      if (e.is_finite() || e == Ordinal::omega()) {
        out += format_ordinal(e);
      } else {
        out += '(';
        out += format_ordinal(e);
        out += ')';
      }
    }
    if (term.coefficient != 1) {
      out += '*';
      out += term.coefficient.get_str();
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Ordinal& a) {
  return os << format_ordinal(a);
}

std::ostream& operator<<(std::ostream& os, Comparison c) {
  switch (c) {
    case Comparison::LT: return os << "LT";
    case Comparison::EQ: return os << "EQ";
    case Comparison::GT: return os << "GT";
  }
  return os;
}

}  // namespace translim
