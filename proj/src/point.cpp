#include "translim/point.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <random>
#include <sstream>

#include "rng_util.hpp"

namespace translim {

namespace {

std::string entry_name(std::size_t position) {  // 1-based
  return "entry " + std::to_string(position);
}

}  // namespace

PointError::PointError(PointDefect defect, std::size_t position,
                       const std::string& what)
    : std::runtime_error(what), defect_(defect), position_(position) {}

std::optional<PointError> Point::check(const std::vector<Ordinal>& e) {
  if (e.empty()) {
    return PointError(PointDefect::empty, 0, "a point has at least one entry pair");
  }
  if (e.size() % 2 != 0) {
    return PointError(PointDefect::odd_length, e.size(),
                      "entry count must be even, got " + std::to_string(e.size()));
  }
  const std::size_t n = e.size() / 2;
  // (i) a1 < a2
  if (compare(e[0], e[1]) != Comparison::LT) {
    return PointError(PointDefect::condition_i, 1,
                      "condition (i): " + entry_name(1) + " (" + e[0].str() +
                          ") must be below " + entry_name(2) + " (" + e[1].str() + ")");
  }
  // (ii) a(2i-1) < a(2i+2) for 0 < i < n
  for (std::size_t i = 1; i < n; ++i) {
    if (compare(e[2 * i - 2], e[2 * i + 1]) != Comparison::LT) {
      return PointError(PointDefect::condition_ii, 2 * i - 1,
                        "condition (ii): " + entry_name(2 * i - 1) + " (" +
                            e[2 * i - 2].str() + ") must be below " +
                            entry_name(2 * i + 2) + " (" + e[2 * i + 1].str() + ")");
    }
  }
  // (iii) first clause: a(2i+1) < a(2i+2) for 0 <= i < n
  for (std::size_t i = 0; i < n; ++i) {
    if (compare(e[2 * i], e[2 * i + 1]) != Comparison::LT) {
      return PointError(PointDefect::condition_iii_pair, 2 * i + 1,
                        "condition (iii): " + entry_name(2 * i + 1) + " (" +
                            e[2 * i].str() + ") must be below " +
                            entry_name(2 * i + 2) + " (" + e[2 * i + 1].str() + ")");
    }
  }
  // (iii) second clause: a(2i+1) neither below nor equal to a(2j+1), j < i.
  // The literal reading of "not <" over a preorder, kept as written.
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Comparison c = compare(e[2 * i], e[2 * j]);
      if (c == Comparison::LT || c == Comparison::EQ) {
        return PointError(PointDefect::condition_iii_chain, 2 * i + 1,
                          "condition (iii): " + entry_name(2 * i + 1) + " (" +
                              e[2 * i].str() + ") may be neither below nor equal to " +
                              entry_name(2 * j + 1) + " (" + e[2 * j].str() + ")");
      }
    }
  }
  return std::nullopt;
}

Point Point::make(std::vector<Ordinal> entries) {
  if (auto defect = check(entries)) throw *defect;
  return Point(std::move(entries));
}

std::string Point::str() const { return format_point(*this); }

bool operator==(const Point& a, const Point& b) {
  return a.entries() == b.entries();
}
bool operator!=(const Point& a, const Point& b) { return !(a == b); }

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << format_point(p);
}

bool is_member(const Point& p, const Ordinal& a) {
  return compare(p.index(), a) == Comparison::EQ;
}

std::vector<Ordinal> parse_point_entries(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '(') throw ParseError("expected '('", pos);
  ++pos;
  std::vector<Ordinal> entries;
  for (;;) {
    entries.push_back(parse_ordinal_at(text, pos));
    skip_ws();
    if (pos >= text.size()) throw ParseError("expected ',' or ')'", pos);
    if (text[pos] == ',') {
      ++pos;
      continue;
    }
    if (text[pos] == ')') {
      ++pos;
      break;
    }
    throw ParseError("expected ',' or ')'", pos);
  }
  skip_ws();
  if (pos < text.size()) throw ParseError("unexpected trailing input", pos);
  return entries;
}

Point parse_point(std::string_view text) {
  return Point::make(parse_point_entries(text));
}

std::string format_point(const Point& p) {
  std::string out = "(";
  bool first = true;
  for (const Ordinal& entry : p.entries()) {
    if (!first) out += ", ";
    first = false;
    out += format_ordinal(entry);
  }
  out += ")";
  return out;
}

Schema::Schema(std::vector<Ordinal> chain) : chain_(std::move(chain)) {
  if (chain_.empty()) throw std::invalid_argument("schema chain must be nonempty");
  for (std::size_t i = 0; i + 1 < chain_.size(); ++i) {
    if (compare(chain_[i], chain_[i + 1]) != Comparison::LT) {
      throw std::invalid_argument("schema chain must be strictly increasing");
    }
  }
}

std::string Schema::form() const {
  std::string out = "(";
  for (std::size_t i = 0; i < chain_.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_ordinal(chain_[i]);
    out += ", ";
    out += static_cast<char>('a' + i);
  }
  out += ")";
  return out;
}

bool operator==(const Schema& a, const Schema& b) {
  return a.chain() == b.chain();
}

std::vector<Schema> enumerate_schemas(const Ordinal& k) {
  if (!k.is_finite()) {
    throw std::invalid_argument("schema enumeration needs a finite index, got " +
                                k.str());
  }
  const Nat value = k.finite_value();
  if (!value.fits_ulong_p() || value.get_ui() > 24) {
    throw std::invalid_argument("schema enumeration limited to indices <= 24");
  }
  const unsigned long n = value.get_ui();
  std::vector<Schema> schemas;
  schemas.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Ordinal> chain;
    for (unsigned long i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) chain.push_back(from_natural(i));
    }
    chain.push_back(from_natural(value));
    schemas.emplace_back(std::move(chain));
  }
  return schemas;
}

Point sample_point(const Ordinal& index, const std::vector<Ordinal>& pool,
                   std::uint64_t seed) {
  bool index_present = false;
  std::vector<Ordinal> below;
  std::vector<Ordinal> sorted = pool;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const Ordinal& v : sorted) {
    Comparison c = compare(v, index);
    if (c == Comparison::EQ) index_present = true;
    if (c == Comparison::LT) below.push_back(v);
  }
  if (!index_present) {
    throw std::invalid_argument("sample_point: pool does not contain the index " +
                                index.str());
  }
  if (sorted.back() <= index) {
    throw std::invalid_argument("sample_point: pool has no element above the index " +
                                index.str());
  }

  std::mt19937_64 rng(seed);
  std::vector<Ordinal> chain;
  for (const Ordinal& v : below) {
    if (rng() & 1) chain.push_back(v);
  }
  chain.push_back(index);

  std::vector<Ordinal> entries;
  entries.reserve(2 * chain.size());
  for (const Ordinal& odd : chain) {
    // Candidates above `odd` form a suffix of the sorted pool and are
    // nonempty because something sits above the index itself.
    std::vector<const Ordinal*> above;
    for (const Ordinal& v : sorted) {
      if (v > odd) above.push_back(&v);
    }
    entries.push_back(odd);
    entries.push_back(*above[detail::bounded(rng, above.size())]);
  }
  return Point::make(std::move(entries));
}

}  // namespace translim
