#include "translim/thread.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "rng_util.hpp"

namespace translim {

namespace {

std::vector<Ordinal> sorted_unique(std::vector<Ordinal> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

}  // namespace

Family::Family(std::map<Ordinal, Point> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("family must be nonempty");
  for (const auto& [key, point] : entries_) {
    if (!is_member(point, key)) {
      throw std::invalid_argument("family member " + point.str() +
                                  " does not lie in X_" + key.str());
    }
  }
}

const Point& Family::at(const Ordinal& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    throw std::invalid_argument("family has no member at index " + key.str());
  }
  return it->second;
}

Family project_family(const Ordinal& gamma, const Point& top,
                      const std::vector<Ordinal>& indices) {
  if (!is_member(top, gamma)) {
    throw std::invalid_argument("project_family: top " + top.str() +
                                " does not lie in X_" + gamma.str());
  }
  if (indices.empty()) {
    throw std::invalid_argument("project_family: need at least one index");
  }
  std::map<Ordinal, Point> entries;
  for (const Ordinal& a : indices) {
    if (compare(a, gamma) == Comparison::GT) {
      throw std::invalid_argument("project_family: index " + a.str() +
                                  " exceeds top index " + gamma.str());
    }
    entries.emplace(a, project(MapSpec(gamma, a), top));
  }
  return Family(std::move(entries));
}

bool is_compatible(const Family& f) {
  const auto& entries = f.entries();
  for (auto hi = entries.begin(); hi != entries.end(); ++hi) {
    for (auto lo = entries.begin(); lo != hi; ++lo) {
      if (project(MapSpec(hi->first, lo->first), hi->second) != lo->second) {
        return false;
      }
    }
  }
  return true;
}

Family extend_family(const Family& f, const Ordinal& beta,
                     const std::optional<Ordinal>& gamma) {
  if (!is_compatible(f)) {
    throw std::invalid_argument("extend_family: family is not compatible");
  }
  const Ordinal& top = f.max_key();
  if (compare(beta, top) != Comparison::GT) {
    throw std::invalid_argument("extend_family: new index " + beta.str() +
                                " must exceed the maximum key " + top.str());
  }
  std::map<Ordinal, Point> entries = f.entries();
  entries.emplace(beta, section(top, beta, f.at(top), gamma));
  return Family(std::move(entries));
}

std::vector<ProfileRow> order_length_profile(const Family& f) {
  std::vector<ProfileRow> rows;
  rows.reserve(f.size());
  for (const auto& [key, point] : f.entries()) {
    rows.push_back(ProfileRow{key, point.length(), point.order()});
  }
  return rows;
}

bool check_order_function_of_length(const Family& f) {
  if (!is_compatible(f)) {
    throw std::invalid_argument(
        "order/length lemma applies to compatible families only");
  }
  const std::vector<ProfileRow> rows = order_length_profile(f);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (rows[i].length == rows[j].length && rows[i].order != rows[j].order) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Point> enumerate_points(const std::vector<Ordinal>& pool) {
  const std::vector<Ordinal> values = sorted_unique(pool);
  if (values.empty()) throw std::invalid_argument("enumeration pool is empty");
  if (values.size() > 24) {
    throw std::invalid_argument("enumeration pools limited to 24 elements");
  }

  // Valid points factor as: strictly increasing odd-entry chain, plus
  // one even entry above each odd one.  Chains are subsets of the
  // sorted pool, walked in binary counting order.
  std::vector<std::vector<Ordinal>> above(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    above[i].assign(values.begin() + i + 1, values.end());
  }

  std::vector<Point> points;
  const std::uint64_t subsets = std::uint64_t{1} << values.size();
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    std::vector<std::size_t> chain;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (mask & (std::uint64_t{1} << i)) chain.push_back(i);
    }
    bool feasible = true;
    for (std::size_t i : chain) {
      if (above[i].empty()) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;

    // Odometer over the even-entry choices.
    std::vector<std::size_t> pick(chain.size(), 0);
    for (;;) {
      std::vector<Ordinal> entries;
      entries.reserve(2 * chain.size());
      for (std::size_t i = 0; i < chain.size(); ++i) {
        entries.push_back(values[chain[i]]);
        entries.push_back(above[chain[i]][pick[i]]);
      }
      points.push_back(Point::make(std::move(entries)));

      std::size_t slot = chain.size();
      while (slot > 0) {
        --slot;
        if (++pick[slot] < above[chain[slot]].size()) break;
        pick[slot] = 0;
        if (slot == 0) goto chain_done;
      }
    }
  chain_done:;
  }
  return points;
}

namespace {

// Literal transcription of the three conditions as quantified loops,
// kept free of Point internals so the oracle checks the validator
// against an independently written judgement.
bool literally_valid(const std::vector<Ordinal>& e) {
  if (e.empty() || e.size() % 2 != 0) return false;
  const std::size_t n = e.size() / 2;
  bool ok = true;
  // (i)
  ok = ok && compare(e[0], e[1]) == Comparison::LT;
  // (ii)
  for (std::size_t i = 1; i < n; ++i) {
    ok = ok && compare(e[2 * i - 2], e[2 * i + 1]) == Comparison::LT;
  }
  // (iii), both clauses
  for (std::size_t i = 0; i < n; ++i) {
    ok = ok && compare(e[2 * i], e[2 * i + 1]) == Comparison::LT;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Comparison c = compare(e[2 * i], e[2 * j]);
      ok = ok && c != Comparison::LT && c != Comparison::EQ;
    }
  }
  return ok;
}

void record_failure(CheckResult& check, const std::string& counterexample) {
  if (check.failures == 0) check.first_counterexample = counterexample;
  ++check.failures;
}

std::string describe_entries(const std::vector<Ordinal>& entries) {
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) out += ", ";
    out += entries[i].str();
  }
  return out + ")";
}

// Counts valid points by extending valid prefixes pair by pair; a
// different traversal than enumerate_points' chain-subset walk, used
// as the independent recount.
std::uint64_t recount_by_prefix_extension(const std::vector<Ordinal>& values) {
  std::uint64_t count = 0;
  std::vector<Ordinal> prefix;

  auto extend = [&](auto&& self) -> void {
    for (const Ordinal& odd : values) {
      // New odd entry must top every existing odd entry.
      bool odd_ok = true;
      for (std::size_t i = 0; i + 1 < prefix.size(); i += 2) {
        if (compare(odd, prefix[i]) != Comparison::GT) {
          odd_ok = false;
          break;
        }
      }
      if (!odd_ok) continue;
      for (const Ordinal& even : values) {
        if (compare(odd, even) != Comparison::LT) continue;
        // Previous pair's odd entry must sit below the new even entry.
        if (prefix.size() >= 2 &&
            compare(prefix[prefix.size() - 2], even) != Comparison::LT) {
          continue;
        }
        prefix.push_back(odd);
        prefix.push_back(even);
        ++count;
        self(self);
        prefix.pop_back();
        prefix.pop_back();
      }
    }
  };
  extend(extend);
  return count;
}

}  // namespace

bool OracleReport::passed() const noexcept {
  if (point_count != recount) return false;
  for (const CheckResult& check : checks) {
    if (!check.passed()) return false;
  }
  return true;
}

OracleReport exhaustive_oracle(const std::vector<Ordinal>& pool) {
  const std::vector<Ordinal> values = sorted_unique(pool);
  if (values.empty()) throw std::invalid_argument("oracle pool is empty");
  for (const Ordinal& v : values) {
    if (!v.is_finite()) {
      throw std::invalid_argument("oracle pool must be finite ordinals, got " +
                                  v.str());
    }
  }

  OracleReport report;
  const std::vector<Point> points = enumerate_points(values);
  report.point_count = points.size();
  report.recount = recount_by_prefix_extension(values);

  CheckResult recount_check{"enumeration_recount", 1, 0, ""};
  if (report.point_count != report.recount) {
    record_failure(recount_check, "chain-subset count " +
                                      std::to_string(report.point_count) +
                                      " != prefix-extension count " +
                                      std::to_string(report.recount));
  }

  // Validator agreement: sweep every even-length entry sequence over
  // the pool (up to length 6, or shorter if no longer point can exist)
  // and compare Point::check against the literal conditions.
  CheckResult agreement{"validator_agreement", 0, 0, ""};
  std::size_t max_pairs = values.size() > 0 ? values.size() - 1 : 0;
  max_pairs = std::min<std::size_t>(max_pairs, 3);
  for (std::size_t pairs = 1; pairs <= std::max<std::size_t>(max_pairs, 1); ++pairs) {
    const std::size_t len = 2 * pairs;
    std::vector<std::size_t> pick(len, 0);
    for (;;) {
      std::vector<Ordinal> entries;
      entries.reserve(len);
      for (std::size_t i = 0; i < len; ++i) entries.push_back(values[pick[i]]);
      ++agreement.cases;
      const bool validator = !Point::check(entries).has_value();
      const bool literal = literally_valid(entries);
      if (validator != literal) {
        record_failure(agreement, describe_entries(entries));
      }
      std::size_t slot = len;
      while (slot > 0) {
        --slot;
        if (++pick[slot] < values.size()) break;
        pick[slot] = 0;
        if (slot == 0) goto sweep_done;
      }
    }
  sweep_done:;
  }

  // Points grouped by index for the map-law loops.
  std::map<Ordinal, std::vector<const Point*>> by_index;
  for (const Point& p : points) by_index[p.index()].push_back(&p);

  CheckResult identity{"identity", 0, 0, ""};
  for (const Point& p : points) {
    ++identity.cases;
    if (!check_identity(p.index(), p)) record_failure(identity, p.str());
  }

  CheckResult wellformed{"projection_wellformed", 0, 0, ""};
  CheckResult monotone{"length_monotonicity", 0, 0, ""};
  for (const Point& p : points) {
    for (const Ordinal& target : values) {
      if (compare(target, p.index()) == Comparison::GT) continue;
      const Point image = project(MapSpec(p.index(), target), p);
      ++wellformed.cases;
      if (Point::check(image.entries()).has_value() || image.index() != target) {
        record_failure(wellformed, "f^" + p.index().str() + "_" + target.str() +
                                       " " + p.str() + " -> " + image.str());
      }
      ++monotone.cases;
      if (image.length() > p.length()) {
        record_failure(monotone, "f^" + p.index().str() + "_" + target.str() +
                                     " " + p.str() + " -> " + image.str());
      }
    }
  }

  CheckResult composition{"composition", 0, 0, ""};
  for (const auto& [g, tops] : by_index) {
    for (const Ordinal& b : values) {
      if (compare(b, g) == Comparison::GT) continue;
      for (const Ordinal& a : values) {
        if (compare(a, b) == Comparison::GT) continue;
        for (const Point* x : tops) {
          ++composition.cases;
          if (!check_composition(a, b, g, *x)) {
            record_failure(composition, "f^" + b.str() + "_" + a.str() + " o f^" +
                                            g.str() + "_" + b.str() + " on " +
                                            x->str());
          }
        }
      }
    }
  }

  CheckResult roundtrip{"section_roundtrip", 0, 0, ""};
  for (const auto& [a, members] : by_index) {
    for (const Ordinal& b : values) {
      if (compare(a, b) == Comparison::GT) continue;
      for (const Ordinal& g : values) {
        if (compare(g, b) != Comparison::GT) continue;
        for (const Point* x : members) {
          ++roundtrip.cases;
          const Point lifted = section(a, b, *x, g);
          if (project(MapSpec(b, a), lifted) != *x) {
            record_failure(roundtrip, "section(" + a.str() + " -> " + b.str() +
                                          ", gamma " + g.str() + ") on " +
                                          x->str());
          }
        }
      }
    }
  }

  // The order/length lemma plus order > index, over every top point and
  // every nonempty key subset below it.
  CheckResult above{"order_exceeds_index", 0, 0, ""};
  CheckResult lemma{"order_function_of_length", 0, 0, ""};
  for (const Point& top : points) {
    std::vector<Ordinal> eligible;
    for (const Ordinal& v : values) {
      if (compare(v, top.index()) != Comparison::GT) eligible.push_back(v);
    }
    const std::uint64_t subsets = std::uint64_t{1} << eligible.size();
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
      std::vector<Ordinal> keys;
      for (std::size_t i = 0; i < eligible.size(); ++i) {
        if (mask & (std::uint64_t{1} << i)) keys.push_back(eligible[i]);
      }
      const Family family = project_family(top.index(), top, keys);
      for (const ProfileRow& row : order_length_profile(family)) {
        ++above.cases;
        if (compare(row.order, row.index) != Comparison::GT) {
          record_failure(above, "index " + row.index.str() + " order " +
                                    row.order.str() + " under top " + top.str());
        }
      }
      ++lemma.cases;
      if (!check_order_function_of_length(family)) {
        record_failure(lemma, "top " + top.str() + " keys " +
                                  describe_entries(keys));
      }
    }
  }

  report.checks = {recount_check, agreement, identity,  wellformed,
                   monotone,      composition, roundtrip, above,
                   lemma};
  return report;
}

bool LawSuiteReport::passed() const noexcept {
  for (const CheckResult& check : checks) {
    if (!check.passed()) return false;
  }
  return true;
}

LawSuiteReport run_law_suite(const std::vector<Ordinal>& pool,
                             std::uint64_t samples, std::uint64_t seed) {
  const std::vector<Ordinal> values = sorted_unique(pool);
  if (values.size() < 2) {
    throw std::invalid_argument("law suite needs a pool of at least 2 ordinals");
  }
  // Any element but the maximum can serve as a point index.
  const std::size_t eligible = values.size() - 1;

  std::mt19937_64 rng(seed);
  auto pick_index = [&]() -> const Ordinal& {
    return values[detail::bounded(rng, eligible)];
  };
  auto pick_at_most = [&](const Ordinal& cap) -> const Ordinal& {
    std::size_t hi = 0;
    while (hi + 1 < values.size() &&
           compare(values[hi + 1], cap) != Comparison::GT) {
      ++hi;
    }
    return values[detail::bounded(rng, hi + 1)];
  };

  CheckResult identity{"identity", 0, 0, ""};
  CheckResult composition{"composition", 0, 0, ""};
  CheckResult roundtrip{"section_roundtrip", 0, 0, ""};

  for (std::uint64_t i = 0; i < samples; ++i) {
    {
      const Ordinal& gamma = pick_index();
      const Point x = sample_point(gamma, values, rng());
      ++identity.cases;
      if (!check_identity(gamma, x)) record_failure(identity, x.str());
    }
    {
      const Ordinal& gamma = pick_index();
      const Point x = sample_point(gamma, values, rng());
      Ordinal a = pick_at_most(gamma);
      Ordinal b = pick_at_most(gamma);
      if (compare(a, b) == Comparison::GT) std::swap(a, b);
      ++composition.cases;
      if (!check_composition(a, b, gamma, x)) {
        record_failure(composition, "f^" + b.str() + "_" + a.str() + " o f^" +
                                        gamma.str() + "_" + b.str() + " on " +
                                        x.str());
      }
    }
    {
      const Ordinal& alpha = pick_index();
      const Point x = sample_point(alpha, values, rng());
      // beta anywhere at or above alpha, within the pool.
      std::vector<const Ordinal*> atleast;
      for (const Ordinal& v : values) {
        if (compare(v, alpha) != Comparison::LT) atleast.push_back(&v);
      }
      const Ordinal& beta = *atleast[detail::bounded(rng, atleast.size())];
      std::optional<Ordinal> gamma;
      if (rng() & 1) {
        std::vector<const Ordinal*> strictly_above;
        for (const Ordinal& v : values) {
          if (compare(v, beta) == Comparison::GT) strictly_above.push_back(&v);
        }
        if (!strictly_above.empty()) {
          gamma = *strictly_above[detail::bounded(rng, strictly_above.size())];
        }
      }
      ++roundtrip.cases;
      const Point lifted = section(alpha, beta, x, gamma);
      if (project(MapSpec(beta, alpha), lifted) != x) {
        record_failure(roundtrip, "section(" + alpha.str() + " -> " + beta.str() +
                                      ") on " + x.str());
      }
    }
  }

  LawSuiteReport report;
  report.checks = {identity, composition, roundtrip};
  return report;
}

}  // namespace translim
